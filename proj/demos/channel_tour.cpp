// Copyright 2026 The qchan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// A short tour: build a couple of channels as plain functions, look at their
// matrix representations, and run the CPTP checks on them.

#include <iostream>

#include "qchan/qchan.hpp"

int main() {
  using namespace qchan;

  // The one-qubit depolarizing channel at p = 0.3.
  const auto dep = depolarizing<double>(2, 0.3);
  std::cout << "depolarizing(2, 0.3), natural representation:\n"
            << natural_representation(dep).m << "\n\n";
  std::cout << "same channel in the Pauli basis:\n"
            << general_natural_representation(dep, pauli_basis<double>()).m << "\n\n";
  std::cout << "its Choi matrix:\n" << choi_representation(dep).j << "\n\n";

  // Transposition is the textbook positive-but-not-completely-positive map.
  const auto trans = transpose_channel<double>(2);
  std::cout << "transpose channel, natural representation (the SWAP gate):\n"
            << natural_representation(trans).m << "\n\n";

  for (const auto& [name, ch] : {std::pair{"depolarizing(2, 0.3)", dep},
                                 std::pair{"transpose_channel(2)", trans}}) {
    const auto verdict = is_cptp(ch);
    std::cout << name << ": CP=" << (verdict.completely_positive ? "yes" : "no")
              << " TP=" << (verdict.trace_preserving ? "yes" : "no")
              << " (min Choi eigenvalue " << verdict.min_choi_eigenvalue << ")\n";
  }

  // Partial application in the curried style: fix the family's parameter to
  // recover a concrete channel.
  auto fixed = depolarizing_family<double>(4).fix("p", 0.3);
  const auto& ch = std::get<channel<double>>(fixed);
  std::cout << "\ndepolarizing_family(4) with p fixed to 0.3 has dimension " << ch.dim()
            << "\n";
  return 0;
}
