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

#pragma once

#include <algorithm>
#include <complex>
#include <concepts>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

// max |m - dagger(m)| over all entries; 0 for exactly Hermitian input.
template <std::floating_point T>
T hermiticity_residual(const complex_matrix<T>& m) {
  if (!m.is_square()) throw not_hermitian("hermiticity_residual: matrix is not square");
  T out = 0;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out = std::max(out, std::abs(m(r, c) - std::conj(m(c, r))));
  return out;
}

// Relative tolerance so large matrices are not spuriously rejected.
template <std::floating_point T>
T hermiticity_tolerance(const complex_matrix<T>& m) {
  return T(1e-10) * (T(1) + max_abs(m));
}

// Eigenvalues of a Hermitian matrix, ascending, with multiplicity. The input
// must be Hermitian within hermiticity_tolerance; the solve runs on the
// Hermitian part (m + dagger(m))/2, which is exact for Hermitian input.
template <std::floating_point T>
std::vector<T> eigvals_hermitian(const complex_matrix<T>& m) {
  if (!m.is_square()) throw not_hermitian("eigvals_hermitian: matrix is not square");
  const T residual = hermiticity_residual(m);
  const T tol = hermiticity_tolerance(m);
  if (residual > tol) {
    throw not_hermitian("eigvals_hermitian: |m - dagger(m)| = " +
                        std::to_string(residual) + " exceeds tolerance " +
                        std::to_string(tol));
  }

  const std::size_t n = m.rows();
  using eigen_matrix = Eigen::Matrix<std::complex<T>, Eigen::Dynamic, Eigen::Dynamic>;
  eigen_matrix h(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          (m(r, c) + std::conj(m(c, r))) / T(2);

  Eigen::SelfAdjointEigenSolver<eigen_matrix> solver(h, Eigen::EigenvaluesOnly);
  const auto& values = solver.eigenvalues();  // already ascending
  std::vector<T> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = values(static_cast<Eigen::Index>(i));
  return out;
}

}  // namespace qchan
