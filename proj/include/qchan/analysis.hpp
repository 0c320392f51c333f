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

#include <concepts>
#include <cstddef>
#include <string>
#include <utility>

#include "qchan/basis.hpp"
#include "qchan/channel.hpp"
#include "qchan/eig.hpp"
#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"
#include "qchan/repr.hpp"

namespace qchan {

// Default verdict tolerances. cp_tol is looser than the arithmetic tolerance
// because eigenvalues amplify entry noise. Both are overridable per call.
inline constexpr double default_cp_tol = 1e-8;
inline constexpr double default_tp_tol = 1e-10;

// The bundle returned by is_cptp. For Hermiticity-preserving channels
// completely_positive == (min_choi_eigenvalue >= -cp_tol); when the Choi
// matrix is not Hermitian the channel is reported non-CP outright and
// min_choi_eigenvalue refers to the Hermitian part (J + dagger(J))/2 as a
// diagnostic.
template <std::floating_point T = double>
struct channel_verdict {
  bool completely_positive;
  bool trace_preserving;
  bool hermiticity_preserving;
  T min_choi_eigenvalue;
  T tp_residual;
};

// Partial trace over the first tensor factor of an n^2 x n^2 matrix:
// out(c, d) = sum_a x((a,c), (a,d)) under the row-major pair indexing of
// matrix.hpp. For the Choi matrix of a trace-preserving channel the result
// is the identity.
template <std::floating_point T>
complex_matrix<T> partial_trace_first(const complex_matrix<T>& x) {
  if (!x.is_square()) {
    throw non_square_side("partial_trace_first: matrix is " +
                          std::to_string(x.rows()) + "x" + std::to_string(x.cols()));
  }
  const std::size_t n = detail::exact_sqrt(x.rows());
  if (n == 0) {
    throw non_square_side("partial_trace_first: side " + std::to_string(x.rows()) +
                          " is not a perfect square");
  }
  complex_matrix<T> out(n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t d = 0; d < n; ++d)
      for (std::size_t a = 0; a < n; ++a) out(c, d) += x(a * n + c, a * n + d);
  return out;
}

namespace detail {

template <std::floating_point T>
struct choi_spectrum_data {
  T herm_residual;   // max |J - dagger(J)|
  T min_eigenvalue;  // of the Hermitian part of J
};

template <std::floating_point T>
choi_spectrum_data<T> analyze_choi(const complex_matrix<T>& j) {
  const T residual = hermiticity_residual(j);
  // Solve on the Hermitian part so a non-Hermitian Choi yields a diagnostic
  // instead of an exception.
  const std::size_t nn = j.rows();
  complex_matrix<T> h(nn, nn);
  for (std::size_t r = 0; r < nn; ++r)
    for (std::size_t c = 0; c < nn; ++c) h(r, c) = (j(r, c) + std::conj(j(c, r))) / T(2);
  return choi_spectrum_data<T>{residual, eigvals_hermitian(h).front()};
}

}  // namespace detail

// Complete positivity via the Choi spectrum: true iff the Choi matrix is
// Hermitian (within tol) with smallest eigenvalue >= -tol. Non-CP input is a
// verdict, never an error, so arbitrary linear maps can be linted.
template <std::floating_point T>
std::pair<bool, T> is_completely_positive(const channel<T>& ch,
                                          T tol = T(default_cp_tol)) {
  const auto data = detail::analyze_choi(choi_representation(ch).j);
  const bool cp = data.herm_residual <= tol && data.min_eigenvalue >= -tol;
  return {cp, data.min_eigenvalue};
}

// Trace preservation checked directly on the canonical matrix units:
// residual = max_i |tr(ch(E_i)) - tr(E_i)|. Equivalent to the partial trace
// of the Choi matrix over the first factor being the identity.
template <std::floating_point T>
std::pair<bool, T> is_trace_preserving(const channel<T>& ch, T tol = T(default_tp_tol)) {
  const matrix_basis<T> units = base_matrices<T>(ch.dim());
  T residual = 0;
  for (std::size_t i = 0; i < units.size(); ++i) {
    residual = std::max(residual,
                        std::abs(trace(ch(units[i])) - trace(units[i])));
  }
  return {residual <= tol, residual};
}

// Bundles complete positivity, trace preservation, and Hermiticity
// preservation (the latter as Hermiticity of the Choi matrix, which is
// equivalent to ch(dagger(rho)) = dagger(ch(rho)) for all rho).
template <std::floating_point T>
channel_verdict<T> is_cptp(const channel<T>& ch, T cp_tol = T(default_cp_tol),
                           T tp_tol = T(default_tp_tol)) {
  const auto data = detail::analyze_choi(choi_representation(ch).j);
  const auto [tp, tp_residual] = is_trace_preserving(ch, tp_tol);
  const bool hp = data.herm_residual <= cp_tol;
  return channel_verdict<T>{hp && data.min_eigenvalue >= -cp_tol, tp, hp,
                            data.min_eigenvalue, tp_residual};
}

}  // namespace qchan
