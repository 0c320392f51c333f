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
#include <vector>

#include "qchan/basis.hpp"
#include "qchan/channel.hpp"
#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

//============================================================================
// Representation carriers
//============================================================================

// The n^2 x n^2 matrix of a channel in an orthonormal operator basis. In the
// canonical basis it satisfies the defining property
//
//   res(ch(rho)) = m . res(rho)
//
// and in a general basis b the same property holds for the coordinate vector
// coords_b(rho)_i = hs_inner(rho, b_i).
template <std::floating_point T = double>
struct super_matrix {
  std::size_t dim;        // channel dimension n
  complex_matrix<T> m;    // n^2 x n^2
  matrix_basis<T> basis;  // the basis m is expressed in
};

// The Choi matrix J = sum_i ch(E_i) (x) E_i over the canonical matrix units.
// Positive semidefinite exactly when the channel is completely positive.
template <std::floating_point T = double>
struct choi_matrix {
  std::size_t dim;      // channel dimension n
  complex_matrix<T> j;  // n^2 x n^2
};

//============================================================================
// Natural representation (canonical basis)
//============================================================================

// Column i of the result is res(ch(E_i)) over the canonical matrix units.
template <std::floating_point T>
super_matrix<T> natural_representation(const channel<T>& ch) {
  const std::size_t n = ch.dim();
  matrix_basis<T> canonical = base_matrices<T>(n);
  complex_matrix<T> m(n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    const complex_vector<T> column = res(ch(canonical[i]));
    for (std::size_t r = 0; r < n * n; ++r) m(r, i) = column[r];
  }
  return super_matrix<T>{n, std::move(m), std::move(canonical)};
}

//============================================================================
// General natural representation (any orthonormal basis)
//============================================================================

namespace detail {

template <std::floating_point T>
void require_usable_basis(const matrix_basis<T>& b, std::size_t dim, const char* who) {
  if (b.dim() != dim) {
    throw dimension_mismatch(std::string(who) + ": basis dimension " +
                             std::to_string(b.dim()) + " vs channel dimension " +
                             std::to_string(dim));
  }
  if (!check_orthonormal(b)) {
    throw not_orthonormal(std::string(who) + ": basis is not orthonormal");
  }
}

}  // namespace detail

// The inner-product algorithm: entry (i, j) is hs_inner(ch(b_j), b_i), the
// column convention under which coords_b(ch(rho)) = m . coords_b(rho).
template <std::floating_point T>
super_matrix<T> general_natural_representation(const channel<T>& ch,
                                               const matrix_basis<T>& b) {
  detail::require_usable_basis(b, ch.dim(), "general_natural_representation");
  const std::size_t nn = b.size();
  std::vector<complex_matrix<T>> images;
  images.reserve(nn);
  for (std::size_t j = 0; j < nn; ++j) images.push_back(ch(b[j]));
  complex_matrix<T> m(nn, nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t j = 0; j < nn; ++j) m(i, j) = hs_inner(images[j], b[i]);
  return super_matrix<T>{ch.dim(), std::move(m), b};
}

// Change-of-basis matrix with row i = conj(res(b_i)), so that
// coords_b(rho) = m_b . res(rho). Unitary whenever b is orthonormal. The
// conjugation matters: with plain res rows the conjugation formula below
// breaks for bases with complex entries.
template <std::floating_point T>
complex_matrix<T> basis_change_matrix(const matrix_basis<T>& b) {
  const std::size_t nn = b.size();
  complex_matrix<T> m(nn, nn);
  for (std::size_t i = 0; i < nn; ++i) {
    const complex_vector<T> r = res(b[i]);
    for (std::size_t k = 0; k < nn; ++k) m(i, k) = std::conj(r[k]);
  }
  return m;
}

// The basis-change algorithm: m_b . natural . dagger(m_b). Agrees with the
// inner-product algorithm entrywise.
template <std::floating_point T>
super_matrix<T> general_natural_representation_via_basis_change(
    const channel<T>& ch, const matrix_basis<T>& b) {
  detail::require_usable_basis(b, ch.dim(),
                               "general_natural_representation_via_basis_change");
  const complex_matrix<T> mb = basis_change_matrix(b);
  super_matrix<T> natural = natural_representation(ch);
  return super_matrix<T>{ch.dim(), mb * natural.m * dagger(mb), b};
}

//============================================================================
// Choi-Jamiolkowski representation
//============================================================================

// Sum formula: J = sum_i ch(E_i) (x) E_i over the canonical matrix units.
template <std::floating_point T>
choi_matrix<T> choi_representation(const channel<T>& ch) {
  const std::size_t n = ch.dim();
  const matrix_basis<T> canonical = base_matrices<T>(n);
  complex_matrix<T> j(n * n, n * n);
  for (std::size_t i = 0; i < n * n; ++i) j += kron(ch(canonical[i]), canonical[i]);
  return choi_matrix<T>{n, std::move(j)};
}

// Which tensor-factor pairing the trace formula uses. `standard` matches the
// sum formula above; `swapped` is the literal tr[m (b_i (x) b_j)] pairing,
// whose result has the tensor factors exchanged.
enum class choi_pairing { standard, swapped };

namespace detail {

// Exchanges the tensor factors of an n^2 x n^2 matrix under row-major pair
// indexing: out((a,b),(c,d)) = in((b,a),(d,c)).
template <std::floating_point T>
complex_matrix<T> swap_kron_factors(const complex_matrix<T>& x, std::size_t n) {
  complex_matrix<T> out(n * n, n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          out(a * n + b, c * n + d) = x(b * n + a, d * n + c);
  return out;
}

}  // namespace detail

// Trace formula: evaluates J'_ij = tr[m (E_i (x) E_j)] on the supermatrix
// expressed in the canonical basis (converting from b first when needed) and
// then exchanges the tensor factors so the result matches the sum formula.
// Pass choi_pairing::swapped to get the uncorrected pairing instead.
template <std::floating_point T>
choi_matrix<T> choi_from_supermatrix(const super_matrix<T>& m, const matrix_basis<T>& b,
                                     choi_pairing pairing = choi_pairing::standard) {
  const std::size_t n = m.dim;
  const std::size_t nn = n * n;
  if (m.m.rows() != nn || m.m.cols() != nn) {
    throw dimension_mismatch("choi_from_supermatrix: supermatrix is " +
                             std::to_string(m.m.rows()) + "x" +
                             std::to_string(m.m.cols()) + " for dimension " +
                             std::to_string(n));
  }
  detail::require_usable_basis(b, n, "choi_from_supermatrix");

  // Express the supermatrix in the canonical basis. For the canonical basis
  // the change matrix is the identity and this is exact.
  const complex_matrix<T> mb = basis_change_matrix(b);
  const complex_matrix<T> canonical_m = dagger(mb) * m.m * mb;

  const matrix_basis<T> units = base_matrices<T>(n);
  complex_matrix<T> j(nn, nn);
  for (std::size_t i = 0; i < nn; ++i)
    for (std::size_t k = 0; k < nn; ++k)
      j(i, k) = trace_product(canonical_m, kron(units[i], units[k]));

  if (pairing == choi_pairing::swapped) return choi_matrix<T>{n, std::move(j)};
  return choi_matrix<T>{n, detail::swap_kron_factors(j, n)};
}

//============================================================================
// Reshuffle
//============================================================================

// The index permutation out((a,b),(c,d)) = in((a,c),(b,d)). An involution
// that maps the Choi matrix of any channel to its canonical supermatrix and
// back.
template <std::floating_point T>
complex_matrix<T> reshuffle(const complex_matrix<T>& x) {
  if (!x.is_square()) {
    throw non_square_side("reshuffle: matrix is " + std::to_string(x.rows()) + "x" +
                          std::to_string(x.cols()));
  }
  const std::size_t n = detail::exact_sqrt(x.rows());
  if (n == 0) {
    throw non_square_side("reshuffle: side " + std::to_string(x.rows()) +
                          " is not a perfect square");
  }
  complex_matrix<T> out(x.rows(), x.cols());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t d = 0; d < n; ++d)
          out(a * n + b, c * n + d) = x(a * n + c, b * n + d);
  return out;
}

//============================================================================
// Channel reconstruction
//============================================================================

// The channel rho -> unres(m . res(rho)) of a canonical-basis supermatrix.
// A supermatrix expressed in another orthonormal basis is converted first,
// which closes the conversion cycle for every representation this library
// produces.
template <std::floating_point T>
channel<T> channel_from_supermatrix(const super_matrix<T>& m) {
  const std::size_t n = m.dim;
  const std::size_t nn = n * n;
  if (m.m.rows() != nn || m.m.cols() != nn) {
    throw dimension_mismatch("channel_from_supermatrix: supermatrix is " +
                             std::to_string(m.m.rows()) + "x" +
                             std::to_string(m.m.cols()) + " for dimension " +
                             std::to_string(n));
  }
  const complex_matrix<T> mb = basis_change_matrix(m.basis);
  complex_matrix<T> canonical_m = dagger(mb) * m.m * mb;
  return channel<T>(n, [m = std::move(canonical_m)](const complex_matrix<T>& rho) {
    return unres(m * res(rho));
  });
}

}  // namespace qchan
