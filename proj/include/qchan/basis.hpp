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

#include <cmath>
#include <complex>
#include <concepts>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

namespace detail {

// max |G - I| for the Gram matrix G_ij = hs_inner(b_i, b_j).
template <std::floating_point T>
T gram_residual(const std::vector<complex_matrix<T>>& elements) {
  T out = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = 0; j < elements.size(); ++j) {
      const std::complex<T> g = hs_inner(elements[i], elements[j]);
      const std::complex<T> expected = (i == j) ? std::complex<T>(1) : std::complex<T>(0);
      out = std::max(out, std::abs(g - expected));
    }
  }
  return out;
}

}  // namespace detail

//============================================================================
// matrix_basis
//============================================================================

// An ordered list of n^2 matrices of size n x n. The orthonormal flag states
// that the elements are orthonormal under the Hilbert-Schmidt inner product;
// it is verified at construction when set.
template <std::floating_point T = double>
class matrix_basis {
 public:
  matrix_basis(std::size_t dim, std::vector<complex_matrix<T>> elements,
               bool orthonormal)
      : dim_(dim), elements_(std::move(elements)), orthonormal_(orthonormal) {
    if (dim_ == 0) throw shape_mismatch("matrix_basis: dimension must be positive");
    if (elements_.size() != dim_ * dim_) {
      throw shape_mismatch("matrix_basis: " + std::to_string(elements_.size()) +
                           " elements for dimension " + std::to_string(dim_) +
                           ", expected " + std::to_string(dim_ * dim_));
    }
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      if (elements_[i].rows() != dim_ || elements_[i].cols() != dim_) {
        throw shape_mismatch("matrix_basis: element " + std::to_string(i) + " is " +
                             std::to_string(elements_[i].rows()) + "x" +
                             std::to_string(elements_[i].cols()));
      }
    }
    if (orthonormal_ && detail::gram_residual(elements_) > T(1e-10)) {
      throw not_orthonormal("matrix_basis: elements flagged orthonormal are not");
    }
  }

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool orthonormal() const noexcept { return orthonormal_; }
  const std::vector<complex_matrix<T>>& elements() const noexcept { return elements_; }
  const complex_matrix<T>& operator[](std::size_t i) const { return elements_[i]; }

 private:
  std::size_t dim_;
  std::vector<complex_matrix<T>> elements_;
  bool orthonormal_;
};

// True iff the Gram matrix of hs_inner is the identity within 1e-10.
template <std::floating_point T>
bool check_orthonormal(const matrix_basis<T>& b) {
  return detail::gram_residual(b.elements()) <= T(1e-10);
}

// The canonical matrix units E_kl, ordered row-major (element i is
// unres(e_i)), so res(element_i) = e_i.
template <std::floating_point T = double>
matrix_basis<T> base_matrices(std::size_t n) {
  if (n == 0) throw shape_mismatch("base_matrices: dimension must be positive");
  std::vector<complex_matrix<T>> elements;
  elements.reserve(n * n);
  for (std::size_t i = 0; i < n * n; ++i) {
    complex_matrix<T> e(n, n);
    e(i / n, i % n) = std::complex<T>(1);
    elements.push_back(std::move(e));
  }
  return matrix_basis<T>(n, std::move(elements), /*orthonormal=*/true);
}

// {I, sigma_x, sigma_y, sigma_z} / sqrt(2): an orthonormal basis of M_2 that
// is not the canonical one.
template <std::floating_point T = double>
matrix_basis<T> pauli_basis() {
  using c = std::complex<T>;
  const T s = T(1) / std::sqrt(T(2));
  std::vector<complex_matrix<T>> elements;
  elements.push_back(complex_matrix<T>{{c(s), c(0)}, {c(0), c(s)}});
  elements.push_back(complex_matrix<T>{{c(0), c(s)}, {c(s), c(0)}});
  elements.push_back(complex_matrix<T>{{c(0), c(0, -s)}, {c(0, s), c(0)}});
  elements.push_back(complex_matrix<T>{{c(s), c(0)}, {c(0), c(-s)}});
  return matrix_basis<T>(2, std::move(elements), /*orthonormal=*/true);
}

}  // namespace qchan
