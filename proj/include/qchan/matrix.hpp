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
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "qchan/errors.hpp"

namespace qchan {

//============================================================================
// Index conventions
//============================================================================
//
// Everything in this library is ROW-major, and every pair-index convention is
// derived from that single choice:
//
//   * res(m) lists the entries of m row by row; unres is its inverse.
//   * A matrix unit E_kl has res(E_kl) = e_i with i = k*n + l.
//   * kron(a, b) uses row index i*rows(b) + k and column index j*cols(b) + l
//     for ((i,k),(j,l)), so that res(A.rho.B) = kron(A, transpose(B)).res(rho).
//   * reshuffle and partial traces (see repr.hpp, analysis.hpp) use the same
//     (first,second) pair order.
//
// The Hilbert-Schmidt inner product is hs_inner(x, y) = tr(x.dagger(y)):
// linear in x, conjugate-linear in y.

//============================================================================
// complex_matrix
//============================================================================

// Dense complex matrix with value semantics. Entries are validated to be
// finite on every construction path that ingests data, so no NaN/Inf can
// enter the system.
template <std::floating_point T = double>
class complex_matrix {
 public:
  using real_type = T;
  using scalar = std::complex<T>;

  // Zero-filled rows x cols matrix. Dimensions must be positive.
  complex_matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), entries_(check_dims(rows, cols)) {}

  complex_matrix(std::size_t rows, std::size_t cols, std::vector<scalar> entries)
      : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    check_dims(rows, cols);
    if (entries_.size() != rows_ * cols_) {
      throw shape_mismatch("complex_matrix: " + std::to_string(entries_.size()) +
                           " entries for a " + std::to_string(rows_) + "x" +
                           std::to_string(cols_) + " matrix");
    }
    check_finite();
  }

  complex_matrix(std::initializer_list<std::initializer_list<scalar>> rows)
      : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    check_dims(rows_, cols_);
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) {
        throw shape_mismatch("complex_matrix: ragged initializer rows");
      }
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
    check_finite();
  }

  static complex_matrix identity(std::size_t n) {
    complex_matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = scalar(1);
    return m;
  }

  static complex_matrix zero(std::size_t rows, std::size_t cols) {
    return complex_matrix(rows, cols);
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const scalar& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  std::span<const scalar> entries() const noexcept { return entries_; }

  bool same_shape(const complex_matrix& other) const noexcept {
    return rows_ == other.rows_ && cols_ == other.cols_;
  }

  friend bool operator==(const complex_matrix& a, const complex_matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

  complex_matrix& operator+=(const complex_matrix& other) {
    require_same_shape(other, "+");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
    return *this;
  }

  complex_matrix& operator-=(const complex_matrix& other) {
    require_same_shape(other, "-");
    for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
    return *this;
  }

  complex_matrix& operator*=(scalar a) {
    for (auto& e : entries_) e *= a;
    return *this;
  }

  friend complex_matrix operator+(complex_matrix a, const complex_matrix& b) {
    a += b;
    return a;
  }

  friend complex_matrix operator-(complex_matrix a, const complex_matrix& b) {
    a -= b;
    return a;
  }

  friend complex_matrix operator-(complex_matrix a) {
    for (auto& e : a.entries_) e = -e;
    return a;
  }

  friend complex_matrix operator*(scalar a, complex_matrix m) {
    m *= a;
    return m;
  }

  friend complex_matrix operator*(complex_matrix m, scalar a) {
    m *= a;
    return m;
  }

  friend complex_matrix operator*(const complex_matrix& a, const complex_matrix& b) {
    if (a.cols_ != b.rows_) {
      throw shape_mismatch("matrix product: " + shape_string(a) + " times " +
                           shape_string(b));
    }
    complex_matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const scalar aik = a(i, k);
        if (aik == scalar(0)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          out(i, j) += aik * b(k, j);
        }
      }
    }
    return out;
  }

  friend std::vector<scalar> operator*(const complex_matrix& m,
                                       const std::vector<scalar>& v) {
    if (m.cols_ != v.size()) {
      throw shape_mismatch("matrix-vector product: " + shape_string(m) +
                           " times length-" + std::to_string(v.size()) + " vector");
    }
    std::vector<scalar> out(m.rows_, scalar(0));
    for (std::size_t i = 0; i < m.rows_; ++i) {
      for (std::size_t j = 0; j < m.cols_; ++j) {
        out[i] += m(i, j) * v[j];
      }
    }
    return out;
  }

 private:
  static std::size_t check_dims(std::size_t rows, std::size_t cols) {
    if (rows == 0 || cols == 0) {
      throw shape_mismatch("complex_matrix: dimensions must be positive");
    }
    return rows * cols;
  }

  static std::string shape_string(const complex_matrix& m) {
    return std::to_string(m.rows_) + "x" + std::to_string(m.cols_);
  }

  void require_same_shape(const complex_matrix& other, const char* op) const {
    if (!same_shape(other)) {
      throw shape_mismatch(std::string("matrix ") + op + ": " + shape_string(*this) +
                           " vs " + shape_string(other));
    }
  }

  void check_finite() const {
    for (const auto& e : entries_) {
      if (!std::isfinite(e.real()) || !std::isfinite(e.imag())) {
        throw non_finite_entry("complex_matrix: entries must be finite");
      }
    }
  }

  std::size_t rows_;
  std::size_t cols_;
  std::vector<scalar> entries_;
};

template <std::floating_point T = double>
using complex_vector = std::vector<std::complex<T>>;

//============================================================================
// Elementwise and structural operations
//============================================================================

template <std::floating_point T>
complex_matrix<T> transpose(const complex_matrix<T>& m) {
  complex_matrix<T> out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = m(r, c);
  return out;
}

template <std::floating_point T>
complex_matrix<T> conj(const complex_matrix<T>& m) {
  complex_matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = std::conj(m(r, c));
  return out;
}

// Conjugate transpose.
template <std::floating_point T>
complex_matrix<T> dagger(const complex_matrix<T>& m) {
  complex_matrix<T> out(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) out(c, r) = std::conj(m(r, c));
  return out;
}

template <std::floating_point T>
std::complex<T> trace(const complex_matrix<T>& m) {
  if (!m.is_square()) throw shape_mismatch("trace: matrix is not square");
  std::complex<T> t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

// tr(a.b) without forming the product.
template <std::floating_point T>
std::complex<T> trace_product(const complex_matrix<T>& a, const complex_matrix<T>& b) {
  if (a.cols() != b.rows() || a.rows() != b.cols()) {
    throw shape_mismatch("trace_product: shapes do not contract to a square");
  }
  std::complex<T> t(0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t += a(i, j) * b(j, i);
  return t;
}

template <std::floating_point T>
T max_abs(const complex_matrix<T>& m) {
  T out = 0;
  for (const auto& e : m.entries()) out = std::max(out, std::abs(e));
  return out;
}

// Largest entrywise deviation; the distance used by all tolerance checks.
template <std::floating_point T>
T max_abs_diff(const complex_matrix<T>& a, const complex_matrix<T>& b) {
  if (!a.same_shape(b)) throw shape_mismatch("max_abs_diff: shape mismatch");
  T out = 0;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      out = std::max(out, std::abs(a(r, c) - b(r, c)));
  return out;
}

//============================================================================
// res / unres / kron / hs_inner
//============================================================================

// Row-major flattening of a matrix into a vector.
template <std::floating_point T>
complex_vector<T> res(const complex_matrix<T>& m) {
  return complex_vector<T>(m.entries().begin(), m.entries().end());
}

namespace detail {

// Integer square root, or 0 if the argument is not a perfect square.
inline std::size_t exact_sqrt(std::size_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
  for (std::size_t s = (r > 0 ? r - 1 : 0); s <= r + 1; ++s) {
    if (s * s == n) return s;
  }
  return 0;
}

}  // namespace detail

// Inverse of res: folds a vector of perfect-square length back into a square
// matrix, row by row.
template <std::floating_point T>
complex_matrix<T> unres(const complex_vector<T>& v) {
  const std::size_t side = detail::exact_sqrt(v.size());
  if (side == 0) {
    throw non_square_length("unres: length " + std::to_string(v.size()) +
                            " is not a positive perfect square");
  }
  return complex_matrix<T>(side, side, v);
}

// Kronecker product with row-major pair ordering (see the conventions note
// at the top of this header).
template <std::floating_point T>
complex_matrix<T> kron(const complex_matrix<T>& a, const complex_matrix<T>& b) {
  complex_matrix<T> out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const std::complex<T> aij = a(i, j);
      if (aij == std::complex<T>(0)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return out;
}

// Hilbert-Schmidt inner product tr(x.dagger(y)); linear in x, conjugate-linear
// in y. Evaluated as the entrywise sum sum_ij x_ij.conj(y_ij).
template <std::floating_point T>
std::complex<T> hs_inner(const complex_matrix<T>& x, const complex_matrix<T>& y) {
  if (!x.same_shape(y)) {
    throw shape_mismatch("hs_inner: " + std::to_string(x.rows()) + "x" +
                         std::to_string(x.cols()) + " vs " + std::to_string(y.rows()) +
                         "x" + std::to_string(y.cols()));
  }
  std::complex<T> out(0);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) out += x(r, c) * std::conj(y(r, c));
  return out;
}

template <std::floating_point T>
std::ostream& operator<<(std::ostream& os, const complex_matrix<T>& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r == 0 ? "[" : " ");
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const auto& e = m(r, c);
      os << (c == 0 ? "[" : ", ") << e.real();
      if (e.imag() != T(0)) os << (e.imag() < 0 ? "-" : "+") << std::abs(e.imag()) << "i";
    }
    os << "]" << (r + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

}  // namespace qchan
