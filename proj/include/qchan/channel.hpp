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
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"

namespace qchan {

//============================================================================
// channel
//============================================================================

// A channel is a dimension n together with a linear map on n x n matrices,
// evaluated by calling it. The map is opaque: conversion to matrix form goes
// through repr.hpp. Constructors perform no CPTP validation; validity
// checking is a separate concern (analysis.hpp), and non-CP maps such as
// transposition are first-class citizens here.
//
// Channels are immutable after construction and their maps must be pure, so
// concurrent evaluation from multiple threads is safe.
template <std::floating_point T = double>
class channel {
 public:
  using matrix = complex_matrix<T>;
  using map_type = std::function<matrix(const matrix&)>;

  channel(std::size_t dim, map_type map) : dim_(dim), map_(std::move(map)) {
    if (dim_ == 0) throw parameter_out_of_range("channel: dimension must be positive");
    if (!map_) throw parameter_out_of_range("channel: map must be callable");
  }

  std::size_t dim() const noexcept { return dim_; }

  matrix operator()(const matrix& rho) const {
    if (rho.rows() != dim_ || rho.cols() != dim_) {
      throw dimension_mismatch("channel of dimension " + std::to_string(dim_) +
                               " applied to a " + std::to_string(rho.rows()) + "x" +
                               std::to_string(rho.cols()) + " matrix");
    }
    matrix out = map_(rho);
    if (out.rows() != dim_ || out.cols() != dim_) {
      throw dimension_mismatch("channel map returned a " + std::to_string(out.rows()) +
                               "x" + std::to_string(out.cols()) + " matrix, expected " +
                               std::to_string(dim_) + "x" + std::to_string(dim_));
    }
    return out;
  }

 private:
  std::size_t dim_;
  map_type map_;
};

template <std::floating_point T>
complex_matrix<T> apply(const channel<T>& ch, const complex_matrix<T>& rho) {
  return ch(rho);
}

// Elementwise apply over a list of states, order preserved.
template <std::floating_point T>
std::vector<complex_matrix<T>> apply_all(const channel<T>& ch,
                                         const std::vector<complex_matrix<T>>& rhos) {
  std::vector<complex_matrix<T>> out;
  out.reserve(rhos.size());
  for (std::size_t i = 0; i < rhos.size(); ++i) {
    if (rhos[i].rows() != ch.dim() || rhos[i].cols() != ch.dim()) {
      throw dimension_mismatch("apply_all: element " + std::to_string(i) + " is " +
                               std::to_string(rhos[i].rows()) + "x" +
                               std::to_string(rhos[i].cols()) + ", expected " +
                               std::to_string(ch.dim()) + "x" + std::to_string(ch.dim()));
    }
    out.push_back(ch(rhos[i]));
  }
  return out;
}

//============================================================================
// Channel zoo
//============================================================================

template <std::floating_point T = double>
channel<T> identity_channel(std::size_t n) {
  return channel<T>(n, [](const complex_matrix<T>& rho) { return rho; });
}

// rho -> transpose(rho). Not completely positive for n >= 2.
template <std::floating_point T = double>
channel<T> transpose_channel(std::size_t n) {
  return channel<T>(n, [](const complex_matrix<T>& rho) { return transpose(rho); });
}

// Depolarizing channel: the linear extension
//
//   rho -> (1-p).rho + p.tr(rho).I/n
//
// which agrees with (1-p).rho + p.I/n on every unit-trace input but, unlike
// that affine expression, is linear on all of M_n and therefore has a
// supermatrix.
template <std::floating_point T>
channel<T> depolarizing(std::size_t n, T p) {
  if (!(p >= T(0) && p <= T(1))) {
    throw parameter_out_of_range("depolarizing: p = " + std::to_string(p) +
                                 " outside [0, 1]");
  }
  return channel<T>(n, [n, p](const complex_matrix<T>& rho) {
    complex_matrix<T> out = (std::complex<T>(T(1) - p)) * rho;
    const std::complex<T> mix = std::complex<T>(p) * trace(rho) / std::complex<T>(T(n));
    for (std::size_t i = 0; i < n; ++i) out(i, i) += mix;
    return out;
  });
}

// rho -> u.rho.dagger(u). Requires u.dagger(u) = I within 1e-10.
template <std::floating_point T>
channel<T> unitary_channel(const complex_matrix<T>& u) {
  if (!u.is_square()) throw not_unitary("unitary_channel: matrix is not square");
  const T defect = max_abs_diff(u * dagger(u), complex_matrix<T>::identity(u.rows()));
  if (defect > T(1e-10)) {
    throw not_unitary("unitary_channel: |u.dagger(u) - I| = " + std::to_string(defect));
  }
  return channel<T>(u.rows(), [u, ud = dagger(u)](const complex_matrix<T>& rho) {
    return u * rho * ud;
  });
}

// rho -> sum_k K_k.rho.dagger(K_k). No trace-preservation requirement is
// imposed; scaled sets are accepted on purpose so tests can build non-TP maps.
template <std::floating_point T>
channel<T> kraus_channel(const std::vector<complex_matrix<T>>& ops) {
  if (ops.empty()) throw empty_kraus_set("kraus_channel: no operators");
  const std::size_t n = ops.front().rows();
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (ops[k].rows() != n || ops[k].cols() != n) {
      throw shape_mismatch("kraus_channel: operator " + std::to_string(k) + " is " +
                           std::to_string(ops[k].rows()) + "x" +
                           std::to_string(ops[k].cols()) + ", expected " +
                           std::to_string(n) + "x" + std::to_string(n));
    }
  }
  std::vector<complex_matrix<T>> daggers;
  daggers.reserve(ops.size());
  for (const auto& k : ops) daggers.push_back(dagger(k));
  return channel<T>(n, [ops, daggers, n](const complex_matrix<T>& rho) {
    complex_matrix<T> out(n, n);
    for (std::size_t k = 0; k < ops.size(); ++k) out += ops[k] * rho * daggers[k];
    return out;
  });
}

}  // namespace qchan
