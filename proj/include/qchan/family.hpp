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
#include <concepts>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "qchan/channel.hpp"
#include "qchan/errors.hpp"

namespace qchan {

// A named real parameter with a closed range. The dimension is not a
// parameter: it is fixed when the family is created, which keeps
// instantiation total over the declared ranges.
template <std::floating_point T = double>
struct param_spec {
  std::string name;
  T lo;
  T hi;
};

//============================================================================
// channel_family
//============================================================================

// A family of channels over named real parameters, supporting partial
// application: fixing a proper subset of the parameters yields a residual
// family, fixing the last one yields a channel, and the fixing order never
// changes the final channel.
template <std::floating_point T = double>
class channel_family {
 public:
  using maker_type = std::function<channel<T>(std::span<const T>)>;

  // `make` receives one value per declared parameter, in declaration order.
  channel_family(std::size_t dim, std::vector<param_spec<T>> params, maker_type make)
      : dim_(dim),
        params_(std::move(params)),
        make_(std::move(make)),
        fixed_(params_.size()) {
    if (dim_ == 0) {
      throw parameter_out_of_range("channel_family: dimension must be positive");
    }
    if (!make_) {
      throw parameter_out_of_range("channel_family: maker must be callable");
    }
    for (std::size_t i = 0; i < params_.size(); ++i) {
      const auto& p = params_[i];
      if (p.name.empty()) {
        throw unknown_parameter("channel_family: parameter " + std::to_string(i) +
                                " has an empty name");
      }
      if (!(std::isfinite(p.lo) && std::isfinite(p.hi) && p.lo <= p.hi)) {
        throw parameter_out_of_range("channel_family: bad range for '" + p.name + "'");
      }
      for (std::size_t j = 0; j < i; ++j) {
        if (params_[j].name == p.name) {
          throw unknown_parameter("channel_family: duplicate parameter '" + p.name +
                                  "'");
        }
      }
    }
  }

  std::size_t dim() const noexcept { return dim_; }

  // Parameters still open, in declaration order.
  std::vector<param_spec<T>> params() const {
    std::vector<param_spec<T>> open;
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (!fixed_[i]) open.push_back(params_[i]);
    }
    return open;
  }

  // Builds the channel from values for the open parameters, in order.
  channel<T> instantiate(std::span<const T> values) const {
    std::vector<T> full(params_.size());
    std::size_t used = 0;
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (fixed_[i]) {
        full[i] = *fixed_[i];
      } else {
        if (used == values.size()) break;  // too few; reported below
        full[i] = check_range(params_[i], values[used++]);
      }
    }
    if (used != values.size() || used != open_count()) {
      throw parameter_out_of_range("instantiate: expected " +
                                   std::to_string(open_count()) + " values, got " +
                                   std::to_string(values.size()));
    }
    return make_(full);
  }

  // Fixes one open parameter. Returns the resulting channel when this was the
  // last open parameter, otherwise the residual family.
  std::variant<channel_family<T>, channel<T>> fix(std::string_view name, T value) const {
    std::size_t idx = params_.size();
    for (std::size_t i = 0; i < params_.size(); ++i) {
      if (params_[i].name == name) {
        idx = i;
        break;
      }
    }
    if (idx == params_.size()) {
      throw unknown_parameter("fix: '" + std::string(name) +
                              "' is not a parameter of this family");
    }
    if (fixed_[idx]) {
      throw unknown_parameter("fix: '" + std::string(name) + "' is already fixed");
    }
    channel_family<T> residual = *this;
    residual.fixed_[idx] = check_range(params_[idx], value);
    if (residual.open_count() == 0) {
      std::vector<T> full(params_.size());
      for (std::size_t i = 0; i < params_.size(); ++i) full[i] = *residual.fixed_[i];
      return residual.make_(full);
    }
    return residual;
  }

 private:
  static T check_range(const param_spec<T>& p, T value) {
    if (!(value >= p.lo && value <= p.hi)) {
      throw parameter_out_of_range("parameter '" + p.name + "' = " +
                                   std::to_string(value) + " outside [" +
                                   std::to_string(p.lo) + ", " + std::to_string(p.hi) +
                                   "]");
    }
    return value;
  }

  std::size_t open_count() const {
    std::size_t n = 0;
    for (const auto& f : fixed_) {
      if (!f) ++n;
    }
    return n;
  }

  std::size_t dim_;
  std::vector<param_spec<T>> params_;
  maker_type make_;
  std::vector<std::optional<T>> fixed_;
};

template <std::floating_point T>
channel_family<T> make_family(std::size_t dim, std::vector<param_spec<T>> params,
                              typename channel_family<T>::maker_type make) {
  return channel_family<T>(dim, std::move(params), std::move(make));
}

template <std::floating_point T>
std::variant<channel_family<T>, channel<T>> fix_param(const channel_family<T>& family,
                                                      std::string_view name, T value) {
  return family.fix(name, value);
}

// The depolarizing channels of a given dimension as a one-parameter family.
template <std::floating_point T = double>
channel_family<T> depolarizing_family(std::size_t n) {
  return channel_family<T>(
      n, {param_spec<T>{"p", T(0), T(1)}},
      [n](std::span<const T> values) { return depolarizing<T>(n, values[0]); });
}

}  // namespace qchan
