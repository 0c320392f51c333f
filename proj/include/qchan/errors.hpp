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

#include <stdexcept>
#include <string>

namespace qchan {

// Base class for all qchan exceptions. Every failure mode has its own type so
// callers can catch exactly what they care about.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two matrices (or a matrix and a slot expecting one) disagree in shape.
class shape_mismatch : public error {
 public:
  using error::error;
};

// A matrix or vector does not fit the dimension of the channel or basis it is
// used with.
class dimension_mismatch : public error {
 public:
  using error::error;
};

// A vector of non-perfect-square length cannot be folded into a square matrix.
class non_square_length : public error {
 public:
  using error::error;
};

// A matrix whose side is not a perfect square cannot be reinterpreted with
// pair indices.
class non_square_side : public error {
 public:
  using error::error;
};

// A NaN or Inf component was about to enter a matrix or vector.
class non_finite_entry : public error {
 public:
  using error::error;
};

class not_hermitian : public error {
 public:
  using error::error;
};

class not_unitary : public error {
 public:
  using error::error;
};

class not_orthonormal : public error {
 public:
  using error::error;
};

class empty_kraus_set : public error {
 public:
  using error::error;
};

class parameter_out_of_range : public error {
 public:
  using error::error;
};

class unknown_parameter : public error {
 public:
  using error::error;
};

// Raised by the serialization layer for text that is not valid JSON.
class parse_error : public error {
 public:
  using error::error;
};

// Raised by the serialization layer for JSON that is valid but does not match
// the expected schema.
class schema_error : public error {
 public:
  using error::error;
};

}  // namespace qchan
