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

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qchan/analysis.hpp"
#include "qchan/basis.hpp"
#include "qchan/channel.hpp"
#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"
#include "qchan/repr.hpp"

// File formats. All numbers are IEEE doubles; emission uses the shortest
// round-tripping decimal form, so emit . parse is the identity and golden
// files are reproducible.
//
//   matrix file   {"dim": n, "rows": [[[re, im], ...], ...]}   (row-major)
//   basis file    {"dim": n, "elements": [<matrix>, ...]}      (n^2 elements)
//   channel spec  {"kind": "...", "dim": n, ...}, where kind is one of
//                 depolarizing (field "p"), transpose, identity,
//                 unitary (field "matrix"), kraus (field "operators"),
//                 supermatrix / choi (field "matrix", side n^2).
//
// Unknown fields are rejected so typos surface as schema errors.

namespace qchan::io {

using json = nlohmann::json;
using matrix = complex_matrix<double>;

namespace detail {

inline std::size_t line_of_byte(std::string_view text, std::size_t byte) {
  std::size_t line = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') ++line;
  }
  return line;
}

inline json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error("line " + std::to_string(line_of_byte(text, e.byte)) + ": " +
                      e.what());
  }
}

inline const json& require_field(const json& j, const char* key, const char* ctx) {
  if (!j.is_object()) throw schema_error(std::string(ctx) + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) {
    throw schema_error(std::string(ctx) + ": missing field \"" + key + "\"");
  }
  return *it;
}

inline void reject_unknown_fields(const json& j,
                                  std::initializer_list<const char*> allowed,
                                  const char* ctx) {
  if (!j.is_object()) throw schema_error(std::string(ctx) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* a : allowed) {
      if (key == a) {
        known = true;
        break;
      }
    }
    if (!known) {
      throw schema_error(std::string(ctx) + ": unexpected field \"" + key + "\"");
    }
  }
}

inline std::size_t require_dim(const json& j, const char* ctx) {
  const json& d = require_field(j, "dim", ctx);
  if (!d.is_number_integer() || d.get<long long>() < 1) {
    throw schema_error(std::string(ctx) + ": \"dim\" must be a positive integer");
  }
  return d.get<std::size_t>();
}

inline std::complex<double> entry_from_json(const json& e, const std::string& ctx) {
  if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
    throw schema_error(ctx + ": entries must be [re, im] number pairs");
  }
  return {e[0].get<double>(), e[1].get<double>()};
}

}  // namespace detail

//============================================================================
// Matrix files
//============================================================================

inline json matrix_to_json(const matrix& m) {
  if (!m.is_square()) throw shape_mismatch("matrix_to_json: matrix is not square");
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) {
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    }
    rows.push_back(std::move(row));
  }
  return json{{"dim", m.rows()}, {"rows", std::move(rows)}};
}

inline matrix matrix_from_json(const json& j, const char* ctx = "matrix") {
  detail::reject_unknown_fields(j, {"dim", "rows"}, ctx);
  const std::size_t dim = detail::require_dim(j, ctx);
  const json& rows = detail::require_field(j, "rows", ctx);
  if (!rows.is_array() || rows.size() != dim) {
    throw schema_error(std::string(ctx) + ": \"rows\" must be an array of " +
                       std::to_string(dim) + " rows");
  }
  std::vector<std::complex<double>> entries;
  entries.reserve(dim * dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const json& row = rows[r];
    if (!row.is_array() || row.size() != dim) {
      throw schema_error(std::string(ctx) + ": row " + std::to_string(r) + " must have " +
                         std::to_string(dim) + " entries");
    }
    for (std::size_t c = 0; c < dim; ++c) {
      entries.push_back(detail::entry_from_json(
          row[c], std::string(ctx) + ": rows[" + std::to_string(r) + "][" +
                      std::to_string(c) + "]"));
    }
  }
  return matrix(dim, dim, std::move(entries));
}

// Serialized form: 2-space indent plus trailing newline, with the shortest
// round-tripping decimal representation of each value.
inline std::string emit_matrix(const matrix& m) { return matrix_to_json(m).dump(2) + "\n"; }

inline matrix parse_matrix(std::string_view text) {
  return matrix_from_json(detail::parse_text(text));
}

//============================================================================
// Basis files
//============================================================================

inline matrix_basis<double> basis_from_json(const json& j) {
  detail::reject_unknown_fields(j, {"dim", "elements"}, "basis");
  const std::size_t dim = detail::require_dim(j, "basis");
  const json& elements = detail::require_field(j, "elements", "basis");
  if (!elements.is_array() || elements.size() != dim * dim) {
    throw schema_error("basis: \"elements\" must be an array of " +
                       std::to_string(dim * dim) + " matrices");
  }
  std::vector<matrix> mats;
  mats.reserve(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    matrix m = matrix_from_json(elements[i],
                                ("basis element " + std::to_string(i)).c_str());
    if (m.rows() != dim) {
      throw schema_error("basis: element " + std::to_string(i) + " is " +
                         std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                         ", expected " + std::to_string(dim) + "x" +
                         std::to_string(dim));
    }
    mats.push_back(std::move(m));
  }
  // Orthonormality is the caller's concern; it is checked where it matters.
  return matrix_basis<double>(dim, std::move(mats), /*orthonormal=*/false);
}

inline matrix_basis<double> parse_basis(std::string_view text) {
  return basis_from_json(detail::parse_text(text));
}

//============================================================================
// Channel specs
//============================================================================

enum class channel_kind { depolarizing, transpose, identity, unitary, kraus,
                          supermatrix, choi };

inline std::string_view to_string(channel_kind k) {
  switch (k) {
    case channel_kind::depolarizing: return "depolarizing";
    case channel_kind::transpose: return "transpose";
    case channel_kind::identity: return "identity";
    case channel_kind::unitary: return "unitary";
    case channel_kind::kraus: return "kraus";
    case channel_kind::supermatrix: return "supermatrix";
    case channel_kind::choi: return "choi";
  }
  return "?";
}

struct channel_spec {
  channel_kind kind;
  std::size_t dim = 0;
  double p = 0.0;                   // depolarizing
  std::vector<matrix> operators;    // kraus
  std::optional<matrix> payload;    // unitary / supermatrix / choi
};

inline channel_spec channel_spec_from_json(const json& j) {
  const json& kind_field = detail::require_field(j, "kind", "channel spec");
  if (!kind_field.is_string()) {
    throw schema_error("channel spec: \"kind\" must be a string");
  }
  const std::string kind_name = kind_field.get<std::string>();

  channel_spec spec;
  if (kind_name == "depolarizing") {
    spec.kind = channel_kind::depolarizing;
  } else if (kind_name == "transpose") {
    spec.kind = channel_kind::transpose;
  } else if (kind_name == "identity") {
    spec.kind = channel_kind::identity;
  } else if (kind_name == "unitary") {
    spec.kind = channel_kind::unitary;
  } else if (kind_name == "kraus") {
    spec.kind = channel_kind::kraus;
  } else if (kind_name == "supermatrix") {
    spec.kind = channel_kind::supermatrix;
  } else if (kind_name == "choi") {
    spec.kind = channel_kind::choi;
  } else {
    throw schema_error("channel spec: unknown kind \"" + kind_name + "\"");
  }
  spec.dim = detail::require_dim(j, "channel spec");

  switch (spec.kind) {
    case channel_kind::transpose:
    case channel_kind::identity:
      detail::reject_unknown_fields(j, {"kind", "dim"}, "channel spec");
      break;
    case channel_kind::depolarizing: {
      detail::reject_unknown_fields(j, {"kind", "dim", "p"}, "channel spec");
      const json& p = detail::require_field(j, "p", "channel spec");
      if (!p.is_number()) throw schema_error("channel spec: \"p\" must be a number");
      spec.p = p.get<double>();
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) {
        throw schema_error("channel spec: \"p\" = " + std::to_string(spec.p) +
                           " outside [0, 1]");
      }
      break;
    }
    case channel_kind::unitary: {
      detail::reject_unknown_fields(j, {"kind", "dim", "matrix"}, "channel spec");
      matrix u = matrix_from_json(detail::require_field(j, "matrix", "channel spec"),
                                  "channel spec matrix");
      if (u.rows() != spec.dim) {
        throw schema_error("channel spec: unitary matrix is " +
                           std::to_string(u.rows()) + "x" + std::to_string(u.cols()) +
                           ", expected " + std::to_string(spec.dim) + "x" +
                           std::to_string(spec.dim));
      }
      spec.payload = std::move(u);
      break;
    }
    case channel_kind::kraus: {
      detail::reject_unknown_fields(j, {"kind", "dim", "operators"}, "channel spec");
      const json& ops = detail::require_field(j, "operators", "channel spec");
      if (!ops.is_array() || ops.empty()) {
        throw schema_error("channel spec: \"operators\" must be a non-empty array");
      }
      for (std::size_t k = 0; k < ops.size(); ++k) {
        matrix op = matrix_from_json(ops[k],
                                     ("kraus operator " + std::to_string(k)).c_str());
        if (op.rows() != spec.dim) {
          throw schema_error("channel spec: kraus operator " + std::to_string(k) +
                             " is " + std::to_string(op.rows()) + "x" +
                             std::to_string(op.cols()) + ", expected " +
                             std::to_string(spec.dim) + "x" + std::to_string(spec.dim));
        }
        spec.operators.push_back(std::move(op));
      }
      break;
    }
    case channel_kind::supermatrix:
    case channel_kind::choi: {
      detail::reject_unknown_fields(j, {"kind", "dim", "matrix"}, "channel spec");
      matrix m = matrix_from_json(detail::require_field(j, "matrix", "channel spec"),
                                  "channel spec matrix");
      if (m.rows() != spec.dim * spec.dim) {
        throw schema_error("channel spec: " + kind_name + " payload is " +
                           std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                           ", expected " + std::to_string(spec.dim * spec.dim) + "x" +
                           std::to_string(spec.dim * spec.dim));
      }
      spec.payload = std::move(m);
      break;
    }
  }
  return spec;
}

inline channel_spec parse_channel_spec(std::string_view text) {
  return channel_spec_from_json(detail::parse_text(text));
}

inline channel<double> build_channel(const channel_spec& spec) {
  switch (spec.kind) {
    case channel_kind::depolarizing:
      return depolarizing(spec.dim, spec.p);
    case channel_kind::transpose:
      return transpose_channel(spec.dim);
    case channel_kind::identity:
      return identity_channel(spec.dim);
    case channel_kind::unitary:
      return unitary_channel(*spec.payload);
    case channel_kind::kraus:
      return kraus_channel(spec.operators);
    case channel_kind::supermatrix:
      return channel_from_supermatrix(
          super_matrix<double>{spec.dim, *spec.payload, base_matrices<double>(spec.dim)});
    case channel_kind::choi:
      return channel_from_supermatrix(super_matrix<double>{
          spec.dim, reshuffle(*spec.payload), base_matrices<double>(spec.dim)});
  }
  throw schema_error("build_channel: unhandled kind");
}

//============================================================================
// Verdict serialization
//============================================================================

inline json verdict_to_json(const channel_verdict<double>& v) {
  return json{{"completely_positive", v.completely_positive},
              {"trace_preserving", v.trace_preserving},
              {"hermiticity_preserving", v.hermiticity_preserving},
              {"min_choi_eigenvalue", v.min_choi_eigenvalue},
              {"tp_residual", v.tp_residual},
              {"cptp", v.completely_positive && v.trace_preserving &&
                           v.hermiticity_preserving}};
}

}  // namespace qchan::io
