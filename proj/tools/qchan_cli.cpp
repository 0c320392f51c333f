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

// Command-line front end. Subcommands:
//
//   repr     compute a representation of a channel spec
//   convert  reshuffle a matrix between natural and Choi form
//   check    print the CPTP verdict of a channel spec
//   apply    apply a channel spec to a state
//
// Exit codes: 0 success (and CPTP for check), 1 check failed, 2 parse or
// schema error, 3 non-orthonormal basis, 4 I/O error, 5 non-square side,
// 6 dimension mismatch. Payloads go to --out or stdout; diagnostics go to
// stderr.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qchan/io.hpp"
#include "qchan/qchan.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_check_failed = 1;
constexpr int exit_parse = 2;
constexpr int exit_bad_basis = 3;
constexpr int exit_io = 4;
constexpr int exit_non_square = 5;
constexpr int exit_dimension = 6;

struct io_failure {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_failure{"cannot open " + path};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw io_failure{"cannot read " + path};
  return buffer.str();
}

void write_payload(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw io_failure{"cannot open " + out_path + " for writing"};
  out << content;
  out.flush();
  if (!out) throw io_failure{"cannot write " + out_path};
}

qchan::channel<double> load_channel(const std::string& spec_path) {
  return qchan::io::build_channel(qchan::io::parse_channel_spec(read_file(spec_path)));
}

qchan::matrix_basis<double> resolve_basis(const std::string& arg, std::size_t dim) {
  if (arg == "canonical") return qchan::base_matrices<double>(dim);
  if (arg == "pauli") {
    if (dim != 2) {
      throw qchan::schema_error("the pauli basis has dimension 2, channel has dimension " +
                                std::to_string(dim));
    }
    return qchan::pauli_basis<double>();
  }
  if (arg.rfind("file:", 0) == 0) {
    auto basis = qchan::io::parse_basis(read_file(arg.substr(5)));
    if (basis.dim() != dim) {
      throw qchan::schema_error("basis dimension " + std::to_string(basis.dim()) +
                                " does not match channel dimension " +
                                std::to_string(dim));
    }
    return basis;
  }
  throw qchan::schema_error("unknown basis \"" + arg +
                            "\" (expected canonical, pauli, or file:PATH)");
}

int run_repr(const std::string& spec_path, const std::string& form,
             const std::string& basis_arg, const std::string& out_path) {
  const auto ch = load_channel(spec_path);
  qchan::complex_matrix<double> result(1, 1);
  if (form == "natural") {
    result = qchan::natural_representation(ch).m;
  } else if (form == "general") {
    const auto basis = resolve_basis(basis_arg, ch.dim());
    result = qchan::general_natural_representation(ch, basis).m;
  } else {
    result = qchan::choi_representation(ch).j;
  }
  write_payload(out_path, qchan::io::emit_matrix(result));
  return exit_ok;
}

int run_convert(const std::string& from, const std::string& to,
                const std::string& matrix_path, const std::string& out_path) {
  auto m = qchan::io::parse_matrix(read_file(matrix_path));
  if (from != to) m = qchan::reshuffle(m);
  write_payload(out_path, qchan::io::emit_matrix(m));
  return exit_ok;
}

int run_check(const std::string& spec_path, bool as_json) {
  const auto verdict = qchan::is_cptp(load_channel(spec_path));
  if (as_json) {
    std::cout << qchan::io::verdict_to_json(verdict).dump(2) << "\n";
  } else {
    const auto yn = [](bool b) { return b ? "yes" : "no"; };
    std::cout << "completely positive:    " << yn(verdict.completely_positive)
              << " (min Choi eigenvalue " << verdict.min_choi_eigenvalue << ")\n"
              << "trace preserving:       " << yn(verdict.trace_preserving)
              << " (max residual " << verdict.tp_residual << ")\n"
              << "hermiticity preserving: " << yn(verdict.hermiticity_preserving) << "\n";
  }
  const bool ok = verdict.completely_positive && verdict.trace_preserving &&
                  verdict.hermiticity_preserving;
  return ok ? exit_ok : exit_check_failed;
}

int run_apply(const std::string& spec_path, const std::string& state_path,
              const std::string& out_path) {
  const auto ch = load_channel(spec_path);
  const auto state = qchan::io::parse_matrix(read_file(state_path));
  write_payload(out_path, qchan::io::emit_matrix(ch(state)));
  return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quantum channel representations"};
  app.require_subcommand(1);

  std::string spec_path, matrix_path, state_path, out_path;
  std::string form = "natural";
  std::string basis = "canonical";
  std::string from, to;
  bool as_json = false;

  auto* repr = app.add_subcommand("repr", "compute a channel representation");
  repr->add_option("spec", spec_path, "channel spec file")->required();
  repr->add_option("--form", form, "representation form")
      ->check(CLI::IsMember({"natural", "general", "choi"}));
  repr->add_option("--basis", basis, "canonical, pauli, or file:PATH (with --form general)");
  repr->add_option("--out", out_path, "output file (default stdout)");

  auto* convert = app.add_subcommand("convert", "convert between natural and Choi form");
  convert->add_option("matrix", matrix_path, "matrix file")->required();
  convert->add_option("--from", from, "input form")
      ->required()
      ->check(CLI::IsMember({"natural", "choi"}));
  convert->add_option("--to", to, "output form")
      ->required()
      ->check(CLI::IsMember({"natural", "choi"}));
  convert->add_option("--out", out_path, "output file (default stdout)");

  auto* check = app.add_subcommand("check", "CPTP verdict for a channel spec");
  check->add_option("spec", spec_path, "channel spec file")->required();
  check->add_flag("--json", as_json, "emit the verdict as JSON");

  auto* apply = app.add_subcommand("apply", "apply a channel to a state");
  apply->add_option("spec", spec_path, "channel spec file")->required();
  apply->add_option("--state", state_path, "state matrix file")->required();
  apply->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_parse;
  }

  try {
    if (repr->parsed()) return run_repr(spec_path, form, basis, out_path);
    if (convert->parsed()) return run_convert(from, to, matrix_path, out_path);
    if (check->parsed()) return run_check(spec_path, as_json);
    return run_apply(spec_path, state_path, out_path);
  } catch (const io_failure& e) {
    std::cerr << "error: " << e.message << "\n";
    return exit_io;
  } catch (const qchan::not_orthonormal& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_bad_basis;
  } catch (const qchan::non_square_side& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_non_square;
  } catch (const qchan::dimension_mismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_dimension;
  } catch (const std::exception& e) {
    // parse_error, schema_error, and any constraint violation while building
    // the channel from its spec.
    std::cerr << "error: " << e.what() << "\n";
    return exit_parse;
  }
}
