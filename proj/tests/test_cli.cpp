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

// End-to-end tests of the qchan executable: golden files, exit codes, and
// the promise that commands are thin shells over the library.

#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "qchan/io.hpp"
#include "qchan/qchan.hpp"
#include "support/test_support.hpp"

using qtest::cmat;
using qtest::cplx;

namespace {

std::string data_path(const std::string& rel) {
  return std::string(QCHAN_TEST_DATA_DIR) + "/" + rel;
}

std::string scratch_path(const std::string& name) {
  std::filesystem::create_directories("cli_scratch");
  return "cli_scratch/" + name;
}

int run_cli(const std::string& args, bool quiet = true) {
  std::string cmd = std::string(QCHAN_CLI_PATH) + " " + args;
  if (quiet) cmd += " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("repr --form natural reproduces the SWAP golden file byte-for-byte") {
  const std::string out = scratch_path("swap.json");
  CHECK(run_cli("repr " + data_path("specs/transpose2.json") + " --form natural --out " +
                out) == 0);
  CHECK(slurp(out) == slurp(data_path("golden/swap_natural.json")));
}

TEST_CASE("repr --form general --basis pauli yields the diagonal depolarizing form") {
  const std::string out = scratch_path("dep_pauli.json");
  CHECK(run_cli("repr " + data_path("specs/depolarizing2_p05.json") +
                " --form general --basis pauli --out " + out) == 0);
  const cmat m = qchan::io::parse_matrix(slurp(out));
  cmat expected(4, 4);
  expected(0, 0) = cplx(1);
  expected(1, 1) = expected(2, 2) = expected(3, 3) = cplx(0.5);
  CHECK(qchan::max_abs_diff(m, expected) < 1e-12);
}

TEST_CASE("repr --form choi is the library's sum formula, serialized verbatim") {
  const std::string out = scratch_path("identity3_choi.json");
  CHECK(run_cli("repr " + data_path("specs/identity3.json") + " --form choi --out " + out) ==
        0);
  const auto expected =
      qchan::choi_representation(qchan::identity_channel<double>(3)).j;
  CHECK(slurp(out) == qchan::io::emit_matrix(expected));
}

TEST_CASE("check exit codes follow the verdict") {
  CHECK(run_cli("check " + data_path("specs/transpose2.json") + " >/dev/null") == 1);
  CHECK(run_cli("check " + data_path("specs/depolarizing2_p03.json") + " >/dev/null") == 0);
  CHECK(run_cli("check " + data_path("specs/kraus_scaled.json") + " >/dev/null") == 1);
}

TEST_CASE("check --json reports the diagnostics") {
  const std::string out = scratch_path("verdict.json");

  CHECK(run_cli("check " + data_path("specs/transpose2.json") + " --json > " + out) == 1);
  auto j = nlohmann::json::parse(slurp(out));
  CHECK_FALSE(j.at("completely_positive").get<bool>());
  CHECK(j.at("trace_preserving").get<bool>());
  CHECK(std::abs(j.at("min_choi_eigenvalue").get<double>() - (-1.0)) < 1e-8);

  CHECK(run_cli("check " + data_path("specs/kraus_scaled.json") + " --json > " + out) == 1);
  j = nlohmann::json::parse(slurp(out));
  CHECK(j.at("completely_positive").get<bool>());
  CHECK_FALSE(j.at("trace_preserving").get<bool>());
  CHECK(std::abs(j.at("tp_residual").get<double>() - 3.0) < 1e-12);
}

TEST_CASE("the SWAP matrix is a reshuffle fixed point under convert") {
  const std::string out = scratch_path("swap_as_choi.json");
  CHECK(run_cli("convert " + data_path("golden/swap_natural.json") +
                " --from natural --to choi --out " + out) == 0);
  CHECK(slurp(out) == slurp(data_path("golden/swap_natural.json")));
}

TEST_CASE("convert round trip is idempotent") {
  // natural form of the depolarizing channel, produced by the tool itself
  const std::string nat = scratch_path("dep_nat.json");
  REQUIRE(run_cli("repr " + data_path("specs/depolarizing2_p03.json") +
                  " --form natural --out " + nat) == 0);

  const std::string choi = scratch_path("dep_choi.json");
  const std::string back = scratch_path("dep_back.json");
  CHECK(run_cli("convert " + nat + " --from natural --to choi --out " + choi) == 0);
  CHECK(run_cli("convert " + choi + " --from choi --to natural --out " + back) == 0);
  CHECK(slurp(back) == slurp(nat));

  // matches the library's reshuffle bit for bit
  const auto dep_choi =
      qchan::choi_representation(qchan::depolarizing<double>(2, 0.3)).j;
  CHECK(slurp(choi) == qchan::io::emit_matrix(dep_choi));

  // from == to is a byte-identical payload copy
  const std::string copy = scratch_path("dep_copy.json");
  CHECK(run_cli("convert " + nat + " --from natural --to natural --out " + copy) == 0);
  CHECK(slurp(copy) == slurp(nat));
}

TEST_CASE("apply") {
  const std::string out = scratch_path("applied.json");

  // full depolarizing sends any unit-trace state to I/2
  CHECK(run_cli("apply " + data_path("specs/depolarizing2_p1.json") + " --state " +
                data_path("states/plus_state.json") + " --out " + out) == 0);
  const cmat result = qchan::io::parse_matrix(slurp(out));
  CHECK(qchan::max_abs_diff(result, cmat::identity(2) * cplx(0.5)) < 1e-12);

  // identity returns the state unchanged, byte for byte
  const std::string state = data_path("states/plus_state.json");
  CHECK(run_cli("apply " + data_path("specs/identity2.json") + " --state " + state +
                " --out " + out) == 0);
  const cmat echoed = qchan::io::parse_matrix(slurp(out));
  CHECK(echoed == qchan::io::parse_matrix(slurp(state)));

  // dimension mismatch between channel and state
  CHECK(run_cli("apply " + data_path("specs/identity3.json") + " --state " + state +
                " --out " + out) == 6);
}

TEST_CASE("a basis can be supplied as a file") {
  // write the Pauli basis out through the library, then feed it back in
  const auto pauli = qchan::pauli_basis<double>();
  nlohmann::json elements = nlohmann::json::array();
  for (const auto& e : pauli.elements()) elements.push_back(qchan::io::matrix_to_json(e));
  const nlohmann::json file{{"dim", 2}, {"elements", elements}};
  const std::string basis_path = scratch_path("pauli_basis.json");
  std::ofstream(basis_path) << file.dump(2) << "\n";

  const std::string from_file = scratch_path("dep_pauli_file.json");
  const std::string builtin = scratch_path("dep_pauli_builtin.json");
  CHECK(run_cli("repr " + data_path("specs/depolarizing2_p05.json") +
                " --form general --basis file:" + basis_path + " --out " + from_file) == 0);
  CHECK(run_cli("repr " + data_path("specs/depolarizing2_p05.json") +
                " --form general --basis pauli --out " + builtin) == 0);
  CHECK(slurp(from_file) == slurp(builtin));
}

TEST_CASE("error exit codes are disjoint and stable") {
  // parse/schema problems
  CHECK(run_cli("repr " + data_path("specs/malformed.json") + " --form natural") == 2);
  CHECK(run_cli("check " + data_path("specs/malformed.json")) == 2);
  CHECK(run_cli("repr " + data_path("specs/identity3.json") +
                " --form general --basis pauli") == 2);
  CHECK(run_cli("repr " + data_path("specs/transpose2.json") + " --form sideways") == 2);

  // non-orthonormal basis file
  CHECK(run_cli("repr " + data_path("specs/transpose2.json") +
                " --form general --basis file:" + data_path("bases/not_orthonormal.json")) ==
        3);

  // I/O problems
  CHECK(run_cli("repr no_such_file.json --form natural") == 4);
  CHECK(run_cli("apply " + data_path("specs/identity2.json") +
                " --state no_such_state.json") == 4);
  CHECK(run_cli("repr " + data_path("specs/transpose2.json") +
                " --form natural --out no_such_dir/out.json") == 4);

  // non-square side in convert
  CHECK(run_cli("convert " + data_path("states/plus_state.json") +
                " --from natural --to choi") == 5);
}
