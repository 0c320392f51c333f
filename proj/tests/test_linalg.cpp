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

#include <catch2/catch_amalgamated.hpp>

#include <complex>
#include <random>

#include "qchan/eig.hpp"
#include "qchan/errors.hpp"
#include "qchan/matrix.hpp"
#include "support/jacobi.hpp"
#include "support/test_support.hpp"

using qtest::cmat;
using qtest::cplx;

TEST_CASE("res flattens row by row") {
  const cmat m{{cplx(1), cplx(2)}, {cplx(3), cplx(4)}};
  CHECK(qchan::res(m) == qchan::complex_vector<double>{cplx(1), cplx(2), cplx(3), cplx(4)});

  CHECK(qchan::res(cmat::identity(2)) ==
        qchan::complex_vector<double>{cplx(1), cplx(0), cplx(0), cplx(1)});

  const cmat y{{cplx(0), cplx(0, 1)}, {cplx(0, -1), cplx(0)}};
  CHECK(qchan::res(y) ==
        qchan::complex_vector<double>{cplx(0), cplx(0, 1), cplx(0, -1), cplx(0)});
}

TEST_CASE("unres folds back to a square matrix") {
  const qchan::complex_vector<double> v{cplx(1), cplx(2), cplx(3), cplx(4)};
  CHECK(qchan::unres(v) == cmat{{cplx(1), cplx(2)}, {cplx(3), cplx(4)}});

  CHECK(qchan::unres(qchan::complex_vector<double>{cplx(1), cplx(0), cplx(0), cplx(1)}) ==
        cmat::identity(2));

  CHECK_THROWS_AS(qchan::unres(qchan::complex_vector<double>{cplx(1), cplx(2), cplx(3)}),
                  qchan::non_square_length);
  CHECK_THROWS_AS(qchan::unres(qchan::complex_vector<double>{}), qchan::non_square_length);
}

TEST_CASE("res and unres are mutually inverse") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const cmat m = qtest::random_matrix(rng, n, n);
    CHECK(qchan::unres(qchan::res(m)) == m);
    auto v = qchan::res(qtest::random_matrix(rng, n, n));
    CHECK(qchan::res(qchan::unres(v)) == v);
  }
}

TEST_CASE("hs_inner matches the trace formula") {
  CHECK(qchan::hs_inner(cmat::identity(2), cmat::identity(2)) == cplx(2));
  CHECK(std::abs(qchan::hs_inner(qtest::sigma_x(), qtest::sigma_y())) < 1e-15);
  const cmat e12 = qtest::matrix_unit(2, 0, 1);
  CHECK(qchan::hs_inner(e12, e12) == cplx(1));
  CHECK_THROWS_AS(qchan::hs_inner(cmat::identity(2), cmat::identity(3)),
                  qchan::shape_mismatch);

  // the entrywise evaluation equals tr(x.dagger(y)) computed the long way
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const cmat x = qtest::random_matrix(rng, 3, 3);
    const cmat y = qtest::random_matrix(rng, 3, 3);
    CHECK(std::abs(qchan::hs_inner(x, y) - qchan::trace(x * qchan::dagger(y))) < 1e-12);
  }
}

TEST_CASE("hs_inner is a positive sesquilinear form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const cmat x = qtest::random_matrix(rng, 3, 3);
    const cmat y = qtest::random_matrix(rng, 3, 3);

    const cplx xx = qchan::hs_inner(x, x);
    CHECK(std::abs(xx.imag()) < 1e-12);
    CHECK(xx.real() >= 0.0);
    double frob = 0;
    for (const auto& e : x.entries()) frob += std::norm(e);
    CHECK(std::abs(xx.real() - frob) < 1e-12);

    CHECK(std::abs(qchan::hs_inner(x, y) - std::conj(qchan::hs_inner(y, x))) < 1e-12);
  }
}

TEST_CASE("kron basics") {
  const cmat e11 = qtest::matrix_unit(2, 0, 0);
  const cmat k = qchan::kron(e11, e11);
  CHECK(k.rows() == 4);
  CHECK(k == qtest::matrix_unit(4, 0, 0));

  CHECK(qchan::kron(cmat::identity(2), cmat::identity(2)) == cmat::identity(4));
}

TEST_CASE("kron satisfies the mixed-product identity") {
  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const cmat a = qtest::random_matrix(rng, 2, 2);
    const cmat b = qtest::random_matrix(rng, 2, 2);
    const cmat c = qtest::random_matrix(rng, 2, 2);
    const cmat d = qtest::random_matrix(rng, 2, 2);
    CHECK(qchan::max_abs_diff(qchan::kron(a, b) * qchan::kron(c, d),
                              qchan::kron(a * c, b * d)) < 1e-12);
  }
}

TEST_CASE("row-major vectorization identity res(A.rho.B) = (A kron B^T).res(rho)") {
  std::mt19937_64 rng(15);
  for (std::size_t n : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const cmat a = qtest::random_matrix(rng, n, n);
      const cmat b = qtest::random_matrix(rng, n, n);
      const cmat rho = qtest::random_matrix(rng, n, n);
      const auto lhs = qchan::res(a * rho * b);
      const auto rhs = qchan::kron(a, qchan::transpose(b)) * qchan::res(rho);
      for (std::size_t i = 0; i < lhs.size(); ++i) CHECK(std::abs(lhs[i] - rhs[i]) < 1e-12);
    }
  }
}

TEST_CASE("dagger") {
  CHECK(qchan::dagger(qtest::sigma_y()) == qtest::sigma_y());
  CHECK(qchan::dagger(qtest::matrix_unit(2, 0, 1)) == qtest::matrix_unit(2, 1, 0));

  std::mt19937_64 rng(16);
  const cmat m = qtest::random_matrix(rng, 3, 4);
  CHECK(qchan::dagger(qchan::dagger(m)) == m);
}

TEST_CASE("matrix constructors reject bad input") {
  CHECK_THROWS_AS(cmat(2, 2, {cplx(1), cplx(2), cplx(3)}), qchan::shape_mismatch);
  CHECK_THROWS_AS(cmat(0, 2), qchan::shape_mismatch);
  const double nan = std::nan("");
  CHECK_THROWS_AS(cmat(1, 1, {cplx(nan, 0)}), qchan::non_finite_entry);
  CHECK_THROWS_AS((cmat{{cplx(1), cplx(2)}, {cplx(3)}}), qchan::shape_mismatch);
}

TEST_CASE("eigvals_hermitian on known spectra") {
  const auto z = qchan::eigvals_hermitian(qtest::sigma_z());
  REQUIRE(z.size() == 2);
  CHECK(std::abs(z[0] - (-1.0)) < 1e-12);
  CHECK(std::abs(z[1] - 1.0) < 1e-12);

  const auto id4 = qchan::eigvals_hermitian(cmat::identity(4));
  for (double v : id4) CHECK(std::abs(v - 1.0) < 1e-12);

  // SWAP is an involution with trace 2: spectrum {-1, 1, 1, 1}.
  const auto swap = qchan::eigvals_hermitian(qtest::swap_gate());
  REQUIRE(swap.size() == 4);
  CHECK(std::abs(swap[0] - (-1.0)) < 1e-12);
  for (std::size_t i = 1; i < 4; ++i) CHECK(std::abs(swap[i] - 1.0) < 1e-12);
}

TEST_CASE("eigvals_hermitian rejects non-Hermitian input") {
  CHECK_THROWS_AS(qchan::eigvals_hermitian(qtest::matrix_unit(2, 0, 1)),
                  qchan::not_hermitian);
  CHECK_THROWS_AS(qchan::eigvals_hermitian(cmat(2, 3)), qchan::not_hermitian);

  // a perturbation below the relative tolerance is accepted
  cmat nearly = qtest::sigma_z();
  nearly(0, 1) = cplx(0, 1e-12);
  CHECK_NOTHROW(qchan::eigvals_hermitian(nearly));
}

TEST_CASE("jacobi oracle self-checks") {
  // analytic 2x2 spectrum: (a+d)/2 +- sqrt(((a-d)/2)^2 + |b|^2)
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const cmat h = qtest::random_hermitian(rng, 2);
    const double a = h(0, 0).real();
    const double d = h(1, 1).real();
    const double b = std::abs(h(0, 1));
    const double mid = 0.5 * (a + d);
    const double radius = std::sqrt(0.25 * (a - d) * (a - d) + b * b);
    const auto got = qtest::jacobi_eigvals(h);
    CHECK(std::abs(got[0] - (mid - radius)) < 1e-10);
    CHECK(std::abs(got[1] - (mid + radius)) < 1e-10);
  }

  const auto swap = qtest::jacobi_eigvals(qtest::swap_gate());
  CHECK(std::abs(swap[0] - (-1.0)) < 1e-10);
  CHECK(std::abs(swap[3] - 1.0) < 1e-10);
}

TEST_CASE("eigvals_hermitian agrees with the jacobi oracle up to dimension 16") {
  std::mt19937_64 rng(18);
  for (std::size_t n : {2, 3, 5, 8, 16}) {
    for (int trial = 0; trial < 4; ++trial) {
      const cmat h = qtest::random_hermitian(rng, n);
      const auto fast = qchan::eigvals_hermitian(h);
      const auto reference = qtest::jacobi_eigvals(h);
      REQUIRE(fast.size() == reference.size());
      for (std::size_t i = 0; i < fast.size(); ++i)
        CHECK(std::abs(fast[i] - reference[i]) < 1e-10);
    }
  }
}

TEST_CASE("eigenvalues sum to the trace") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 10; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const cmat h = qtest::random_hermitian(rng, n);
    double sum = 0;
    for (double v : qchan::eigvals_hermitian(h)) sum += v;
    CHECK(std::abs(sum - qchan::trace(h).real()) < 1e-10 * (1.0 + qchan::max_abs(h)));
  }
}
