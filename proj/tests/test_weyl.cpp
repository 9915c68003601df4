#include <cmath>
#include <complex>

#include <doctest.h>

#include "stabscope/errors.hpp"
#include "stabscope/rng.hpp"
#include "stabscope/state.hpp"
#include "stabscope/weyl.hpp"

#include "test_helpers.hpp"

using namespace stabscope;
using namespace stabscope::testing;

TEST_CASE("identity index leaves any state unchanged") {
  Rng rng(11);
  StateVector psi = haar_random(3, rng);
  StateVector out = weyl_apply(psi, WeylIndex{0});
  CHECK(max_abs_diff(psi.amplitudes(), out.amplitudes()) < 1e-15);
}

TEST_CASE("single-qubit X flips |0> to |1>") {
  StateVector zero = StateVector::computational_basis(1, 0);
  StateVector out = weyl_apply(zero, make_weyl_index(1, 0, 1));
  CHECK(std::abs(out.amplitude(0)) < 1e-15);
  CHECK(std::abs(out.amplitude(1) - Amplitude{1.0, 0.0}) < 1e-15);
}

TEST_CASE("W_(1,1) acts as Y: |0> -> i|1>") {
  // Oracle: multiply the explicit Y matrix against (1, 0).
  StateVector zero = StateVector::computational_basis(1, 0);
  auto expected = matvec(weyl_matrix(0b11, 1), zero.amplitudes());
  StateVector out = weyl_apply(zero, WeylIndex{0b11});
  CHECK(max_abs_diff(out.amplitudes(), expected) < 1e-15);
  CHECK(std::abs(out.amplitude(1) - Amplitude{0.0, 1.0}) < 1e-15);
}

TEST_CASE("weyl_apply agrees with the dense matrix oracle at n=2") {
  Rng rng(5);
  StateVector psi = haar_random(2, rng);
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    StateVector out = weyl_apply(psi, WeylIndex{bits});
    auto expected = matvec(weyl_matrix(bits, 2), psi.amplitudes());
    CHECK(max_abs_diff(out.amplitudes(), expected) < 1e-12);
  }
}

TEST_CASE("weyl_apply is an involution") {
  Rng rng(17);
  StateVector psi = haar_random(2, rng);
  for (std::uint64_t bits = 0; bits < 16; ++bits) {
    StateVector twice = weyl_apply(weyl_apply(psi, WeylIndex{bits}), WeylIndex{bits});
    CHECK(max_abs_diff(psi.amplitudes(), twice.amplitudes()) < 1e-12);
  }
}

TEST_CASE("expectation basics") {
  StateVector zero = StateVector::computational_basis(1, 0);
  CHECK(weyl_expectation(zero, WeylIndex{0}) == doctest::Approx(1.0));
  CHECK(weyl_expectation(zero, make_weyl_index(0, 1, 1)) == doctest::Approx(1.0));

  // <T|X|T> = cos(pi/4)
  StateVector t = t_magic_state();
  CHECK(weyl_expectation(t, make_weyl_index(1, 0, 1)) ==
        doctest::Approx(std::cos(std::acos(-1.0) / 4.0)).epsilon(1e-9));
}

TEST_CASE("expectation squared is bounded by 1") {
  Rng rng(23);
  StateVector psi = haar_random(3, rng);
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    double e = weyl_expectation(psi, WeylIndex{bits});
    CHECK(e * e <= 1.0 + 1e-12);
  }
}

TEST_CASE("product phase against the matrix oracle") {
  CHECK(weyl_product_phase(WeylIndex{0}, WeylIndex{0}, 1) == 0);
  // XZ = -i (iXZ) so k = 3; ZX differs by the anticommutator, k = 1.
  CHECK(weyl_product_phase(make_weyl_index(1, 0, 1), make_weyl_index(0, 1, 1), 1) == 3);
  CHECK(weyl_product_phase(make_weyl_index(0, 1, 1), make_weyl_index(1, 0, 1), 1) == 1);

  // Exhaustive n=2 check: W_x W_y = i^k W_{x^y} entrywise.
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      int k = weyl_product_phase(WeylIndex{x}, WeylIndex{y}, 2);
      Matrix lhs = matmul(weyl_matrix(x, 2), weyl_matrix(y, 2));
      Matrix rhs = weyl_matrix(x ^ y, 2);
      Amplitude phase{1.0, 0.0};
      for (int i = 0; i < k; ++i) phase *= Amplitude{0.0, 1.0};
      double worst = 0.0;
      for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
          worst = std::max(worst, std::abs(lhs[r][c] - phase * rhs[r][c]));
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("composition property on states at n=2") {
  Rng rng(31);
  StateVector psi = haar_random(2, rng);
  for (std::uint64_t x = 0; x < 16; ++x) {
    for (std::uint64_t y = 0; y < 16; ++y) {
      // Applying x then y equals i^{phase(y, x)} times applying x^y.
      StateVector seq = weyl_apply(weyl_apply(psi, WeylIndex{x}), WeylIndex{y});
      StateVector combined = weyl_apply(psi, WeylIndex{x ^ y});
      int k = weyl_product_phase(WeylIndex{y}, WeylIndex{x}, 2);
      Amplitude phase{1.0, 0.0};
      for (int i = 0; i < k; ++i) phase *= Amplitude{0.0, 1.0};
      double worst = 0.0;
      for (std::uint64_t j = 0; j < 4; ++j) {
        worst = std::max(worst, std::abs(seq.amplitude(j) - phase * combined.amplitude(j)));
      }
      CHECK(worst < 1e-12);
    }
  }
}

TEST_CASE("dimension mismatch is rejected") {
  StateVector zero = StateVector::computational_basis(1, 0);
  CHECK_THROWS_AS(weyl_apply(zero, WeylIndex{5}), DimensionError);
  CHECK_THROWS_AS(weyl_expectation(zero, WeylIndex{4}), DimensionError);
  CHECK_THROWS_AS(weyl_product_phase(WeylIndex{1}, WeylIndex{16}, 2), DimensionError);
}
