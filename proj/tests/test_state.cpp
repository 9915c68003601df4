#include <cmath>
#include <cstdio>
#include <numbers>

#include <doctest.h>

#include "stabscope/errors.hpp"
#include "stabscope/state.hpp"
#include "stabscope/weyl.hpp"

#include "test_helpers.hpp"

using namespace stabscope;
using namespace stabscope::testing;

TEST_CASE("haar_random is unit norm and deterministic") {
  Rng a(42), b(42);
  StateVector s1 = haar_random(1, a);
  StateVector s2 = haar_random(1, b);
  CHECK(s1.norm() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(max_abs_diff(s1.amplitudes(), s2.amplitudes()) == 0.0);
}

TEST_CASE("haar mean of a fixed nonidentity Weyl expectation is near zero") {
  // Monte-Carlo oracle: the Haar mean of any nonidentity Weyl expectation is
  // 0, with variance ~ 1/2^n per draw.
  const int n = 8;
  const int samples = 1000;
  Rng rng(7);
  WeylIndex z1 = make_weyl_index(0, 1, n);
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < samples; ++i) {
    StateVector psi = haar_random(n, rng);
    double e = weyl_expectation(psi, z1);
    sum += e;
    sum_sq += e * e;
  }
  double mean = sum / samples;
  double var = sum_sq / samples - mean * mean;
  double stderr_mean = std::sqrt(var / samples);
  CHECK(std::abs(mean) < 4.0 * stderr_mean + 1e-12);
}

TEST_CASE("inner products") {
  Rng rng(3);
  StateVector psi = haar_random(2, rng);
  CHECK(std::abs(inner_product(psi, psi) - Amplitude{1.0, 0.0}) < 1e-12);

  StateVector zero = StateVector::computational_basis(1, 0);
  StateVector one = StateVector::computational_basis(1, 1);
  CHECK(std::abs(inner_product(zero, one)) < 1e-15);

  // <0|T> = 1/sqrt(2)
  CHECK(std::abs(inner_product(zero, t_magic_state()) -
                 Amplitude{1.0 / std::sqrt(2.0), 0.0}) < 1e-12);

  CHECK_THROWS_AS(inner_product(zero, haar_random(2, rng)), DimensionError);
}

TEST_CASE("tensor product layout and norm") {
  Rng rng(9);
  StateVector a = haar_random(2, rng);
  StateVector zero = StateVector::computational_basis(1, 0);
  StateVector prod = tensor(a, zero);
  CHECK(prod.qubits() == 3);
  for (std::uint64_t i = 0; i < 4; ++i) {
    CHECK(std::abs(prod.amplitude(i) - a.amplitude(i)) < 1e-15);
    CHECK(std::abs(prod.amplitude(i + 4)) < 1e-15);
  }
  CHECK(prod.norm() == doctest::Approx(1.0).epsilon(1e-12));

  // |T>|T> amplitude at index 3 is e^{i pi/2} / 2.
  StateVector tt = tensor(t_magic_state(), t_magic_state());
  Amplitude expected = std::polar(0.5, std::numbers::pi / 2.0);
  CHECK(std::abs(tt.amplitude(3) - expected) < 1e-12);
}

TEST_CASE("amplitude file round trip") {
  Rng rng(13);
  StateVector psi = haar_random(3, rng);
  const char* path = "state_roundtrip.amps";
  save_amplitudes(psi, path);
  StateVector loaded = load_amplitudes(path);
  CHECK(max_abs_diff(psi.amplitudes(), loaded.amplitudes()) < 1e-15);
  std::remove(path);
}

TEST_CASE("loader rejects unnormalized input unless asked to normalize") {
  const char* path = "state_unnormalized.amps";
  std::FILE* f = std::fopen(path, "w");
  std::fputs("qubits 1\n2 0\n0 0\n", f);
  std::fclose(f);
  CHECK_THROWS(load_amplitudes(path));
  StateVector s = load_amplitudes(path, /*normalize=*/true);
  CHECK(std::abs(s.amplitude(0) - Amplitude{1.0, 0.0}) < 1e-15);
  std::remove(path);
}

TEST_CASE("memory cap") {
  Rng rng(1);
  CHECK_THROWS_AS(haar_random(20, rng), CapExceeded);
  CHECK_THROWS_AS(haar_random(0, rng), DimensionError);
}

TEST_CASE("derived RNG substreams differ from the parent") {
  Rng base(99);
  Rng d0 = base.derive(0);
  Rng d1 = base.derive(1);
  CHECK(d0.next_u64() != d1.next_u64());
  // Deterministic: deriving again replays the stream.
  Rng d0b = base.derive(0);
  Rng d0c = base.derive(0);
  CHECK(d0b.next_u64() == d0c.next_u64());
}
