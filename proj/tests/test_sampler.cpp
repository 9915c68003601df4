#include <cmath>
#include <map>

#include <doctest.h>

#include "stabscope/circuit.hpp"
#include "stabscope/errors.hpp"
#include "stabscope/sampler.hpp"
#include "stabscope/spectra.hpp"
#include "stabscope/stabset.hpp"
#include "stabscope/state.hpp"

using namespace stabscope;

TEST_CASE("point-mass table always returns its index") {
  DistributionTable q{1, TableKind::Weyl, {0.0, 0.0, 1.0, 0.0}};
  Rng rng(3);
  BellDifferenceSampler sampler(q);
  for (int i = 0; i < 100; ++i) {
    CHECK(sampler.sample(rng).bits == 2);
  }
}

TEST_CASE("samples from |0>'s q table hit only I and Z with equal rates") {
  DistributionTable q =
      weyl_distribution(characteristic_table_fast(StateVector::computational_basis(1, 0)));
  Rng rng(5);
  BellDifferenceSampler sampler(q);
  const int draws = 10000;
  int z_count = 0;
  for (int i = 0; i < draws; ++i) {
    std::uint64_t bits = sampler.sample(rng).bits;
    CHECK((bits == 0 || bits == 1));  // I or Z only
    z_count += (bits == 1);
  }
  // Binomial(10^4, 1/2): 3 sigma = 150.
  CHECK(std::abs(z_count - draws / 2) < 150);
}

TEST_CASE("empirical |T> sample distribution is close in TV distance") {
  DistributionTable q = weyl_distribution(characteristic_table_fast(t_magic_state()));
  Rng rng(7);
  BellDifferenceSampler sampler(q);
  const int draws = 100000;
  std::map<std::uint64_t, int> counts;
  for (int i = 0; i < draws; ++i) ++counts[sampler.sample(rng).bits];
  double tv = 0.0;
  for (std::uint64_t x = 0; x < 4; ++x) {
    double empirical = static_cast<double>(counts[x]) / draws;
    tv += 0.5 * std::abs(empirical - q.values[x]);
  }
  CHECK(tv < 0.02);
}

TEST_CASE("unnormalized table is rejected") {
  DistributionTable q{1, TableKind::Weyl, {0.5, 0.0, 0.0, 0.0}};
  CHECK_THROWS(BellDifferenceSampler{q});
  DistributionTable p{1, TableKind::Characteristic, {1.0, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(BellDifferenceSampler{p}, DimensionError);
}

TEST_CASE("two-copy measurement on deterministic cases") {
  Rng rng(9);
  StateVector zero = StateVector::computational_basis(1, 0);
  for (int i = 0; i < 50; ++i) {
    CHECK(two_copy_weyl_measurement(zero, WeylIndex{0}, rng) == 1);
    CHECK(two_copy_weyl_measurement(zero, WeylIndex{1}, rng) == 1);  // Z eigenstate
  }
}

TEST_CASE("two-copy measurement on |+> with Z is a fair coin") {
  StateVector plus = simulate(parse_circuit("qubits 1\nH 0\n"));
  Rng rng(11);
  const int draws = 10000;
  int plus_count = 0;
  for (int i = 0; i < draws; ++i) {
    plus_count += two_copy_weyl_measurement(plus, WeylIndex{1}, rng) == 1;
  }
  CHECK(std::abs(plus_count - draws / 2) < 150);
}

TEST_CASE("estimate_eta is exactly 1 on stabilizer states") {
  StateVector zero = StateVector::computational_basis(2, 0);
  Rng rng(13);
  CHECK(estimate_eta(zero, 500, rng) == 1.0);
}

TEST_CASE("estimate_eta with m=1 is +-1") {
  Rng rng(15);
  double e = estimate_eta(t_magic_state(), 1, rng);
  CHECK((e == 1.0 || e == -1.0));
}

TEST_CASE("estimator is unbiased on |T^2>") {
  // eta = (5/8)^2 = 0.390625; 4 standard errors at m = 10^5 with
  // Var(X) = 1 - eta^2.
  StateVector tt = t_magic_state_power(2);
  Rng rng(17);
  const std::int64_t m = 100000;
  double eta_hat = estimate_eta(tt, m, rng);
  double sigma = std::sqrt((1.0 - 0.390625 * 0.390625) / static_cast<double>(m));
  CHECK(std::abs(eta_hat - 0.390625) < 4.0 * sigma);
}

TEST_CASE("required_samples values") {
  CHECK(required_samples(1.0, std::exp(-1.0)) == 60);
  // ceil(60 * 2^12 * ln 20), frozen from the formula itself.
  std::int64_t expected =
      static_cast<std::int64_t>(std::ceil(60.0 * 4096.0 * std::log(20.0)));
  CHECK(required_samples(2.0, 0.05) == expected);
  CHECK(required_samples(2.0, 0.05) == 736232);
  // delta -> 1 would request 0 iterations; the floor of 1 applies.
  CHECK(required_samples(1.0, 0.999999) == 1);
  CHECK_THROWS_AS(required_samples(0.5, 0.1), DimensionError);
  CHECK_THROWS_AS(required_samples(1.0, 0.0), DimensionError);
}

TEST_CASE("distinguish on a stabilizer input votes LowComplexity") {
  StateVector zero = StateVector::computational_basis(2, 0);
  ExperimentReport rep = distinguish(zero, 1.0, 1.0 / std::exp(1.0), 99);
  CHECK(rep.m == 60);
  CHECK(rep.eta_hat == 1.0);
  CHECK(rep.threshold == doctest::Approx(2.0 / 3.0));
  CHECK(rep.verdict == Verdict::LowComplexity);
  CHECK(rep.seed == 99);
}

TEST_CASE("distinguish reports are byte-identical across reruns") {
  Rng rng(19);
  StateVector psi = haar_random(4, rng);
  ExperimentReport a = distinguish(psi, 1.0, 0.25, 123, 500);
  ExperimentReport b = distinguish(psi, 1.0, 0.25, 123, 500);
  CHECK(a.to_json() == b.to_json());
  CHECK(a.to_csv_row() == b.to_csv_row());
}

TEST_CASE("iteration cap requires an override") {
  StateVector zero = StateVector::computational_basis(2, 0);
  // k = 3: 60 * 3^12 ~ 3.2e7 > the 1e7 default cap.
  CHECK_THROWS_AS(distinguish(zero, 3.0, 0.25, 1), CapExceeded);
  ExperimentReport rep = distinguish(zero, 3.0, 0.25, 1, 100);
  CHECK(rep.m == 100);
}

TEST_CASE("report serialization shapes") {
  ExperimentReport rep;
  rep.n = 2;
  rep.k = 1.0;
  rep.delta = 0.25;
  rep.m = 10;
  rep.eta_hat = 0.5;
  rep.threshold = 2.0 / 3.0;
  rep.verdict = Verdict::HaarLike;
  rep.seed = 7;
  CHECK(ExperimentReport::csv_header() ==
        "n,k,delta,m,eta_hat,threshold,verdict,seed");
  CHECK(rep.to_csv_row() == "2,1,0.25,10,0.5,0.66666666666666663,HaarLike,7");
  CHECK(rep.to_json().find("\"verdict\":\"HaarLike\"") != std::string::npos);
}
