#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stabscope/rng.hpp"
#include "stabscope/spectra.hpp"
#include "stabscope/state.hpp"
#include "stabscope/weyl.hpp"

namespace stabscope {

enum class Verdict { LowComplexity, HaarLike };

const char* verdict_name(Verdict v);

// One distinguisher run. Fields serialize in the fixed order
// n,k,delta,m,eta_hat,threshold,verdict,seed.
struct ExperimentReport {
  int n = 0;
  double k = 1.0;
  double delta = 0.0;
  std::int64_t m = 0;
  double eta_hat = 0.0;
  double threshold = 0.0;
  Verdict verdict = Verdict::HaarLike;
  std::uint64_t seed = 0;

  std::string to_json() const;
  std::string to_csv_row() const;
  static std::string csv_header();
};

// Inverse-CDF sampler over a precomputed Weyl distribution table. Simulates
// the four-copy Bell difference measurement at the distribution level.
class BellDifferenceSampler {
 public:
  explicit BellDifferenceSampler(const DistributionTable& q);

  WeylIndex sample(Rng& rng) const;

 private:
  std::vector<double> cdf_;
};

// One draw x ~ q.
WeylIndex bell_difference_sample(const DistributionTable& q, Rng& rng);

// Simulated W_x (x) W_x measurement on two copies: +1 with probability
// (1 + <psi|W_x|psi>^2) / 2.
int two_copy_weyl_measurement(const StateVector& state, WeylIndex x, Rng& rng);

// (1/m) sum_i X_i over m iterations of sample-then-measure; unbiased for eta.
double estimate_eta(const StateVector& state, std::int64_t m, Rng& rng);

// ceil(60 k^12 ln(1/delta)), clamped below at 1. Each iteration consumes
// 6 copies of the state.
std::int64_t required_samples(double k, double delta);

inline constexpr std::int64_t kDefaultIterationCap = 10'000'000;

// Full run of the distinguisher: m iterations (the 60 k^12 ln(1/delta)
// default, or m_override), thresholded at 2/(3 k^6). Warns to stderr when k
// exceeds the 4/5 * 2^{n/12} regime. The outer majority-vote amplification is
// left to the caller (exposed as a repeat count in the CLI).
ExperimentReport distinguish(const StateVector& state, double k, double delta,
                             std::uint64_t seed,
                             std::optional<std::int64_t> m_override = {},
                             std::int64_t iteration_cap = kDefaultIterationCap);

}  // namespace stabscope
