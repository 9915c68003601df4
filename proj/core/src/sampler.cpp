#include "stabscope/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <sstream>

#include "stabscope/errors.hpp"

#include <nlohmann/json.hpp>

namespace stabscope {
namespace {

std::string format_double(double v) {
  std::ostringstream out;
  out.precision(17);
  out << v;
  return out.str();
}

}  // namespace

const char* verdict_name(Verdict v) {
  return v == Verdict::LowComplexity ? "LowComplexity" : "HaarLike";
}

std::string ExperimentReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["k"] = k;
  j["delta"] = delta;
  j["m"] = m;
  j["eta_hat"] = eta_hat;
  j["threshold"] = threshold;
  j["verdict"] = verdict_name(verdict);
  j["seed"] = seed;
  return j.dump();
}

std::string ExperimentReport::csv_header() {
  return "n,k,delta,m,eta_hat,threshold,verdict,seed";
}

std::string ExperimentReport::to_csv_row() const {
  std::ostringstream out;
  out << n << "," << format_double(k) << "," << format_double(delta) << "," << m
      << "," << format_double(eta_hat) << "," << format_double(threshold) << ","
      << verdict_name(verdict) << "," << seed;
  return out.str();
}

BellDifferenceSampler::BellDifferenceSampler(const DistributionTable& q) {
  if (q.kind != TableKind::Weyl) {
    throw DimensionError("BellDifferenceSampler: expected a Weyl table");
  }
  double sum = 0.0;
  cdf_.reserve(q.values.size());
  for (double v : q.values) {
    sum += v;
    cdf_.push_back(sum);
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::invalid_argument("BellDifferenceSampler: table not normalized");
  }
  cdf_.back() = 1.0;
}

WeylIndex BellDifferenceSampler::sample(Rng& rng) const {
  double u = rng.uniform();
  auto it = std::upper_bound(cdf_.begin(), cdf_.end(), u);
  if (it == cdf_.end()) --it;
  return WeylIndex{static_cast<std::uint64_t>(it - cdf_.begin())};
}

WeylIndex bell_difference_sample(const DistributionTable& q, Rng& rng) {
  return BellDifferenceSampler(q).sample(rng);
}

int two_copy_weyl_measurement(const StateVector& state, WeylIndex x, Rng& rng) {
  double e = weyl_expectation(state, x);
  double p_plus = 0.5 * (1.0 + e * e);
  return rng.bernoulli(p_plus) ? +1 : -1;
}

double estimate_eta(const StateVector& state, std::int64_t m, Rng& rng) {
  if (m < 1) throw DimensionError("estimate_eta: m must be >= 1");
  DistributionTable q = weyl_distribution(characteristic_table_fast(state));
  BellDifferenceSampler sampler(q);
  std::int64_t sum = 0;
  for (std::int64_t i = 0; i < m; ++i) {
    WeylIndex x = sampler.sample(rng);
    sum += two_copy_weyl_measurement(state, x, rng);
  }
  return static_cast<double>(sum) / static_cast<double>(m);
}

std::int64_t required_samples(double k, double delta) {
  if (k < 1.0) throw DimensionError("required_samples: k must be >= 1");
  if (delta <= 0.0 || delta >= 1.0) {
    throw DimensionError("required_samples: delta must be in (0, 1)");
  }
  double m = std::ceil(60.0 * std::pow(k, 12) * std::log(1.0 / delta));
  return std::max<std::int64_t>(1, static_cast<std::int64_t>(m));
}

ExperimentReport distinguish(const StateVector& state, double k, double delta,
                             std::uint64_t seed,
                             std::optional<std::int64_t> m_override,
                             std::int64_t iteration_cap) {
  if (k < 1.0) throw DimensionError("distinguish: k must be >= 1");
  if (delta <= 0.0 || delta >= 1.0) {
    throw DimensionError("distinguish: delta must be in (0, 1)");
  }

  const int n = state.qubits();
  double regime_limit = 0.8 * std::pow(2.0, n / 12.0);
  if (k > regime_limit) {
    std::cerr << "warning: k = " << k << " exceeds the guarantee regime "
              << "(4/5) 2^(n/12) = " << regime_limit << " at n = " << n << "\n";
  }

  std::int64_t m = m_override ? std::max<std::int64_t>(1, *m_override)
                              : required_samples(k, delta);
  if (m > iteration_cap) {
    throw CapExceeded("distinguish: m = " + std::to_string(m) +
                      " exceeds the iteration cap; pass m_override");
  }

  Rng rng(seed);
  double eta_hat = estimate_eta(state, m, rng);
  double threshold = 2.0 / (3.0 * std::pow(k, 6));

  ExperimentReport report;
  report.n = n;
  report.k = k;
  report.delta = delta;
  report.m = m;
  report.eta_hat = eta_hat;
  report.threshold = threshold;
  report.verdict =
      eta_hat >= threshold ? Verdict::LowComplexity : Verdict::HaarLike;
  report.seed = seed;
  return report;
}

}  // namespace stabscope
