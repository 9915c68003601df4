#include "stabscope/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace stabscope {
namespace {

constexpr double kPiCubed =
    std::numbers::pi * std::numbers::pi * std::numbers::pi;

// exp with log-space guard: exponents beyond +-700 overflow/underflow double.
double safe_exp(double exponent) {
  if (exponent < -745.0) return 0.0;
  if (exponent > 709.0) return std::numeric_limits<double>::infinity();
  return std::exp(exponent);
}

double clamp_probability(double v) { return std::min(1.0, std::max(0.0, v)); }

}  // namespace

std::string BoundReport::to_json() const {
  nlohmann::ordered_json j;
  j["name"] = name;
  j["inputs"] = inputs;
  j["value"] = value;
  return j.dump();
}

double levy_bound(double dimension, double lipschitz, double eps) {
  if (dimension < 1.0 || lipschitz <= 0.0 || eps <= 0.0) {
    throw std::invalid_argument("levy_bound: require N >= 1, L > 0, eps > 0");
  }
  double exponent =
      -dimension * eps * eps / (9.0 * kPiCubed * lipschitz * lipschitz);
  return clamp_probability(2.0 * safe_exp(exponent));
}

double haar_single_weyl_bound(int n, double eps) {
  if (n < 1 || eps <= 0.0) {
    throw std::invalid_argument("haar_single_weyl_bound: require n >= 1, eps > 0");
  }
  // Levy with L = 2 and N = 2^n; exponent kept in log space for large n.
  double exponent = -std::exp2(n) * eps * eps / (36.0 * kPiCubed);
  return clamp_probability(2.0 * safe_exp(exponent));
}

double haar_all_weyl_bound(int n, double eps) {
  if (n < 1 || eps <= 0.0) {
    throw std::invalid_argument("haar_all_weyl_bound: require n >= 1, eps > 0");
  }
  // 2^{2n+1} exp(-2^n eps^2 / (36 pi^3)), combined in log space.
  double log_value = (2.0 * n + 1.0) * std::numbers::ln2 -
                     std::exp2(n) * eps * eps / (36.0 * kPiCubed);
  return clamp_probability(safe_exp(log_value));
}

double haar_eta_failure_probability(int n, bool* out_of_regime) {
  if (n < 1) throw std::invalid_argument("haar_eta_failure_probability: n >= 1");
  if (out_of_regime != nullptr) *out_of_regime = (n < 33);
  return safe_exp(-std::exp2(0.5 * n - 15.0));
}

double qae_query_count(double eta, double eps) {
  if (eta < 0.0 || eta > 1.0 || eps <= 0.0) {
    throw std::invalid_argument("qae_query_count: require eta in [0,1], eps > 0");
  }
  return std::numbers::pi * std::sqrt(eta * (1.0 - eta) + eps) / eps;
}

double pseudorandom_tgate_exponent() {
  return std::log2(1.0 + 1.0 / std::sqrt(2.0));
}

double tightness_constant() {
  return std::log(5.0 / 8.0) / (2.0 * std::log(std::cos(std::numbers::pi / 8.0)));
}

}  // namespace stabscope
