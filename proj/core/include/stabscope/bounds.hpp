#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace stabscope {

// Closed-form bound evaluation record for CLI output.
struct BoundReport {
  std::string name;
  std::map<std::string, double> inputs;
  double value = 0.0;

  std::string to_json() const;
};

// Concentration of an L-Lipschitz function on N-dimensional pure states:
// min(1, 2 exp(-N eps^2 / (9 pi^3 L^2))).
double levy_bound(double dimension, double lipschitz, double eps);

// Single nonidentity Weyl expectation of a Haar state:
// 2 exp(-2^n eps^2 / (36 pi^3)), clamped to [0,1].
double haar_single_weyl_bound(int n, double eps);

// Union over all 4^n Weyl operators: 2^{2n+1} exp(-2^n eps^2 / (36 pi^3)),
// clamped to [0,1].
double haar_all_weyl_bound(int n, double eps);

// exp(-2^{n/2-15}): probability that a Haar state violates eta <= 2^{-n/2}.
// The guarantee only holds for n >= 33; out_of_regime reports when n < 33.
double haar_eta_failure_probability(int n, bool* out_of_regime = nullptr);

// Amplitude-estimation query count: pi sqrt(eta (1-eta) + eps) / eps.
double qae_query_count(double eta, double eps);

// log2(1 + 1/sqrt(2)) ~= 0.77155: t = K log2(n) T-gates give extent n^{aK}.
double pseudorandom_tgate_exponent();

// ln(5/8) / (2 ln cos(pi/8)) ~= 2.9676: the minimal c with
// cos(pi/8)^{2m} <= (5/8)^{m/c}.
double tightness_constant();

}  // namespace stabscope
