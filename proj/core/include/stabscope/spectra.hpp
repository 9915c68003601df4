#pragma once

#include <span>
#include <utility>
#include <vector>

#include "stabscope/state.hpp"
#include "stabscope/weyl.hpp"

namespace stabscope {

enum class TableKind { Characteristic, Weyl, Fourier };

// Length-4^n real table over Weyl indices: p_psi, q_psi, or the Fourier
// coefficients of p_psi.
struct DistributionTable {
  int n = 0;
  TableKind kind = TableKind::Characteristic;
  std::vector<double> values;

  double at(WeylIndex x) const { return values[x.bits]; }
  std::uint64_t size() const { return std::uint64_t{1} << (2 * n); }
};

// Unnormalized in-place butterfly Walsh-Hadamard transform. Applying it twice
// multiplies by the length. Scaling is the caller's responsibility; every
// call site documents its constant.
void walsh_hadamard(std::span<double> values);
void walsh_hadamard(std::span<Amplitude> values);

// All 4^n expectations <psi|W_x|psi>, by the literal per-index pass.
// O(8^n); the oracle against which the transform path is checked.
std::vector<double> weyl_expectation_table(const StateVector& state);

// p_psi(x) = 2^{-n} <psi|W_x|psi>^2 via weyl_expectation_table. O(8^n).
DistributionTable characteristic_table(const StateVector& state);

// Same table in O(n 4^n): for each shift v, one 2^n-point WHT of
// h_v(j) = conj(c_{j^v}) c_j over the Z-part.
DistributionTable characteristic_table_fast(const StateVector& state);

// q_psi(x) = sum_y p(y) p(x^y), via WHT -> square -> WHT, scaled by 4^{-n}.
DistributionTable weyl_distribution(const DistributionTable& p);

// Fourier coefficients of p: phat(x) = 4^{-n} sum_y p(y) (-1)^{x.y}.
DistributionTable fourier_table(const DistributionTable& p);

struct EtaBreakdown {
  double from_tables;       // 2^n sum_x p(x) q(x)
  double from_fourier;      // 32^n sum_x phat(x)^3
  double from_expectation;  // sum_x q(x) <psi|W_x|psi>^2, expectations naive
};

// All three routes; throws if any pair disagrees beyond 1e-9.
EtaBreakdown eta_paths(const StateVector& state);

// eta = E_{x ~ q_psi}[<psi|W_x|psi>^2], returned from the table route after
// the three-way agreement check.
double eta_exact(const StateVector& state);

// (eta, |c_0|^12) for direct inequality testing.
std::pair<double, double> min_c0_bound_check(const StateVector& state);

}  // namespace stabscope
