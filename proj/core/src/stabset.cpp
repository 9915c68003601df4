#include "stabscope/stabset.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "stabscope/errors.hpp"

namespace stabscope {
namespace {

constexpr int kHardEnumerationLimit = 5;

// Pivot columns of a mask, ascending.
std::vector<int> mask_bits(std::uint64_t mask) {
  std::vector<int> out;
  for (int i = 0; mask; ++i, mask >>= 1) {
    if (mask & 1) out.push_back(i);
  }
  return out;
}

// Free entry positions of the RREF basis for a pivot set: (row a, col j) with
// j non-pivot and j > pivot_a, rows ascending then columns ascending.
std::vector<std::pair<int, int>> free_positions(const std::vector<int>& pivots,
                                                std::uint64_t pivot_mask, int n) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < pivots.size(); ++a) {
    for (int j = pivots[a] + 1; j < n; ++j) {
      if (!((pivot_mask >> j) & 1)) out.emplace_back(static_cast<int>(a), j);
    }
  }
  return out;
}

// Next d-subset bitmask in colex order (Gosper's hack).
std::uint64_t next_subset(std::uint64_t mask) {
  std::uint64_t c = mask & (~mask + 1);
  std::uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

Amplitude i_power(int k) {
  switch (k & 3) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::uint64_t stabilizer_state_count(int n) {
  if (n < 1) throw DimensionError("stabilizer_state_count: n must be >= 1");
  std::uint64_t count = std::uint64_t{1} << n;
  for (int k = 1; k <= n; ++k) {
    count *= (std::uint64_t{1} << k) + 1;
  }
  return count;
}

StabilizerEnumeration::StabilizerEnumeration(int n) : n_(n) {
  if (n < 1) throw DimensionError("StabilizerEnumeration: n must be >= 1");
  if (n > kHardEnumerationLimit) {
    throw CapExceeded("stabilizer enumeration limited to n <= " +
                      std::to_string(kHardEnumerationLimit));
  }
}

std::optional<StateVector> StabilizerEnumeration::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    dim_ = 0;
    pivot_mask_ = 0;
    free_bits_ = shift_bits_ = linear_code_ = quad_bits_ = 0;
  } else if (!advance_parameters()) {
    done_ = true;
    return std::nullopt;
  }
  ++produced_;
  return build_state();
}

bool StabilizerEnumeration::advance_parameters() {
  auto pivots = mask_bits(pivot_mask_);
  const int f = static_cast<int>(free_positions(pivots, pivot_mask_, n_).size());
  const int quad_count = dim_ * (dim_ - 1) / 2;

  if (++quad_bits_ < (std::uint64_t{1} << quad_count)) return true;
  quad_bits_ = 0;
  if (++linear_code_ < (std::uint64_t{1} << (2 * dim_))) return true;
  linear_code_ = 0;
  if (++shift_bits_ < (std::uint64_t{1} << (n_ - dim_))) return true;
  shift_bits_ = 0;
  if (++free_bits_ < (std::uint64_t{1} << f)) return true;
  free_bits_ = 0;

  if (dim_ > 0) {
    std::uint64_t nxt = next_subset(pivot_mask_);
    if (nxt < (std::uint64_t{1} << n_)) {
      pivot_mask_ = nxt;
      return true;
    }
  }
  if (dim_ < n_) {
    ++dim_;
    pivot_mask_ = (std::uint64_t{1} << dim_) - 1;
    return true;
  }
  return false;
}

StateVector StabilizerEnumeration::build_state() const {
  const auto pivots = mask_bits(pivot_mask_);
  const auto frees = free_positions(pivots, pivot_mask_, n_);

  // Basis rows of the affine subspace.
  std::vector<std::uint64_t> rows(dim_, 0);
  for (int a = 0; a < dim_; ++a) rows[a] = std::uint64_t{1} << pivots[a];
  for (std::size_t i = 0; i < frees.size(); ++i) {
    if ((free_bits_ >> i) & 1) {
      rows[frees[i].first] |= std::uint64_t{1} << frees[i].second;
    }
  }

  // Coset shift over the non-pivot columns.
  std::uint64_t t = 0;
  int shift_pos = 0;
  for (int j = 0; j < n_; ++j) {
    if ((pivot_mask_ >> j) & 1) continue;
    if ((shift_bits_ >> shift_pos) & 1) t |= std::uint64_t{1} << j;
    ++shift_pos;
  }

  const double scale = std::pow(2.0, -0.5 * dim_);
  std::vector<Amplitude> amp(std::uint64_t{1} << n_, Amplitude{0.0, 0.0});
  for (std::uint64_t u = 0; u < (std::uint64_t{1} << dim_); ++u) {
    std::uint64_t idx = t;
    int exponent = 0;
    for (int a = 0; a < dim_; ++a) {
      if (!((u >> a) & 1)) continue;
      idx ^= rows[a];
      exponent += static_cast<int>((linear_code_ >> (2 * a)) & 3);
    }
    int pair = 0;
    for (int a = 0; a < dim_; ++a) {
      for (int b = a + 1; b < dim_; ++b, ++pair) {
        if (((u >> a) & 1) && ((u >> b) & 1) && ((quad_bits_ >> pair) & 1)) {
          exponent += 2;
        }
      }
    }
    amp[idx] = scale * i_power(exponent);
  }
  return StateVector::from_amplitudes(n_, std::move(amp), 1e-9);
}

double stabilizer_fidelity(const StateVector& state, int cap) {
  return stabilizer_fidelity_witness(state, cap).fidelity;
}

FidelityWitness stabilizer_fidelity_witness(const StateVector& state, int cap) {
  const int n = state.qubits();
  if (n > cap) {
    throw CapExceeded("stabilizer_fidelity: n = " + std::to_string(n) +
                      " exceeds the enumeration cap " + std::to_string(cap));
  }
  StabilizerEnumeration enumeration(n);
  double best = -1.0;
  std::uint64_t best_index = 0;
  std::optional<StateVector> best_state;
  while (auto phi = enumeration.next()) {
    double overlap = std::norm(inner_product(*phi, state));
    if (overlap > best) {
      best = overlap;
      best_index = enumeration.index();
      best_state = std::move(phi);
    }
  }
  return FidelityWitness{best, best_index, std::move(*best_state)};
}

double extent_upper_bound_clifford_t(int t) {
  if (t < 0) throw DimensionError("extent_upper_bound_clifford_t: t must be >= 0");
  return std::pow(1.0 + 1.0 / std::sqrt(2.0), t);
}

double extent_linear_combination_bound(double alpha, double xi_v, double beta,
                                       double xi_w) {
  if (xi_v < 1.0 || xi_w < 1.0) {
    throw DimensionError("extent bounds must be >= 1");
  }
  double root = std::abs(alpha) * std::sqrt(xi_v) + std::abs(beta) * std::sqrt(xi_w);
  return root * root;
}

std::pair<double, double> fidelity_extent_check(const StateVector& state,
                                                int t_count, int cap) {
  double xi_upper = extent_upper_bound_clifford_t(t_count);
  double fidelity = stabilizer_fidelity(state, cap);
  return {xi_upper, 1.0 / fidelity};
}

}  // namespace stabscope
