#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "stabscope/state.hpp"

namespace stabscope {

// 2^n * prod_{k=1..n} (2^k + 1): 6, 60, 1080, 36720, 2423520 for n = 1..5.
std::uint64_t stabilizer_state_count(int n);

// Streams every distinct n-qubit stabilizer state exactly once (global phase
// quotiented) in a fixed deterministic order. Each state is produced in the
// canonical amplitude form: an affine subspace B u ^ t of F_2^n with
// amplitudes 2^{-d/2} i^{c.u} (-1)^{Q(u)} for Z_4-linear c and quadratic Q.
// Single-consumer iterator; n <= 5.
class StabilizerEnumeration {
 public:
  explicit StabilizerEnumeration(int n);

  // Next state, or nullopt when exhausted.
  std::optional<StateVector> next();

  // Index of the state most recently returned by next(), 0-based.
  std::uint64_t index() const { return produced_ - 1; }

 private:
  bool advance_parameters();
  StateVector build_state() const;

  int n_;
  std::uint64_t produced_ = 0;
  bool done_ = false;
  bool started_ = false;

  // Current parameter tuple.
  int dim_ = 0;                    // subspace dimension d
  std::uint64_t pivot_mask_ = 0;   // d pivot columns
  std::uint64_t free_bits_ = 0;    // RREF free entries, packed
  std::uint64_t shift_bits_ = 0;   // coset shift over non-pivot columns
  std::uint64_t linear_code_ = 0;  // c in Z_4^d, packed 2 bits per row
  std::uint64_t quad_bits_ = 0;    // upper-triangular coupling bits
};

inline constexpr int kDefaultEnumerationCap = 4;

// Exact max_{phi in S_n} |<phi|psi>|^2 by streaming the enumeration.
// Ties broken by lowest enumeration index.
double stabilizer_fidelity(const StateVector& state,
                           int cap = kDefaultEnumerationCap);

struct FidelityWitness {
  double fidelity;
  std::uint64_t index;       // enumeration index of the arg-max state
  StateVector closest_state;
};

FidelityWitness stabilizer_fidelity_witness(const StateVector& state,
                                            int cap = kDefaultEnumerationCap);

// (1 + 1/sqrt(2))^t, an extent upper bound for a t-T-gate preparation.
double extent_upper_bound_clifford_t(int t);

// (|alpha| sqrt(xi_v) + |beta| sqrt(xi_w))^2.
double extent_linear_combination_bound(double alpha, double xi_v, double beta,
                                       double xi_w);

// (extent upper bound from t, 1/F_S); the contract is second <= first.
std::pair<double, double> fidelity_extent_check(
    const StateVector& state, int t_count,
    int cap = kDefaultEnumerationCap);

}  // namespace stabscope
