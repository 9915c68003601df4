#pragma once

#include <cstdint>

namespace stabscope {

class StateVector;

// A point x = (p, q) of F_2^{2n} identifying the Weyl operator
// W_x = i^{p.q} X^p Z^q. Convention, fixed project-wide: p is the high n
// bits, q the low n bits; qubit i maps to bit i (bit 0 least significant)
// within each half. Serialized everywhere as the decimal integer of `bits`.
struct WeylIndex {
  std::uint64_t bits = 0;

  friend bool operator==(WeylIndex a, WeylIndex b) { return a.bits == b.bits; }
};

// X-part p and Z-part q of an index, given the ambient qubit count.
std::uint64_t weyl_x_part(WeylIndex x, int n);
std::uint64_t weyl_z_part(WeylIndex x, int n);

WeylIndex make_weyl_index(std::uint64_t p, std::uint64_t q, int n);

// W_x |psi>. Single pass: amplitude at j moves to j^p with sign (-1)^{q.j}
// and global phase i^{p.q}. W_x is Hermitian and unitary, so applying twice
// is the identity.
StateVector weyl_apply(const StateVector& state, WeylIndex x);

// <psi|W_x|psi>, real because W_x is Hermitian. Requires the state to be
// normalized within 1e-9; asserts |Im| < 1e-9 before discarding it.
double weyl_expectation(const StateVector& state, WeylIndex x);

// k in {0,1,2,3} such that W_x W_y = i^k W_{x^y}.
int weyl_product_phase(WeylIndex x, WeylIndex y, int n);

}  // namespace stabscope
