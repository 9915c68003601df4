#include "stabscope/weyl.hpp"

#include <bit>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "stabscope/errors.hpp"
#include "stabscope/state.hpp"

namespace stabscope {
namespace {

void check_index(WeylIndex x, int n) {
  if (n < 1 || n > 31) throw DimensionError("invalid qubit count");
  if (x.bits >> (2 * n)) {
    throw DimensionError("Weyl index out of range for qubit count");
  }
}

// i^k for k mod 4.
Amplitude i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

}  // namespace

std::uint64_t weyl_x_part(WeylIndex x, int n) { return x.bits >> n; }

std::uint64_t weyl_z_part(WeylIndex x, int n) {
  return x.bits & ((std::uint64_t{1} << n) - 1);
}

WeylIndex make_weyl_index(std::uint64_t p, std::uint64_t q, int n) {
  WeylIndex x{(p << n) | q};
  check_index(x, n);
  return x;
}

StateVector weyl_apply(const StateVector& state, WeylIndex x) {
  int n = state.qubits();
  check_index(x, n);
  std::uint64_t p = weyl_x_part(x, n);
  std::uint64_t q = weyl_z_part(x, n);
  Amplitude phase = i_power(static_cast<int>(std::popcount(p & q)));

  std::vector<Amplitude> out(state.dim());
  const auto& in = state.amplitudes();
  for (std::uint64_t j = 0; j < in.size(); ++j) {
    double sign = (std::popcount(q & j) & 1) ? -1.0 : 1.0;
    out[j ^ p] = phase * sign * in[j];
  }
  return StateVector::from_amplitudes(n, std::move(out), 1e-9);
}

double weyl_expectation(const StateVector& state, WeylIndex x) {
  int n = state.qubits();
  check_index(x, n);
  if (std::abs(state.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("weyl_expectation: state not normalized");
  }
  std::uint64_t p = weyl_x_part(x, n);
  std::uint64_t q = weyl_z_part(x, n);

  // <psi|W_x|psi> = i^{p.q} sum_j conj(c_{j^p}) c_j (-1)^{q.j}
  Amplitude acc{0.0, 0.0};
  const auto& c = state.amplitudes();
  for (std::uint64_t j = 0; j < c.size(); ++j) {
    double sign = (std::popcount(q & j) & 1) ? -1.0 : 1.0;
    acc += sign * std::conj(c[j ^ p]) * c[j];
  }
  acc *= i_power(static_cast<int>(std::popcount(p & q)));
  if (std::abs(acc.imag()) >= 1e-9) {
    throw std::runtime_error("weyl_expectation: nonreal value, phase bug");
  }
  return acc.real();
}

int weyl_product_phase(WeylIndex x, WeylIndex y, int n) {
  check_index(x, n);
  check_index(y, n);
  std::uint64_t p1 = weyl_x_part(x, n), q1 = weyl_z_part(x, n);
  std::uint64_t p2 = weyl_x_part(y, n), q2 = weyl_z_part(y, n);
  // W_x W_y = i^{p1.q1 + p2.q2} (-1)^{q1.p2} X^{p1^p2} Z^{q1^q2}
  //         = i^k W_{x^y} with the i^{(p1^p2).(q1^q2)} of W_{x^y} divided out.
  int k = std::popcount(p1 & q1) + std::popcount(p2 & q2) +
          2 * std::popcount(q1 & p2) -
          std::popcount((p1 ^ p2) & (q1 ^ q2));
  return ((k % 4) + 4) % 4;
}

}  // namespace stabscope
