#pragma once

#include <bit>
#include <complex>
#include <cstdint>
#include <vector>

#include "stabscope/state.hpp"

namespace stabscope::testing {

using Matrix = std::vector<std::vector<Amplitude>>;

inline Matrix kron(const Matrix& a, const Matrix& b) {
  std::size_t ra = a.size(), ca = a[0].size();
  std::size_t rb = b.size(), cb = b[0].size();
  Matrix out(ra * rb, std::vector<Amplitude>(ca * cb));
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t j = 0; j < ca; ++j)
      for (std::size_t k = 0; k < rb; ++k)
        for (std::size_t l = 0; l < cb; ++l)
          out[i * rb + k][j * cb + l] = a[i][j] * b[k][l];
  return out;
}

inline Matrix matmul(const Matrix& a, const Matrix& b) {
  std::size_t r = a.size(), mid = b.size(), c = b[0].size();
  Matrix out(r, std::vector<Amplitude>(c, Amplitude{0.0, 0.0}));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < mid; ++k)
      for (std::size_t j = 0; j < c; ++j)
        out[i][j] += a[i][k] * b[k][j];
  return out;
}

inline std::vector<Amplitude> matvec(const Matrix& m, const std::vector<Amplitude>& v) {
  std::vector<Amplitude> out(m.size(), Amplitude{0.0, 0.0});
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      out[i] += m[i][j] * v[j];
  return out;
}

// Dense Weyl operator matrix: i^{p.q} kron over qubits of X^{p_i} Z^{q_i},
// qubit 0 in the least significant kron slot. Independent oracle against the
// bit-twiddling implementation.
inline Matrix weyl_matrix(std::uint64_t bits, int n) {
  const Matrix I{{1, 0}, {0, 1}};
  const Matrix X{{0, 1}, {1, 0}};
  const Matrix Z{{1, 0}, {0, -1}};
  std::uint64_t p = bits >> n;
  std::uint64_t q = bits & ((std::uint64_t{1} << n) - 1);

  Matrix out{{1}};
  for (int i = n - 1; i >= 0; --i) {
    Matrix factor = I;
    bool xi = (p >> i) & 1, zi = (q >> i) & 1;
    if (xi && zi) factor = matmul(X, Z);
    else if (xi) factor = X;
    else if (zi) factor = Z;
    out = kron(out, factor);
  }
  Amplitude phase{1.0, 0.0};
  switch (std::popcount(p & q) & 3) {
    case 1: phase = {0.0, 1.0}; break;
    case 2: phase = {-1.0, 0.0}; break;
    case 3: phase = {0.0, -1.0}; break;
    default: break;
  }
  for (auto& row : out)
    for (auto& v : row) v *= phase;
  return out;
}

inline double max_abs_diff(const std::vector<Amplitude>& a,
                           const std::vector<Amplitude>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace stabscope::testing
