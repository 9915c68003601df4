#include "stabscope/spectra.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "stabscope/errors.hpp"
#include "stabscope/limits.hpp"

namespace stabscope {
namespace {

void check_table_cap(int n) {
  if (n < 1) throw DimensionError("qubit count must be >= 1");
  if (n > limits::max_table_qubits()) {
    throw CapExceeded("4^" + std::to_string(n) +
                      " distribution table exceeds the memory cap (max n = " +
                      std::to_string(limits::max_table_qubits()) + ")");
  }
}

void check_kind(const DistributionTable& t, TableKind kind, const char* op) {
  if (t.kind != kind) {
    throw DimensionError(std::string(op) + ": wrong table kind");
  }
}

// Tiny negatives after inverse transforms are roundoff; anything larger is a
// real bug.
void clamp_probabilities(std::vector<double>& values) {
  for (double& v : values) {
    if (v < 0.0) {
      if (v < -1e-12) {
        throw std::runtime_error("distribution entry below -1e-12");
      }
      v = 0.0;
    }
  }
}

template <typename T>
void wht_impl(std::span<T> v) {
  const std::size_t size = v.size();
  for (std::size_t len = 1; len < size; len <<= 1) {
    for (std::size_t block = 0; block < size; block += 2 * len) {
      for (std::size_t i = block; i < block + len; ++i) {
        T a = v[i];
        T b = v[i + len];
        v[i] = a + b;
        v[i + len] = a - b;
      }
    }
  }
}

double check_normalized_sum(const std::vector<double>& values, const char* what) {
  double sum = 0.0;
  for (double v : values) sum += v;
  if (std::abs(sum - 1.0) > 1e-9) {
    throw std::runtime_error(std::string(what) + ": table sum " +
                             std::to_string(sum) + " deviates from 1");
  }
  return sum;
}

}  // namespace

void walsh_hadamard(std::span<double> values) { wht_impl(values); }
void walsh_hadamard(std::span<Amplitude> values) { wht_impl(values); }

std::vector<double> weyl_expectation_table(const StateVector& state) {
  const int n = state.qubits();
  check_table_cap(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const auto& c = state.amplitudes();

  // Parity lookup for q.j over n-bit values.
  std::vector<unsigned char> parity(dim);
  for (std::uint64_t v = 0; v < dim; ++v) {
    parity[v] = static_cast<unsigned char>(std::popcount(v) & 1);
  }

  std::vector<double> expect(dim * dim);
  std::vector<double> prod_re(dim), prod_im(dim);
  for (std::uint64_t p = 0; p < dim; ++p) {
    // t_j = conj(c_{j^p}) c_j; the i^{p.q} phase does not change |.|, and the
    // expectation is real, so its magnitude with sign is recovered below.
    for (std::uint64_t j = 0; j < dim; ++j) {
      Amplitude t = std::conj(c[j ^ p]) * c[j];
      prod_re[j] = t.real();
      prod_im[j] = t.imag();
    }
    for (std::uint64_t q = 0; q < dim; ++q) {
      double re = 0.0, im = 0.0;
      for (std::uint64_t j = 0; j < dim; ++j) {
        if (parity[q & j]) {
          re -= prod_re[j];
          im -= prod_im[j];
        } else {
          re += prod_re[j];
          im += prod_im[j];
        }
      }
      // Multiply by i^{p.q} to land on the real axis.
      double value;
      switch (std::popcount(p & q) & 3) {
        case 0: value = re; break;
        case 1: value = -im; break;
        case 2: value = -re; break;
        default: value = im; break;
      }
      expect[(p << n) | q] = value;
    }
  }
  return expect;
}

DistributionTable characteristic_table(const StateVector& state) {
  const int n = state.qubits();
  check_table_cap(n);
  std::vector<double> e = weyl_expectation_table(state);
  const double scale = 1.0 / static_cast<double>(std::uint64_t{1} << n);
  DistributionTable table{n, TableKind::Characteristic, {}};
  table.values.resize(e.size());
  for (std::uint64_t x = 0; x < e.size(); ++x) {
    table.values[x] = scale * e[x] * e[x];
  }
  check_normalized_sum(table.values, "characteristic_table");
  return table;
}

DistributionTable characteristic_table_fast(const StateVector& state) {
  const int n = state.qubits();
  check_table_cap(n);
  const std::uint64_t dim = std::uint64_t{1} << n;
  const auto& c = state.amplitudes();
  const double scale = 1.0 / static_cast<double>(dim);

  DistributionTable table{n, TableKind::Characteristic, {}};
  table.values.resize(dim * dim);
  std::vector<Amplitude> h(dim);
  for (std::uint64_t v = 0; v < dim; ++v) {
    for (std::uint64_t j = 0; j < dim; ++j) {
      h[j] = std::conj(c[j ^ v]) * c[j];
    }
    // Unnormalized WHT over w: H_v(w) = sum_j h_v(j) (-1)^{w.j};
    // p(v,w) = 2^{-n} |H_v(w)|^2 (the i^{v.w} phase has unit magnitude).
    walsh_hadamard(std::span<Amplitude>(h));
    for (std::uint64_t w = 0; w < dim; ++w) {
      table.values[(v << n) | w] = scale * std::norm(h[w]);
    }
  }
  check_normalized_sum(table.values, "characteristic_table_fast");
  return table;
}

DistributionTable weyl_distribution(const DistributionTable& p) {
  check_kind(p, TableKind::Characteristic, "weyl_distribution");
  const std::uint64_t size = p.size();

  DistributionTable q{p.n, TableKind::Weyl, p.values};
  // WHT, entrywise square, WHT again: the result is 4^n * (convolution sum),
  // so divide once by the 4^n table size.
  walsh_hadamard(std::span<double>(q.values));
  for (double& v : q.values) v *= v;
  walsh_hadamard(std::span<double>(q.values));
  const double scale = 1.0 / static_cast<double>(size);
  for (double& v : q.values) v *= scale;
  clamp_probabilities(q.values);
  check_normalized_sum(q.values, "weyl_distribution");
  return q;
}

DistributionTable fourier_table(const DistributionTable& p) {
  check_kind(p, TableKind::Characteristic, "fourier_table");
  DistributionTable f{p.n, TableKind::Fourier, p.values};
  // phat(x) = 4^{-n} sum_y p(y) (-1)^{x.y}: one WHT scaled by the table size.
  walsh_hadamard(std::span<double>(f.values));
  const double scale = 1.0 / static_cast<double>(p.size());
  for (double& v : f.values) v *= scale;
  return f;
}

EtaBreakdown eta_paths(const StateVector& state) {
  const int n = state.qubits();
  check_table_cap(n);
  const double two_n = static_cast<double>(std::uint64_t{1} << n);

  DistributionTable p = characteristic_table_fast(state);
  DistributionTable q = weyl_distribution(p);
  DistributionTable f = fourier_table(p);

  EtaBreakdown eta{};

  // (a) 2^n sum_x p(x) q(x)
  double pq = 0.0;
  for (std::uint64_t x = 0; x < p.size(); ++x) pq += p.values[x] * q.values[x];
  eta.from_tables = two_n * pq;

  // (b) 32^n sum_x phat(x)^3
  double cubes = 0.0;
  for (double v : f.values) cubes += v * v * v;
  eta.from_fourier = std::pow(32.0, n) * cubes;

  // (c) sum_x q(x) <psi|W_x|psi>^2 with naive per-index expectations
  std::vector<double> e = weyl_expectation_table(state);
  double direct = 0.0;
  for (std::uint64_t x = 0; x < q.size(); ++x) {
    direct += q.values[x] * e[x] * e[x];
  }
  eta.from_expectation = direct;

  if (std::abs(eta.from_tables - eta.from_fourier) > 1e-9 ||
      std::abs(eta.from_tables - eta.from_expectation) > 1e-9 ||
      std::abs(eta.from_fourier - eta.from_expectation) > 1e-9) {
    throw std::runtime_error("eta paths disagree beyond 1e-9: transform bug");
  }
  return eta;
}

double eta_exact(const StateVector& state) { return eta_paths(state).from_tables; }

std::pair<double, double> min_c0_bound_check(const StateVector& state) {
  double eta = eta_exact(state);
  double c0_sq = std::norm(state.amplitude(0));
  return {eta, c0_sq * c0_sq * c0_sq * c0_sq * c0_sq * c0_sq};
}

}  // namespace stabscope
