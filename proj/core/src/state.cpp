#include "stabscope/state.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "stabscope/errors.hpp"
#include "stabscope/limits.hpp"

namespace stabscope {
namespace {

void check_qubit_count(int n) {
  if (n < 1) throw DimensionError("qubit count must be >= 1");
  if (n > limits::max_state_qubits()) {
    throw CapExceeded("state of " + std::to_string(n) +
                      " qubits exceeds the memory cap (max " +
                      std::to_string(limits::max_state_qubits()) + ")");
  }
}

}  // namespace

StateVector::StateVector(int n, std::vector<Amplitude> amplitudes)
    : n_(n), amp_(std::move(amplitudes)) {}

StateVector StateVector::computational_basis(int n, std::uint64_t basis_index) {
  check_qubit_count(n);
  std::vector<Amplitude> amp(std::uint64_t{1} << n, Amplitude{0.0, 0.0});
  if (basis_index >= amp.size()) {
    throw DimensionError("basis index out of range");
  }
  amp[basis_index] = Amplitude{1.0, 0.0};
  return StateVector(n, std::move(amp));
}

StateVector StateVector::from_amplitudes(int n, std::vector<Amplitude> amplitudes,
                                         double tol) {
  check_qubit_count(n);
  if (amplitudes.size() != (std::uint64_t{1} << n)) {
    throw DimensionError("amplitude vector length must be 2^n");
  }
  StateVector s(n, std::move(amplitudes));
  if (std::abs(s.norm() - 1.0) > tol) {
    throw std::invalid_argument("state norm deviates from 1 beyond tolerance");
  }
  return s;
}

StateVector StateVector::normalized(int n, std::vector<Amplitude> amplitudes) {
  check_qubit_count(n);
  if (amplitudes.size() != (std::uint64_t{1} << n)) {
    throw DimensionError("amplitude vector length must be 2^n");
  }
  double sum = 0.0;
  for (const auto& a : amplitudes) sum += std::norm(a);
  if (sum <= 0.0) throw std::invalid_argument("cannot normalize the zero vector");
  double scale = 1.0 / std::sqrt(sum);
  for (auto& a : amplitudes) a *= scale;
  return StateVector(n, std::move(amplitudes));
}

double StateVector::norm() const {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

StateVector haar_random(int n, Rng& rng) {
  check_qubit_count(n);
  std::vector<Amplitude> amp(std::uint64_t{1} << n);
  for (auto& a : amp) {
    double re = rng.gaussian();
    double im = rng.gaussian();
    a = Amplitude{re, im};
  }
  return StateVector::normalized(n, std::move(amp));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.qubits() != b.qubits()) {
    throw DimensionError("inner_product: qubit counts differ");
  }
  Amplitude acc{0.0, 0.0};
  const auto& va = a.amplitudes();
  const auto& vb = b.amplitudes();
  for (std::uint64_t i = 0; i < va.size(); ++i) {
    acc += std::conj(va[i]) * vb[i];
  }
  return acc;
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  int n = a.qubits() + b.qubits();
  check_qubit_count(n);
  std::vector<Amplitude> amp(std::uint64_t{1} << n);
  std::uint64_t dim_a = a.dim();
  for (std::uint64_t xb = 0; xb < b.dim(); ++xb) {
    for (std::uint64_t xa = 0; xa < dim_a; ++xa) {
      amp[(xb << a.qubits()) | xa] = a.amplitude(xa) * b.amplitude(xb);
    }
  }
  return StateVector::from_amplitudes(n, std::move(amp), 1e-9);
}

StateVector t_magic_state() {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::vector<Amplitude> amp{
      Amplitude{inv_sqrt2, 0.0},
      std::polar(inv_sqrt2, std::numbers::pi / 4.0)};
  return StateVector::from_amplitudes(1, std::move(amp), 1e-12);
}

StateVector t_magic_state_power(int m) {
  if (m < 1) throw DimensionError("t_magic_state_power: m must be >= 1");
  StateVector s = t_magic_state();
  for (int i = 1; i < m; ++i) s = tensor(s, t_magic_state());
  return s;
}

StateVector load_amplitudes(const std::string& path, bool normalize) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open amplitude file: " + path);

  std::string keyword;
  int n = 0;
  if (!(in >> keyword >> n) || keyword != "qubits") {
    throw ParseError(1, "expected header \"qubits N\"");
  }
  check_qubit_count(n);

  std::uint64_t dim = std::uint64_t{1} << n;
  std::vector<Amplitude> amp(dim);
  for (std::uint64_t i = 0; i < dim; ++i) {
    double re = 0.0, im = 0.0;
    if (!(in >> re >> im)) {
      throw ParseError(static_cast<int>(i + 2), "expected \"re im\" amplitude line");
    }
    amp[i] = Amplitude{re, im};
  }

  if (normalize) return StateVector::normalized(n, std::move(amp));
  return StateVector::from_amplitudes(n, std::move(amp), 1e-6);
}

void save_amplitudes(const StateVector& state, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out.precision(17);
  out << "qubits " << state.qubits() << "\n";
  for (const auto& a : state.amplitudes()) {
    out << a.real() << " " << a.imag() << "\n";
  }
}

}  // namespace stabscope
