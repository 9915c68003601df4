#pragma once

#include <complex>
#include <string>
#include <vector>

#include "stabscope/rng.hpp"

namespace stabscope {

using Amplitude = std::complex<double>;

// Dense pure n-qubit state: 2^n complex amplitudes, basis index little-endian
// in the qubits. Immutable after construction.
class StateVector {
 public:
  // |basis_index> on n qubits.
  static StateVector computational_basis(int n, std::uint64_t basis_index);

  // Validates the vector length and requires |norm - 1| <= tol.
  static StateVector from_amplitudes(int n, std::vector<Amplitude> amplitudes,
                                     double tol = 1e-6);

  // Rescales the vector to unit norm (rejects the zero vector).
  static StateVector normalized(int n, std::vector<Amplitude> amplitudes);

  int qubits() const { return n_; }
  std::uint64_t dim() const { return std::uint64_t{1} << n_; }
  const std::vector<Amplitude>& amplitudes() const { return amp_; }
  Amplitude amplitude(std::uint64_t index) const { return amp_[index]; }

  double norm() const;

 private:
  StateVector(int n, std::vector<Amplitude> amplitudes);

  int n_;
  std::vector<Amplitude> amp_;
};

// Haar-random n-qubit state: i.i.d. standard complex Gaussian amplitudes,
// globally normalized. Deterministic in the generator state.
StateVector haar_random(int n, Rng& rng);

// <a|b>, conjugating a.
Amplitude inner_product(const StateVector& a, const StateVector& b);

// Tensor product; b occupies the high bits, a the low bits, so the amplitude
// at index (x_b || x_a) is a[x_a] * b[x_b].
StateVector tensor(const StateVector& a, const StateVector& b);

// |T> = (|0> + e^{i pi/4}|1>)/sqrt(2), and its m-fold tensor power.
StateVector t_magic_state();
StateVector t_magic_state_power(int m);

// Amplitude file format: line 1 "qubits N"; then 2^N lines "re im".
// The loader rejects a norm deviating from 1 by more than 1e-6 unless
// normalize is set.
StateVector load_amplitudes(const std::string& path, bool normalize = false);
void save_amplitudes(const StateVector& state, const std::string& path);

}  // namespace stabscope
