#pragma once

#include <cstdint>
#include <random>

namespace stabscope {

// Splittable 64-bit-seeded generator. The engine is a seeded mt19937_64;
// all floating-point draws are produced by hand so that output is
// bit-identical across platforms and standard-library versions.
// Independent substreams are derived by SplitMix64 mixing of (seed, stream).
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t seed() const { return seed_; }

  // Independent substream for parallel work; deterministic in (seed, stream).
  Rng derive(std::uint64_t stream) const;

  std::uint64_t next_u64();

  // Uniform in [0, 1) with 53 bits of precision.
  double uniform();

  // Standard normal via Box-Muller.
  double gaussian();

  bool bernoulli(double p);

  // Uniform integer in [0, bound), bound >= 1, via rejection.
  std::uint64_t uniform_below(std::uint64_t bound);

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  double cached_gaussian_ = 0.0;
  bool has_cached_gaussian_ = false;
};

// SplitMix64 mixing step, exposed for seed derivation elsewhere.
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace stabscope
