#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace nanip {

struct RngSeed {
  std::uint64_t value = 0;

  friend bool operator==(RngSeed, RngSeed) = default;
};

// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

// Deterministic child seed for a (master, path...) tuple, e.g. (m, instance, run).
RngSeed derive_seed(RngSeed master, std::initializer_list<std::uint64_t> path);

// Seeded generator with platform-independent sampling helpers. The standard
// distributions are implementation-defined, so sampling is done here to keep
// outputs identical across standard libraries.
class Rng {
 public:
  explicit Rng(RngSeed seed);

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound). bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace nanip
