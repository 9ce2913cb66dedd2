#include "nanip/rng.hpp"

#include <cassert>

namespace nanip {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

RngSeed derive_seed(RngSeed master, std::initializer_list<std::uint64_t> path) {
  std::uint64_t h = mix64(master.value);
  for (std::uint64_t part : path) h = mix64(h ^ mix64(part + 0x632be59bd9b4e019ULL));
  return RngSeed{h};
}

Rng::Rng(RngSeed seed) : engine_(mix64(seed.value)) {}

std::uint64_t Rng::below(std::uint64_t bound) {
  assert(bound > 0);
  // Rejection on the low end removes modulo bias.
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = engine_();
    if (x >= threshold) return x % bound;
  }
}

double Rng::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

}  // namespace nanip
