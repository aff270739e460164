#ifndef RANDMAPS_RNG_HPP
#define RANDMAPS_RNG_HPP

#include <cstdint>
#include <random>

namespace randmaps {

using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Deterministic stream derivation: replica streams are functions of the
// master seed and their indices, so parallel runs are order-independent.
inline Rng derive_stream(std::uint64_t master) { return Rng(splitmix64(master)); }

inline Rng derive_stream(std::uint64_t master, std::uint64_t i) {
  return Rng(splitmix64(splitmix64(master) ^ splitmix64(i + 0x1000)));
}

inline Rng derive_stream(std::uint64_t master, std::uint64_t i, std::uint64_t j) {
  return Rng(splitmix64(splitmix64(splitmix64(master) ^ splitmix64(i + 0x1000)) ^
                        splitmix64(j + 0x2000)));
}

}  // namespace randmaps

#endif
