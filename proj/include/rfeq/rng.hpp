#pragma once

#include <cstdint>

#include "rfeq/word.hpp"

namespace rfeq {

// splitmix64: counter-based, cheap to key by (seed, index) pairs, so
// sampling is reproducible and order-independent across samples.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // n must be positive; modulo bias is irrelevant at the n used here
  std::uint64_t below(std::uint64_t n) { return next() % n; }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_key(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(b);
  return a ^ g.next();
}

// Uniform reduced word of exactly the given length over `rank` generators:
// first letter uniform over 2*rank, each next uniform over the 2*rank - 1
// letters that do not cancel.
Word random_reduced_word(std::size_t rank, std::size_t length, SplitMix64& g);

}  // namespace rfeq
