#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace pcw {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// std::mt19937_64 output is fully specified by the standard, so every draw
// below is reproducible across platforms and compilers.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Unbiased draw from [0, bound); bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = engine_();
      if (r >= threshold) return r % bound;
    }
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    // Fisher-Yates, uniform over all permutations.
    for (std::size_t k = v.size(); k > 1; --k) {
      const std::size_t j = static_cast<std::size_t>(below(k));
      std::swap(v[k - 1], v[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace pcw
