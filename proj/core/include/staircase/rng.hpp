#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;

// SplitMix64 step; used as a seed expander so that per-trial sub-seeds are a
// pure function of (master_seed, index).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t sub_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t state = master ^ (0xA0761D6478BD642Full * (index + 1));
  splitmix64(state);
  return splitmix64(state);
}

// Deterministic RNG wrapper. std::mt19937_64 output is fully specified by the
// standard; the distributions here are hand-rolled because the standard
// library distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next() { return eng_(); }

  // Uniform in [0, bound), bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = eng_();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform BigInt in [0, bound), bound >= 1.
  BigInt below_big(const BigInt& bound) {
    if (bound <= (std::numeric_limits<std::uint64_t>::max)()) {
      return BigInt(below(static_cast<std::uint64_t>(bound)));
    }
    const std::size_t bits = msb(bound) + 1;
    const std::size_t words = (bits + 63) / 64;
    for (;;) {
      BigInt r = 0;
      for (std::size_t w = 0; w < words; ++w) {
        r <<= 64;
        r |= BigInt(eng_());
      }
      r >>= (words * 64 - bits);
      if (r < bound) return r;
    }
  }

  // Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

  // k distinct values drawn uniformly from [0, n), returned sorted.
  std::vector<int> sample_distinct(int n, int k) {
    std::vector<int> out;
    out.reserve(k);
    // Floyd's algorithm: uniform over k-subsets.
    for (int j = n - k; j < n; ++j) {
      int v = static_cast<int>(below(static_cast<std::uint64_t>(j) + 1));
      bool seen = false;
      for (int x : out) {
        if (x == v) {
          seen = true;
          break;
        }
      }
      out.push_back(seen ? j : v);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::mt19937_64 eng_;
};

}  // namespace staircase
