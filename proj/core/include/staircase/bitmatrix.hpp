#pragma once

#include <cstdint>
#include <vector>

namespace staircase {

// m x m bit matrix, packed row-major with 64-bit words per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  explicit BitMatrix(int m) : m_(m), wpr_((m + 63) / 64), w_(std::size_t(m) * wpr_, 0) {}

  int side() const { return m_; }

  bool get(int r, int c) const { return (w_[idx(r, c)] >> (c & 63)) & 1; }

  void set(int r, int c, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (c & 63);
    if (v) {
      w_[idx(r, c)] |= bit;
    } else {
      w_[idx(r, c)] &= ~bit;
    }
  }

  void flip(int r, int c) { w_[idx(r, c)] ^= std::uint64_t{1} << (c & 63); }

  bool operator==(const BitMatrix& o) const = default;

  int count_ones() const {
    int n = 0;
    for (std::uint64_t w : w_) n += __builtin_popcountll(w);
    return n;
  }

  int diff_count(const BitMatrix& o) const {
    int n = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) n += __builtin_popcountll(w_[i] ^ o.w_[i]);
    return n;
  }

  const std::uint64_t* row_words(int r) const { return w_.data() + std::size_t(r) * wpr_; }
  std::uint64_t* row_words(int r) { return w_.data() + std::size_t(r) * wpr_; }
  int words_per_row() const { return wpr_; }

 private:
  std::size_t idx(int r, int c) const { return std::size_t(r) * wpr_ + (c >> 6); }

  int m_ = 0;
  int wpr_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace staircase
