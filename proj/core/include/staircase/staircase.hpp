#pragma once

#include <memory>
#include <span>
#include <vector>

#include "staircase/bch.hpp"
#include "staircase/bitmatrix.hpp"

namespace staircase {

// Staircase code parameters around a component code with n = 2m and k > m.
struct StaircaseParams {
  BchSpec code;
  int m = 0;
  long rate_num = 0;  // (k - m) / (n - m), reduced
  long rate_den = 0;
  int d_stair = 0;  // d_min^2

  int payload_bits_per_block() const { return m * (code.k - m); }
};

// Throws std::invalid_argument when n is odd or k <= n/2.
StaircaseParams make_staircase(BchSpec code);

// A finite sequence of staircase blocks. Block 0 is the all-zero anchor; for
// i >= 1 every row of [B_{i-1}^T  B_i] is a component codeword.
struct Stream {
  std::shared_ptr<const StaircaseParams> params;
  std::vector<BitMatrix> blocks;

  int block_count() const { return static_cast<int>(blocks.size()); }
  int word_groups() const { return block_count() - 1; }
  int m() const { return params->m; }
  const BchSpec& code() const { return params->code; }
};

Stream make_zero_stream(std::shared_ptr<const StaircaseParams> params, int block_count);

// Encodes payload bits (0/1 bytes, length a multiple of m*(k-m)) into a
// stream of 1 + |payload| / (m*(k-m)) blocks. `tail_blocks` appends that many
// zero-payload blocks so trailing data gets full decoding attention.
Stream encode_stream(std::shared_ptr<const StaircaseParams> params,
                     std::span<const std::uint8_t> payload, int tail_blocks = 0);

// Systematic payload extraction: inverse of encode_stream for valid streams.
std::vector<std::uint8_t> extract_payload(const Stream& stream);

struct BlockCoord {
  int block = 0;
  int row = 0;
  int col = 0;
  bool operator==(const BlockCoord&) const = default;
};

// Component word group g (0 <= g < blocks-1), word j (0 <= j < m): bit u of
// the word is B_g(u, j) for u < m and B_{g+1}(j, u-m) otherwise.
inline BlockCoord word_bit_coord(int g, int j, int u, int m) {
  if (u < m) return {g, u, j};
  return {g + 1, j, u - m};
}

// Writable view of one component word; flips land in the underlying blocks.
class ComponentWordView {
 public:
  ComponentWordView(Stream& s, int group, int j) : s_(&s), g_(group), j_(j) {}

  int length() const { return s_->code().n; }

  BlockCoord coord(int u) const { return word_bit_coord(g_, j_, u, s_->m()); }

  bool bit(int u) const {
    const BlockCoord c = coord(u);
    return s_->blocks[c.block].get(c.row, c.col);
  }

  void flip(int u) {
    const BlockCoord c = coord(u);
    s_->blocks[c.block].flip(c.row, c.col);
  }

  std::vector<std::uint8_t> bits() const {
    std::vector<std::uint8_t> out(length());
    for (int u = 0; u < length(); ++u) out[u] = bit(u);
    return out;
  }

 private:
  Stream* s_;
  int g_, j_;
};

std::vector<std::uint8_t> component_word(const Stream& s, int group, int j);

struct ValidationReport {
  int groups = 0;
  int words_per_group = 0;
  std::vector<std::uint8_t> nonzero;  // [group * m + j] = 1 iff syndrome != 0
  int nonzero_total = 0;

  bool all_zero() const { return nonzero_total == 0; }
  bool word_nonzero(int g, int j) const { return nonzero[std::size_t(g) * words_per_group + j]; }
};

// Syndrome-zero report over every component word; needs >= 2 blocks.
ValidationReport validate_stream(const Stream& stream);

}  // namespace staircase
