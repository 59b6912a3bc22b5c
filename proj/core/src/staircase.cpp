#include "staircase/staircase.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace staircase {

StaircaseParams make_staircase(BchSpec code) {
  if (code.n % 2 != 0) {
    throw std::invalid_argument("staircase component code length must be even, got n=" +
                                std::to_string(code.n));
  }
  const int m = code.n / 2;
  if (code.k <= m) {
    throw std::invalid_argument("staircase needs component dimension k > m (k=" +
                                std::to_string(code.k) + ", m=" + std::to_string(m) + ")");
  }
  StaircaseParams p;
  p.m = m;
  p.d_stair = code.d_min * code.d_min;
  const long num = code.k - m;
  const long den = code.n - m;
  const long g = std::gcd(num, den);
  p.rate_num = num / g;
  p.rate_den = den / g;
  p.code = std::move(code);
  return p;
}

Stream make_zero_stream(std::shared_ptr<const StaircaseParams> params, int block_count) {
  Stream s;
  s.blocks.assign(block_count, BitMatrix(params->m));
  s.params = std::move(params);
  return s;
}

Stream encode_stream(std::shared_ptr<const StaircaseParams> params,
                     std::span<const std::uint8_t> payload, int tail_blocks) {
  const int per_block = params->payload_bits_per_block();
  if (payload.size() % per_block != 0) {
    throw std::invalid_argument("payload length " + std::to_string(payload.size()) +
                                " is not a multiple of m*(k-m) = " + std::to_string(per_block));
  }
  const int data_blocks = static_cast<int>(payload.size() / per_block);
  const int m = params->m;
  const BchSpec& code = params->code;
  const int kprime = code.k - m;

  Stream s = make_zero_stream(params, 1 + data_blocks + tail_blocks);
  std::vector<std::uint8_t> info(code.k);
  for (int b = 1; b < s.block_count(); ++b) {
    const std::uint8_t* block_payload =
        (b <= data_blocks) ? payload.data() + std::size_t(b - 1) * per_block : nullptr;
    for (int j = 0; j < m; ++j) {
      // Row j of [B_{b-1}^T  B_b]: first m info bits are column j of B_{b-1}.
      for (int u = 0; u < m; ++u) info[u] = s.blocks[b - 1].get(u, j);
      for (int v = 0; v < kprime; ++v) {
        info[m + v] = block_payload ? block_payload[std::size_t(j) * kprime + v] : 0;
      }
      const std::vector<std::uint8_t> word = encode_systematic(code, info);
      for (int u = m; u < code.n; ++u) {
        if (word[u]) s.blocks[b].set(j, u - m, true);
      }
    }
  }
  return s;
}

std::vector<std::uint8_t> extract_payload(const Stream& stream) {
  const StaircaseParams& p = *stream.params;
  const int m = p.m;
  const int kprime = p.code.k - m;
  std::vector<std::uint8_t> out;
  out.reserve(std::size_t(stream.block_count() - 1) * p.payload_bits_per_block());
  for (int b = 1; b < stream.block_count(); ++b) {
    for (int j = 0; j < m; ++j) {
      for (int v = 0; v < kprime; ++v) out.push_back(stream.blocks[b].get(j, v));
    }
  }
  return out;
}

std::vector<std::uint8_t> component_word(const Stream& s, int group, int j) {
  if (group < 0 || group >= s.word_groups() || j < 0 || j >= s.m()) {
    throw std::out_of_range("component word index out of range");
  }
  const int n = s.code().n;
  const int m = s.m();
  std::vector<std::uint8_t> out(n);
  for (int u = 0; u < n; ++u) {
    const BlockCoord c = word_bit_coord(group, j, u, m);
    out[u] = s.blocks[c.block].get(c.row, c.col);
  }
  return out;
}

ValidationReport validate_stream(const Stream& stream) {
  if (stream.block_count() < 2) throw std::invalid_argument("validate_stream needs >= 2 blocks");
  ValidationReport r;
  r.groups = stream.word_groups();
  r.words_per_group = stream.m();
  r.nonzero.assign(std::size_t(r.groups) * r.words_per_group, 0);
  const BchSpec& code = stream.code();
  for (int g = 0; g < r.groups; ++g) {
    for (int j = 0; j < stream.m(); ++j) {
      const auto word = component_word(stream, g, j);
      if (!syndrome_is_zero(code, syndrome(code, word))) {
        r.nonzero[std::size_t(g) * r.words_per_group + j] = 1;
        ++r.nonzero_total;
      }
    }
  }
  return r;
}

}  // namespace staircase
