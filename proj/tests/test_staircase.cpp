#include "staircase/staircase.hpp"

#include <memory>

#include "doctest.h"
#include "staircase/rng.hpp"

using namespace staircase;

namespace {

std::shared_ptr<const StaircaseParams> toy_params() {
  return std::make_shared<const StaircaseParams>(
      make_staircase(build_bch(build_field(4, 0x13), 1, true, 0)));
}

std::vector<std::uint8_t> random_payload(const StaircaseParams& p, int blocks, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<std::uint8_t> out(std::size_t(blocks) * p.payload_bits_per_block());
  for (auto& b : out) b = static_cast<std::uint8_t>(rng.next() & 1);
  return out;
}

}  // namespace

TEST_CASE("rate of the [510,491] staircase is 236/255") {
  const StaircaseParams p = make_staircase(build_bch(build_field(9, 0x211), 2, true, 2));
  CHECK(p.m == 255);
  CHECK(p.rate_num == 236);
  CHECK(p.rate_den == 255);
  CHECK(p.d_stair == 36);
}

TEST_CASE("rate identity k'/m for the toy code") {
  const auto p = toy_params();
  CHECK(p->m == 8);
  CHECK(p->rate_num == p->code.k - p->m);  // 3/8 is already reduced
  CHECK(p->rate_den == p->m + (p->code.n - p->code.k));
}

TEST_CASE("component codes with k <= m are rejected") {
  // q=4, t=1, extended, shorten=6 gives [10, 5] with m = 5.
  CHECK_THROWS_AS(make_staircase(build_bch(build_field(4, 0x13), 1, true, 6)),
                  std::invalid_argument);
  // Odd length without extension.
  CHECK_THROWS_AS(make_staircase(build_bch(build_field(4, 0x13), 1, false, 0)),
                  std::invalid_argument);
}

TEST_CASE("all-zero payload encodes to all-zero blocks") {
  const auto p = toy_params();
  const std::vector<std::uint8_t> zero(3 * p->payload_bits_per_block(), 0);
  const Stream s = encode_stream(p, zero);
  CHECK(s.block_count() == 4);
  for (const BitMatrix& b : s.blocks) CHECK(b.count_ones() == 0);
}

TEST_CASE("every row of every consecutive block pair is a codeword") {
  const auto p = toy_params();
  const Stream s = encode_stream(p, random_payload(*p, 6, 42));
  const ValidationReport r = validate_stream(s);
  CHECK(r.all_zero());
  for (int g = 0; g < s.word_groups(); ++g) {
    for (int j = 0; j < s.m(); ++j) {
      CHECK(syndrome_is_zero(p->code, syndrome(p->code, component_word(s, g, j))));
    }
  }
}

TEST_CASE("payload round trip is exact") {
  const auto p = toy_params();
  const auto payload = random_payload(*p, 5, 7);
  const Stream s = encode_stream(p, payload);
  CHECK(extract_payload(s) == payload);
}

TEST_CASE("tail blocks carry zero payload") {
  const auto p = toy_params();
  const auto payload = random_payload(*p, 2, 3);
  const Stream s = encode_stream(p, payload, 3);
  CHECK(s.block_count() == 6);
  CHECK(validate_stream(s).all_zero());
  const auto full = extract_payload(s);
  CHECK(std::equal(payload.begin(), payload.end(), full.begin()));
  for (std::size_t i = payload.size(); i < full.size(); ++i) CHECK(full[i] == 0);
}

TEST_CASE("payload length must be a multiple of the per-block payload") {
  const auto p = toy_params();
  CHECK_THROWS_AS(encode_stream(p, std::vector<std::uint8_t>(5, 0)), std::invalid_argument);
}

TEST_CASE("component word bit mapping") {
  const auto p = toy_params();
  Stream s = encode_stream(p, random_payload(*p, 4, 11));
  const int m = p->m;
  const int g = 1, j = 2;
  const auto word = component_word(s, g, j);
  for (int u = 0; u < p->code.n; ++u) {
    if (u < m) {
      CHECK(word[u] == s.blocks[g].get(u, j));  // transposed half
    } else {
      CHECK(word[u] == s.blocks[g + 1].get(j, u - m));
    }
  }
}

TEST_CASE("word views alias the underlying blocks") {
  const auto p = toy_params();
  Stream s = encode_stream(p, random_payload(*p, 4, 5));
  ComponentWordView view(s, 1, 2);
  const bool before = view.bit(0);
  view.flip(0);
  // Bit 0 of word (1, 2) is B_1(0, 2), which is also bit m+2 of word (0, 0).
  CHECK(view.bit(0) == !before);
  CHECK(s.blocks[1].get(0, 2) == !before);
  CHECK(component_word(s, 0, 0)[p->m + 2] == static_cast<std::uint8_t>(!before));
}

TEST_CASE("a single flipped bit is seen by exactly two component words") {
  const auto p = toy_params();
  Stream s = encode_stream(p, random_payload(*p, 4, 13));
  s.blocks[2].flip(3, 5);
  const ValidationReport r = validate_stream(s);
  CHECK(r.nonzero_total == 2);
  CHECK(r.word_nonzero(1, 3));  // row word of group 1
  CHECK(r.word_nonzero(2, 5));  // column word of group 2
}

TEST_CASE("out-of-range component word indices throw") {
  const auto p = toy_params();
  Stream s = encode_stream(p, random_payload(*p, 3, 1));
  CHECK_THROWS_AS(component_word(s, -1, 0), std::out_of_range);
  CHECK_THROWS_AS(component_word(s, s.word_groups(), 0), std::out_of_range);
  CHECK_THROWS_AS(component_word(s, 0, p->m), std::out_of_range);
}

TEST_CASE("validate_stream needs at least two blocks") {
  const auto p = toy_params();
  Stream s = make_zero_stream(p, 1);
  CHECK_THROWS_AS(validate_stream(s), std::invalid_argument);
}
