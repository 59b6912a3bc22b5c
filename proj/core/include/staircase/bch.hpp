#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "staircase/gf.hpp"

namespace staircase {

// Power-sum syndromes of a received word: the odd sums S_1, S_3, ..., S_{2t-1}
// plus the overall parity of the word. Even sums follow from S_{2i} = S_i^2.
struct Syndrome {
  static constexpr int kMaxT = 8;
  std::array<gf_elt, kMaxT> s{};  // first t entries used
  std::uint8_t parity = 0;
};

struct DecodeOutcome {
  enum class Kind : std::uint8_t { NoError, Corrected, DetectedUncorrectable };

  Kind kind = Kind::NoError;
  std::uint8_t count = 0;                       // number of flip positions
  std::array<std::uint16_t, Syndrome::kMaxT> pos{};  // word coordinates, ascending

  bool corrected() const { return kind == Kind::Corrected; }
  bool detected() const { return kind == Kind::DetectedUncorrectable; }
  std::span<const std::uint16_t> positions() const { return {pos.data(), count}; }

  static DecodeOutcome no_error() { return {}; }
  static DecodeOutcome detected_uncorrectable() {
    DecodeOutcome o;
    o.kind = Kind::DetectedUncorrectable;
    return o;
  }
};

// A t-error-correcting binary BCH component code over GF(2^q), optionally
// extended by an appended overall parity bit (d_min = 2t+2, all codewords of
// even weight) and shortened by fixing the leading `shorten` information bits
// to zero.
//
// Word layout (length n):
//   [0, k)             information bits, cyclic exponent redundancy + pos
//   [k, k+redundancy)  cyclic parity bits, exponent pos - k
//   n-1                overall parity bit (extended codes only)
// Shortened positions occupy the top cyclic exponents and are virtual zeros,
// excluded from error location.
struct BchSpec {
  FieldSpec field;
  int t = 0;
  bool extended = false;
  int shorten = 0;
  int n = 0;
  int k = 0;
  int d_min = 0;
  // g(x) coefficients, LSB first. Includes the (x+1) factor when extended;
  // encoding divides by the BCH factor and realizes (x+1) as the appended
  // overall parity bit.
  std::vector<std::uint8_t> generator;
  std::uint64_t cyclic_gen_mask = 0;  // BCH factor of g(x) as a bit mask
  int redundancy = 0;                 // degree of the BCH factor

  int cyclic_len() const { return k + redundancy; }
  int parity_pos() const { return n - 1; }

  int exponent_of(int pos) const { return pos < k ? redundancy + pos : pos - k; }

  // -1 when the exponent falls in the shortened (virtual) range.
  int position_of_exponent(int e) const {
    if (e < redundancy) return k + e;
    if (e < redundancy + k) return e - redundancy;
    return -1;
  }
};

// Constructs the code. The generator is the lcm of the minimal polynomials of
// alpha, alpha^3, ..., alpha^(2t-1), times (x+1) when extended. Throws
// std::invalid_argument for t < 1, 2*t*q >= 2^q - 1, shorten out of range, or
// t > Syndrome::kMaxT.
BchSpec build_bch(const FieldSpec& field, int t, bool extended, int shorten);

// Systematic encoding: output[0, k) equals info, parity appended.
std::vector<std::uint8_t> encode_systematic(const BchSpec& code, std::span<const std::uint8_t> info);

Syndrome syndrome(const BchSpec& code, std::span<const std::uint8_t> word);

// Incremental syndrome update for flipping one word position.
void syndrome_flip(const BchSpec& code, Syndrome& s, int pos);

bool syndrome_is_zero(const BchSpec& code, const Syndrome& s);

// Bounded-distance decoding on a cached syndrome: returns Corrected with the
// exact flip positions when a codeword lies within Hamming distance t, else
// DetectedUncorrectable; NoError iff the syndrome is zero.
DecodeOutcome decode_syndrome(const BchSpec& code, const Syndrome& s);

DecodeOutcome decode_bounded(const BchSpec& code, std::span<const std::uint8_t> word);

}  // namespace staircase
