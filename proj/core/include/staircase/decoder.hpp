#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "staircase/staircase.hpp"

namespace staircase {

struct DecoderConfig {
  int window = 7;  // W, in blocks
  int v_max = 7;   // maximum full iterations per window position
};

// Set of block positions a masked pass may flip.
class PositionMask {
 public:
  explicit PositionMask(int m) : m_(m) {}

  void add(int block, int r, int c) { keys_.push_back(key(block, r, c)); }

  void finalize() {
    std::sort(keys_.begin(), keys_.end());
    keys_.erase(std::unique(keys_.begin(), keys_.end()), keys_.end());
  }

  bool contains(int block, int r, int c) const {
    return std::binary_search(keys_.begin(), keys_.end(), key(block, r, c));
  }

  std::size_t size() const { return keys_.size(); }

 private:
  std::uint64_t key(int block, int r, int c) const {
    return (static_cast<std::uint64_t>(block) * m_ + r) * m_ + c;
  }

  int m_;
  std::vector<std::uint64_t> keys_;
};

// One of the pass flavors used by the decoders. Modes are mutually exclusive.
struct IterationMode {
  enum class Kind : std::uint8_t { Full, SingleErrorOnly, MaskedToPositions, RestrictedToBlocks };

  Kind kind = Kind::Full;
  const PositionMask* mask = nullptr;  // MaskedToPositions
  int group_lo = 0;                    // RestrictedToBlocks: word-group range
  int group_hi = -1;

  static IterationMode full() { return {}; }
  static IterationMode single_error_only() { return {Kind::SingleErrorOnly, nullptr, 0, -1}; }
  static IterationMode masked(const PositionMask& m) {
    return {Kind::MaskedToPositions, &m, 0, -1};
  }
  static IterationMode restricted(int lo, int hi) {
    return {Kind::RestrictedToBlocks, nullptr, lo, hi};
  }
};

struct PassReport {
  int words_examined = 0;  // nonzero-syndrome words decoded
  int corrections = 0;     // committed Corrected outcomes
  int detected = 0;
  int bits_flipped = 0;
  int last_group_corrections = 0;
  int last_group_detected = 0;
  int residual_nonzero = 0;  // nonzero-syndrome words left in the swept range
};

// Per-word syndrome cache over a stream. Decoding operates purely on cached
// syndromes; committed flips update the stream and both crossing words.
class SyndromeEngine {
 public:
  // assume_valid skips the from-scratch syndrome computation; the caller
  // asserts the stream currently satisfies every component constraint.
  // genie_reference switches component decoding to the miscorrection-free
  // oracle that reads true error positions off the reference (test use only).
  explicit SyndromeEngine(Stream& stream, bool assume_valid = false,
                          const Stream* genie_reference = nullptr);

  Stream& stream() { return *stream_; }
  const Stream& stream() const { return *stream_; }
  const BchSpec& code() const { return stream_->code(); }
  int groups() const { return stream_->word_groups(); }
  int m() const { return m_; }
  bool genie() const { return genie_ != nullptr; }

  bool word_nonzero(int g, int j) const { return nz_[idx(g, j)]; }
  int group_nonzero(int g) const { return group_count_[g]; }
  int total_nonzero() const { return total_nonzero_; }
  long long flips_total() const { return flips_; }
  const Syndrome& word_syndrome(int g, int j) const { return synd_[idx(g, j)]; }

  std::vector<int> involved_words(int g) const {
    std::vector<int> out;
    for (int j = 0; j < m_; ++j) {
      if (nz_[idx(g, j)]) out.push_back(j);
    }
    return out;
  }

  // Flips a stream bit and updates the syndromes of both crossing words.
  void flip(int block, int r, int c);
  void flip(const BlockCoord& c) { flip(c.block, c.row, c.col); }

  DecodeOutcome decode_word(int g, int j) const;

  // Applies a Corrected outcome's flips; returns the number of bits flipped.
  int commit(int g, int j, const DecodeOutcome& o);

 private:
  std::size_t idx(int g, int j) const { return std::size_t(g) * m_ + j; }
  void set_nonzero(int g, int j, bool v);
  void recompute_word(int g, int j);

  Stream* stream_;
  const Stream* genie_;
  int m_;
  std::vector<Syndrome> synd_;
  std::vector<std::uint8_t> nz_;
  std::vector<int> group_count_;
  int total_nonzero_ = 0;
  long long flips_ = 0;
};

// One sweep over the word groups [group_lo, group_hi] in ascending order,
// decoding each nonzero-syndrome word and committing flips immediately, so
// later words see updated syndromes. The commit rule depends on the mode.
PassReport decode_pass(SyndromeEngine& engine, int group_lo, int group_hi,
                       const IterationMode& mode);

struct WindowReport {
  int passes = 0;
  bool clean_termination = false;  // last group went quiet before v_max
  PassReport last_pass;
};

// Full passes over window [i, i+W) until the last block's word group reports
// zero corrections and zero detected-uncorrectable words, or v_max passes.
WindowReport decode_window(SyndromeEngine& engine, int i, const DecoderConfig& cfg);

struct StreamDecodeReport {
  int window_positions = 0;
  long long bits_flipped = 0;
  int residual_nonzero_words = 0;
  // stall resolution counters (improved decoder only)
  int resolves_attempted = 0;
  int resolves_resolved = 0;
  int resolves_unresolved = 0;
  int resolves_altered = 0;
  // accounting against a reference stream, when provided
  bool have_reference = false;
  std::vector<int> block_bit_errors;
  long long payload_bit_errors = 0;
  long long payload_bits = 0;

  double payload_ber() const {
    return payload_bits ? static_cast<double>(payload_bit_errors) / payload_bits : 0.0;
  }
};

// The regular sliding-window decoder: windows advance one block at a time.
StreamDecodeReport decode_stream_regular(Stream& stream, const DecoderConfig& cfg,
                                         const Stream* reference = nullptr);

// Engine-level variant reusing an existing syndrome cache.
void run_regular(SyndromeEngine& engine, const DecoderConfig& cfg, StreamDecodeReport& report);

// Fills the reference-comparison fields of a report.
void account_against_reference(const Stream& decoded, const Stream& reference,
                               StreamDecodeReport& report);

}  // namespace staircase
