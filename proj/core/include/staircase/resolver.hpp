#pragma once

#include <vector>

#include "staircase/decoder.hpp"

namespace staircase {

// Per-group syndrome indicator: bit j set iff word j of the group has a
// nonzero syndrome.
struct SyndromeIndicator {
  std::vector<std::uint8_t> bits;
  int weight = 0;

  std::vector<int> support() const {
    std::vector<int> out;
    for (int j = 0; j < static_cast<int>(bits.size()); ++j) {
      if (bits[j]) out.push_back(j);
    }
    return out;
  }
};

SyndromeIndicator indicator(const SyndromeEngine& engine, int group);

// Rank-<=1 masking matrix M_b = s_{b-1} * s_b^T aimed at block b: entry (r, c)
// is set iff word r of group b-1 and word c of group b both have nonzero
// syndromes.
struct MaskingMatrix {
  int block = 0;
  SyndromeIndicator rows;  // s_{b-1}
  SyndromeIndicator cols;  // s_b

  int weight() const { return rows.weight * cols.weight; }
};

MaskingMatrix masking_matrix(const SyndromeEngine& engine, int block);

// Adds the mask to the block mod 2 through the engine (syndromes follow).
// Returns the number of bits flipped. Involution: applying twice restores.
int bit_flip(SyndromeEngine& engine, const MaskingMatrix& mask);

struct StallDiagnosis {
  int anchor = 0;  // leading word group i
  int delta0 = 0;  // nonzero-syndrome words in group i
  int delta1 = 0;  // group i+1
  int delta2 = 0;  // group i+2
  std::vector<int> rows0, cols1, rows2;

  bool operator==(const StallDiagnosis&) const = default;
};

// Reads deltas and involved index sets from fresh syndromes; needs word
// groups i..i+2, i.e. i+3 < block count.
StallDiagnosis diagnose(const SyndromeEngine& engine, int i);

enum class ResolveOutcome : std::uint8_t { Resolved, Unresolved, Altered };

struct ResolveReport {
  ResolveOutcome outcome = ResolveOutcome::Unresolved;
  int rounds = 0;
  int full_flips = 0;  // rounds that flipped every intersection
  int row_flips = 0;   // rounds that flipped a single involved row
  int bits_flipped = 0;
};

// The bit-flip resolution sequence at window position i, starting from a
// diagnosis with delta0 != 0: flip (all intersections, or one involved row
// when both delta0+delta2 and delta1 reach d_min), two passes confined to the
// stall-pattern positions, two passes over the word groups of blocks i+1 and
// i+2, then one single-error pass and a re-diagnosis to repeat the sequence
// once more if errors remain in group i.
ResolveReport resolve(SyndromeEngine& engine, int i, const DecoderConfig& cfg,
                      const StallDiagnosis& initial);

// Sliding-window decoder with stall-pattern resolving: per window position,
// regular iterations to v_max, one single-error-only pass, diagnosis, and a
// conditional resolve. The window should be 3 blocks larger than the regular
// decoder's.
StreamDecodeReport decode_stream_improved(Stream& stream, const DecoderConfig& cfg,
                                          const Stream* reference = nullptr,
                                          const Stream* genie = nullptr);

// Engine-level variant reusing an existing syndrome cache.
void run_improved(SyndromeEngine& engine, const DecoderConfig& cfg, StreamDecodeReport& report);

}  // namespace staircase
