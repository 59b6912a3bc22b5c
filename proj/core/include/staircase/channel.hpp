#pragma once

#include <vector>

#include "staircase/counting.hpp"
#include "staircase/decoder.hpp"
#include "staircase/staircase.hpp"

namespace staircase {

struct BscConfig {
  double p = 0.0;
  std::uint64_t master_seed = 0;
};

struct BscResult {
  long long flipped = 0;
  long long total_bits = 0;
  std::vector<BitMatrix> error_mask;  // per block, 1 = flipped
};

// Flips each stream bit independently with probability p; the true error mask
// is retained for error-rate accounting. Deterministic per seed.
BscResult bsc_apply(Stream& stream, double p, std::uint64_t seed);

// A stall pattern placed in the stream: the K involved rows split across word
// groups `anchor` (row_split of them) and `anchor+2`, the L involved columns
// in group anchor+1, with errors in blocks anchor+1 and anchor+2.
struct InjectionSpec {
  PatternShape shape;
  int anchor_group = 0;
  int row_split = 0;               // a in [1, K]: rows taken from group anchor
  std::vector<int> rows_upper;     // word indices in group anchor
  std::vector<int> rows_lower;     // word indices in group anchor+2
  std::vector<int> cols;           // word indices in group anchor+1
  std::vector<std::uint8_t> pattern;  // K x L bits, upper rows first

  std::vector<BlockCoord> positions() const;
};

// Draws the pattern matrix uniformly from the stall-pattern set of the shape
// (uniform row-constrained proposal, accepted when every column reaches
// weight t+1), with a uniform row split and uniform index placements.
// anchor_group is left at 0 for the caller to place.
InjectionSpec sample_stall_pattern(const PatternShape& shape, int m, Rng& rng);
InjectionSpec sample_stall_pattern(const PatternShape& shape, int m, std::uint64_t seed);

// Flips the pattern positions through the engine so syndromes stay current.
void inject(SyndromeEngine& engine, const InjectionSpec& spec);

}  // namespace staircase
