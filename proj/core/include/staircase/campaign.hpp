#pragma once

#include <memory>

#include "staircase/channel.hpp"
#include "staircase/resolver.hpp"

namespace staircase {

struct CampaignConfig {
  int trials = 2000;
  std::uint64_t seed = 0;
  DecoderConfig decoder{10, 7};  // improved-decoder window (regular + 3)
  int stream_blocks = 0;         // 0 = derived from the window size
  bool genie = false;            // miscorrection-free component decoding
};

struct CampaignReport {
  PatternShape shape;
  int trials = 0;
  int resolved = 0;
  double solved_fraction = 0.0;
  double conf_half_width = 0.0;  // 95% normal-approximation half width
  std::uint64_t seed = 0;
  double seconds = 0.0;

  int unresolved() const { return trials - resolved; }
};

// Dedicated stall-injection channel: per trial, one sampled stall pattern is
// placed in an otherwise clean stream (no other errors), the improved decoder
// runs, and the trial counts as resolved iff the two affected blocks come out
// bit-exact against the reference. Trials are sub-seeded from the master seed
// so aggregation is order-independent.
CampaignReport run_solved_fraction(const PatternShape& shape,
                                   std::shared_ptr<const StaircaseParams> params,
                                   const CampaignConfig& cfg);

}  // namespace staircase
