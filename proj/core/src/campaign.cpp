#include "staircase/campaign.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

namespace staircase {

CampaignReport run_solved_fraction(const PatternShape& shape,
                                   std::shared_ptr<const StaircaseParams> params,
                                   const CampaignConfig& cfg) {
  if (cfg.trials < 1) throw std::invalid_argument("campaign needs >= 1 trial");
  const auto t0 = std::chrono::steady_clock::now();

  const int margin = cfg.decoder.window + 3;  // keep the pattern clear of both ends
  const int blocks = cfg.stream_blocks > 0 ? cfg.stream_blocks : 2 * margin + 4;
  if (blocks < cfg.decoder.window || blocks < margin + 4) {
    throw std::invalid_argument("campaign stream too short for the window");
  }

  // One clean reference stream per campaign; decoding depends only on the
  // error pattern, so trials reuse it.
  std::vector<std::uint8_t> payload(std::size_t(blocks - 1) * params->payload_bits_per_block());
  {
    Rng rng(sub_seed(cfg.seed, 0));
    for (auto& b : payload) b = static_cast<std::uint8_t>(rng.next() & 1);
  }
  const Stream reference = encode_stream(params, payload);

  const int anchor_lo = margin;
  const int anchor_hi = blocks - margin - 4;  // pattern spans blocks anchor+1..anchor+3
  const int anchor_range = std::max(1, anchor_hi - anchor_lo + 1);

  CampaignReport rep;
  rep.shape = shape;
  rep.trials = cfg.trials;
  rep.seed = cfg.seed;

  for (int trial = 0; trial < cfg.trials; ++trial) {
    Rng rng(sub_seed(cfg.seed, 1 + static_cast<std::uint64_t>(trial)));
    Stream stream = reference;
    SyndromeEngine engine(stream, /*assume_valid=*/true, cfg.genie ? &reference : nullptr);

    InjectionSpec spec = sample_stall_pattern(shape, params->m, rng);
    spec.anchor_group = anchor_lo + static_cast<int>(rng.below(anchor_range));
    inject(engine, spec);

    StreamDecodeReport unused;
    run_improved(engine, cfg.decoder, unused);

    const int b1 = spec.anchor_group + 1;
    const int b2 = spec.anchor_group + 2;
    if (stream.blocks[b1] == reference.blocks[b1] && stream.blocks[b2] == reference.blocks[b2]) {
      ++rep.resolved;
    }
  }

  rep.solved_fraction = static_cast<double>(rep.resolved) / rep.trials;
  rep.conf_half_width =
      1.96 * std::sqrt(rep.solved_fraction * (1.0 - rep.solved_fraction) / rep.trials);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace staircase
