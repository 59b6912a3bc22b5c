#include "staircase/resolver.hpp"

#include <stdexcept>

namespace staircase {

namespace {

constexpr int kMaskedPasses = 2;
constexpr int kBlockRestrictedPasses = 2;

}  // namespace

SyndromeIndicator indicator(const SyndromeEngine& engine, int group) {
  SyndromeIndicator s;
  s.bits.assign(engine.m(), 0);
  for (int j = 0; j < engine.m(); ++j) {
    if (engine.word_nonzero(group, j)) {
      s.bits[j] = 1;
      ++s.weight;
    }
  }
  return s;
}

MaskingMatrix masking_matrix(const SyndromeEngine& engine, int block) {
  if (block < 1 || block >= engine.groups()) {
    throw std::out_of_range("masking matrix needs word groups on both sides of the block");
  }
  MaskingMatrix m;
  m.block = block;
  m.rows = indicator(engine, block - 1);
  m.cols = indicator(engine, block);
  return m;
}

int bit_flip(SyndromeEngine& engine, const MaskingMatrix& mask) {
  int flips = 0;
  for (int r = 0; r < engine.m(); ++r) {
    if (!mask.rows.bits[r]) continue;
    for (int c = 0; c < engine.m(); ++c) {
      if (!mask.cols.bits[c]) continue;
      engine.flip(mask.block, r, c);
      ++flips;
    }
  }
  return flips;
}

StallDiagnosis diagnose(const SyndromeEngine& engine, int i) {
  if (i < 0 || i + 2 >= engine.groups()) {
    throw std::out_of_range("diagnosis needs word groups i..i+2");
  }
  StallDiagnosis d;
  d.anchor = i;
  d.delta0 = engine.group_nonzero(i);
  d.delta1 = engine.group_nonzero(i + 1);
  d.delta2 = engine.group_nonzero(i + 2);
  d.rows0 = engine.involved_words(i);
  d.cols1 = engine.involved_words(i + 1);
  d.rows2 = engine.involved_words(i + 2);
  return d;
}

ResolveReport resolve(SyndromeEngine& engine, int i, const DecoderConfig& cfg,
                      const StallDiagnosis& initial) {
  ResolveReport rep;
  const int d_min = engine.code().d_min;
  const int g_hi = i + 2;
  StallDiagnosis diag = initial;

  for (int round = 0; round < 2; ++round) {
    if (diag.delta0 == 0) break;
    ++rep.rounds;

    const MaskingMatrix m1 = masking_matrix(engine, i + 1);
    const MaskingMatrix m2 = masking_matrix(engine, i + 2);

    // The stall-pattern positions: all intersections of erroneous rows and
    // columns within blocks i+1 and i+2, frozen at flip time.
    PositionMask mask(engine.m());
    for (int r : m1.rows.support()) {
      for (int c : m1.cols.support()) mask.add(i + 1, r, c);
    }
    for (int r : m2.rows.support()) {
      for (int c : m2.cols.support()) mask.add(i + 2, r, c);
    }
    mask.finalize();

    if (diag.delta0 + diag.delta2 < d_min || diag.delta1 < d_min) {
      rep.bits_flipped += bit_flip(engine, m1);
      rep.bits_flipped += bit_flip(engine, m2);
      ++rep.full_flips;
    } else {
      // Flip only one involved row. Every involved row meets every involved
      // column, so the intersection counts tie and the lowest index wins;
      // group-i rows come first and delta0 != 0 guarantees one exists.
      const int r = m1.rows.support().front();
      for (int c : m1.cols.support()) engine.flip(i + 1, r, c);
      rep.bits_flipped += m1.cols.weight;
      ++rep.row_flips;
    }

    for (int p = 0; p < kMaskedPasses; ++p) {
      decode_pass(engine, i, g_hi, IterationMode::masked(mask));
    }
    for (int p = 0; p < kBlockRestrictedPasses; ++p) {
      decode_pass(engine, i, g_hi, IterationMode::restricted(i, g_hi));
    }

    if (round == 0) {
      decode_pass(engine, i, i + cfg.window - 2, IterationMode::single_error_only());
      diag = diagnose(engine, i);
    }
  }

  const StallDiagnosis after = diagnose(engine, i);
  if (after.delta0 == 0 && after.delta1 == 0 && after.delta2 == 0) {
    rep.outcome = ResolveOutcome::Resolved;
  } else if (after == initial) {
    rep.outcome = ResolveOutcome::Unresolved;
  } else {
    rep.outcome = ResolveOutcome::Altered;
  }
  return rep;
}

void run_improved(SyndromeEngine& engine, const DecoderConfig& cfg, StreamDecodeReport& report) {
  const int blocks = engine.stream().block_count();
  if (cfg.window < 2 || cfg.v_max < 1) throw std::invalid_argument("need W >= 2 and v_max >= 1");
  if (blocks < cfg.window) throw std::invalid_argument("stream shorter than the decoding window");
  for (int i = 0; i + cfg.window <= blocks; ++i) {
    decode_window(engine, i, cfg);
    decode_pass(engine, i, i + cfg.window - 2, IterationMode::single_error_only());
    if (i + 3 < blocks) {
      const StallDiagnosis d = diagnose(engine, i);
      if (d.delta0 != 0) {
        ++report.resolves_attempted;
        switch (resolve(engine, i, cfg, d).outcome) {
          case ResolveOutcome::Resolved: ++report.resolves_resolved; break;
          case ResolveOutcome::Unresolved: ++report.resolves_unresolved; break;
          case ResolveOutcome::Altered: ++report.resolves_altered; break;
        }
      }
    }
    ++report.window_positions;
  }
  report.bits_flipped = engine.flips_total();
  report.residual_nonzero_words = engine.total_nonzero();
}

StreamDecodeReport decode_stream_improved(Stream& stream, const DecoderConfig& cfg,
                                          const Stream* reference, const Stream* genie) {
  SyndromeEngine engine(stream, /*assume_valid=*/false, genie);
  StreamDecodeReport report;
  run_improved(engine, cfg, report);
  if (reference != nullptr) account_against_reference(stream, *reference, report);
  return report;
}

}  // namespace staircase
