#include "staircase/decoder.hpp"

#include <cassert>
#include <stdexcept>

namespace staircase {

SyndromeEngine::SyndromeEngine(Stream& stream, bool assume_valid, const Stream* genie_reference)
    : stream_(&stream), genie_(genie_reference), m_(stream.m()) {
  const int groups = stream.word_groups();
  if (groups < 1) throw std::invalid_argument("stream needs >= 2 blocks");
  synd_.assign(std::size_t(groups) * m_, Syndrome{});
  nz_.assign(std::size_t(groups) * m_, 0);
  group_count_.assign(groups, 0);
  if (!assume_valid) {
    for (int g = 0; g < groups; ++g) {
      for (int j = 0; j < m_; ++j) recompute_word(g, j);
    }
  }
}

void SyndromeEngine::recompute_word(int g, int j) {
  const BchSpec& c = code();
  Syndrome s;
  for (int u = 0; u < c.n; ++u) {
    const BlockCoord bc = word_bit_coord(g, j, u, m_);
    if (stream_->blocks[bc.block].get(bc.row, bc.col)) syndrome_flip(c, s, u);
  }
  synd_[idx(g, j)] = s;
  set_nonzero(g, j, !syndrome_is_zero(c, s));
}

void SyndromeEngine::set_nonzero(int g, int j, bool v) {
  std::uint8_t& cur = nz_[idx(g, j)];
  if (cur == static_cast<std::uint8_t>(v)) return;
  cur = static_cast<std::uint8_t>(v);
  group_count_[g] += v ? 1 : -1;
  total_nonzero_ += v ? 1 : -1;
}

void SyndromeEngine::flip(int block, int r, int c) {
  stream_->blocks[block].flip(r, c);
  ++flips_;
  const BchSpec& bch = code();
  // Word r of group block-1 holds this bit at position m + c.
  if (block >= 1) {
    const int g = block - 1;
    Syndrome& s = synd_[idx(g, r)];
    syndrome_flip(bch, s, m_ + c);
    set_nonzero(g, r, !syndrome_is_zero(bch, s));
  }
  // Word c of group block holds this bit at position r.
  if (block < groups()) {
    Syndrome& s = synd_[idx(block, c)];
    syndrome_flip(bch, s, r);
    set_nonzero(block, c, !syndrome_is_zero(bch, s));
  }
}

DecodeOutcome SyndromeEngine::decode_word(int g, int j) const {
  const BchSpec& c = code();
  if (genie_ != nullptr) {
    DecodeOutcome o;
    int count = 0;
    for (int u = 0; u < c.n; ++u) {
      const BlockCoord bc = word_bit_coord(g, j, u, m_);
      if (stream_->blocks[bc.block].get(bc.row, bc.col) !=
          genie_->blocks[bc.block].get(bc.row, bc.col)) {
        if (count >= c.t) return DecodeOutcome::detected_uncorrectable();
        o.pos[count++] = static_cast<std::uint16_t>(u);
      }
    }
    if (count == 0) return DecodeOutcome::no_error();
    o.kind = DecodeOutcome::Kind::Corrected;
    o.count = static_cast<std::uint8_t>(count);
    return o;
  }
  return decode_syndrome(c, synd_[idx(g, j)]);
}

int SyndromeEngine::commit(int g, int j, const DecodeOutcome& o) {
  assert(o.corrected());
  for (int i = 0; i < o.count; ++i) {
    flip(word_bit_coord(g, j, o.pos[i], m_));
  }
  // A committed correction zeroes this word's syndrome.
  assert(genie_ != nullptr || !word_nonzero(g, j));
  return o.count;
}

PassReport decode_pass(SyndromeEngine& engine, int group_lo, int group_hi,
                       const IterationMode& mode) {
  PassReport rep;
  const int m = engine.m();
  for (int g = group_lo; g <= group_hi; ++g) {
    if (mode.kind == IterationMode::Kind::RestrictedToBlocks &&
        (g < mode.group_lo || g > mode.group_hi)) {
      continue;
    }
    const bool last = (g == group_hi);
    if (engine.group_nonzero(g) == 0) continue;
    for (int j = 0; j < m; ++j) {
      if (!engine.word_nonzero(g, j)) continue;
      ++rep.words_examined;
      const DecodeOutcome o = engine.decode_word(g, j);
      if (o.detected()) {
        ++rep.detected;
        if (last) ++rep.last_group_detected;
        continue;
      }
      if (!o.corrected()) continue;
      bool commit = true;
      switch (mode.kind) {
        case IterationMode::Kind::SingleErrorOnly:
          commit = (o.count == 1);
          break;
        case IterationMode::Kind::MaskedToPositions: {
          for (int u = 0; u < o.count && commit; ++u) {
            const BlockCoord c = word_bit_coord(g, j, o.pos[u], m);
            commit = mode.mask->contains(c.block, c.row, c.col);
          }
          break;
        }
        default:
          break;
      }
      if (!commit) continue;
      rep.bits_flipped += engine.commit(g, j, o);
      ++rep.corrections;
      if (last) ++rep.last_group_corrections;
    }
  }
  for (int g = group_lo; g <= group_hi; ++g) rep.residual_nonzero += engine.group_nonzero(g);
  return rep;
}

WindowReport decode_window(SyndromeEngine& engine, int i, const DecoderConfig& cfg) {
  WindowReport wr;
  const int g_hi = i + cfg.window - 2;
  for (int pass = 0; pass < cfg.v_max; ++pass) {
    wr.last_pass = decode_pass(engine, i, g_hi, IterationMode::full());
    ++wr.passes;
    if (wr.last_pass.last_group_corrections == 0 && wr.last_pass.last_group_detected == 0) {
      wr.clean_termination = true;
      break;
    }
  }
  return wr;
}

void run_regular(SyndromeEngine& engine, const DecoderConfig& cfg, StreamDecodeReport& report) {
  const int blocks = engine.stream().block_count();
  if (cfg.window < 2 || cfg.v_max < 1) throw std::invalid_argument("need W >= 2 and v_max >= 1");
  if (blocks < cfg.window) throw std::invalid_argument("stream shorter than the decoding window");
  for (int i = 0; i + cfg.window <= blocks; ++i) {
    decode_window(engine, i, cfg);
    ++report.window_positions;
  }
  report.bits_flipped = engine.flips_total();
  report.residual_nonzero_words = engine.total_nonzero();
}

void account_against_reference(const Stream& decoded, const Stream& reference,
                               StreamDecodeReport& report) {
  report.have_reference = true;
  report.block_bit_errors.resize(decoded.block_count());
  for (int b = 0; b < decoded.block_count(); ++b) {
    report.block_bit_errors[b] = decoded.blocks[b].diff_count(reference.blocks[b]);
  }
  const int m = decoded.m();
  const int kprime = decoded.code().k - m;
  report.payload_bits = static_cast<long long>(decoded.block_count() - 1) * m * kprime;
  report.payload_bit_errors = 0;
  for (int b = 1; b < decoded.block_count(); ++b) {
    for (int j = 0; j < m; ++j) {
      for (int v = 0; v < kprime; ++v) {
        if (decoded.blocks[b].get(j, v) != reference.blocks[b].get(j, v)) {
          ++report.payload_bit_errors;
        }
      }
    }
  }
}

StreamDecodeReport decode_stream_regular(Stream& stream, const DecoderConfig& cfg,
                                         const Stream* reference) {
  SyndromeEngine engine(stream);
  StreamDecodeReport report;
  run_regular(engine, cfg, report);
  if (reference != nullptr) account_against_reference(stream, *reference, report);
  return report;
}

}  // namespace staircase
