#include "staircase/channel.hpp"

#include <stdexcept>
#include <string>

namespace staircase {

BscResult bsc_apply(Stream& stream, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("crossover probability outside [0, 1]");
  BscResult res;
  const int m = stream.m();
  res.error_mask.assign(stream.block_count(), BitMatrix(m));
  res.total_bits = static_cast<long long>(stream.block_count()) * m * m;
  Rng rng(seed);
  for (int b = 0; b < stream.block_count(); ++b) {
    for (int r = 0; r < m; ++r) {
      for (int c = 0; c < m; ++c) {
        if (rng.bernoulli(p)) {
          stream.blocks[b].flip(r, c);
          res.error_mask[b].set(r, c, true);
          ++res.flipped;
        }
      }
    }
  }
  return res;
}

std::vector<BlockCoord> InjectionSpec::positions() const {
  std::vector<BlockCoord> out;
  const int K = shape.K;
  const int L = shape.L;
  out.reserve(shape.eps);
  for (int pr = 0; pr < K; ++pr) {
    for (int q = 0; q < L; ++q) {
      if (!pattern[std::size_t(pr) * L + q]) continue;
      if (pr < row_split) {
        // Row word (anchor, rows_upper[pr]) meets column word
        // (anchor+1, cols[q]) at B_{anchor+1}(row, col).
        out.push_back({anchor_group + 1, rows_upper[pr], cols[q]});
      } else {
        // Row word (anchor+2, rows_lower[...]) meets the column word at
        // B_{anchor+2}(cols[q], row).
        out.push_back({anchor_group + 2, cols[q], rows_lower[pr - row_split]});
      }
    }
  }
  return out;
}

InjectionSpec sample_stall_pattern(const PatternShape& shape, int m, Rng& rng) {
  validate_shape(shape);
  if (shape.L > m || shape.K > 2 * m) {
    throw std::invalid_argument("shape infeasible for block size m=" + std::to_string(m));
  }
  InjectionSpec spec;
  spec.shape = shape;
  spec.anchor_group = 0;

  const RowSetSampler sampler(shape);
  do {
    spec.pattern = sampler.sample(rng);
  } while (!sampler.columns_ok(spec.pattern));

  spec.row_split = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(shape.K)));
  if (shape.K - spec.row_split > m) {
    // Feasibility for tiny m; uniform over the valid splits would need
    // K - a <= m, which only binds when K > m + 1.
    spec.row_split = shape.K - m;
  }
  spec.rows_upper = rng.sample_distinct(m, spec.row_split);
  spec.rows_lower = rng.sample_distinct(m, shape.K - spec.row_split);
  spec.cols = rng.sample_distinct(m, shape.L);
  return spec;
}

InjectionSpec sample_stall_pattern(const PatternShape& shape, int m, std::uint64_t seed) {
  Rng rng(seed);
  return sample_stall_pattern(shape, m, rng);
}

void inject(SyndromeEngine& engine, const InjectionSpec& spec) {
  for (const BlockCoord& c : spec.positions()) engine.flip(c);
}

}  // namespace staircase
