#include "oracles.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace oracles {

std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int q) {
  std::uint64_t acc = 0;
  for (int i = 0; i < q; ++i) {
    if ((b >> i) & 1) acc ^= static_cast<std::uint64_t>(a) << i;
  }
  for (int d = 2 * q - 2; d >= q; --d) {
    if ((acc >> d) & 1) acc ^= static_cast<std::uint64_t>(poly) << (d - q);
  }
  return static_cast<std::uint32_t>(acc);
}

SmallCode enumerate_codewords(const staircase::BchSpec& code) {
  if (code.n > 32) throw std::invalid_argument("oracle limited to n <= 32");
  SmallCode out;
  out.n = code.n;
  out.t = code.t;
  out.codewords.reserve(std::size_t(1) << code.k);
  std::vector<std::uint8_t> info(code.k);
  for (std::uint32_t u = 0; u < (1u << code.k); ++u) {
    for (int i = 0; i < code.k; ++i) info[i] = (u >> i) & 1;
    const auto word = staircase::encode_systematic(code, info);
    std::uint32_t mask = 0;
    for (int i = 0; i < code.n; ++i) {
      if (word[i]) mask |= (1u << i);
    }
    out.codewords.push_back(mask);
  }
  return out;
}

std::optional<std::uint32_t> nearest_within_t(const SmallCode& code, std::uint32_t word) {
  for (std::uint32_t c : code.codewords) {
    if (std::popcount(word ^ c) <= code.t) return word ^ c;
  }
  return std::nullopt;
}

int min_distance(const SmallCode& code) {
  int best = code.n + 1;
  for (std::uint32_t c : code.codewords) {
    if (c != 0) best = std::min(best, std::popcount(c));
  }
  return best;
}

MatrixCensus enumerate_matrices(int K, int L, int t, bool with_margins) {
  if (K * L > 26) throw std::invalid_argument("matrix census limited to K*L <= 26");
  MatrixCensus out;
  const std::uint32_t row_mask = (1u << L) - 1;
  std::vector<int> r(K), s(L);
  for (std::uint64_t bits = 0; bits < (std::uint64_t(1) << (K * L)); ++bits) {
    int w = 0;
    bool rows_ok = true;
    std::fill(s.begin(), s.end(), 0);
    for (int i = 0; i < K; ++i) {
      const std::uint32_t row = (bits >> (i * L)) & row_mask;
      r[i] = std::popcount(row);
      w += r[i];
      rows_ok = rows_ok && r[i] >= t + 1;
      for (int j = 0; j < L; ++j) s[j] += (row >> j) & 1;
    }
    if (!rows_ok) continue;
    out.rows_only[w] += 1;
    bool cols_ok = true;
    for (int j = 0; j < L; ++j) cols_ok = cols_ok && s[j] >= t + 1;
    if (cols_ok) out.exact[w] += 1;
    if (with_margins) out.by_margins[{r, s}] += 1;
  }
  return out;
}

double entropy_inverse(double target) {
  const auto h2 = [](double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); };
  double lo = 1e-12, hi = 0.5 - 1e-12;
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (h2(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace oracles
