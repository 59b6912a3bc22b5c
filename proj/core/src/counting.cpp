#include "staircase/counting.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace staircase {

namespace {

std::mutex g_contingency_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, BigInt> g_contingency_memo;

BigInt factorial(int n) {
  BigInt f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Number of distinct orderings of a sorted multiset.
BigInt orderings(const std::vector<int>& sorted) {
  BigInt num = factorial(static_cast<int>(sorted.size()));
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    num /= factorial(static_cast<int>(j - i));
    i = j;
  }
  return num;
}

// Enumerates nondecreasing compositions of `total` into `parts` values in
// [lo, hi].
void for_each_multiset(int total, int parts, int lo, int hi,
                       const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> cur;
  cur.reserve(parts);
  std::function<void(int, int)> rec = [&](int prev, int left) {
    const int rem = parts - static_cast<int>(cur.size());
    if (rem == 0) {
      if (left == 0) fn(cur);
      return;
    }
    for (int v = std::max(prev, lo); v <= hi; ++v) {
      const int rest = left - v;
      if (rest < (rem - 1) * v || rest > (rem - 1) * hi) {
        if (rest < (rem - 1) * v) break;
        continue;
      }
      cur.push_back(v);
      rec(v, rest);
      cur.pop_back();
    }
  };
  rec(lo, total);
}

// Column-by-column DP over the multiset of remaining row demands.
class ContingencyDp {
 public:
  ContingencyDp(const std::vector<int>& r, const std::vector<int>& s) : s_(s) {}

  BigInt run(std::vector<int> demands) {
    std::sort(demands.begin(), demands.end());
    return go(0, std::move(demands));
  }

 private:
  BigInt go(int j, std::vector<int> state) {
    const int cols_left = static_cast<int>(s_.size()) - j;
    if (cols_left == 0) {
      for (int d : state) {
        if (d != 0) return 0;
      }
      return 1;
    }
    if (!state.empty() && state.back() > cols_left) return 0;
    const auto key = std::make_pair(j, state);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;

    // Demand classes (value, multiplicity) over the sorted state.
    std::vector<std::pair<int, int>> classes;
    for (int d : state) {
      if (!classes.empty() && classes.back().first == d) {
        ++classes.back().second;
      } else {
        classes.emplace_back(d, 1);
      }
    }

    BigInt total = 0;
    std::vector<int> take(classes.size(), 0);
    std::function<void(std::size_t, int, BigInt)> pick = [&](std::size_t ci, int need, BigInt acc) {
      if (ci == classes.size()) {
        if (need != 0) return;
        std::vector<int> next;
        next.reserve(state.size());
        for (std::size_t x = 0; x < classes.size(); ++x) {
          const auto [d, cnt] = classes[x];
          for (int y = 0; y < take[x]; ++y) next.push_back(d - 1);
          for (int y = take[x]; y < cnt; ++y) next.push_back(d);
        }
        std::sort(next.begin(), next.end());
        total += acc * go(j + 1, std::move(next));
        return;
      }
      const auto [d, cnt] = classes[ci];
      const int hi = (d == 0) ? 0 : std::min(cnt, need);
      for (int kk = 0; kk <= hi; ++kk) {
        take[ci] = kk;
        pick(ci + 1, need - kk, acc * binomial(cnt, kk));
      }
      take[ci] = 0;
    };
    pick(0, s_[j], 1);

    memo_.emplace(key, total);
    return total;
  }

  const std::vector<int>& s_;
  std::map<std::pair<int, std::vector<int>>, BigInt> memo_;
};

}  // namespace

std::pair<long, long> epsilon_bounds(int K, int L, int t) {
  if (K < t + 1 || L < t + 1) {
    throw std::invalid_argument("stall patterns need K, L >= t+1");
  }
  return {static_cast<long>(std::max(K, L)) * (t + 1), static_cast<long>(K) * L};
}

void validate_shape(const PatternShape& shape) {
  const auto [lo, hi] = epsilon_bounds(shape.K, shape.L, shape.t);
  if (shape.eps < lo || shape.eps > hi) {
    throw std::invalid_argument("weight eps=" + std::to_string(shape.eps) +
                                " outside [" + std::to_string(lo) + ", " + std::to_string(hi) +
                                "] for (K,L,t)=(" + std::to_string(shape.K) + "," +
                                std::to_string(shape.L) + "," + std::to_string(shape.t) + ")");
  }
}

BigInt binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (n - k + i);
    out /= i;
  }
  return out;
}

BigInt count_positions(int m, int K, int L) {
  BigInt rows = 0;
  for (int a = 1; a <= K; ++a) rows += binomial(m, a) * binomial(m, K - a);
  return binomial(m, L) * rows;
}

BigInt n_hat(const PatternShape& shape) {
  validate_shape(shape);
  const auto [eps_min, eps_max] = epsilon_bounds(shape.K, shape.L, shape.t);
  const BigInt base =
      boost::multiprecision::pow(binomial(std::min(shape.K, shape.L), shape.t + 1),
                                 static_cast<unsigned>(std::max(shape.K, shape.L)));
  return base * binomial(eps_max - eps_min, shape.eps - eps_min);
}

BigInt contingency_count(std::vector<int> r, std::vector<int> s) {
  long sum_r = std::accumulate(r.begin(), r.end(), 0L);
  long sum_s = std::accumulate(s.begin(), s.end(), 0L);
  if (sum_r != sum_s) return 0;
  const int K = static_cast<int>(r.size());
  const int L = static_cast<int>(s.size());
  for (int v : r) {
    if (v < 0 || v > L) return 0;
  }
  for (int v : s) {
    if (v < 0 || v > K) return 0;
  }

  std::sort(r.begin(), r.end());
  std::sort(s.begin(), s.end());
  // Transpose invariance: canonicalize the orientation.
  if (std::make_pair(r, s) > std::make_pair(s, r)) std::swap(r, s);

  const auto key = std::make_pair(r, s);
  {
    std::lock_guard<std::mutex> lock(g_contingency_mutex);
    if (auto it = g_contingency_memo.find(key); it != g_contingency_memo.end()) return it->second;
  }
  ContingencyDp dp(r, s);
  BigInt out = dp.run(r);
  {
    std::lock_guard<std::mutex> lock(g_contingency_mutex);
    g_contingency_memo.emplace(key, out);
  }
  return out;
}

BigInt exact_count(const PatternShape& shape) {
  validate_shape(shape);
  const int lo = shape.t + 1;
  BigInt total = 0;
  for_each_multiset(shape.eps, shape.K, lo, shape.L, [&](const std::vector<int>& r) {
    const BigInt pr = orderings(r);
    for_each_multiset(shape.eps, shape.L, lo, shape.K, [&](const std::vector<int>& s) {
      const BigInt a = contingency_count(r, s);
      if (a != 0) total += pr * orderings(s) * a;
    });
  });
  return total;
}

BigInt row_count_tilde(const PatternShape& shape) {
  validate_shape(shape);
  return RowSetSampler(shape).total();
}

RowSetSampler::RowSetSampler(const PatternShape& shape) : shape_(shape) {
  validate_shape(shape);
  total_ = F(shape.eps, shape.K);
}

const BigInt& RowSetSampler::F(int a, int b) const {
  const auto key = std::make_pair(a, b);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;
  const int lo = shape_.t + 1;
  const int L = shape_.L;
  BigInt out = 0;
  if (b == 1) {
    out = (a >= lo && a <= L) ? binomial(L, a) : 0;
  } else {
    const int j_lo = std::max(lo, a - L * (b - 1));
    const int j_hi = std::min(a - (b - 1) * lo, L);
    for (int j = j_lo; j <= j_hi; ++j) out += binomial(L, j) * F(a - j, b - 1);
  }
  return memo_.emplace(key, std::move(out)).first->second;
}

std::vector<std::uint8_t> RowSetSampler::sample(Rng& rng) const {
  const int K = shape_.K;
  const int L = shape_.L;
  const int lo = shape_.t + 1;
  std::vector<std::uint8_t> matrix(std::size_t(K) * L, 0);
  int remaining = shape_.eps;
  for (int row = 0; row < K; ++row) {
    const int b = K - row;
    int weight;
    if (b == 1) {
      weight = remaining;
    } else {
      BigInt u = rng.below_big(F(remaining, b));
      const int j_lo = std::max(lo, remaining - L * (b - 1));
      const int j_hi = std::min(remaining - (b - 1) * lo, L);
      weight = j_hi;
      for (int j = j_lo; j <= j_hi; ++j) {
        const BigInt term = binomial(L, j) * F(remaining - j, b - 1);
        if (u < term) {
          weight = j;
          break;
        }
        u -= term;
      }
    }
    for (int c : rng.sample_distinct(L, weight)) matrix[std::size_t(row) * L + c] = 1;
    remaining -= weight;
  }
  return matrix;
}

bool RowSetSampler::columns_ok(const std::vector<std::uint8_t>& matrix) const {
  for (int c = 0; c < shape_.L; ++c) {
    int w = 0;
    for (int r = 0; r < shape_.K; ++r) w += matrix[std::size_t(r) * shape_.L + c];
    if (w < shape_.t + 1) return false;
  }
  return true;
}

double gamma_estimate(const PatternShape& shape, long samples, std::uint64_t seed) {
  if (samples < 1) throw std::invalid_argument("gamma_estimate needs >= 1 sample");
  const RowSetSampler sampler(shape);
  Rng rng(seed);
  long hits = 0;
  for (long i = 0; i < samples; ++i) {
    if (sampler.columns_ok(sampler.sample(rng))) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(samples);
}

double n_approx(const PatternShape& shape, double gamma_hat) {
  if (gamma_hat < 0.0 || gamma_hat > 1.0) throw std::invalid_argument("gamma_hat outside [0, 1]");
  return gamma_hat * row_count_tilde(shape).convert_to<double>();
}

}  // namespace staircase
