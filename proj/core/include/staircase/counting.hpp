#pragma once

#include <map>
#include <utility>
#include <vector>

#include "staircase/rng.hpp"

namespace staircase {

// A (K, L) stall-pattern class of weight eps for a t-error-correcting
// component code: K involved rows, L involved columns, every involved row and
// column carrying at least t+1 errors.
struct PatternShape {
  int K = 0;
  int L = 0;
  int eps = 0;
  int t = 0;
};

struct MarginVectors {
  std::vector<int> rows;  // length K, entries >= t+1
  std::vector<int> cols;  // length L, entries >= t+1
};

// (eps_min, eps_max) = (max{K,L}*(t+1), K*L). Throws when K or L < t+1.
std::pair<long, long> epsilon_bounds(int K, int L, int t);

// Throws when eps is outside epsilon_bounds.
void validate_shape(const PatternShape& shape);

// Exact binomial coefficient; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

// A_{K,L}: placements of K rows (split across the two adjacent transposed
// groups) and L columns within an m x m block pair.
BigInt count_positions(int m, int K, int L);

// Upper bound N-hat on the number of error distributions of a shape.
BigInt n_hat(const PatternShape& shape);

// Exact number of K x L binary matrices with row sums r and column sums s.
// Inconsistent margins give 0. Invariant under permutations of r and of s;
// results are memoized on the sorted margin multisets.
BigInt contingency_count(std::vector<int> r, std::vector<int> s);

// Exact number N of stall patterns of the shape: sum over row- and
// column-margin multisets of the margin-count times the orderings of each.
BigInt exact_count(const PatternShape& shape);

// N-tilde = F(eps, K): matrices satisfying only the row constraints.
BigInt row_count_tilde(const PatternShape& shape);

// Uniform sampler over the row-constrained set counted by row_count_tilde:
// row weights drawn by their exact relative counts, then uniform rows.
class RowSetSampler {
 public:
  explicit RowSetSampler(const PatternShape& shape);

  const BigInt& total() const { return total_; }

  // K*L bits, row-major. Uniform over the row-constrained matrices.
  std::vector<std::uint8_t> sample(Rng& rng) const;

  // True iff every column weight is >= t+1 (the stall-pattern condition).
  bool columns_ok(const std::vector<std::uint8_t>& matrix) const;

 private:
  const BigInt& F(int a, int b) const;

  PatternShape shape_;
  BigInt total_;
  mutable std::map<std::pair<int, int>, BigInt> memo_;
};

// Fraction of row-constrained matrices whose columns all reach weight t+1,
// estimated from `samples` uniform draws. Deterministic given the seed.
double gamma_estimate(const PatternShape& shape, long samples, std::uint64_t seed);

// N approximated as gamma_hat * N-tilde.
double n_approx(const PatternShape& shape, double gamma_hat);

}  // namespace staircase
