#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "staircase/bch.hpp"
#include "staircase/counting.hpp"

// Test-only reference implementations, independent of the library's
// computation paths.
namespace oracles {

// Carry-less polynomial multiplication reduced modulo the primitive
// polynomial (degree q).
std::uint32_t clmul_mod(std::uint32_t a, std::uint32_t b, std::uint32_t poly, int q);

// All codewords of a code with n <= 32, as bit masks (bit i = word position i).
struct SmallCode {
  int n = 0;
  int t = 0;
  std::vector<std::uint32_t> codewords;
};
SmallCode enumerate_codewords(const staircase::BchSpec& code);

// Nearest codeword within Hamming radius t: returns the flip mask, or
// nullopt when no codeword is that close.
std::optional<std::uint32_t> nearest_within_t(const SmallCode& code, std::uint32_t word);

int min_distance(const SmallCode& code);

// Exhaustive 2^(K*L) census of binary K x L matrices: per weight eps, the
// number with every row and column weight >= t+1 (exact), the number with
// only the row condition (rows_only), and the per-margin counts.
struct MatrixCensus {
  std::map<int, staircase::BigInt> exact;
  std::map<int, staircase::BigInt> rows_only;
  std::map<std::pair<std::vector<int>, std::vector<int>>, staircase::BigInt> by_margins;
};
MatrixCensus enumerate_matrices(int K, int L, int t, bool with_margins = false);

// Binary entropy inverse on (0, 1/2) by plain scanning refinement; used to
// cross-check the capacity bisection.
double entropy_inverse(double target);

}  // namespace oracles
