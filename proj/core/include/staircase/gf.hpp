#pragma once

#include <cstdint>
#include <vector>

namespace staircase {

using gf_elt = std::uint16_t;

// GF(2^q) with log/antilog tables built from a primitive polynomial.
// Addition is XOR; multiplication and inversion go through the tables.
struct FieldSpec {
  int q = 0;
  std::uint32_t primitive_poly = 0;  // bit mask including the degree-q term
  std::vector<gf_elt> log_tab;       // size 2^q, log of alpha^i; log_tab[0] unused
  std::vector<gf_elt> exp_tab;       // size 2*(2^q-1): exp_tab[i] = alpha^(i mod order)
  std::vector<gf_elt> qsolve_tab;    // root of y^2 + y = c, or kNoRoot

  static constexpr gf_elt kNoRoot = 0xFFFF;

  int order() const { return (1 << q) - 1; }

  gf_elt alpha_pow(int e) const { return exp_tab[e]; }  // e in [0, 2*order)

  int log(gf_elt a) const { return log_tab[a]; }  // a != 0

  gf_elt mul(gf_elt a, gf_elt b) const {
    if (a == 0 || b == 0) return 0;
    return exp_tab[log_tab[a] + log_tab[b]];
  }

  gf_elt sqr(gf_elt a) const {
    if (a == 0) return 0;
    return exp_tab[(2 * log_tab[a]) % order()];
  }

  gf_elt cube(gf_elt a) const {
    if (a == 0) return 0;
    return exp_tab[(3 * log_tab[a]) % order()];
  }

  gf_elt inv(gf_elt a) const { return exp_tab[order() - log_tab[a]]; }  // a != 0

  gf_elt div(gf_elt a, gf_elt b) const {  // b != 0
    if (a == 0) return 0;
    return exp_tab[log_tab[a] + order() - log_tab[b]];
  }

  // Power of an arbitrary element: a^e with e >= 0.
  gf_elt pow(gf_elt a, long long e) const;

  // A root y of y^2 + y = c, or kNoRoot when the equation has no solution.
  gf_elt solve_quadratic(gf_elt c) const { return qsolve_tab[c]; }
};

// Builds the field tables. Throws std::invalid_argument when the polynomial
// does not generate the full multiplicative group of order 2^q - 1.
FieldSpec build_field(int q, std::uint32_t primitive_poly);

// Built-in primitive polynomials for q = 4..10; other degrees must be given
// explicitly. Throws for unsupported q.
std::uint32_t default_primitive_poly(int q);

}  // namespace staircase
