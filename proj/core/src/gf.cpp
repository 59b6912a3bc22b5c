#include "staircase/gf.hpp"

#include <stdexcept>
#include <string>

namespace staircase {

gf_elt FieldSpec::pow(gf_elt a, long long e) const {
  if (e == 0) return 1;
  if (a == 0) return 0;
  const long long l = (static_cast<long long>(log_tab[a]) * e) % order();
  return exp_tab[l];
}

FieldSpec build_field(int q, std::uint32_t primitive_poly) {
  if (q < 2 || q > 16) throw std::invalid_argument("field degree q must be in [2, 16]");
  const std::uint32_t degree_bit = 1u << q;
  if ((primitive_poly & degree_bit) == 0 || (primitive_poly & 1u) == 0 ||
      primitive_poly >= (degree_bit << 1)) {
    throw std::invalid_argument("primitive polynomial must have degree exactly q and a unit term");
  }

  FieldSpec f;
  f.q = q;
  f.primitive_poly = primitive_poly;
  const int order = (1 << q) - 1;
  f.log_tab.assign(std::size_t(1) << q, 0);
  f.exp_tab.assign(2 * std::size_t(order), 0);

  // alpha^i by repeated multiplication with x modulo the primitive polynomial.
  std::uint32_t v = 1;
  for (int i = 0; i < order; ++i) {
    if (i > 0 && v == 1) {
      throw std::invalid_argument("polynomial generates a multiplicative group of order " +
                                  std::to_string(i) + " < 2^q - 1; not primitive");
    }
    f.exp_tab[i] = static_cast<gf_elt>(v);
    f.exp_tab[i + order] = static_cast<gf_elt>(v);
    f.log_tab[v] = static_cast<gf_elt>(i);
    v <<= 1;
    if (v & degree_bit) v ^= primitive_poly;
  }
  if (v != 1) throw std::invalid_argument("polynomial is not primitive over GF(2)");

  // Tabulate roots of y^2 + y = c. The map y -> y^2 + y is 2-to-1, so half of
  // the field is reachable; unreachable c get kNoRoot.
  f.qsolve_tab.assign(std::size_t(1) << q, FieldSpec::kNoRoot);
  for (std::uint32_t y = 0; y < (1u << q); ++y) {
    const gf_elt c = f.sqr(static_cast<gf_elt>(y)) ^ static_cast<gf_elt>(y);
    if (f.qsolve_tab[c] == FieldSpec::kNoRoot) f.qsolve_tab[c] = static_cast<gf_elt>(y);
  }
  return f;
}

std::uint32_t default_primitive_poly(int q) {
  switch (q) {
    case 4: return 0x13;   // x^4 + x + 1
    case 5: return 0x25;   // x^5 + x^2 + 1
    case 6: return 0x43;   // x^6 + x + 1
    case 7: return 0x89;   // x^7 + x^3 + 1
    case 8: return 0x11D;  // x^8 + x^4 + x^3 + x^2 + 1
    case 9: return 0x211;  // x^9 + x^4 + 1
    case 10: return 0x409; // x^10 + x^3 + 1
    default:
      throw std::invalid_argument("no built-in primitive polynomial for q=" + std::to_string(q) +
                                  "; pass one explicitly");
  }
}

}  // namespace staircase
