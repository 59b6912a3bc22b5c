#include "staircase/bch.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace staircase {

namespace {

// Product of (x - alpha^j) over the 2-cyclotomic coset of e, coefficients in
// GF(2) by construction.
std::vector<gf_elt> minimal_polynomial(const FieldSpec& f, int e) {
  const int order = f.order();
  std::vector<int> coset;
  int cur = e;
  do {
    coset.push_back(cur);
    cur = (2 * cur) % order;
  } while (cur != e);

  std::vector<gf_elt> poly{1};
  for (int j : coset) {
    const gf_elt root = f.alpha_pow(j);
    std::vector<gf_elt> next(poly.size() + 1, 0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i + 1] ^= poly[i];
      next[i] ^= f.mul(poly[i], root);
    }
    poly = std::move(next);
  }
  return poly;
}

std::vector<std::uint8_t> poly_to_bits(const std::vector<gf_elt>& p) {
  std::vector<std::uint8_t> bits(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] > 1) throw std::logic_error("minimal polynomial has a coefficient outside GF(2)");
    bits[i] = static_cast<std::uint8_t>(p[i]);
  }
  return bits;
}

std::vector<std::uint8_t> poly_mul_gf2(const std::vector<std::uint8_t>& a,
                                       const std::vector<std::uint8_t>& b) {
  std::vector<std::uint8_t> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] ^= b[j];
  }
  return out;
}

// Chien search over the live cyclic exponents; returns true when exactly
// deg(sigma) distinct roots were found.
bool chien_roots(const BchSpec& code, std::span<const gf_elt> sigma, int deg,
                 std::array<std::uint16_t, Syndrome::kMaxT>& out_pos) {
  const FieldSpec& f = code.field;
  const int order = f.order();
  int found = 0;
  for (int e = 0; e < code.cyclic_len(); ++e) {
    // Evaluate sigma at alpha^{-e}.
    gf_elt acc = 1;  // sigma[0]
    const int beta_log = (order - e) % order;
    for (int j = 1; j <= deg; ++j) {
      if (sigma[j] == 0) continue;
      const int l = (f.log(sigma[j]) + beta_log * j) % order;
      acc ^= f.alpha_pow(l);
    }
    if (acc == 0) {
      if (found >= deg) return false;
      out_pos[found++] = static_cast<std::uint16_t>(code.position_of_exponent(e));
    }
  }
  return found == deg;
}

// Berlekamp-Massey over GF(2^q) on S_1..S_{2t}; returns the locator degree or
// -1 when the locator is inconsistent with <= t errors.
int berlekamp_massey(const BchSpec& code, const Syndrome& syn,
                     std::array<gf_elt, Syndrome::kMaxT + 1>& sigma_out) {
  const FieldSpec& f = code.field;
  const int t = code.t;
  // Full syndrome sequence S_1..S_{2t}; S_{2i} = S_i^2.
  std::vector<gf_elt> S(2 * t + 1, 0);
  for (int i = 1; i <= 2 * t; ++i) {
    if (i % 2 == 1) {
      S[i] = syn.s[(i - 1) / 2];
    } else {
      S[i] = f.sqr(S[i / 2]);
    }
  }

  std::vector<gf_elt> sigma{1}, prev{1};
  int L = 0, gap = 1;
  gf_elt b = 1;
  for (int step = 0; step < 2 * t; ++step) {
    gf_elt d = S[step + 1];
    for (int i = 1; i <= L && i < static_cast<int>(sigma.size()); ++i) {
      d ^= f.mul(sigma[i], S[step + 1 - i]);
    }
    if (d == 0) {
      ++gap;
      continue;
    }
    std::vector<gf_elt> next = sigma;
    const gf_elt coef = f.div(d, b);
    if (next.size() < prev.size() + gap) next.resize(prev.size() + gap, 0);
    for (std::size_t i = 0; i < prev.size(); ++i) {
      next[i + gap] ^= f.mul(coef, prev[i]);
    }
    if (2 * L <= step) {
      prev = sigma;
      b = d;
      L = step + 1 - L;
      gap = 1;
    } else {
      ++gap;
    }
    sigma = std::move(next);
  }
  while (!sigma.empty() && sigma.back() == 0) sigma.pop_back();
  const int deg = static_cast<int>(sigma.size()) - 1;
  if (L > t || deg != L) return -1;
  for (int i = 0; i <= deg; ++i) sigma_out[i] = sigma[i];
  return deg;
}

DecodeOutcome corrected(const BchSpec& code, std::array<std::uint16_t, Syndrome::kMaxT> pos,
                        int cyclic_count, bool parity_bit_error) {
  DecodeOutcome o;
  o.kind = DecodeOutcome::Kind::Corrected;
  o.count = static_cast<std::uint8_t>(cyclic_count);
  o.pos = pos;
  if (parity_bit_error) o.pos[o.count++] = static_cast<std::uint16_t>(code.parity_pos());
  std::sort(o.pos.begin(), o.pos.begin() + o.count);
  return o;
}

// Wraps a set of located cyclic errors with the extended-code parity rule:
// the observed parity must match the total error count, possibly by charging
// one more error to the parity bit itself.
DecodeOutcome finish(const BchSpec& code, std::array<std::uint16_t, Syndrome::kMaxT> pos,
                     int cyclic_count, std::uint8_t parity) {
  bool parity_bit_error = false;
  if (code.extended) {
    parity_bit_error = ((cyclic_count & 1) != parity);
    if (cyclic_count + (parity_bit_error ? 1 : 0) > code.t) {
      return DecodeOutcome::detected_uncorrectable();
    }
  }
  return corrected(code, pos, cyclic_count, parity_bit_error);
}

}  // namespace

BchSpec build_bch(const FieldSpec& field, int t, bool extended, int shorten) {
  if (t < 1) throw std::invalid_argument("error-correcting capability t must be >= 1");
  if (t > Syndrome::kMaxT) throw std::invalid_argument("t exceeds supported maximum of 8");
  const int order = (1 << field.q) - 1;
  if (2 * t * field.q >= order) {
    throw std::invalid_argument("2*t*q must be < 2^q - 1");
  }

  BchSpec code;
  code.field = field;
  code.t = t;
  code.extended = extended;
  code.shorten = shorten;

  // lcm of the minimal polynomials of alpha^1, alpha^3, ..., alpha^(2t-1):
  // multiply the distinct cosets' polynomials.
  std::vector<int> seen_reps;
  std::vector<std::uint8_t> g{1};
  for (int e = 1; e <= 2 * t - 1; e += 2) {
    int rep = e, cur = e;
    do {
      rep = std::min(rep, cur);
      cur = (2 * cur) % order;
    } while (cur != e);
    if (std::find(seen_reps.begin(), seen_reps.end(), rep) != seen_reps.end()) continue;
    seen_reps.push_back(rep);
    g = poly_mul_gf2(g, poly_to_bits(minimal_polynomial(field, e)));
  }

  code.redundancy = static_cast<int>(g.size()) - 1;
  if (code.redundancy > 63) throw std::invalid_argument("generator degree exceeds 63");
  code.cyclic_gen_mask = 0;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i]) code.cyclic_gen_mask |= (std::uint64_t{1} << i);
  }

  code.k = order - code.redundancy - shorten;
  code.n = order + (extended ? 1 : 0) - shorten;
  code.d_min = extended ? 2 * t + 2 : 2 * t + 1;
  if (shorten < 0 || code.k <= 0) throw std::invalid_argument("shorten out of range");

  code.generator = extended ? poly_mul_gf2(g, {1, 1}) : g;
  return code;
}

std::vector<std::uint8_t> encode_systematic(const BchSpec& code,
                                            std::span<const std::uint8_t> info) {
  if (static_cast<int>(info.size()) != code.k) {
    throw std::invalid_argument("info length " + std::to_string(info.size()) +
                                " != k = " + std::to_string(code.k));
  }
  std::vector<std::uint8_t> word(code.n, 0);
  std::copy(info.begin(), info.end(), word.begin());

  // Divide x^r * u(x) by the BCH factor, feeding coefficients from the top.
  const int r = code.redundancy;
  const std::uint64_t g = code.cyclic_gen_mask;
  std::uint64_t rem = 0;
  for (int i = code.k - 1; i >= 0; --i) {
    rem = (rem << 1) ^ (static_cast<std::uint64_t>(info[i]) << r);
    if (rem >> r) rem ^= g;
  }
  for (int j = 0; j < r; ++j) word[code.k + j] = static_cast<std::uint8_t>((rem >> j) & 1);

  if (code.extended) {
    std::uint8_t p = 0;
    for (int i = 0; i < code.n - 1; ++i) p ^= word[i];
    word[code.n - 1] = p;
  }
  return word;
}

Syndrome syndrome(const BchSpec& code, std::span<const std::uint8_t> word) {
  if (static_cast<int>(word.size()) != code.n) throw std::invalid_argument("word length != n");
  Syndrome s;
  for (int pos = 0; pos < code.n; ++pos) {
    if (word[pos]) syndrome_flip(code, s, pos);
  }
  return s;
}

void syndrome_flip(const BchSpec& code, Syndrome& s, int pos) {
  s.parity ^= 1;
  if (code.extended && pos == code.parity_pos()) return;
  const FieldSpec& f = code.field;
  const int order = f.order();
  const int e = code.exponent_of(pos);
  for (int j = 0; j < code.t; ++j) {
    s.s[j] ^= f.alpha_pow(static_cast<int>((static_cast<long long>(2 * j + 1) * e) % order));
  }
}

bool syndrome_is_zero(const BchSpec& code, const Syndrome& s) {
  for (int j = 0; j < code.t; ++j) {
    if (s.s[j] != 0) return false;
  }
  return !(code.extended && s.parity != 0);
}

DecodeOutcome decode_syndrome(const BchSpec& code, const Syndrome& syn) {
  const FieldSpec& f = code.field;
  bool all_zero = true;
  for (int j = 0; j < code.t; ++j) all_zero = all_zero && syn.s[j] == 0;

  if (all_zero) {
    if (!code.extended || syn.parity == 0) return DecodeOutcome::no_error();
    // Single error in the overall parity bit.
    return finish(code, {}, 0, syn.parity);
  }

  const gf_elt s1 = syn.s[0];

  if (code.t == 1) {
    if (s1 == 0) return DecodeOutcome::detected_uncorrectable();
    const int p = code.position_of_exponent(f.log(s1));
    if (p < 0) return DecodeOutcome::detected_uncorrectable();
    std::array<std::uint16_t, Syndrome::kMaxT> pos{};
    pos[0] = static_cast<std::uint16_t>(p);
    return finish(code, pos, 1, syn.parity);
  }

  if (code.t == 2) {
    const gf_elt s3 = syn.s[1];
    if (s1 == 0) return DecodeOutcome::detected_uncorrectable();
    const gf_elt s1_cubed = f.cube(s1);
    if (s3 == s1_cubed) {
      const int p = code.position_of_exponent(f.log(s1));
      if (p < 0) return DecodeOutcome::detected_uncorrectable();
      std::array<std::uint16_t, Syndrome::kMaxT> pos{};
      pos[0] = static_cast<std::uint16_t>(p);
      return finish(code, pos, 1, syn.parity);
    }
    // Two errors: locators are the roots of x^2 + S1 x + (S3 + S1^3)/S1.
    const gf_elt sigma2 = f.div(s3 ^ s1_cubed, s1);
    const gf_elt c = f.div(sigma2, f.sqr(s1));
    const gf_elt y = f.solve_quadratic(c);
    if (y == FieldSpec::kNoRoot) return DecodeOutcome::detected_uncorrectable();
    const gf_elt x1 = f.mul(s1, y);
    const gf_elt x2 = x1 ^ s1;
    if (x1 == 0 || x2 == 0 || x1 == x2) return DecodeOutcome::detected_uncorrectable();
    const int p1 = code.position_of_exponent(f.log(x1));
    const int p2 = code.position_of_exponent(f.log(x2));
    if (p1 < 0 || p2 < 0) return DecodeOutcome::detected_uncorrectable();
    std::array<std::uint16_t, Syndrome::kMaxT> pos{};
    pos[0] = static_cast<std::uint16_t>(p1);
    pos[1] = static_cast<std::uint16_t>(p2);
    return finish(code, pos, 2, syn.parity);
  }

  std::array<gf_elt, Syndrome::kMaxT + 1> sigma{};
  const int deg = berlekamp_massey(code, syn, sigma);
  if (deg < 0) return DecodeOutcome::detected_uncorrectable();
  if (deg == 0) {
    // Nonzero syndrome with an empty locator cannot happen for <= t errors.
    return DecodeOutcome::detected_uncorrectable();
  }
  std::array<std::uint16_t, Syndrome::kMaxT> pos{};
  if (!chien_roots(code, {sigma.data(), sigma.size()}, deg, pos)) {
    return DecodeOutcome::detected_uncorrectable();
  }
  return finish(code, pos, deg, syn.parity);
}

DecodeOutcome decode_bounded(const BchSpec& code, std::span<const std::uint8_t> word) {
  return decode_syndrome(code, syndrome(code, word));
}

}  // namespace staircase
