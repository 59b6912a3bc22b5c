#include "staircase/gf.hpp"

#include "doctest.h"
#include "oracles.hpp"

using namespace staircase;

TEST_CASE("alpha^4 = alpha + 1 in GF(16) with x^4+x+1") {
  const FieldSpec f = build_field(4, 0x13);
  CHECK(f.alpha_pow(4) == 0b0011);
}

TEST_CASE("every nonzero element has a multiplicative inverse") {
  const FieldSpec f = build_field(4, default_primitive_poly(4));
  for (gf_elt x = 1; x < 16; ++x) {
    CHECK(f.mul(x, f.inv(x)) == 1);
  }
}

TEST_CASE("log and antilog are mutually inverse") {
  for (int q : {4, 5, 6, 9}) {
    const FieldSpec f = build_field(q, default_primitive_poly(q));
    for (int x = 1; x <= f.order(); ++x) {
      CHECK(f.alpha_pow(f.log(static_cast<gf_elt>(x))) == x);
    }
  }
}

TEST_CASE("table multiplication agrees with carry-less multiplication, q=9 exhaustive") {
  const std::uint32_t poly = 0x211;  // x^9 + x^4 + 1
  const FieldSpec f = build_field(9, poly);
  for (std::uint32_t a = 0; a < 512; ++a) {
    for (std::uint32_t b = 0; b < 512; ++b) {
      REQUIRE(f.mul(static_cast<gf_elt>(a), static_cast<gf_elt>(b)) ==
              oracles::clmul_mod(a, b, poly, 9));
    }
  }
}

TEST_CASE("non-primitive polynomial is rejected") {
  // x^4+x^3+x^2+x+1 is irreducible but its root has order 5.
  CHECK_THROWS_AS(build_field(4, 0x1F), std::invalid_argument);
  // x^4+x^2+1 is not even irreducible.
  CHECK_THROWS_AS(build_field(4, 0x15), std::invalid_argument);
  CHECK_THROWS_AS(default_primitive_poly(11), std::invalid_argument);
}

TEST_CASE("quadratic solver table") {
  for (int q : {4, 5, 9}) {
    const FieldSpec f = build_field(q, default_primitive_poly(q));
    int solvable = 0;
    for (int c = 0; c < (1 << q); ++c) {
      const gf_elt y = f.solve_quadratic(static_cast<gf_elt>(c));
      if (y != FieldSpec::kNoRoot) {
        ++solvable;
        CHECK((f.sqr(y) ^ y) == c);
      }
    }
    // y -> y^2 + y is two-to-one, so exactly half the field is reachable.
    CHECK(solvable == (1 << (q - 1)));
  }
}

TEST_CASE("field powers") {
  const FieldSpec f = build_field(5, default_primitive_poly(5));
  for (gf_elt a = 1; a < 32; ++a) {
    CHECK(f.pow(a, 0) == 1);
    CHECK(f.pow(a, 3) == f.mul(a, f.sqr(a)));
    CHECK(f.pow(a, f.order()) == 1);
  }
}
