#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "perdyn/error.hpp"
#include "perdyn/map/rational_map.hpp"
#include "perdyn/map/reduced_map.hpp"

using namespace perdyn;

namespace {

template <class F> ErrorCode code_of(F &&f) {
  try {
    f();
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::Io;
}

// P(X, Y) = sum c_i X^i Y^(deg - i) applied to the pair (num, den).
PolyQ hom_apply(const PolyQ &c, long deg, const PolyQ &num, const PolyQ &den) {
  PolyQ out;
  for (long i = 0; i <= deg; ++i)
    if (c.coeff(static_cast<int>(i)) != 0)
      out += c.coeff(static_cast<int>(i)) * num.pow(static_cast<unsigned>(i)) *
             den.pow(static_cast<unsigned>(deg - i));
  return out;
}

const char *kMaps[] = {"x^2+1",           "x^2-2",     "(x^2+1)/x",
                       "x^3-3*x",         "1/x^2",     "(x^2-1)/(2*x)",
                       "(2*x^2+3)/(x-1)", "x^3+2*x+1", "(x^2+x)/(3*x+1)"};

} // namespace

TEST_CASE("parse_map examples") {
  RationalMapQ a = parse_map("x^2+1");
  CHECK(a.num() == PolyQ{1, 0, 1});
  CHECK(a.den() == PolyQ{1});
  CHECK(a.degree() == 2);

  RationalMapQ b = parse_map("(x^2+1)/x");
  CHECK(b.num() == PolyQ{1, 0, 1});
  CHECK(b.den() == PolyQ{0, 1});
  CHECK(b.degree() == 2);

  RationalMapQ c = parse_map("x^3 - 3*x");
  CHECK(c.num() == PolyQ{0, -3, 0, 1});
  CHECK(c.den() == PolyQ{1});
  CHECK(c.degree() == 3);
}

TEST_CASE("parse_map normalizes") {
  // Common factors cancel, rational coefficients are cleared, content is 1.
  CHECK(parse_map("x^2/2 + 1/3") == parse_map("(3*x^2+2)/6"));
  RationalMapQ m = parse_map("(x^2/2 + 1/3)");
  CHECK(m.num() == PolyQ{2, 0, 3});
  CHECK(m.den() == PolyQ{6});
  CHECK(parse_map("(-x^2)/(-2)") == parse_map("x^2/2"));
  CHECK(parse_map("(x^2+1)/x").den().leading() > 0);
  CHECK(parse_map("(x^2+1)/(-x)").den().leading() > 0);
  CHECK(parse_map("((x^2+1)*(x-2))/(x-2)") == parse_map("x^2+1"));
  CHECK(parse_map("x^(2)") == parse_map("x*x"));
}

TEST_CASE("parse_map errors") {
  CHECK(code_of([] { parse_map("x^2+"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_map("x^2 + 1.5"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_map("x^-1"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_map("y^2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_map("(x^2"); }) == ErrorCode::Syntax);
  CHECK(code_of([] { parse_map("x+1"); }) == ErrorCode::NotDynamical);
  CHECK(code_of([] { parse_map("(x^3-x)/(x^2-1)"); }) ==
        ErrorCode::NotDynamical);
  CHECK(code_of([] { parse_map("x^2/(x-x)"); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { parse_map("x^17"); }) == ErrorCode::Resource);
  try {
    parse_map("x^2 + $");
    FAIL("no error");
  } catch (const SyntaxError &e) {
    CHECK(e.position() == 6);
  }
}

TEST_CASE("render round-trips") {
  for (const char *s : kMaps) {
    RationalMapQ m = parse_map(s);
    CAPTURE(s);
    CHECK(parse_map(m.render()) == m);
  }
  CHECK(parse_map("x^2+1").render() == "(x^2 + 1)/(1)");
}

TEST_CASE("good reduction") {
  RationalMapQ a = parse_map("x^2+1");
  CHECK(abs(a.hom_resultant()) == 1);
  for (std::uint64_t p : {2, 3, 5, 7, 101})
    CHECK(good_reduction(a, p));

  RationalMapQ b = parse_map("(x^2-1)/(2*x)");
  CHECK(abs(b.hom_resultant()) == 4);
  CHECK_FALSE(good_reduction(b, 2));
  for (std::uint64_t p : {3, 5, 7, 11})
    CHECK(good_reduction(b, p));

  // x^2/2 has Res(X^2, 2Y^2) = 4.
  CHECK_FALSE(good_reduction(parse_map("x^2/2"), 2));
  CHECK(code_of([&] { ReducedMap(b, 2); }) == ErrorCode::Domain);

  // Scaling num and den by a common rational does not change anything.
  CHECK(parse_map("(3*x^2+3)/3") == a);
  for (const char *s : kMaps) {
    RationalMapQ m = parse_map(s);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13})
      CHECK(good_reduction(m, p) == (m.hom_resultant() % p != 0));
  }
}

TEST_CASE("iterate examples") {
  IteratePairQ a = iterate(parse_map("x^2+1"), 2);
  CHECK(a.num == PolyQ{2, 0, 2, 0, 1});
  CHECK(a.den == PolyQ{1});
  CHECK(a.hom_degree == 4);

  IteratePairQ b = iterate(parse_map("1/x^2"), 2);
  CHECK(b.num == PolyQ{0, 0, 0, 0, 1});
  CHECK(b.den == PolyQ{1});

  IteratePairQ c = iterate(parse_map("(x^2+1)/x"), 2);
  PolyQ f{1, 0, 1}, x{0, 1};
  CHECK(c.num == f * f + x * x);
  CHECK(c.den == x * f);

  IteratePairQ zero = iterate(parse_map("x^2+1"), 0);
  CHECK(zero.num == PolyQ{0, 1});
  CHECK(zero.den == PolyQ{1});
}

TEST_CASE("iterate caps") {
  CHECK(code_of([] { iterate(parse_map("x^2+1"), 7); }) == ErrorCode::Resource);
  MapLimits tight;
  tight.max_coeff_bits = 16;
  CHECK(code_of([&] { iterate(parse_map("x^2+1"), 6, tight); }) ==
        ErrorCode::Resource);
  CHECK(code_of([] { iterate(ReducedMap(parse_map("x^2+1"), 5), 13); }) ==
        ErrorCode::Resource);
}

TEST_CASE("iterate(m + n) = iterate(m) o iterate(n)") {
  for (const char *s : kMaps) {
    RationalMapQ map = parse_map(s);
    CAPTURE(s);
    for (int m = 1; m <= 3; ++m)
      for (int n = 1; m + n <= 4; ++n) {
        if (map.degree() == 3 && m + n == 4)
          continue;
        IteratePairQ whole = iterate(map, m + n);
        IteratePairQ outer = iterate(map, m);
        IteratePairQ inner = iterate(map, n);
        CHECK(whole.num ==
              hom_apply(outer.num, outer.hom_degree, inner.num, inner.den));
        CHECK(whole.den ==
              hom_apply(outer.den, outer.hom_degree, inner.num, inner.den));
      }
  }
}

TEST_CASE("eval_point examples") {
  ReducedMap m(parse_map("(x^2+1)/x"), 5);
  CHECK(eval_point(m, ProjPoint::affine(0)).is_infinity(5));
  CHECK(eval_point(m, ProjPoint::infinity(5)).is_infinity(5));
  CHECK(eval_point(m, ProjPoint::affine(2)).index == 0);
}

TEST_CASE("reduced iterate agrees with repeated evaluation") {
  for (const char *s : kMaps) {
    RationalMapQ map = parse_map(s);
    CAPTURE(s);
    for (std::uint64_t p : {3, 5, 7, 31, 101}) {
      if (!good_reduction(map, p))
        continue;
      ReducedMap red(map, p);
      const auto succ = oracle::successor(map, p);
      for (int n = 1; n <= 3; ++n) {
        IteratePairFp it = iterate(red, n);
        // phi^n on affine x from (p_n, q_n); at a common zero the point
        // maps to infinity or needs the homogeneous form, so skip those.
        for (std::uint64_t x = 0; x < p; ++x) {
          std::uint64_t y = x;
          for (int k = 0; k < n; ++k)
            y = succ[y];
          std::uint64_t num = it.num.eval(x), den = it.den.eval(x);
          if (num == 0 && den == 0)
            continue;
          std::uint64_t expect = den == 0
                                     ? p
                                     : static_cast<std::uint64_t>(
                                           static_cast<unsigned __int128>(num) *
                                           oracle::powmod(den, p - 2, p) % p);
          CHECK(y == expect);
        }
      }
      for (std::uint64_t x = 0; x <= p; ++x)
        CHECK(red.eval(ProjPoint{x}).index == succ[x]);
    }
  }
}

TEST_CASE("named families") {
  CHECK(lattes2(0, 1) == parse_map("(x^4 - 8*x)/(4*x^3 + 4)"));
  CHECK(lattes2(-1, 0) == parse_map("(x^4 + 2*x^2 + 1)/(4*x^3 - 4*x)"));
  CHECK(code_of([] { lattes2(0, 0); }) == ErrorCode::InvalidCurve);
  CHECK(code_of([] { lattes2(-3, 2); }) == ErrorCode::InvalidCurve);
  CHECK(chebyshev(2) == parse_map("x^2-2"));
  CHECK(chebyshev(3) == parse_map("x^3-3*x"));
  CHECK(chebyshev(6) == parse_map("x^6-6*x^4+9*x^2-2"));
  CHECK(unicritical(3, BigRational(1, 2)) == parse_map("x^3+1/2"));
  // T_d(z + 1/z) = z^d + z^-d at z = 2
  for (int d = 2; d <= 8; ++d) {
    BigRational z(2), lhs = chebyshev(d).num().eval(z + BigRational(1, 2));
    BigRational zd = 1;
    for (int k = 0; k < d; ++k)
      zd *= z;
    CHECK(lhs == zd + 1 / zd);
  }
}
