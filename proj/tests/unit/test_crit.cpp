#include <doctest.h>

#include "perdyn/crit/critical.hpp"
#include "perdyn/error.hpp"
#include "perdyn/map/rational_map.hpp"
#include "perdyn/map/reduced_map.hpp"

#include <set>

using namespace perdyn;

namespace {

using Kind = CriticalPoint::Kind;

ProjQ at(long v) { return ProjQ::at(BigRational(v)); }

// Direct orbit of 0 under x^d + c, checking for a repeat.
bool orbit_repeats(int d, const BigRational &c, int steps) {
  std::vector<BigRational> seen{0};
  BigRational z = 0;
  for (int k = 0; k < steps; ++k) {
    BigRational w = 1;
    for (int i = 0; i < d; ++i)
      w *= z;
    z = w + c;
    for (const auto &s : seen)
      if (s == z)
        return true;
    seen.push_back(z);
  }
  return false;
}

} // namespace

TEST_CASE("critical points examples") {
  auto a = critical_points(parse_map("x^2+5"));
  REQUIRE(a.size() == 2);
  CHECK(a[0].kind == Kind::Rational);
  CHECK(a[0].value == 0);
  CHECK(a[0].ramification == 2);
  CHECK(a[1].kind == Kind::Infinity);
  CHECK(a[1].ramification == 2);

  auto b = critical_points(parse_map("x^3-3*x"));
  REQUIRE(b.size() == 3);
  CHECK(b[0].value == 1);
  CHECK(b[1].value == -1);
  CHECK(b[0].ramification == 2);
  CHECK(b[1].ramification == 2);
  CHECK(b[2].kind == Kind::Infinity);
  CHECK(b[2].ramification == 3);

  auto c = critical_points(parse_map("x^3-3*x+1"));
  REQUIRE(c.size() == 3);
  CHECK(c[0].value == 1);
  CHECK(c[1].value == -1);

  // (x^2+1)/x: critical at +-1, and infinity is not critical.
  auto d = critical_points(parse_map("(x^2+1)/x"));
  REQUIRE(d.size() == 2);
  CHECK(d[0].value == 1);
  CHECK(d[1].value == -1);

  // x^2+1 fixed by 1/x conjugation: 1/(x^2) has critical points 0 and infinity.
  auto e = critical_points(parse_map("1/x^2"));
  REQUIRE(e.size() == 2);
  CHECK(e[0].value == 0);
  CHECK(e[1].kind == Kind::Infinity);
}

TEST_CASE("irrational critical points are reported") {
  auto c = critical_points(parse_map("x^3-2*x"));
  REQUIRE(c.size() == 2);
  CHECK(c[0].kind == Kind::Infinity);
  CHECK(c[1].kind == Kind::Irrational);
  CHECK(c[1].residual.degree() == 2);
  CHECK_THROWS_AS(collision_test(parse_map("x^3-2*x"), 3, c), Error);
  try {
    collision_test(parse_map("x^3-2*x"), 3, c);
  } catch (const Error &err) {
    CHECK(err.code() == ErrorCode::UnsupportedPoint);
  }
}

TEST_CASE("Riemann-Hurwitz tally") {
  for (const char *s : {"x^2+1", "x^3-3*x", "x^3-2*x", "(x^2+1)/x", "1/x^2",
                        "(x^4+2*x^2+1)/(4*x^3-4*x)", "x^5+x+1",
                        "(2*x^2+3)/(x-1)", "x^6-6*x^4+9*x^2-2"}) {
    RationalMapQ m = parse_map(s);
    CAPTURE(s);
    CHECK(riemann_hurwitz_tally(critical_points(m)) == 2 * m.degree() - 2);
  }
}

TEST_CASE("collision test examples") {
  auto a = collision_test(parse_map("x^2+1"), 6, {at(0)});
  CHECK(a.holds);
  CHECK(a.orbits[0][4] == at(677));

  auto b = collision_test(parse_map("x^3-3*x"), 3, {at(1), at(-1)});
  CHECK_FALSE(b.holds);
  REQUIRE(b.first_violation);
  CHECK(b.first_violation->a == 0);
  CHECK(b.first_violation->b == 0);
  CHECK(b.first_violation->m == 1);
  CHECK(b.first_violation->n == 2);
  CHECK(b.first_violation->value == at(-2));

  auto c = collision_test(parse_map("x^2"), 2, {at(0)});
  CHECK_FALSE(c.holds);
  CHECK(c.first_violation->m == 1);
  CHECK(c.first_violation->n == 2);

  for (const char *s : {"x^2+1", "x^2+1/2"}) {
    RationalMapQ m = parse_map(s);
    CHECK(collision_test(m, 8, critical_points(m)).holds == false);
    CHECK(collision_test(m, 8, rational_critical_points(m, false)).holds);
  }
  // Infinity is a fixed critical point of every polynomial.
  CHECK(apply(parse_map("x^2+1"), ProjQ::infinity()) == ProjQ::infinity());
  CHECK(apply(parse_map("(x^2+1)/x"), at(0)) == ProjQ::infinity());
  CHECK(apply(parse_map("(x^2+1)/x"), ProjQ::infinity()) == ProjQ::infinity());
  CHECK(apply(parse_map("1/x^2"), ProjQ::infinity()) == at(0));
}

TEST_CASE("modular collision fallback") {
  auto a = collision_test_mod(parse_map("x^3-3*x"), 3, {7});
  CHECK(a.collision_evidence);
  CHECK(a.per_prime.front().first.has_value());

  auto b = collision_test_mod(parse_map("x^2+1"), 4, {5, 7, 11});
  CHECK_FALSE(b.collision_evidence);
  CHECK_FALSE(b.caveat.empty());

  auto c = collision_test_mod(parse_map("x^2+1"), 4, {});
  CHECK_FALSE(c.collision_evidence);
  CHECK(c.per_prime.empty());

  auto d = collision_test_mod(parse_map("x^3-2*x"), 4, {5, 7, 11, 13});
  CHECK(d.per_prime.size() == 4);
}

TEST_CASE("preperiodicity of 0 under x^d + c") {
  CHECK(preperiodic_unicritical(2, BigRational(-2)));
  CHECK(preperiodic_unicritical(2, BigRational(-1)));
  CHECK(preperiodic_unicritical(2, BigRational(0)));
  CHECK_FALSE(preperiodic_unicritical(2, BigRational(1)));
  CHECK_FALSE(preperiodic_unicritical(2, BigRational(1, 2)));
  CHECK_FALSE(preperiodic_unicritical(2, BigRational(-1, 2)));
  CHECK_FALSE(preperiodic_unicritical(3, BigRational(1)));
  CHECK(preperiodic_unicritical(3, BigRational(0)));
  // Agreement with direct iteration on a grid of small c.
  for (int num = -8; num <= 8; ++num)
    for (int den : {1, 2, 3, 4}) {
      BigRational c(num, den);
      c.canonicalize();
      CAPTURE(to_string(c));
      bool direct = orbit_repeats(2, c, 12);
      CHECK(preperiodic_unicritical(2, c) == direct);
    }
}

TEST_CASE("discriminant of the iterate") {
  auto a = discriminant_iterate(parse_map("x^2+1"), 1);
  CHECK(a.monic == PolyQ{-1, 1});
  CHECK(a.resultant == PolyQ{4, -4} * (a.resultant.leading() / -4));

  auto b = discriminant_iterate(parse_map("x^2"), 1);
  CHECK(b.monic == PolyQ{0, 1});

  auto c = discriminant_iterate(parse_map("x^2+1"), 2);
  PolyQ expect = PolyQ{1, -1} * PolyQ{1, -1} * PolyQ{2, -1};
  REQUIRE(c.ratio);
  CHECK(c.proportional);
  CHECK(c.resultant == *c.ratio * expect);
  CHECK(*c.ratio != 0);
  CHECK(c.monic == expect.monic());

  for (const char *s : {"x^2-2", "x^3-3*x", "x^2+1/2", "(x^2+1)/x"}) {
    RationalMapQ m = parse_map(s);
    CAPTURE(s);
    for (int n = 1; n <= 2; ++n) {
      auto r = discriminant_iterate(m, n);
      CHECK(r.constant * r.monic == r.resultant);
      if (r.product_form)
        CHECK(r.proportional);
    }
  }
}

TEST_CASE("ramified t-values") {
  auto a = ramified_primes(parse_map("x^2+1"), 2);
  REQUIRE(a.values.size() == 2);
  CHECK(a.values[0].value == 1);
  CHECK(a.values[0].exponent == 2);
  CHECK(a.values[1].value == 2);
  CHECK(a.values[1].exponent == 1);

  auto b = ramified_primes(parse_map("x^2-2"), 2);
  REQUIRE(b.values.size() == 2);
  CHECK(b.values[0].value == -2);
  CHECK(b.values[0].exponent == 2);
  CHECK(b.values[1].value == 2);
  CHECK(b.values[1].exponent == 1);

  for (int d = 2; d <= 5; ++d) {
    auto c = ramified_primes(unicritical(d, BigRational(3)), 1);
    REQUIRE(c.values.size() == 1);
    CHECK(c.values[0].value == 3);
    CHECK(c.values[0].exponent == d - 1);
  }
  CHECK(ramified_primes(parse_map("x^3-2*x"), 1).irrational_residual);
}

TEST_CASE("ramified values are exactly the non-squarefree fibers mod p") {
  for (const char *s : {"x^2+1", "x^2-2", "x^3-3*x", "x^2+1/2"}) {
    RationalMapQ m = parse_map(s);
    for (int n = 1; n <= 2; ++n) {
      auto rep = ramified_primes(m, n);
      for (std::uint64_t p : {5, 7, 11, 13, 31, 53, 101}) {
        if (!good_reduction(m, p))
          continue;
        CAPTURE(s);
        CAPTURE(n);
        CAPTURE(p);
        std::set<std::uint64_t> predicted;
        for (const auto &v : rep.values)
          predicted.insert(reduce_mod(v.value, p));
        IteratePairFp it = iterate(ReducedMap(m, p), n);
        std::set<std::uint64_t> observed;
        for (std::uint64_t a = 0; a < p; ++a) {
          PolyFp f = it.num - PolyFp(p, {a}) * it.den;
          if (gcd(f, f.derivative()).degree() > 0)
            observed.insert(a);
        }
        CHECK(observed == predicted);
      }
    }
  }
}
