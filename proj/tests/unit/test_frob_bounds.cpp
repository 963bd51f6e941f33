#include <doctest.h>

#include "oracles.hpp"
#include "perdyn/bounds/chebotarev.hpp"
#include "perdyn/error.hpp"
#include "perdyn/frob/sampler.hpp"
#include "perdyn/wreath/spectrum.hpp"

using namespace perdyn;

TEST_CASE("Frobenius cycle types") {
  RationalMapQ m = parse_map("x^2+1");
  auto a = frobenius_cycle_type(m, 5, 1, 0);
  CHECK_FALSE(a.ramified);
  CHECK(a.degrees == DegreeCounts{{1, 2}});
  CHECK(a.linear_count == 2);

  auto b = frobenius_cycle_type(m, 7, 1, 0);
  CHECK(b.degrees == DegreeCounts{{2, 1}});
  CHECK(b.linear_count == 0);

  auto c = frobenius_cycle_type(m, 13, 1, 1);
  CHECK(c.ramified);
  CHECK(c.degrees.empty());

  // 1/x^2 - a: fiber polynomial 1 - a x^2 drops degree at a = 0.
  auto e = frobenius_cycle_type(parse_map("1/x^2"), 7, 1, 0);
  CHECK(e.ramified);
  CHECK(e.degree_dropped);
}

TEST_CASE("empirical FPP examples") {
  RationalMapQ m = parse_map("x^2+1");
  FrobReport r = empirical_fpp(m, 13, 1);
  CHECK(r.exhaustive);
  CHECK(r.examined == 13);
  CHECK(r.ramified == 1);
  CHECK(r.unramified == 12);
  CHECK(r.root_bearing == 6);
  CHECK(r.empirical_fpp == BigRational(1, 2));
  CHECK(r.root_bearing == oracle::quadratic_root_bearing(13, 1, true));

  FrobReport s = empirical_fpp(parse_map("x^2"), 7, 1);
  CHECK(s.affine_image_fraction == BigRational(4, 7));
  CHECK(s.empirical_fpp == BigRational(1, 2));
  CHECK(s.ramified == 1);

  FrobReport z = empirical_fpp(m, 13, 0);
  CHECK(z.empirical_fpp == 1);
}

TEST_CASE("root-bearing counts against squaring oracle") {
  for (std::uint64_t p : {5, 7, 11, 13, 17, 101, 103}) {
    for (long c : {1, 2, 3}) {
      RationalMapQ m = unicritical(2, BigRational(c));
      FrobReport r = empirical_fpp(m, p, 1);
      CHECK(r.root_bearing == oracle::quadratic_root_bearing(p, c, true));
      CHECK(r.unramified == p - 1);
    }
  }
}

TEST_CASE("sampling mode") {
  RationalMapQ m = parse_map("x^2+1");
  SampleMode mode;
  mode.sample_size = 10;
  FrobReport r = empirical_fpp(m, 10007, 2, mode);
  CHECK_FALSE(r.exhaustive);
  CHECK(r.examined == 10);
  CHECK_FALSE(r.warnings.empty());

  mode.sample_size = 200;
  FrobReport a = empirical_fpp(m, 10007, 2, mode);
  FrobReport b = empirical_fpp(m, 10007, 2, mode);
  CHECK(a.warnings.empty());
  CHECK(a.linear_histogram == b.linear_histogram);
  mode.seed = 99;
  FrobReport c = empirical_fpp(m, 10007, 2, mode);
  CHECK(c.examined == 200);
}

TEST_CASE("comparison with the wreath prediction") {
  RationalMapQ m = parse_map("x^2+1");
  FrobReport r = empirical_fpp(m, 13, 1);
  PredictionComparison cmp = compare_to_prediction(r, spectrum_symmetric(2));
  CHECK(cmp.predicted_fpp == BigRational(1, 2));
  CHECK(cmp.total_variation == 0);

  std::map<int, BigRational> dist{{0, BigRational(1, 3)},
                                  {2, BigRational(2, 3)}};
  CHECK(total_variation(dist, dist) == 0);
  CHECK(total_variation(dist, {{1, BigRational(1)}}) == 1);

  // Generic quadratic at n = 3 tracks [S2]^3; the Chebyshev map does not.
  FrobReport g = empirical_fpp(m, 10007, 3);
  PredictionComparison gc = compare_to_prediction(g, spectrum_symmetric(2));
  CHECK(gc.total_variation < BigRational(3, 100));
  // Regression baseline from the exhaustive run.
  CHECK(to_double(gc.total_variation) ==
        doctest::Approx(0.003692).epsilon(1e-3));
  CHECK(g.root_bearing == 3029);
  CHECK(g.ramified == 3);
  FrobReport t = empirical_fpp(parse_map("x^2-2"), 10007, 3);
  PredictionComparison tc = compare_to_prediction(t, spectrum_symmetric(2));
  CHECK(tc.total_variation > BigRational(1, 10));
}

TEST_CASE("MS interval") {
  BoundInputs in;
  in.q = 13;
  in.genus = 0;
  in.ratio = BigRational(1, 2);
  in.ramified = 0;
  Interval a = ms_interval(in);
  CHECK(a.lo == 7);
  CHECK(a.hi == 7);

  in.ramified = 2;
  Interval b = ms_interval(in);
  CHECK(b.lo == 5);
  CHECK(b.hi == 9);
  CHECK(b.contains(BigRational(6)));

  in.ratio = 1;
  in.ramified = 0;
  Interval c = ms_interval(in);
  CHECK(c.lo == 14);
  CHECK(c.hi == 14);

  in.genus = 3;
  in.ratio = BigRational(1, 2);
  in.q = 101;
  Interval plain = ms_interval(in, ErrorTerm::Plain);
  Interval root = ms_interval(in, ErrorTerm::SqrtQ);
  CHECK(plain.width() == 6);
  // 2 g sqrt(q) ratio = 3 sqrt(101) ~ 30.1496, rounded outward.
  CHECK(root.hi - 51 >= BigRational(30149, 1000));
  CHECK(root.hi - 51 < BigRational(754, 25));
  CHECK(root.lo <= BigRational(20851, 1000));
  CHECK(root.contains(plain.lo));
  CHECK(root.contains(plain.hi));

  in.ratio = BigRational(3, 2);
  CHECK_THROWS_AS(ms_interval(in), Error);
}

TEST_CASE("genus bound") {
  CHECK(genus_bound(2, 1, 2) == 4);
  CHECK(genus_bound(128, 3, 2) == 768);
  CHECK(genus_bound(5, 0, 2) == 0);
}

TEST_CASE("proportion bound") {
  BigRational fpp(39, 128);
  BigRational v = proportion_bound(1000003, fpp, 128, 768, 6);
  CHECK(v == fpp + BigRational(24579, 250001));
  CHECK(to_double(v) == doctest::Approx(0.40301).epsilon(1e-5));
  CHECK(proportion_bound(1000003, fpp, 128, 0, 0) == fpp);
  BigRational prev = proportion_bound(100, fpp, 128, 768, 6);
  for (long q = 1000; q <= 1000000000; q *= 10) {
    BigRational cur = proportion_bound(q, fpp, 128, 768, 6);
    CHECK(cur < prev);
    CHECK(cur > fpp);
    prev = cur;
  }
  CHECK(prev - fpp < BigRational(1, 10000));
  CHECK(is_vacuous(proportion_bound(1000, fpp, 128, 768, 6)));
}

TEST_CASE("minimal prime for a target error") {
  CHECK(min_prime_for(BigRational(1, 100), 128, 768, 6) == 9831599);
  CHECK(min_prime_for(BigRational(1), 0, 0, 0) == 0);
  CHECK(min_prime_for(BigRational(1, 2), 1, 4, 2) == 15);
  CHECK_THROWS_AS(min_prime_for(BigRational(0), 1, 1, 1), Error);
  // The threshold really achieves the target, and one less does not.
  BigInt q = min_prime_for(BigRational(1, 100), 128, 768, 6);
  CHECK(BigRational(98316) / BigRational(q + 1) <= BigRational(1, 100));
  CHECK(BigRational(98316) / BigRational(q) > BigRational(1, 100));
}
