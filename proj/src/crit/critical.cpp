#include "perdyn/crit/critical.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "perdyn/algebra/poly_fp.hpp"
#include "perdyn/algebra/poly_qt.hpp"
#include "perdyn/error.hpp"
#include "perdyn/map/reduced_map.hpp"

namespace perdyn {

std::string ProjQ::to_string() const {
  return infinite ? "inf" : perdyn::to_string(value);
}

ProjQ apply(const RationalMapQ &map, const ProjQ &pt) {
  const int d = map.degree();
  if (pt.infinite) {
    BigRational top_den = map.den().coeff(d);
    if (top_den == 0)
      return ProjQ::infinity();
    return ProjQ::at(map.num().coeff(d) / top_den);
  }
  BigRational den = map.den().eval(pt.value);
  if (den == 0)
    return ProjQ::infinity();
  return ProjQ::at(map.num().eval(pt.value) / den);
}

std::string CriticalPoint::to_string() const {
  switch (kind) {
  case Kind::Rational:
    return perdyn::to_string(value) + " (e=" + std::to_string(ramification) +
           ")";
  case Kind::Infinity:
    return "inf (e=" + std::to_string(ramification) + ")";
  case Kind::Irrational:
    return "roots of " + residual.to_string();
  }
  return {};
}

namespace {

constexpr unsigned long kTrialLimit = 1'000'000;

// Prime factorization by trial division; the cofactor left after the trial
// bound must be prime or 1.
std::vector<std::pair<BigInt, int>> factor_integer(BigInt n) {
  std::vector<std::pair<BigInt, int>> out;
  n = abs(n);
  for (unsigned long f = 2; f <= kTrialLimit && BigInt(f) * f <= n;
       f += (f == 2 ? 1 : 2)) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
      int e = 0;
      while (mpz_divisible_ui_p(n.get_mpz_t(), f)) {
        mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), f);
        ++e;
      }
      out.emplace_back(BigInt(f), e);
    }
  }
  if (n > 1) {
    if (mpz_probab_prime_p(n.get_mpz_t(), 30) == 0)
      throw Error(ErrorCode::Resource,
                  "cannot factor " + n.get_str() +
                      " by trial division for the rational-root search");
    out.emplace_back(n, 1);
  }
  return out;
}

std::vector<BigInt> positive_divisors(const BigInt &n) {
  std::vector<BigInt> divs{BigInt(1)};
  for (const auto &[prime, e] : factor_integer(n)) {
    const std::size_t count = divs.size();
    BigInt power(1);
    for (int k = 1; k <= e; ++k) {
      power *= prime;
      for (std::size_t i = 0; i < count; ++i)
        divs.push_back(divs[i] * power);
    }
  }
  return divs;
}

// p'q - pq'
PolyQ wronskian(const PolyQ &p, const PolyQ &q) {
  return p.derivative() * q - p * q.derivative();
}

// x^d f(1/x)
PolyQ reverse(const PolyQ &f, int d) {
  std::vector<BigRational> c(static_cast<std::size_t>(d) + 1);
  for (int k = 0; k <= d; ++k)
    c[static_cast<std::size_t>(d - k)] = f.coeff(k);
  return PolyQ(std::move(c));
}

struct RootSearch {
  std::vector<std::pair<BigRational, int>> roots; // value, multiplicity
  PolyQ residual;                                 // no rational roots left
};

RootSearch rational_roots(const PolyQ &f) {
  RootSearch out;
  PolyQ rest = f.primitive();
  if (rest.degree() < 1) {
    out.residual = rest;
    return out;
  }
  int zero_mult = 0;
  while (rest.coeff(0) == 0) {
    rest = rest.exact_div(PolyQ::x());
    ++zero_mult;
  }
  if (zero_mult > 0)
    out.roots.emplace_back(BigRational(0), zero_mult);
  if (rest.degree() >= 1) {
    const auto nums = positive_divisors(rest.coeff(0).get_num());
    const auto dens = positive_divisors(rest.leading().get_num());
    std::set<BigRational> candidates;
    for (const auto &a : nums)
      for (const auto &b : dens) {
        BigRational r(a, b);
        r.canonicalize();
        candidates.insert(r);
        candidates.insert(BigRational(-r));
      }
    for (const auto &r : candidates) {
      if (rest.degree() < 1)
        break;
      int mult = 0;
      const PolyQ linear({BigRational(-r), BigRational(1)});
      while (rest.degree() >= 1 && rest.eval(r) == 0) {
        rest = rest.exact_div(linear);
        ++mult;
      }
      if (mult > 0)
        out.roots.emplace_back(r, mult);
    }
  }
  out.residual = rest.primitive();
  return out;
}

} // namespace

std::vector<CriticalPoint> critical_points(const RationalMapQ &map) {
  const int d = map.degree();
  std::vector<CriticalPoint> out;
  RootSearch finite = rational_roots(wronskian(map.num(), map.den()));
  std::sort(finite.roots.begin(), finite.roots.end(),
            [](const auto &a, const auto &b) { return a.first > b.first; });
  for (const auto &[value, mult] : finite.roots) {
    CriticalPoint c;
    c.kind = CriticalPoint::Kind::Rational;
    c.value = value;
    c.ramification = mult + 1;
    out.push_back(std::move(c));
  }
  // Infinity: conjugate by 1/x, psi(x) = Q(1,x)/P(1,x), and look at x = 0.
  PolyQ w_inf = wronskian(reverse(map.den(), d), reverse(map.num(), d));
  int inf_mult = 0;
  while (inf_mult <= w_inf.degree() && w_inf.coeff(inf_mult) == 0)
    ++inf_mult;
  if (!w_inf.is_zero() && inf_mult > 0) {
    CriticalPoint c;
    c.kind = CriticalPoint::Kind::Infinity;
    c.ramification = inf_mult + 1;
    out.push_back(std::move(c));
  }
  if (finite.residual.degree() >= 1) {
    CriticalPoint c;
    c.kind = CriticalPoint::Kind::Irrational;
    c.residual = finite.residual;
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<ProjQ> rational_critical_points(const RationalMapQ &map,
                                            bool include_infinity) {
  std::vector<ProjQ> out;
  for (const auto &c : critical_points(map)) {
    if (c.kind == CriticalPoint::Kind::Rational ||
        (include_infinity && c.kind == CriticalPoint::Kind::Infinity))
      out.push_back(c.point());
  }
  return out;
}

int riemann_hurwitz_tally(const std::vector<CriticalPoint> &crit) {
  int total = 0;
  for (const auto &c : crit)
    total += c.kind == CriticalPoint::Kind::Irrational ? c.residual.degree()
                                                       : c.ramification - 1;
  return total;
}

namespace {

struct ProjQLess {
  bool operator()(const ProjQ &a, const ProjQ &b) const {
    if (a.infinite != b.infinite)
      return b.infinite;
    return !a.infinite && a.value < b.value;
  }
};

} // namespace

CriticalOrbitReport collision_test(const RationalMapQ &map, int depth,
                                   const std::vector<ProjQ> &points) {
  if (depth < 1)
    throw Error(ErrorCode::Domain, "collision depth must be >= 1");
  CriticalOrbitReport rep;
  rep.points = points;
  rep.depth = depth;
  std::map<ProjQ, std::pair<std::size_t, int>, ProjQLess> first_seen;
  for (std::size_t i = 0; i < points.size(); ++i) {
    std::vector<ProjQ> orbit;
    ProjQ z = points[i];
    for (int m = 1; m <= depth; ++m) {
      z = apply(map, z);
      orbit.push_back(z);
      auto [it, inserted] = first_seen.emplace(z, std::make_pair(i, m));
      if (!inserted && !rep.first_violation) {
        rep.holds = false;
        rep.first_violation =
            Collision{it->second.first, i, it->second.second, m, z};
      }
    }
    rep.orbits.push_back(std::move(orbit));
  }
  return rep;
}

CriticalOrbitReport collision_test(const RationalMapQ &map, int depth,
                                   const std::vector<CriticalPoint> &points) {
  std::vector<ProjQ> pts;
  for (const auto &c : points) {
    if (c.kind == CriticalPoint::Kind::Irrational)
      throw Error(ErrorCode::UnsupportedPoint,
                  "critical points " + c.to_string() +
                      " are irrational; use collision_test_mod");
    pts.push_back(c.point());
  }
  return collision_test(map, depth, pts);
}

std::string ModCollisionVerdict::summary() const {
  return collision_evidence ? "collision mod p" : "no obstruction found";
}

ModCollisionVerdict
collision_test_mod(const RationalMapQ &map, int depth,
                   const std::vector<std::uint64_t> &primes) {
  if (depth < 1)
    throw Error(ErrorCode::Domain, "collision depth must be >= 1");
  ModCollisionVerdict verdict;
  verdict.caveat = "modular evidence only: a collision mod p can refute but "
                   "never certify the critical-orbit condition over Q-bar";
  const PolyQ w = wronskian(map.num(), map.den());
  std::set<std::tuple<int, int, bool>> common;
  bool first_prime = true;
  for (std::uint64_t p : primes) {
    ReducedMap reduced(map, p);
    ModCollision mc;
    mc.prime = p;
    // Denominators of w are units: it has integer coefficients.
    PolyFp wp = PolyFp::reduce(w, p);
    if (!wp.is_zero())
      for (std::uint64_t x = 0; x < p; ++x)
        if (wp.eval(x) == 0)
          mc.critical_residues.push_back(x);
    std::map<std::uint64_t, std::pair<std::size_t, int>> seen;
    std::set<std::tuple<int, int, bool>> sigs;
    for (std::size_t i = 0; i < mc.critical_residues.size(); ++i) {
      ProjPoint z{mc.critical_residues[i]};
      for (int m = 1; m <= depth; ++m) {
        z = reduced.eval(z);
        auto [it, inserted] = seen.emplace(z.index, std::make_pair(i, m));
        if (inserted)
          continue;
        auto [j, mj] = it->second;
        sigs.emplace(mj, m, j == i);
        if (!mc.first) {
          ProjQ v =
              z.is_infinity(p)
                  ? ProjQ::infinity()
                  : ProjQ::at(BigRational(BigInt(std::to_string(z.index))));
          mc.first = Collision{j, i, mj, m, v};
        }
      }
    }
    mc.signatures.assign(sigs.begin(), sigs.end());
    if (first_prime) {
      common = sigs;
      first_prime = false;
    } else {
      std::set<std::tuple<int, int, bool>> keep;
      for (const auto &s : common)
        if (sigs.count(s))
          keep.insert(s);
      common = std::move(keep);
    }
    verdict.per_prime.push_back(std::move(mc));
  }
  verdict.collision_evidence = !primes.empty() && !common.empty();
  return verdict;
}

bool preperiodic_unicritical(int d, const BigRational &c) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "unicritical degree must be >= 2");
  // Escape tests:
  //  * |z| > |c| + 2 forces |z^d + c| >= |z|^d - |c| > |z|, so the orbit
  //    grows monotonically;
  //  * if the denominator of z exceeds that of c, some prime l divides
  //    den(c) and v_l(z_k) = d^(k-1) v_l(c) decreases forever.
  // Otherwise z ranges over a finite set of rationals, so a repeat occurs.
  const BigRational radius = abs(c) + 2;
  std::set<BigRational> seen;
  BigRational z(0);
  seen.insert(z);
  for (;;) {
    BigRational next(1);
    for (int k = 0; k < d; ++k)
      next *= z;
    z = next + c;
    if (!seen.insert(z).second)
      return true;
    if (abs(z) > radius)
      return false;
    if (z.get_den() > c.get_den())
      return false;
  }
}

DiscriminantReport discriminant_iterate(const RationalMapQ &map, int n,
                                        const MapLimits &limits) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "discriminant_iterate needs n >= 1");
  DiscriminantReport rep;
  rep.n = n;
  const IteratePairQ it = iterate(map, n, limits);
  const PolyQ w = wronskian(it.num, it.den);
  if (w.is_zero())
    throw Error(ErrorCode::Inseparable, "p_n' q_n - p_n q_n' vanishes");
  rep.resultant =
      resultant_qt(PolyQt::from_x(w), PolyQt::fiber_family(it.num, it.den));
  if (rep.resultant.is_zero())
    throw Error(ErrorCode::Inseparable, "resultant vanishes identically in t");
  rep.constant = rep.resultant.leading();
  rep.monic = rep.resultant.monic();

  RamifiedReport ram = ramified_primes(map, n);
  if (!ram.irrational_residual) {
    PolyQ prod = PolyQ::constant(BigRational(1));
    for (const auto &rv : ram.values) {
      PolyQ factor({rv.value, BigRational(-1)});
      prod *= factor.pow(static_cast<unsigned>(rv.exponent));
    }
    // Proportional iff resultant * lc(prod) == prod * lc(resultant).
    rep.proportional =
        rep.resultant * prod.leading() == prod * rep.resultant.leading();
    if (rep.proportional)
      rep.ratio = BigRational(rep.resultant.leading() / prod.leading());
    rep.product_form = std::move(prod);
  }
  return rep;
}

RamifiedReport ramified_primes(const RationalMapQ &map, int n) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "ramified_primes needs n >= 1");
  RamifiedReport rep;
  std::map<BigRational, long> merged;
  const long d = map.degree();
  for (const auto &c : critical_points(map)) {
    if (c.kind == CriticalPoint::Kind::Irrational) {
      rep.irrational_residual = c.residual;
      continue;
    }
    ProjQ z = c.point();
    for (int m = 1; m <= n; ++m) {
      z = apply(map, z);
      if (z.infinite)
        continue;
      long weight = 1;
      for (int k = 0; k < n - m; ++k)
        weight *= d;
      merged[z.value] += weight * (c.ramification - 1);
    }
  }
  for (const auto &[v, e] : merged)
    rep.values.push_back({v, e});
  return rep;
}

} // namespace perdyn
