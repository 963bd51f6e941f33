#include "perdyn/frob/sampler.hpp"

#include <random>
#include <set>

#include "perdyn/dynamics/func_graph.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

FiberFamily::FiberFamily(const ReducedMap &map, int n, const MapLimits &limits)
    : iterate_(perdyn::iterate(map, n, limits)) {}

PolyFp FiberFamily::specialize(std::uint64_t a) const {
  PolyFp den = iterate_.den;
  return iterate_.num - den.scale(a);
}

CycleTypeSample FiberFamily::cycle_type(std::uint64_t a) const {
  CycleTypeSample s;
  s.a = a;
  PolyFp f = specialize(a);
  // The fiber over a in P^1 has d^n points; the affine polynomial only sees
  // them all when it keeps full degree (otherwise infinity is in the fiber).
  if (f.degree() < full_degree()) {
    s.degree_dropped = true;
    s.ramified = true;
    return s;
  }
  if (!is_squarefree(f)) {
    s.ramified = true;
    return s;
  }
  s.degrees = distinct_degree_factor(f);
  auto it = s.degrees.find(1);
  s.linear_count = it == s.degrees.end() ? 0 : it->second;
  return s;
}

CycleTypeSample frobenius_cycle_type(const RationalMapQ &map, std::uint64_t p,
                                     int n, std::uint64_t a) {
  ReducedMap reduced(map, p);
  return FiberFamily(reduced, n).cycle_type(a % p);
}

namespace {

BigRational ratio(std::uint64_t num, std::uint64_t den) {
  BigRational r(BigInt(std::to_string(num)), BigInt(std::to_string(den)));
  r.canonicalize();
  return r;
}

} // namespace

FrobReport empirical_fpp(const RationalMapQ &map, std::uint64_t p, int n,
                         const SampleMode &mode) {
  if (n < 0)
    throw Error(ErrorCode::Domain, "iterate count must be >= 0");
  ReducedMap reduced(map, p);
  FrobReport rep;
  rep.prime = p;
  rep.n = n;
  rep.degree = map.degree();

  std::vector<std::uint64_t> as;
  if (!mode.sample_size && p <= mode.exhaustive_limit) {
    rep.exhaustive = true;
    as.resize(p);
    for (std::uint64_t a = 0; a < p; ++a)
      as[a] = a;
  } else {
    rep.exhaustive = false;
    const std::uint64_t size =
        mode.sample_size.value_or(mode.default_sample_size);
    std::mt19937_64 rng(mode.seed);
    std::uniform_int_distribution<std::uint64_t> dist(0, p - 1);
    as.reserve(size);
    for (std::uint64_t k = 0; k < size; ++k)
      as.push_back(dist(rng));
    if (size < 30)
      rep.warnings.push_back("statistics too small: sample size " +
                             std::to_string(size) + " < 30");
  }
  rep.examined = as.size();

  if (n == 0) {
    // Identity fiber: every a is its own preimage.
    rep.unramified = rep.root_bearing = rep.examined;
    rep.linear_histogram[1] = rep.examined;
    rep.empirical_fpp = BigRational(1);
    rep.affine_image_fraction = BigRational(1);
    rep.agreement_slack = ratio(2, p);
    if (rep.exhaustive)
      rep.image_proportion = BigRational(1);
    return rep;
  }

  FiberFamily family(reduced, n);
  std::uint64_t any_root = 0;
  for (std::uint64_t a : as) {
    CycleTypeSample s = family.cycle_type(a);
    if (s.ramified) {
      ++rep.ramified;
      PolyFp f = family.specialize(a);
      if (f.degree() >= 1 && count_distinct_roots(f) > 0)
        ++any_root;
      continue;
    }
    ++rep.unramified;
    ++rep.linear_histogram[s.linear_count];
    if (s.linear_count > 0) {
      ++rep.root_bearing;
      ++any_root;
    }
  }
  if (rep.unramified == 0)
    throw Error(ErrorCode::Domain, "every examined specialization is ramified");
  rep.empirical_fpp = ratio(rep.root_bearing, rep.unramified);
  rep.affine_image_fraction = ratio(any_root, rep.examined);
  rep.agreement_slack = ratio(rep.ramified + 2, p);
  if (rep.exhaustive) {
    FuncGraph graph = build_graph(reduced);
    rep.image_proportion = ratio(image_iterate(graph, n).back(), p + 1);
  }
  return rep;
}

BigRational total_variation(const std::map<int, BigRational> &a,
                            const std::map<int, BigRational> &b) {
  std::set<int> keys;
  for (const auto &kv : a)
    keys.insert(kv.first);
  for (const auto &kv : b)
    keys.insert(kv.first);
  BigRational sum(0);
  for (int k : keys) {
    auto ia = a.find(k);
    auto ib = b.find(k);
    BigRational va = ia == a.end() ? BigRational(0) : ia->second;
    BigRational vb = ib == b.end() ? BigRational(0) : ib->second;
    sum += abs(va - vb);
  }
  return sum / 2;
}

PredictionComparison compare_to_prediction(const FrobReport &report,
                                           const FixedPointSpectrum &spec,
                                           const FppLimits &limits) {
  PredictionComparison cmp;
  if (report.n == 0) {
    cmp.predicted[1] = BigRational(1);
    cmp.predicted_fpp = BigRational(1);
  } else {
    PolyQ g = fix_distribution(spec, report.n, limits);
    for (int k = 0; k <= g.degree(); ++k)
      if (g.coeff(k) != 0)
        cmp.predicted[k] = g.coeff(k);
    cmp.predicted_fpp = 1 - g.coeff(0);
  }
  for (const auto &[k, count] : report.linear_histogram)
    cmp.empirical[k] = ratio(count, report.unramified);
  cmp.total_variation = total_variation(cmp.empirical, cmp.predicted);
  return cmp;
}

} // namespace perdyn
