#include "perdyn/map/reduced_map.hpp"

#include "perdyn/algebra/modarith.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

ReducedMap::ReducedMap(const RationalMapQ &map, std::uint64_t p)
    : p_(p), degree_(map.degree()), num_(PolyFp::reduce(map.num(), p)),
      den_(PolyFp::reduce(map.den(), p)) {
  if (!good_reduction(map, p))
    throw Error(ErrorCode::Domain, "bad reduction of " + map.render() +
                                       " at p=" + std::to_string(p));
  num_top_ = num_.coeff(degree_);
  den_top_ = den_.coeff(degree_);
}

ProjPoint ReducedMap::eval(ProjPoint pt) const {
  std::uint64_t x_val, y_val;
  if (pt.is_infinity(p_)) {
    x_val = num_top_;
    y_val = den_top_;
  } else {
    x_val = num_.eval(pt.index);
    y_val = den_.eval(pt.index);
  }
  if (y_val == 0) {
    if (x_val == 0)
      throw Error(ErrorCode::InvariantViolation,
                  "[0:0] while evaluating at index " +
                      std::to_string(pt.index) + " mod " + std::to_string(p_));
    return ProjPoint::infinity(p_);
  }
  return ProjPoint::affine(modp::mul(x_val, modp::inv(y_val, p_), p_));
}

IteratePairFp iterate(const ReducedMap &map, int n, const MapLimits &limits) {
  if (n < 0)
    throw Error(ErrorCode::Domain, "negative iterate count");
  if (n > limits.max_iterate_fp)
    throw Error(ErrorCode::Resource, "iterate n=" + std::to_string(n) +
                                         " exceeds max_iterate_fp=" +
                                         std::to_string(limits.max_iterate_fp));
  const std::uint64_t p = map.prime();
  const int d = map.degree();
  IteratePairFp out{0, 1, PolyFp::x(p), PolyFp::constant(p, 1)};
  for (int k = 1; k <= n; ++k) {
    std::vector<PolyFp> ppow(static_cast<std::size_t>(d) + 1, PolyFp(p)),
        qpow(static_cast<std::size_t>(d) + 1, PolyFp(p));
    ppow[0] = qpow[0] = PolyFp::constant(p, 1);
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
      ppow[i] = ppow[i - 1] * out.num;
      qpow[i] = qpow[i - 1] * out.den;
    }
    PolyFp next_num(p), next_den(p);
    for (int i = 0; i <= d; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uc = static_cast<std::size_t>(d - i);
      const std::uint64_t a = map.num().coeff(i), b = map.den().coeff(i);
      if (a == 0 && b == 0)
        continue;
      PolyFp term = ppow[ui] * qpow[uc];
      if (a != 0)
        next_num += PolyFp(term).scale(a);
      if (b != 0)
        next_den += PolyFp(term).scale(b);
    }
    out.num = std::move(next_num);
    out.den = std::move(next_den);
    out.n = k;
    out.hom_degree *= d;
  }
  return out;
}

} // namespace perdyn
