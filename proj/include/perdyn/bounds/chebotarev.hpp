#ifndef PERDYN_BOUNDS_CHEBOTAREV_HPP
#define PERDYN_BOUNDS_CHEBOTAREV_HPP

#include "perdyn/algebra/rational.hpp"

namespace perdyn {

/// Inputs to the effective Chebotarev estimates for the splitting field of
/// phi^n(x) - t over F_q(t).
struct BoundInputs {
  BigInt q;          ///< residue field size
  BigInt genus;      ///< genus (or an upper bound) of the splitting field
  BigRational ratio; ///< #C / #G_n, in (0, 1]
  BigInt order;      ///< #G_n
  BigInt ramified;   ///< #R, ramified places
  int n = 0;         ///< iterate
  int d = 2;         ///< degree of phi
  BigRational fpp;   ///< FPP(G_n)

  /// Throws Domain on negative entries or ratio outside (0, 1].
  void validate() const;
};

enum class ErrorTerm {
  /// 2 g #C/#G + #R.
  Plain,
  /// 2 g sqrt(q) #C/#G + #R, the usual effective-Chebotarev shape.
  SqrtQ,
};

struct Interval {
  BigRational lo;
  BigRational hi;
  bool contains(const BigRational &x) const { return lo <= x && x <= hi; }
  BigRational width() const { return hi - lo; }
};

/// (q+1) ratio +/- E, lower end clamped at 0. For SqrtQ the interval is
/// widened outward using a dyadic upper bound on sqrt(q), so it still
/// contains the true interval.
Interval ms_interval(const BoundInputs &in, ErrorTerm term = ErrorTerm::Plain);

/// |G_n| n (2d - 2)
BigInt genus_bound(const BigInt &order, int n, int d);

/// fpp + order genus / (q+1) + 2 #R / (q+1)
BigRational proportion_bound(const BigInt &q, const BigRational &fpp,
                             const BigInt &order, const BigInt &genus,
                             const BigInt &ramified);

/// Smallest integer q >= 0 with (order genus + 2 #R) / (q + 1) <= delta.
BigInt min_prime_for(const BigRational &delta, const BigInt &order,
                     const BigInt &genus, const BigInt &ramified);

/// The bound exceeds 1 and so says nothing.
inline bool is_vacuous(const BigRational &proportion_bound) {
  return proportion_bound > 1;
}

} // namespace perdyn

#endif
