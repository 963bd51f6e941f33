#ifndef PERDYN_MAP_RATIONAL_MAP_HPP
#define PERDYN_MAP_RATIONAL_MAP_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perdyn/algebra/poly_fp.hpp"
#include "perdyn/algebra/poly_q.hpp"

namespace perdyn {

struct MapLimits {
  int max_degree = 16;
  int max_iterate_q = 6;
  int max_iterate_fp = 12;
  /// Largest coefficient bit length allowed while iterating over Q.
  std::size_t max_coeff_bits = 1U << 16;
};

/// phi = num/den over Q, stored integer-normalized: num and den are coprime,
/// have integer coefficients with joint content 1, and den has a positive
/// leading coefficient.
class RationalMapQ {
public:
  /// Normalizes an arbitrary pair; throws if den is zero or deg < 2.
  RationalMapQ(const PolyQ &num, const PolyQ &den,
               const MapLimits &limits = {});

  const PolyQ &num() const { return num_; }
  const PolyQ &den() const { return den_; }
  int degree() const { return degree_; }

  /// Coefficients a_i of P(X,Y) = sum a_i X^i Y^(d-i) (length d+1).
  std::vector<BigInt> hom_num() const;
  std::vector<BigInt> hom_den() const;

  /// Res(P, Q) of the homogenized integer forms; nonzero by construction.
  const BigInt &hom_resultant() const { return resultant_; }

  /// "(<num>)/(<den>)"; parse_map(render()) reproduces this map.
  std::string render() const;
  /// Ascending coefficient dump, for debugging.
  std::string debug_dump() const;

  friend bool operator==(const RationalMapQ &a, const RationalMapQ &b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

private:
  PolyQ num_;
  PolyQ den_;
  int degree_ = 0;
  BigInt resultant_;
};

/// Parses the map grammar: integers, x, + - * / ^ (nonnegative integer
/// exponent), parentheses. The result is evaluated in Q(x) and normalized.
RationalMapQ parse_map(std::string_view expr, const MapLimits &limits = {});

/// Coprime (num, den) of an expression without the dynamical checks.
std::pair<PolyQ, PolyQ> parse_rational_function(std::string_view expr);

/// p does not divide Res(P, Q). This is equivalent to max(|P(a,1)|, |Q(a,1)|)
/// = 1 at every a in the algebraic closure: a common zero of the reductions
/// of P and Q exists exactly when the reduced resultant vanishes.
bool good_reduction(const RationalMapQ &map, std::uint64_t p);

/// (p_n, q_n) = (P_n(x,1), Q_n(x,1)) with P_n = P(P_{n-1}, Q_{n-1}).
template <class Poly> struct IteratePair {
  int n = 0;
  /// Degree of the homogeneous pair, d^n.
  long hom_degree = 0;
  Poly num;
  Poly den;
};

using IteratePairQ = IteratePair<PolyQ>;
using IteratePairFp = IteratePair<PolyFp>;

IteratePairQ iterate(const RationalMapQ &map, int n,
                     const MapLimits &limits = {});

/// x-coordinate duplication map on y^2 = x^3 + a x + b.
RationalMapQ lattes2(const BigRational &a, const BigRational &b);

/// T_d with T_d(z + 1/z) = z^d + z^-d.
RationalMapQ chebyshev(int d);

/// x^d + c.
RationalMapQ unicritical(int d, const BigRational &c);

} // namespace perdyn

#endif
