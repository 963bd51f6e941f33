#ifndef PERDYN_WREATH_SPECTRUM_HPP
#define PERDYN_WREATH_SPECTRUM_HPP

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "perdyn/algebra/poly_q.hpp"
#include "perdyn/algebra/rational.hpp"

namespace perdyn {

/// A permutation group acting on d points, summarized by how many elements
/// fix exactly k points. Everything about FPP([G]^n) depends only on this.
class FixedPointSpectrum {
public:
  /// counts[k] = number of elements with exactly k fixed points.
  FixedPointSpectrum(int degree, std::map<int, BigInt> counts);

  int degree() const { return degree_; }
  const std::map<int, BigInt> &counts() const { return counts_; }
  BigInt count(int k) const;
  const BigInt &order() const { return order_; }
  /// Burnside: one orbit iff the average number of fixed points is 1.
  bool transitive() const { return transitive_; }

  /// Proportion of elements with at least one fixed point.
  BigRational fpp() const;

  /// "d=3;0:2,1:3,3:1"
  std::string to_string() const;

  friend bool operator==(const FixedPointSpectrum &a,
                         const FixedPointSpectrum &b) {
    return a.degree_ == b.degree_ && a.counts_ == b.counts_;
  }

private:
  int degree_;
  std::map<int, BigInt> counts_;
  BigInt order_;
  bool transitive_;
};

/// Parses "d=3;0:2,1:3,3:1", "S:3" (symmetric) or "C:4" (cyclic, regular).
FixedPointSpectrum parse_spectrum(std::string_view text);

/// S_d on d points: C(d,k) * derangements(d-k) elements fix exactly k.
FixedPointSpectrum spectrum_symmetric(int d);
/// C_d acting regularly on itself: only the identity fixes anything.
FixedPointSpectrum spectrum_cyclic(int d);

/// Number of derangements of m points.
BigInt derangements(int m);

struct FppLimits {
  /// Largest denominator bit length tolerated by the exact recursion.
  std::size_t max_exact_bits = 1U << 22;
  /// Largest d^n for fix_distribution.
  long max_degree = 1L << 16;
};

/// q_1..q_n with q_m = FPP([G]^m), exactly. q_{m+1} = 1 - g(1 - q_m) where
/// g(x) = (1/|G|) sum_k counts[k] x^k.
std::vector<BigRational> iterate_fpp(const FixedPointSpectrum &spec, int n,
                                     const FppLimits &limits = {});

/// Rigorous enclosure [lo, hi] of q_m by dyadic rationals.
struct FppInterval {
  BigRational lo;
  BigRational hi;
};

/// Same recursion on outward-rounded dyadic intervals with `bits` fractional
/// bits. The map q -> 1 - g(1 - q) is nondecreasing on [0, 1], so the
/// endpoints can be propagated separately.
std::vector<FppInterval> iterate_fpp_enclosure(const FixedPointSpectrum &spec,
                                               int n, unsigned bits = 256);

/// Floating-point recursion for display only.
std::vector<double> iterate_fpp_double(const FixedPointSpectrum &spec, int n);

/// g_1(x) = (1/|G|) sum x^fix(pi).
PolyQ fix_generating_poly(const FixedPointSpectrum &spec);

/// g_n = g_1 o g_{n-1}: coefficient k is the probability that a uniform
/// element of [G]^n fixes exactly k of the d^n leaves.
PolyQ fix_distribution(const FixedPointSpectrum &spec, int n,
                       const FppLimits &limits = {});

} // namespace perdyn

#endif
