#ifndef PERDYN_CRIT_CRITICAL_HPP
#define PERDYN_CRIT_CRITICAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "perdyn/algebra/poly_q.hpp"
#include "perdyn/map/rational_map.hpp"

namespace perdyn {

/// A point of P^1(Q).
struct ProjQ {
  bool infinite = false;
  BigRational value;

  static ProjQ at(const BigRational &v) { return {false, v}; }
  static ProjQ infinity() { return {true, BigRational(0)}; }

  std::string to_string() const;
  friend bool operator==(const ProjQ &a, const ProjQ &b) {
    return a.infinite == b.infinite && (a.infinite || a.value == b.value);
  }
};

/// phi evaluated on P^1(Q).
ProjQ apply(const RationalMapQ &map, const ProjQ &pt);

struct CriticalPoint {
  enum class Kind { Rational, Infinity, Irrational };
  Kind kind = Kind::Rational;
  /// Set for Kind::Rational.
  BigRational value;
  /// Ramification index (multiplicity in p'q - pq' plus one). For the
  /// Irrational marker this is unused.
  int ramification = 0;
  /// Kind::Irrational: the product of all non-rational factors of
  /// p'q - pq', primitive; its roots are the remaining critical points.
  PolyQ residual;

  ProjQ point() const {
    return kind == Kind::Infinity ? ProjQ::infinity() : ProjQ::at(value);
  }
  std::string to_string() const;
};

/// Rational critical points in descending order, then infinity if critical,
/// then one Irrational marker if p'q - pq' has non-rational roots.
std::vector<CriticalPoint> critical_points(const RationalMapQ &map);

/// Only the Rational and Infinity entries.
std::vector<ProjQ> rational_critical_points(const RationalMapQ &map,
                                            bool include_infinity);

/// sum (e - 1) over rational/infinite critical points plus the residual
/// degree; equals 2d - 2 in characteristic 0.
int riemann_hurwitz_tally(const std::vector<CriticalPoint> &crit);

struct Collision {
  std::size_t a = 0; // index into the tracked points
  std::size_t b = 0;
  int m = 0;
  int n = 0;
  ProjQ value;
};

struct CriticalOrbitReport {
  std::vector<ProjQ> points;
  /// orbits[i][k] = phi^(k+1)(points[i]), k < depth
  std::vector<std::vector<ProjQ>> orbits;
  int depth = 0;
  bool holds = true;
  std::optional<Collision> first_violation;
};

/// Exact check of phi^m(a) != phi^n(b) unless (a, m) == (b, n), for
/// 1 <= m, n <= depth. Points must be rational or infinity; the first
/// repeat in (point, m) order is reported.
CriticalOrbitReport collision_test(const RationalMapQ &map, int depth,
                                   const std::vector<ProjQ> &points);

/// Overload taking critical points; an Irrational entry raises
/// UnsupportedPoint (use collision_test_mod).
CriticalOrbitReport collision_test(const RationalMapQ &map, int depth,
                                   const std::vector<CriticalPoint> &points);

struct ModCollision {
  std::uint64_t prime = 0;
  std::vector<std::uint64_t> critical_residues;
  std::optional<Collision> first;
  /// (m, n, same point) for every collision found, sorted.
  std::vector<std::tuple<int, int, bool>> signatures;
};

struct ModCollisionVerdict {
  /// True when some collision signature occurs modulo every listed prime.
  bool collision_evidence = false;
  std::vector<ModCollision> per_prime;
  /// Always set: modular evidence never certifies the condition over Q-bar.
  std::string caveat;
  std::string summary() const;
};

/// Heuristic fallback for irrational critical points: reduce mod each prime,
/// take the finite critical residues, and look for orbit collisions.
ModCollisionVerdict
collision_test_mod(const RationalMapQ &map, int depth,
                   const std::vector<std::uint64_t> &primes);

/// Exact decision whether 0 is preperiodic under x^d + c.
bool preperiodic_unicritical(int d, const BigRational &c);

struct DiscriminantReport {
  int n = 0;
  /// Res_x(p_n' q_n - p_n q_n', p_n - t q_n)
  PolyQ resultant;
  /// resultant / constant, monic in t
  PolyQ monic;
  BigRational constant;
  /// Product over rational critical a and 1 <= m <= n of
  /// (phi^m(a) - t)^(d^(n-m) (e(a) - 1)); empty when some critical point is
  /// irrational.
  std::optional<PolyQ> product_form;
  /// resultant = ratio * product_form, when both are available.
  std::optional<BigRational> ratio;
  bool proportional = false;
};

DiscriminantReport discriminant_iterate(const RationalMapQ &map, int n,
                                        const MapLimits &limits = {});

struct RamifiedValue {
  BigRational value;
  long exponent = 0;
};

struct RamifiedReport {
  /// Ascending by value; repeated values have their exponents summed.
  std::vector<RamifiedValue> values;
  /// Non-rational part of p'q - pq' if any (orbits reported symbolically).
  std::optional<PolyQ> irrational_residual;
};

/// t-values phi^m(a), a critical, 1 <= m <= n, with exponent
/// d^(n-m) (e(a) - 1). Values at infinity are dropped.
RamifiedReport ramified_primes(const RationalMapQ &map, int n);

} // namespace perdyn

#endif
