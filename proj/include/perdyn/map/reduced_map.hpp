#ifndef PERDYN_MAP_REDUCED_MAP_HPP
#define PERDYN_MAP_REDUCED_MAP_HPP

#include <cstdint>
#include <vector>

#include "perdyn/dynamics/proj_point.hpp"
#include "perdyn/map/rational_map.hpp"

namespace perdyn {

/// phi mod p for a prime of good reduction.
class ReducedMap {
public:
  /// Throws Domain if p is a prime of bad reduction.
  ReducedMap(const RationalMapQ &map, std::uint64_t p);

  std::uint64_t prime() const { return p_; }
  int degree() const { return degree_; }
  const PolyFp &num() const { return num_; }
  const PolyFp &den() const { return den_; }

  /// [P(X,Y) : Q(X,Y)], normalized.
  ProjPoint eval(ProjPoint pt) const;

private:
  std::uint64_t p_;
  int degree_;
  PolyFp num_;
  PolyFp den_;
  // Values at [1:0]: the X^d coefficients.
  std::uint64_t num_top_;
  std::uint64_t den_top_;
};

inline ProjPoint eval_point(const ReducedMap &map, ProjPoint pt) {
  return map.eval(pt);
}

/// Same recursion as over Q, carried out in F_p[x].
IteratePairFp iterate(const ReducedMap &map, int n,
                      const MapLimits &limits = {});

} // namespace perdyn

#endif
