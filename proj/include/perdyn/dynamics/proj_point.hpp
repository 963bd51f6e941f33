#ifndef PERDYN_DYNAMICS_PROJ_POINT_HPP
#define PERDYN_DYNAMICS_PROJ_POINT_HPP

#include <cstdint>

namespace perdyn {

/// A point of P^1(F_p) by index: i in [0, p) is [i:1], and p is [1:0].
struct ProjPoint {
  std::uint64_t index = 0;

  static ProjPoint affine(std::uint64_t x) { return {x}; }
  static ProjPoint infinity(std::uint64_t p) { return {p}; }
  bool is_infinity(std::uint64_t p) const { return index == p; }

  friend bool operator==(ProjPoint a, ProjPoint b) {
    return a.index == b.index;
  }
};

} // namespace perdyn

#endif
