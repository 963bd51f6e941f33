#ifndef PERDYN_WREATH_EXPLICIT_GROUP_HPP
#define PERDYN_WREATH_EXPLICIT_GROUP_HPP

#include <cstdint>
#include <vector>

#include "perdyn/wreath/spectrum.hpp"

namespace perdyn {

using Permutation = std::vector<std::uint32_t>;

/// A permutation group given by listing every element. Only used as a
/// brute-force oracle for the spectrum recursions.
class ExplicitGroup {
public:
  /// Checks degree consistency, identity, closure under composition and
  /// inverses. Duplicates are removed.
  explicit ExplicitGroup(std::vector<Permutation> elements);

  static ExplicitGroup symmetric(int d);
  static ExplicitGroup cyclic(int d);

  int degree() const { return degree_; }
  const std::vector<Permutation> &elements() const { return elements_; }

  FixedPointSpectrum spectrum() const;

private:
  int degree_;
  std::vector<Permutation> elements_;
};

/// Elements (pi; tau_1..tau_l) of top[bottom], acting on {0..l-1} x {0..m-1}
/// flattened as i*m + j, by (i, j) -> (pi(i), tau_i(j)).
std::vector<Permutation> wreath_elements(const ExplicitGroup &top,
                                         const std::vector<Permutation> &bottom,
                                         int bottom_degree);

/// Fixed-point spectrum of [G]^n by listing all its elements as explicit
/// permutations of the d^n leaves and counting fixed points directly.
/// Throws Resource when |G|^((d^n - 1)/(d - 1)) exceeds `budget`.
FixedPointSpectrum enumerate_wreath(const ExplicitGroup &g, int n,
                                    std::uint64_t budget = 10'000'000);

} // namespace perdyn

#endif
