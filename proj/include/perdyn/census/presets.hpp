#ifndef PERDYN_CENSUS_PRESETS_HPP
#define PERDYN_CENSUS_PRESETS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "perdyn/census/sweep.hpp"
#include "perdyn/map/rational_map.hpp"

namespace perdyn {

struct Preset {
  std::string name;
  RationalMapQ map;
  std::vector<Congruence> filters;
  /// Expected asymptotic behaviour, e.g. "liminf 1/4".
  std::string annotation;
  /// Where the expectation comes from.
  std::string source;
  std::uint64_t lo = 3;
  std::uint64_t hi = 20000;
};

/// Names: powering-<d>, chebyshev-2, chebyshev-odd-<l>, chebyshev-composite
/// [-<d>], unicritical-generic, lattes2-<a>-<b> (an empty token before a
/// coefficient is a minus sign, so lattes2--1-0 is a = -1, b = 0).
/// r is the exponent for powering presets (filter p = 1 mod d^r).
/// Throws UnknownPreset for anything else.
Preset make_preset(std::string_view name, int r = 3);

std::vector<std::string> preset_names();

} // namespace perdyn

#endif
