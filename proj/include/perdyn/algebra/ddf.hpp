#ifndef PERDYN_ALGEBRA_DDF_HPP
#define PERDYN_ALGEBRA_DDF_HPP

#include <map>

#include "perdyn/algebra/poly_fp.hpp"

namespace perdyn {

/// degree -> number of monic irreducible factors of that degree.
using DegreeCounts = std::map<int, int>;

/// Distinct-degree factorization of a squarefree polynomial of degree >= 1.
/// The leading coefficient is ignored. Non-squarefree input raises
/// ErrorCode::RamifiedSpecialization.
DegreeCounts distinct_degree_factor(const PolyFp &f);

/// Number of distinct roots in F_p, via deg gcd(f, x^p - x). Works for any
/// nonzero f, squarefree or not.
int count_distinct_roots(const PolyFp &f);

} // namespace perdyn

#endif
