#include "perdyn/algebra/ddf.hpp"

#include "perdyn/error.hpp"

namespace perdyn {

DegreeCounts distinct_degree_factor(const PolyFp &f) {
  if (f.degree() < 1)
    throw Error(ErrorCode::DegenerateInput,
                "distinct-degree factorization needs degree >= 1");
  if (!is_squarefree(f))
    throw Error(ErrorCode::RamifiedSpecialization,
                "polynomial is not squarefree over F_" +
                    std::to_string(f.modulus()));
  const std::uint64_t p = f.modulus();
  const BigInt exponent(std::to_string(p));
  DegreeCounts counts;
  PolyFp rest = f.monic();
  const PolyFp x = PolyFp::x(p);
  // h = x^(p^i) mod rest
  PolyFp h = x.mod(rest);
  for (int i = 1; 2 * i <= rest.degree(); ++i) {
    h = powmod(h, exponent, rest);
    PolyFp g = gcd(rest, h - x);
    if (g.degree() > 0) {
      counts[i] += g.degree() / i;
      rest = rest.divmod(g).first;
      h = h.mod(rest);
    }
  }
  if (rest.degree() > 0)
    counts[rest.degree()] += 1;
  return counts;
}

int count_distinct_roots(const PolyFp &f) {
  if (f.is_zero())
    throw Error(ErrorCode::DegenerateInput, "root count of zero polynomial");
  if (f.degree() == 0)
    return 0;
  const std::uint64_t p = f.modulus();
  const PolyFp x = PolyFp::x(p);
  PolyFp xp = powmod(x, BigInt(std::to_string(p)), f);
  return gcd(f, xp - x).degree();
}

} // namespace perdyn
