#ifndef PERDYN_ALGEBRA_MODARITH_HPP
#define PERDYN_ALGEBRA_MODARITH_HPP

#include <cstdint>

namespace perdyn::modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return (s >= p || s < a) ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
  return a == 0 ? 0 : p - a;
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

inline std::uint64_t pow(std::uint64_t base, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  base %= p;
  while (e != 0) {
    if (e & 1U)
      r = mul(r, base, p);
    base = mul(base, base, p);
    e >>= 1U;
  }
  return r;
}

/// p prime, a != 0 mod p.
inline std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  return pow(a, p - 2, p);
}

} // namespace perdyn::modp

#endif
