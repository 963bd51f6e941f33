#include "perdyn/census/sieve.hpp"

#include <algorithm>
#include <cmath>

#include "perdyn/algebra/modarith.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

namespace {

constexpr std::uint64_t kSegment = 1U << 16;

std::vector<std::uint32_t> base_primes(std::uint64_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> out;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i])
      continue;
    out.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= limit; j += i)
      composite[j] = true;
  }
  return out;
}

std::uint64_t isqrt(std::uint64_t n) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (r * r > n)
    --r;
  while ((r + 1) * (r + 1) <= n)
    ++r;
  return r;
}

} // namespace

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  if (hi < 2 || hi < lo)
    return out;
  if (hi > (std::uint64_t{1} << 40))
    throw Error(ErrorCode::Resource, "sieve limited to 2^40");
  lo = std::max<std::uint64_t>(lo, 2);
  const auto small = base_primes(isqrt(hi));
  std::vector<bool> mark(kSegment);
  for (std::uint64_t seg = lo; seg <= hi; seg += kSegment) {
    const std::uint64_t seg_hi = std::min(hi, seg + kSegment - 1);
    std::fill(mark.begin(), mark.end(), false);
    for (std::uint64_t p : small) {
      if (p * p > seg_hi)
        break;
      std::uint64_t start = std::max(p * p, (seg + p - 1) / p * p);
      for (std::uint64_t j = start; j <= seg_hi; j += p)
        mark[j - seg] = true;
    }
    for (std::uint64_t v = seg; v <= seg_hi; ++v)
      if (!mark[v - seg])
        out.push_back(v);
  }
  return out;
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0)
      return n == p;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = modp::pow(a, d, n);
    if (x == 1 || x == n - 1)
      continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = modp::mul(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness)
      return false;
  }
  return true;
}

} // namespace perdyn
