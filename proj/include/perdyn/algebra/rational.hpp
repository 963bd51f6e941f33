#ifndef PERDYN_ALGEBRA_RATIONAL_HPP
#define PERDYN_ALGEBRA_RATIONAL_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace perdyn {

// GMP keeps mpq_class canonical (coprime, positive denominator) after every
// arithmetic operation, which is the BigRational invariant.
using BigInt = mpz_class;
using BigRational = mpq_class;

/// "num/den", or just "num" when the denominator is 1.
std::string to_string(const BigRational &q);
std::string to_string(const BigInt &z);

/// Accepts "a", "-a", "a/b" and finite decimals "1.25" (converted exactly).
BigRational parse_rational(std::string_view text);

/// Always "num/den", even for integers. This is the record format.
std::string fraction_string(const BigRational &q);

/// Fixed-point decimal rounded half away from zero.
std::string decimal_string(const BigRational &q, int places);

double to_double(const BigRational &q);

BigInt floor(const BigRational &q);
BigInt ceil(const BigRational &q);

/// Residue of q modulo p; requires p not dividing the denominator.
std::uint64_t reduce_mod(const BigRational &q, std::uint64_t p);
std::uint64_t reduce_mod(const BigInt &z, std::uint64_t p);

} // namespace perdyn

#endif
