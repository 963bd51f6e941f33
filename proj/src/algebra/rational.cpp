#include "perdyn/algebra/rational.hpp"

#include <cctype>

#include "perdyn/algebra/modarith.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

const char *to_string(ErrorCode code) noexcept {
  switch (code) {
  case ErrorCode::DegenerateInput:
    return "degenerate input";
  case ErrorCode::ModulusMismatch:
    return "modulus mismatch";
  case ErrorCode::RamifiedSpecialization:
    return "ramified specialization";
  case ErrorCode::Syntax:
    return "syntax error";
  case ErrorCode::NotDynamical:
    return "not a dynamical system";
  case ErrorCode::Resource:
    return "resource limit";
  case ErrorCode::InvalidCurve:
    return "invalid curve";
  case ErrorCode::Domain:
    return "domain error";
  case ErrorCode::UnsupportedPoint:
    return "unsupported point";
  case ErrorCode::Inseparable:
    return "inseparable";
  case ErrorCode::InvariantViolation:
    return "invariant violation";
  case ErrorCode::UnknownPreset:
    return "unknown preset";
  case ErrorCode::Io:
    return "i/o error";
  }
  return "error";
}

std::string to_string(const BigInt &z) { return z.get_str(); }

std::string to_string(const BigRational &q) { return q.get_str(); }

std::string fraction_string(const BigRational &q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

BigRational parse_rational(std::string_view text) {
  auto fail = [&](const char *why) {
    throw Error(ErrorCode::Syntax, std::string(why) + " in rational literal '" +
                                       std::string(text) + "'");
  };
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])))
      ++j;
    return j;
  };
  std::size_t int_end = digits(i);
  if (int_end == i)
    fail("expected digits");
  BigRational value(BigInt(std::string(text.substr(i, int_end - i))));
  i = int_end;
  if (i < text.size() && text[i] == '.') {
    std::size_t frac_end = digits(i + 1);
    if (frac_end == i + 1)
      fail("expected digits after '.'");
    std::string frac(text.substr(i + 1, frac_end - i - 1));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    BigRational part(BigInt(frac), scale);
    part.canonicalize();
    value += part;
    i = frac_end;
  } else if (i < text.size() && text[i] == '/') {
    std::size_t den_end = digits(i + 1);
    if (den_end == i + 1)
      fail("expected denominator");
    BigInt den(std::string(text.substr(i + 1, den_end - i - 1)));
    if (den == 0)
      fail("zero denominator");
    value /= BigRational(den);
    i = den_end;
  }
  if (i != text.size())
    fail("trailing characters");
  value.canonicalize();
  return negative ? BigRational(-value) : value;
}

BigInt floor(const BigRational &q) {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

BigInt ceil(const BigRational &q) {
  BigInt r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

std::string decimal_string(const BigRational &q, int places) {
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(places));
  BigRational scaled = abs(q) * scale;
  BigInt rounded = floor(scaled + BigRational(1, 2));
  std::string digits = rounded.get_str();
  if (places > 0) {
    if (digits.size() <= static_cast<std::size_t>(places))
      digits.insert(0, static_cast<std::size_t>(places) + 1 - digits.size(),
                    '0');
    digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  }
  if (q < 0 && rounded != 0)
    digits.insert(0, "-");
  return digits;
}

double to_double(const BigRational &q) { return q.get_d(); }

std::uint64_t reduce_mod(const BigInt &z, std::uint64_t p) {
  BigInt r;
  BigInt modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  if (r != 0)
    mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

std::uint64_t reduce_mod(const BigRational &q, std::uint64_t p) {
  std::uint64_t den = reduce_mod(q.get_den(), p);
  if (den == 0)
    throw Error(ErrorCode::Domain, "denominator of " + to_string(q) +
                                       " vanishes mod " + std::to_string(p));
  std::uint64_t num = reduce_mod(q.get_num(), p);
  return modp::mul(num, modp::inv(den, p), p);
}

} // namespace perdyn
