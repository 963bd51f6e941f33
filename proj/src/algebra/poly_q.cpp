#include "perdyn/algebra/poly_q.hpp"

#include <algorithm>

#include "perdyn/error.hpp"

namespace perdyn {

PolyQ::PolyQ(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c.canonicalize();
  trim();
}

PolyQ::PolyQ(std::initializer_list<BigRational> coeffs)
    : PolyQ(std::vector<BigRational>(coeffs)) {}

PolyQ PolyQ::constant(const BigRational &c) { return PolyQ({c}); }

PolyQ PolyQ::monomial(const BigRational &c, int k) {
  std::vector<BigRational> v(static_cast<std::size_t>(k) + 1);
  v.back() = c;
  return PolyQ(std::move(v));
}

void PolyQ::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

BigRational PolyQ::coeff(int k) const {
  if (k < 0 || k > degree())
    return BigRational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

BigRational PolyQ::eval(const BigRational &x) const {
  BigRational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

PolyQ PolyQ::operator-() const {
  PolyQ r = *this;
  for (auto &c : r.coeffs_)
    c = -c;
  return r;
}

PolyQ &PolyQ::operator+=(const PolyQ &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ &PolyQ::operator-=(const PolyQ &rhs) {
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

PolyQ &PolyQ::operator*=(const PolyQ &rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyQ &PolyQ::operator*=(const BigRational &c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

std::pair<PolyQ, PolyQ> PolyQ::divmod(const PolyQ &divisor) const {
  if (divisor.is_zero())
    throw Error(ErrorCode::DegenerateInput, "polynomial division by zero");
  if (degree() < divisor.degree())
    return {PolyQ(), *this};
  std::vector<BigRational> rem = coeffs_;
  std::vector<BigRational> quot(
      static_cast<std::size_t>(degree() - divisor.degree()) + 1);
  const BigRational lead_inv = 1 / divisor.leading();
  const std::size_t dd = divisor.coeffs_.size() - 1;
  for (std::size_t k = quot.size(); k-- > 0;) {
    BigRational q = rem[k + dd] * lead_inv;
    quot[k] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k + j] -= q * divisor.coeffs_[j];
  }
  rem.resize(dd);
  return {PolyQ(std::move(quot)), PolyQ(std::move(rem))};
}

PolyQ PolyQ::exact_div(const PolyQ &divisor) const {
  auto [q, r] = divmod(divisor);
  if (!r.is_zero())
    throw Error(ErrorCode::InvariantViolation,
                "inexact polynomial division: " + to_string() + " by " +
                    divisor.to_string());
  return q;
}

PolyQ PolyQ::monic() const {
  if (is_zero())
    return *this;
  return *this * BigRational(1 / leading());
}

PolyQ PolyQ::derivative() const {
  if (coeffs_.size() <= 1)
    return PolyQ();
  std::vector<BigRational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = coeffs_[i] * static_cast<long>(i);
  return PolyQ(std::move(out));
}

PolyQ PolyQ::pow(unsigned e) const {
  PolyQ result = constant(BigRational(1));
  PolyQ base = *this;
  while (e != 0) {
    if (e & 1U)
      result *= base;
    e >>= 1U;
    if (e != 0)
      base *= base;
  }
  return result;
}

PolyQ PolyQ::compose(const PolyQ &inner) const {
  PolyQ acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

BigInt PolyQ::denominator_lcm() const {
  BigInt l(1);
  for (const auto &c : coeffs_)
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

PolyQ PolyQ::primitive() const {
  if (is_zero())
    return *this;
  BigInt l = denominator_lcm();
  BigInt g(0);
  for (const auto &c : coeffs_) {
    BigInt v = c.get_num() * (l / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  BigRational scale(l, g);
  scale.canonicalize();
  if (leading() < 0)
    scale = -scale;
  return *this * scale;
}

std::string PolyQ::to_string(const std::string &var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const BigRational &c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    BigRational mag = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (k == 0) {
      out += perdyn::to_string(mag);
      continue;
    }
    if (mag != 1)
      out += perdyn::to_string(mag) + "*";
    out += var;
    if (k > 1)
      out += "^" + std::to_string(k);
  }
  return out;
}

PolyQ gcd(PolyQ a, PolyQ b) {
  while (!b.is_zero()) {
    PolyQ r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

} // namespace perdyn
