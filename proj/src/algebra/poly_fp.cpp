#include "perdyn/algebra/poly_fp.hpp"

#include "perdyn/algebra/modarith.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

PolyFp::PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs)
    : p_(p), coeffs_(std::move(coeffs)) {
  for (auto &c : coeffs_)
    c %= p_;
  trim();
}

PolyFp PolyFp::constant(std::uint64_t p, std::uint64_t c) {
  return PolyFp(p, {c});
}

PolyFp PolyFp::monomial(std::uint64_t p, std::uint64_t c, int k) {
  std::vector<std::uint64_t> v(static_cast<std::size_t>(k) + 1, 0);
  v.back() = c;
  return PolyFp(p, std::move(v));
}

PolyFp PolyFp::reduce(const PolyQ &f, std::uint64_t p) {
  std::vector<std::uint64_t> v;
  v.reserve(f.coeffs().size());
  for (const auto &c : f.coeffs())
    v.push_back(reduce_mod(c, p));
  return PolyFp(p, std::move(v));
}

void PolyFp::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0)
    coeffs_.pop_back();
}

void PolyFp::check_same_modulus(const PolyFp &other) const {
  if (p_ != other.p_)
    throw Error(ErrorCode::ModulusMismatch, "operands over F_" +
                                                std::to_string(p_) + " and F_" +
                                                std::to_string(other.p_));
}

std::uint64_t PolyFp::coeff(int k) const {
  if (k < 0 || k > degree())
    return 0;
  return coeffs_[static_cast<std::size_t>(k)];
}

std::uint64_t PolyFp::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = modp::add(modp::mul(acc, x, p_), *it, p_);
  return acc;
}

PolyFp &PolyFp::operator+=(const PolyFp &rhs) {
  check_same_modulus(rhs);
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] = modp::add(coeffs_[i], rhs.coeffs_[i], p_);
  trim();
  return *this;
}

PolyFp &PolyFp::operator-=(const PolyFp &rhs) {
  check_same_modulus(rhs);
  if (rhs.coeffs_.size() > coeffs_.size())
    coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i)
    coeffs_[i] = modp::sub(coeffs_[i], rhs.coeffs_[i], p_);
  trim();
  return *this;
}

PolyFp &PolyFp::operator*=(const PolyFp &rhs) {
  check_same_modulus(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  // For p < 2^31 each product is below 2^62, so 128-bit sums cannot
  // overflow and one reduction per output coefficient suffices.
  const std::size_t n = coeffs_.size() + rhs.coeffs_.size() - 1;
  std::vector<std::uint64_t> out(n, 0);
  if (p_ < (std::uint64_t{1} << 31)) {
    std::vector<unsigned __int128> acc(n, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const std::uint64_t a = coeffs_[i];
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        acc[i + j] += static_cast<unsigned __int128>(a) * rhs.coeffs_[j];
    }
    for (std::size_t k = 0; k < n; ++k)
      out[k] = static_cast<std::uint64_t>(acc[k] % p_);
  } else {
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      const std::uint64_t a = coeffs_[i];
      if (a == 0)
        continue;
      for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
        out[i + j] =
            modp::add(out[i + j], modp::mul(a, rhs.coeffs_[j], p_), p_);
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

PolyFp &PolyFp::scale(std::uint64_t c) {
  c %= p_;
  for (auto &x : coeffs_)
    x = modp::mul(x, c, p_);
  trim();
  return *this;
}

std::pair<PolyFp, PolyFp> PolyFp::divmod(const PolyFp &divisor) const {
  check_same_modulus(divisor);
  if (divisor.is_zero())
    throw Error(ErrorCode::DegenerateInput, "polynomial division by zero");
  if (degree() < divisor.degree())
    return {PolyFp(p_), *this};
  std::vector<std::uint64_t> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  std::vector<std::uint64_t> quot(rem.size() - dd, 0);
  const std::uint64_t lead_inv = modp::inv(divisor.leading(), p_);
  for (std::size_t k = quot.size(); k-- > 0;) {
    std::uint64_t q = modp::mul(rem[k + dd], lead_inv, p_);
    quot[k] = q;
    if (q == 0)
      continue;
    for (std::size_t j = 0; j <= dd; ++j)
      rem[k + j] =
          modp::sub(rem[k + j], modp::mul(q, divisor.coeffs_[j], p_), p_);
  }
  rem.resize(dd);
  return {PolyFp(p_, std::move(quot)), PolyFp(p_, std::move(rem))};
}

PolyFp PolyFp::monic() const {
  if (is_zero())
    return *this;
  PolyFp r = *this;
  return r.scale(modp::inv(leading(), p_));
}

PolyFp PolyFp::derivative() const {
  if (coeffs_.size() <= 1)
    return PolyFp(p_);
  std::vector<std::uint64_t> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    out[i - 1] = modp::mul(coeffs_[i], i % p_, p_);
  return PolyFp(p_, std::move(out));
}

PolyFp PolyFp::compose(const PolyFp &inner) const {
  check_same_modulus(inner);
  PolyFp acc(p_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(p_, *it);
  }
  return acc;
}

std::string PolyFp::to_string(const std::string &var) const {
  if (is_zero())
    return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    std::uint64_t c = coeffs_[static_cast<std::size_t>(k)];
    if (c == 0)
      continue;
    if (!out.empty())
      out += " + ";
    if (k == 0 || c != 1)
      out += std::to_string(c);
    if (k > 0) {
      if (c != 1)
        out += "*";
      out += var;
      if (k > 1)
        out += "^" + std::to_string(k);
    }
  }
  return out;
}

PolyFp gcd(PolyFp a, PolyFp b) {
  while (!b.is_zero()) {
    PolyFp r = a.mod(b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

PolyFp powmod(const PolyFp &base, const BigInt &e, const PolyFp &modulus) {
  if (e < 0)
    throw Error(ErrorCode::Domain, "negative exponent");
  const std::uint64_t p = modulus.modulus();
  PolyFp result = PolyFp::constant(p, 1).mod(modulus);
  PolyFp b = base.mod(modulus);
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result).mod(modulus);
    if (mpz_tstbit(e.get_mpz_t(), i))
      result = (result * b).mod(modulus);
  }
  return result;
}

bool is_squarefree(const PolyFp &f) {
  if (f.degree() < 1)
    return false;
  PolyFp df = f.derivative();
  if (df.is_zero())
    return false;
  return gcd(f, df).degree() == 0;
}

} // namespace perdyn
