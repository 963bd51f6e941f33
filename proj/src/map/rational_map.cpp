#include "perdyn/map/rational_map.hpp"

#include <algorithm>

#include "perdyn/algebra/poly_qt.hpp"
#include "perdyn/error.hpp"

namespace perdyn {

namespace {

std::vector<BigInt> homogeneous_coeffs(const PolyQ &f, int d) {
  std::vector<BigInt> out(static_cast<std::size_t>(d) + 1);
  for (int i = 0; i <= d; ++i) {
    BigRational c = f.coeff(i);
    out[static_cast<std::size_t>(i)] = c.get_num();
  }
  return out;
}

std::size_t max_coeff_bits(const PolyQ &f) {
  std::size_t bits = 0;
  for (const auto &c : f.coeffs()) {
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2));
    bits = std::max(bits, mpz_sizeinbase(c.get_den_mpz_t(), 2));
  }
  return bits;
}

} // namespace

RationalMapQ::RationalMapQ(const PolyQ &num, const PolyQ &den,
                           const MapLimits &limits) {
  if (den.is_zero())
    throw Error(ErrorCode::DegenerateInput,
                "denominator is the zero polynomial");
  PolyQ g = gcd(num, den);
  PolyQ n = num.exact_div(g);
  PolyQ m = den.exact_div(g);

  // Clear denominators jointly, then divide out the joint content.
  BigInt l(1);
  mpz_lcm(l.get_mpz_t(), n.denominator_lcm().get_mpz_t(),
          m.denominator_lcm().get_mpz_t());
  n *= BigRational(l);
  m *= BigRational(l);
  BigInt content(0);
  for (const auto *poly : {&n, &m})
    for (const auto &c : poly->coeffs())
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
  BigRational scale(1, content);
  scale.canonicalize();
  if (m.leading() < 0)
    scale = -scale;
  num_ = n * scale;
  den_ = m * scale;

  degree_ = std::max(num_.degree(), den_.degree());
  if (degree_ < 2)
    throw Error(ErrorCode::NotDynamical, "map " + render() + " has degree " +
                                             std::to_string(degree_) + " < 2");
  if (degree_ > limits.max_degree)
    throw Error(ErrorCode::Resource,
                "degree " + std::to_string(degree_) +
                    " exceeds max_degree=" + std::to_string(limits.max_degree));
  BigRational res = resultant_formal(num_, degree_, den_, degree_);
  if (res == 0 || res.get_den() != 1)
    throw Error(ErrorCode::InvariantViolation,
                "homogeneous resultant of normalized map is " + to_string(res));
  resultant_ = res.get_num();
}

std::vector<BigInt> RationalMapQ::hom_num() const {
  return homogeneous_coeffs(num_, degree_);
}

std::vector<BigInt> RationalMapQ::hom_den() const {
  return homogeneous_coeffs(den_, degree_);
}

std::string RationalMapQ::render() const {
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

std::string RationalMapQ::debug_dump() const {
  auto dump = [](const PolyQ &f) {
    std::string s = "[";
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
      if (i)
        s += ", ";
      s += to_string(f.coeffs()[i]);
    }
    return s + "]";
  };
  return "num=" + dump(num_) + " den=" + dump(den_) +
         " d=" + std::to_string(degree_) + " res=" + to_string(resultant_);
}

bool good_reduction(const RationalMapQ &map, std::uint64_t p) {
  return reduce_mod(map.hom_resultant(), p) != 0;
}

IteratePairQ iterate(const RationalMapQ &map, int n, const MapLimits &limits) {
  if (n < 0)
    throw Error(ErrorCode::Domain, "negative iterate count");
  if (n > limits.max_iterate_q)
    throw Error(ErrorCode::Resource, "iterate n=" + std::to_string(n) +
                                         " exceeds max_iterate_q=" +
                                         std::to_string(limits.max_iterate_q));
  IteratePairQ out;
  out.n = 0;
  out.hom_degree = 1;
  out.num = PolyQ::x();
  out.den = PolyQ::constant(BigRational(1));
  const int d = map.degree();
  for (int k = 1; k <= n; ++k) {
    // P_k(x,1) = sum a_i p^i q^(d-i), likewise for Q_k.
    std::vector<PolyQ> ppow(static_cast<std::size_t>(d) + 1),
        qpow(static_cast<std::size_t>(d) + 1);
    ppow[0] = qpow[0] = PolyQ::constant(BigRational(1));
    for (std::size_t i = 1; i <= static_cast<std::size_t>(d); ++i) {
      ppow[i] = ppow[i - 1] * out.num;
      qpow[i] = qpow[i - 1] * out.den;
    }
    PolyQ next_num, next_den;
    for (int i = 0; i <= d; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      const auto uc = static_cast<std::size_t>(d - i);
      BigRational a = map.num().coeff(i), b = map.den().coeff(i);
      if (a != 0)
        next_num += ppow[ui] * qpow[uc] * a;
      if (b != 0)
        next_den += ppow[ui] * qpow[uc] * b;
    }
    out.num = std::move(next_num);
    out.den = std::move(next_den);
    out.n = k;
    out.hom_degree *= d;
    const std::size_t bits =
        std::max(max_coeff_bits(out.num), max_coeff_bits(out.den));
    if (bits > limits.max_coeff_bits)
      throw Error(ErrorCode::Resource,
                  "coefficients reached " + std::to_string(bits) +
                      " bits at n=" + std::to_string(k) +
                      ", above max_coeff_bits=" +
                      std::to_string(limits.max_coeff_bits));
  }
  return out;
}

RationalMapQ lattes2(const BigRational &a, const BigRational &b) {
  BigRational disc = 4 * a * a * a + 27 * b * b;
  if (disc == 0)
    throw Error(ErrorCode::InvalidCurve, "y^2 = x^3 + (" + to_string(a) +
                                             ")x + (" + to_string(b) +
                                             ") is singular");
  PolyQ num({a * a, BigRational(-8 * b), BigRational(-2 * a), BigRational(0),
             BigRational(1)});
  PolyQ den(
      {BigRational(4 * b), BigRational(4 * a), BigRational(0), BigRational(4)});
  return RationalMapQ(num, den);
}

RationalMapQ chebyshev(int d) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "Chebyshev degree must be >= 2");
  PolyQ prev = PolyQ::constant(BigRational(2));
  PolyQ cur = PolyQ::x();
  for (int k = 1; k < d; ++k) {
    PolyQ next = PolyQ::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return RationalMapQ(cur, PolyQ::constant(BigRational(1)));
}

RationalMapQ unicritical(int d, const BigRational &c) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "unicritical degree must be >= 2");
  return RationalMapQ(PolyQ::monomial(BigRational(1), d) + PolyQ::constant(c),
                      PolyQ::constant(BigRational(1)));
}

} // namespace perdyn
