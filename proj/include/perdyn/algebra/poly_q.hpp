#ifndef PERDYN_ALGEBRA_POLY_Q_HPP
#define PERDYN_ALGEBRA_POLY_Q_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "perdyn/algebra/rational.hpp"

namespace perdyn {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// The zero polynomial has no coefficients; otherwise the last one is nonzero.
class PolyQ {
public:
  PolyQ() = default;
  explicit PolyQ(std::vector<BigRational> coeffs);
  PolyQ(std::initializer_list<BigRational> coeffs);

  static PolyQ constant(const BigRational &c);
  /// c * x^k
  static PolyQ monomial(const BigRational &c, int k);
  static PolyQ x() { return monomial(BigRational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  const std::vector<BigRational> &coeffs() const { return coeffs_; }
  /// Coefficient of x^k, zero beyond the degree.
  BigRational coeff(int k) const;
  const BigRational &leading() const { return coeffs_.back(); }

  BigRational eval(const BigRational &x) const;

  PolyQ operator-() const;
  PolyQ &operator+=(const PolyQ &rhs);
  PolyQ &operator-=(const PolyQ &rhs);
  PolyQ &operator*=(const PolyQ &rhs);
  PolyQ &operator*=(const BigRational &c);

  friend PolyQ operator+(PolyQ a, const PolyQ &b) { return a += b; }
  friend PolyQ operator-(PolyQ a, const PolyQ &b) { return a -= b; }
  friend PolyQ operator*(PolyQ a, const PolyQ &b) { return a *= b; }
  friend PolyQ operator*(PolyQ a, const BigRational &c) { return a *= c; }
  friend PolyQ operator*(const BigRational &c, PolyQ a) { return a *= c; }
  friend bool operator==(const PolyQ &a, const PolyQ &b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Euclidean division; throws on a zero divisor.
  std::pair<PolyQ, PolyQ> divmod(const PolyQ &divisor) const;
  /// Division that must be exact; throws InvariantViolation otherwise.
  PolyQ exact_div(const PolyQ &divisor) const;

  PolyQ monic() const;
  PolyQ derivative() const;
  PolyQ pow(unsigned e) const;
  /// this(inner(x))
  PolyQ compose(const PolyQ &inner) const;

  /// Scaled to integer coefficients with content 1 and positive leading
  /// coefficient. Returns the zero polynomial unchanged.
  PolyQ primitive() const;
  /// lcm of coefficient denominators.
  BigInt denominator_lcm() const;

  /// Human-readable, e.g. "x^2 - 3*x + 1/2".
  std::string to_string(const std::string &var = "x") const;

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

/// Monic gcd (zero if both inputs are zero).
PolyQ gcd(PolyQ a, PolyQ b);

} // namespace perdyn

#endif
