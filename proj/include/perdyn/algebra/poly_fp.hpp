#ifndef PERDYN_ALGEBRA_POLY_FP_HPP
#define PERDYN_ALGEBRA_POLY_FP_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "perdyn/algebra/poly_q.hpp"

namespace perdyn {

/// Dense univariate polynomial over F_p for a machine-word prime p.
/// Residues are kept in [0, p); the last coefficient is nonzero.
class PolyFp {
public:
  explicit PolyFp(std::uint64_t p) : p_(p) {}
  PolyFp(std::uint64_t p, std::vector<std::uint64_t> coeffs);

  static PolyFp constant(std::uint64_t p, std::uint64_t c);
  static PolyFp monomial(std::uint64_t p, std::uint64_t c, int k);
  static PolyFp x(std::uint64_t p) { return monomial(p, 1, 1); }
  /// Reduction of a polynomial over Q; denominators must be units mod p.
  static PolyFp reduce(const PolyQ &f, std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<std::uint64_t> &coeffs() const { return coeffs_; }
  std::uint64_t coeff(int k) const;
  std::uint64_t leading() const { return coeffs_.back(); }

  std::uint64_t eval(std::uint64_t x) const;

  PolyFp &operator+=(const PolyFp &rhs);
  PolyFp &operator-=(const PolyFp &rhs);
  PolyFp &operator*=(const PolyFp &rhs);
  PolyFp &scale(std::uint64_t c);

  friend PolyFp operator+(PolyFp a, const PolyFp &b) { return a += b; }
  friend PolyFp operator-(PolyFp a, const PolyFp &b) { return a -= b; }
  friend PolyFp operator*(PolyFp a, const PolyFp &b) { return a *= b; }
  friend bool operator==(const PolyFp &a, const PolyFp &b) {
    return a.p_ == b.p_ && a.coeffs_ == b.coeffs_;
  }

  std::pair<PolyFp, PolyFp> divmod(const PolyFp &divisor) const;
  PolyFp mod(const PolyFp &divisor) const { return divmod(divisor).second; }

  PolyFp monic() const;
  PolyFp derivative() const;
  PolyFp compose(const PolyFp &inner) const;

  std::string to_string(const std::string &var = "x") const;

private:
  void trim();
  void check_same_modulus(const PolyFp &other) const;

  std::uint64_t p_;
  std::vector<std::uint64_t> coeffs_;
};

/// Monic gcd; zero if both are zero.
PolyFp gcd(PolyFp a, PolyFp b);

/// base^e mod modulus, by square-and-multiply with reduction at every step.
PolyFp powmod(const PolyFp &base, const BigInt &e, const PolyFp &modulus);

/// gcd(f, f') == 1 and deg f >= 1.
bool is_squarefree(const PolyFp &f);

} // namespace perdyn

#endif
