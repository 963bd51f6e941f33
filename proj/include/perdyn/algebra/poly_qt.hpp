#ifndef PERDYN_ALGEBRA_POLY_QT_HPP
#define PERDYN_ALGEBRA_POLY_QT_HPP

#include <vector>

#include "perdyn/algebra/poly_q.hpp"

namespace perdyn {

/// Element of Q[t][x]: coefficients in x (ascending), each a PolyQ in t.
class PolyQt {
public:
  PolyQt() = default;
  explicit PolyQt(std::vector<PolyQ> coeffs);

  /// Embeds f(x) with constant-in-t coefficients.
  static PolyQt from_x(const PolyQ &f);
  /// a(x) - t*b(x), the specialization family of a rational map.
  static PolyQt fiber_family(const PolyQ &a, const PolyQ &b);

  int degree_x() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<PolyQ> &coeffs() const { return coeffs_; }

  friend bool operator==(const PolyQt &a, const PolyQt &b) {
    return a.coeffs_ == b.coeffs_;
  }

private:
  std::vector<PolyQ> coeffs_;
};

/// Res_x(f, g) in Q[t]: the determinant of the Sylvester matrix built from
/// the x-degrees of f and g, by fraction-free (Bareiss) elimination.
PolyQ resultant_qt(const PolyQt &f, const PolyQt &g);

/// Sylvester determinant with explicitly given formal degrees, so leading
/// coefficients may vanish (homogeneous resultants). f, g over Q.
BigRational resultant_formal(const PolyQ &f, int deg_f, const PolyQ &g,
                             int deg_g);

/// Res(f, g) over Q using the actual degrees.
BigRational resultant(const PolyQ &f, const PolyQ &g);

} // namespace perdyn

#endif
