#include "perdyn/algebra/poly_qt.hpp"

#include <algorithm>
#include <utility>

#include "perdyn/error.hpp"

namespace perdyn {

PolyQt::PolyQt(std::vector<PolyQ> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero())
    coeffs_.pop_back();
}

PolyQt PolyQt::from_x(const PolyQ &f) {
  std::vector<PolyQ> c;
  c.reserve(f.coeffs().size());
  for (const auto &a : f.coeffs())
    c.push_back(PolyQ::constant(a));
  return PolyQt(std::move(c));
}

PolyQt PolyQt::fiber_family(const PolyQ &a, const PolyQ &b) {
  const int n = std::max(a.degree(), b.degree());
  std::vector<PolyQ> c;
  for (int k = 0; k <= n; ++k)
    c.push_back(PolyQ({a.coeff(k), -b.coeff(k)}));
  return PolyQt(std::move(c));
}

namespace {

struct RationalRing {
  static bool is_zero(const BigRational &a) { return a == 0; }
  static BigRational one() { return BigRational(1); }
  static BigRational exact_div(const BigRational &a, const BigRational &b) {
    return a / b;
  }
};

struct PolyRing {
  static bool is_zero(const PolyQ &a) { return a.is_zero(); }
  static PolyQ one() { return PolyQ::constant(BigRational(1)); }
  static PolyQ exact_div(const PolyQ &a, const PolyQ &b) {
    return a.exact_div(b);
  }
};

// Bareiss fraction-free elimination; every division is exact in an integral
// domain. Row swaps flip the sign.
template <class T, class Ring>
T bareiss_determinant(std::vector<std::vector<T>> m) {
  const std::size_t n = m.size();
  if (n == 0)
    return Ring::one();
  bool negate = false;
  T prev = Ring::one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (Ring::is_zero(m[k][k])) {
      std::size_t pivot = k + 1;
      while (pivot < n && Ring::is_zero(m[pivot][k]))
        ++pivot;
      if (pivot == n)
        return T();
      std::swap(m[k], m[pivot]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = Ring::exact_div(num, prev);
      }
      m[i][k] = T();
    }
    prev = m[k][k];
  }
  T det = m[n - 1][n - 1];
  return negate ? T(-det) : det;
}

// Rows of f's coefficients (descending) shifted deg_g times, then g's shifted
// deg_f times. The getters return the x^k coefficient.
template <class T, class GetF, class GetG>
std::vector<std::vector<T>> sylvester(int deg_f, int deg_g, GetF f_coeff,
                                      GetG g_coeff) {
  const std::size_t size = static_cast<std::size_t>(deg_f + deg_g);
  std::vector<std::vector<T>> m(size, std::vector<T>(size));
  for (int r = 0; r < deg_g; ++r)
    for (int k = 0; k <= deg_f; ++k)
      m[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + deg_f - k)] =
          f_coeff(k);
  for (int r = 0; r < deg_f; ++r)
    for (int k = 0; k <= deg_g; ++k)
      m[static_cast<std::size_t>(deg_g + r)]
       [static_cast<std::size_t>(r + deg_g - k)] = g_coeff(k);
  return m;
}

} // namespace

PolyQ resultant_qt(const PolyQt &f, const PolyQt &g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::DegenerateInput, "resultant of a zero polynomial");
  auto fc = [&](int k) { return f.coeffs()[static_cast<std::size_t>(k)]; };
  auto gc = [&](int k) { return g.coeffs()[static_cast<std::size_t>(k)]; };
  auto m = sylvester<PolyQ>(f.degree_x(), g.degree_x(), fc, gc);
  return bareiss_determinant<PolyQ, PolyRing>(std::move(m));
}

BigRational resultant_formal(const PolyQ &f, int deg_f, const PolyQ &g,
                             int deg_g) {
  if (f.is_zero() || g.is_zero())
    throw Error(ErrorCode::DegenerateInput, "resultant of a zero polynomial");
  if (f.degree() > deg_f || g.degree() > deg_g)
    throw Error(ErrorCode::DegenerateInput,
                "formal degree below actual degree");
  auto m = sylvester<BigRational>(
      deg_f, deg_g, [&](int k) { return f.coeff(k); },
      [&](int k) { return g.coeff(k); });
  return bareiss_determinant<BigRational, RationalRing>(std::move(m));
}

BigRational resultant(const PolyQ &f, const PolyQ &g) {
  return resultant_formal(f, f.degree(), g, g.degree());
}

} // namespace perdyn
