#include "perdyn/bounds/chebotarev.hpp"

#include "perdyn/error.hpp"

namespace perdyn {

void BoundInputs::validate() const {
  if (q < 0 || genus < 0 || order < 0 || ramified < 0 || n < 0 || d < 0 ||
      fpp < 0)
    throw Error(ErrorCode::Domain, "bound inputs must be nonnegative");
  if (ratio <= 0 || ratio > 1)
    throw Error(ErrorCode::Domain,
                "class ratio " + to_string(ratio) + " outside (0, 1]");
}

namespace {

// Dyadic rational >= sqrt(q) with 64 fractional bits.
BigRational sqrt_upper(const BigInt &q) {
  constexpr unsigned kBits = 64;
  BigInt scaled = q << (2 * kBits);
  BigInt root;
  mpz_sqrt(root.get_mpz_t(), scaled.get_mpz_t());
  if (root * root != scaled)
    root += 1;
  BigRational r(root, BigInt(1) << kBits);
  r.canonicalize();
  return r;
}

} // namespace

Interval ms_interval(const BoundInputs &in, ErrorTerm term) {
  in.validate();
  const BigRational main = BigRational(in.q + 1) * in.ratio;
  BigRational err = 2 * BigRational(in.genus) * in.ratio;
  if (term == ErrorTerm::SqrtQ)
    err *= sqrt_upper(in.q);
  err += BigRational(in.ramified);
  Interval out{main - err, main + err};
  if (out.lo < 0)
    out.lo = 0;
  return out;
}

BigInt genus_bound(const BigInt &order, int n, int d) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "genus bound needs d >= 2");
  if (n < 0 || order < 0)
    throw Error(ErrorCode::Domain, "genus bound needs n, order >= 0");
  return order * n * (2 * d - 2);
}

BigRational proportion_bound(const BigInt &q, const BigRational &fpp,
                             const BigInt &order, const BigInt &genus,
                             const BigInt &ramified) {
  if (q < 0)
    throw Error(ErrorCode::Domain, "q must be nonnegative");
  BigRational r = fpp + BigRational(order * genus + 2 * ramified, q + 1);
  r.canonicalize();
  return r;
}

BigInt min_prime_for(const BigRational &delta, const BigInt &order,
                     const BigInt &genus, const BigInt &ramified) {
  if (delta <= 0)
    throw Error(ErrorCode::Domain, "delta must be positive");
  BigRational threshold = BigRational(order * genus + 2 * ramified) / delta - 1;
  BigInt m = ceil(threshold);
  return m < 0 ? BigInt(0) : m;
}

} // namespace perdyn
