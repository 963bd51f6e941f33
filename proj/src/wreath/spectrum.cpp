#include "perdyn/wreath/spectrum.hpp"

#include <cctype>

#include "perdyn/error.hpp"

namespace perdyn {

FixedPointSpectrum::FixedPointSpectrum(int degree, std::map<int, BigInt> counts)
    : degree_(degree), order_(0) {
  if (degree < 1)
    throw Error(ErrorCode::Domain, "spectrum degree must be >= 1");
  BigInt weighted(0);
  for (auto &[k, c] : counts) {
    if (k < 0 || k > degree)
      throw Error(ErrorCode::Domain, "fixed-point count " + std::to_string(k) +
                                         " outside [0, " +
                                         std::to_string(degree) + "]");
    if (c < 0)
      throw Error(ErrorCode::Domain, "negative element count");
    if (c == 0)
      continue;
    counts_[k] = c;
    order_ += c;
    weighted += c * k;
  }
  if (count(degree) < 1)
    throw Error(ErrorCode::Domain,
                "spectrum has no identity (counts[d] must be >= 1)");
  transitive_ = weighted == order_;
}

BigInt FixedPointSpectrum::count(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? BigInt(0) : it->second;
}

BigRational FixedPointSpectrum::fpp() const {
  BigRational r(order_ - count(0), order_);
  r.canonicalize();
  return r;
}

std::string FixedPointSpectrum::to_string() const {
  std::string s = "d=" + std::to_string(degree_) + ";";
  bool first = true;
  for (const auto &[k, c] : counts_) {
    if (!first)
      s += ",";
    first = false;
    s += std::to_string(k) + ":" + c.get_str();
  }
  return s;
}

namespace {

int parse_int(std::string_view text, std::string_view whole) {
  if (text.empty())
    throw Error(ErrorCode::Syntax,
                "expected integer in spectrum '" + std::string(whole) + "'");
  for (char c : text)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw Error(ErrorCode::Syntax, "bad integer '" + std::string(text) +
                                         "' in spectrum '" +
                                         std::string(whole) + "'");
  return std::stoi(std::string(text));
}

} // namespace

FixedPointSpectrum parse_spectrum(std::string_view text) {
  if (text.size() > 2 && (text[0] == 'S' || text[0] == 'C') && text[1] == ':') {
    int d = parse_int(text.substr(2), text);
    return text[0] == 'S' ? spectrum_symmetric(d) : spectrum_cyclic(d);
  }
  if (text.substr(0, 2) != "d=")
    throw Error(ErrorCode::Syntax, "spectrum must look like 'd=3;0:2,1:3,3:1', "
                                   "'S:3' or 'C:4', got '" +
                                       std::string(text) + "'");
  auto semi = text.find(';');
  if (semi == std::string_view::npos)
    throw Error(ErrorCode::Syntax,
                "missing ';' in spectrum '" + std::string(text) + "'");
  int d = parse_int(text.substr(2, semi - 2), text);
  std::map<int, BigInt> counts;
  std::string_view rest = text.substr(semi + 1);
  while (!rest.empty()) {
    auto comma = rest.find(',');
    std::string_view item = rest.substr(0, comma);
    auto colon = item.find(':');
    if (colon == std::string_view::npos)
      throw Error(ErrorCode::Syntax,
                  "expected k:count in spectrum '" + std::string(text) + "'");
    int k = parse_int(item.substr(0, colon), text);
    std::string_view cnt = item.substr(colon + 1);
    parse_int(cnt, text); // validates digits
    counts[k] += BigInt(std::string(cnt));
    rest = comma == std::string_view::npos ? std::string_view()
                                           : rest.substr(comma + 1);
  }
  return FixedPointSpectrum(d, std::move(counts));
}

BigInt derangements(int m) {
  // D(0)=1, D(1)=0, D(m) = (m-1)(D(m-1) + D(m-2))
  BigInt prev2(1), prev1(0);
  if (m == 0)
    return prev2;
  for (int k = 2; k <= m; ++k) {
    BigInt next = (k - 1) * (prev1 + prev2);
    prev2 = prev1;
    prev1 = next;
  }
  return prev1;
}

FixedPointSpectrum spectrum_symmetric(int d) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "S_d needs d >= 2");
  std::map<int, BigInt> counts;
  for (int k = 0; k <= d; ++k) {
    BigInt binom;
    mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(d),
                 static_cast<unsigned long>(k));
    BigInt c = binom * derangements(d - k);
    if (c != 0)
      counts[k] = c;
  }
  return FixedPointSpectrum(d, std::move(counts));
}

FixedPointSpectrum spectrum_cyclic(int d) {
  if (d < 2)
    throw Error(ErrorCode::Domain, "C_d needs d >= 2");
  return FixedPointSpectrum(d, {{0, BigInt(d - 1)}, {d, BigInt(1)}});
}

namespace {

// 1 - g(1 - q)
BigRational fpp_step(const FixedPointSpectrum &spec, const BigRational &q) {
  const BigRational miss = 1 - q;
  BigRational acc(0);
  // Horner over k = d..0
  for (int k = spec.degree(); k >= 0; --k)
    acc = acc * miss + BigRational(spec.count(k));
  BigRational r = 1 - acc / BigRational(spec.order());
  r.canonicalize();
  return r;
}

BigRational round_dyadic(const BigRational &x, unsigned bits, bool up) {
  BigInt scale(1);
  scale <<= bits;
  BigRational scaled = x * BigRational(scale);
  BigInt n = up ? ceil(scaled) : floor(scaled);
  BigRational r(n, scale);
  r.canonicalize();
  return r;
}

} // namespace

std::vector<BigRational> iterate_fpp(const FixedPointSpectrum &spec, int n,
                                     const FppLimits &limits) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "iterate_fpp needs n >= 1");
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(n));
  BigRational q(1);
  for (int m = 1; m <= n; ++m) {
    q = fpp_step(spec, q);
    if (mpz_sizeinbase(q.get_den_mpz_t(), 2) > limits.max_exact_bits)
      throw Error(ErrorCode::Resource,
                  "exact q_" + std::to_string(m) + " exceeds max_exact_bits=" +
                      std::to_string(limits.max_exact_bits) +
                      "; use the enclosure");
    out.push_back(q);
  }
  return out;
}

std::vector<FppInterval> iterate_fpp_enclosure(const FixedPointSpectrum &spec,
                                               int n, unsigned bits) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "iterate_fpp_enclosure needs n >= 1");
  std::vector<FppInterval> out;
  out.reserve(static_cast<std::size_t>(n));
  BigRational lo(1), hi(1);
  for (int m = 1; m <= n; ++m) {
    lo = round_dyadic(fpp_step(spec, lo), bits, false);
    hi = round_dyadic(fpp_step(spec, hi), bits, true);
    out.push_back({lo, hi});
  }
  return out;
}

std::vector<double> iterate_fpp_double(const FixedPointSpectrum &spec, int n) {
  std::vector<double> weights(static_cast<std::size_t>(spec.degree()) + 1, 0.0);
  const double order = spec.order().get_d();
  for (const auto &[k, c] : spec.counts())
    weights[static_cast<std::size_t>(k)] = c.get_d() / order;
  std::vector<double> out;
  double q = 1.0;
  for (int m = 1; m <= n; ++m) {
    double miss = 1.0 - q, acc = 0.0;
    for (std::size_t k = weights.size(); k-- > 0;)
      acc = acc * miss + weights[k];
    q = 1.0 - acc;
    out.push_back(q);
  }
  return out;
}

PolyQ fix_generating_poly(const FixedPointSpectrum &spec) {
  std::vector<BigRational> c(static_cast<std::size_t>(spec.degree()) + 1);
  for (const auto &[k, cnt] : spec.counts()) {
    BigRational share(cnt, spec.order());
    share.canonicalize();
    c[static_cast<std::size_t>(k)] = share;
  }
  return PolyQ(std::move(c));
}

PolyQ fix_distribution(const FixedPointSpectrum &spec, int n,
                       const FppLimits &limits) {
  if (n < 1)
    throw Error(ErrorCode::Domain, "fix_distribution needs n >= 1");
  long leaves = 1;
  for (int m = 0; m < n; ++m) {
    leaves *= spec.degree();
    if (leaves > limits.max_degree)
      throw Error(ErrorCode::Resource, "d^n exceeds max_degree=" +
                                           std::to_string(limits.max_degree));
  }
  const PolyQ g = fix_generating_poly(spec);
  PolyQ gn = g;
  for (int m = 2; m <= n; ++m)
    gn = g.compose(gn);
  return gn;
}

} // namespace perdyn
