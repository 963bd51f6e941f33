#include "perdyn/census/presets.hpp"

#include <charconv>

#include "perdyn/error.hpp"

namespace perdyn {

namespace {

constexpr std::string_view kPowering = "powering-";
constexpr std::string_view kChebOdd = "chebyshev-odd-";
constexpr std::string_view kChebComposite = "chebyshev-composite";
constexpr std::string_view kLattes = "lattes2-";

[[noreturn]] void unknown(std::string_view name, const std::string &why) {
  throw Error(ErrorCode::UnknownPreset, "'" + std::string(name) + "': " + why);
}

int parse_degree(std::string_view name, std::string_view digits) {
  int v = 0;
  auto [ptr, ec] =
      std::from_chars(digits.data(), digits.data() + digits.size(), v);
  if (digits.empty() || ec != std::errc() ||
      ptr != digits.data() + digits.size())
    unknown(name, "expected a degree");
  return v;
}

std::vector<int> prime_factors(int n) {
  std::vector<int> out;
  for (int q = 2; q * q <= n; ++q) {
    if (n % q)
      continue;
    out.push_back(q);
    while (n % q == 0)
      n /= q;
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

BigRational lattes_coeff(std::string_view name,
                         std::vector<std::string> &tokens, std::size_t &i) {
  bool negative = false;
  if (i < tokens.size() && tokens[i].empty()) {
    negative = true;
    ++i;
  }
  if (i >= tokens.size() || tokens[i].empty())
    unknown(name, "expected lattes2-<a>-<b>");
  BigRational v;
  try {
    v = parse_rational(tokens[i++]);
  } catch (const Error &) {
    unknown(name, "bad coefficient");
  }
  return negative ? BigRational(-v) : v;
}

} // namespace

std::vector<std::string> preset_names() {
  return {"powering-<d>",        "chebyshev-2",
          "chebyshev-odd-<l>",   "chebyshev-composite[-<d>]",
          "unicritical-generic", "lattes2-<a>-<b>"};
}

Preset make_preset(std::string_view name, int r) {
  if (name.substr(0, kPowering.size()) == kPowering) {
    int d = parse_degree(name, name.substr(kPowering.size()));
    if (d < 2 || d > 16)
      unknown(name, "degree must be in [2, 16]");
    if (r < 1)
      throw Error(ErrorCode::Domain, "r must be >= 1");
    BigInt m = 1;
    for (int k = 0; k < r; ++k)
      m *= d;
    if (m > BigInt(1) << 40)
      throw Error(ErrorCode::Resource, "d^r too large");
    const std::string dm = m.get_str();
    return Preset{std::string(name),
                  RationalMapQ(PolyQ::monomial(BigRational(1), d),
                               PolyQ::constant(BigRational(1))),
                  {Congruence{m.get_ui(), 1}},
                  "≤ 1/" + dm + " + 2/(p+1)",
                  "x^" + std::to_string(d) + " is " + dm +
                      "-to-one on F_p^* when " + dm +
                      " | p-1; 0 and infinity are fixed",
                  3,
                  10000};
  }
  if (name == "chebyshev-2") {
    return Preset{
        std::string(name),
        chebyshev(2),
        {},
        "liminf 1/4",
        "T_2(z+1/z) = z^2 + z^-2: periodic points lift to elements of "
        "F_p^* and U_(p+1) of odd order; p = 1 mod 2^r drives the "
        "F_p^* half to 0",
        3,
        20000};
  }
  if (name.substr(0, kChebOdd.size()) == kChebOdd) {
    int l = parse_degree(name, name.substr(kChebOdd.size()));
    auto f = prime_factors(l);
    if (l < 3 || l > 16 || f.size() != 1 || f[0] == 2)
      unknown(name, "degree must be an odd prime power <= 16");
    return Preset{std::string(name),
                  chebyshev(l),
                  {},
                  "liminf 1/2",
                  "T_l(z+1/z) = z^l + z^-l: one of p-1, p+1 is prime to l, so "
                  "at least half of P^1(F_p) is periodic",
                  3,
                  20000};
  }
  if (name.substr(0, kChebComposite.size()) == kChebComposite) {
    std::string_view rest = name.substr(kChebComposite.size());
    int d = 6;
    if (!rest.empty()) {
      if (rest[0] != '-')
        unknown(name, "expected chebyshev-composite[-<d>]");
      d = parse_degree(name, rest.substr(1));
    }
    if (d < 2 || d > 16 || prime_factors(d).size() < 2)
      unknown(name, "degree must have two distinct prime factors, <= 16");
    return Preset{std::string(name),
                  chebyshev(d),
                  {},
                  "liminf 0",
                  "T_d with l1, l2 | d: p = 1 mod l1^r and p = -1 mod l2^r "
                  "makes both halves small",
                  3,
                  20000};
  }
  if (name == "unicritical-generic") {
    return Preset{std::string(name),
                  unicritical(2, BigRational(1)),
                  {},
                  "FPP([S₂]^n) → 0",
                  "0 is not preperiodic for x^2+1, so the iterate Galois "
                  "groups are the full [S2]^n and FPP decays like 2/n",
                  3,
                  20000};
  }
  if (name.substr(0, kLattes.size()) == kLattes) {
    std::vector<std::string> tokens;
    std::string_view rest = name.substr(kLattes.size());
    std::size_t start = 0;
    for (;;) {
      auto dash = rest.find('-', start);
      tokens.emplace_back(rest.substr(start, dash - start));
      if (dash == std::string_view::npos)
        break;
      start = dash + 1;
    }
    std::size_t i = 0;
    BigRational a = lattes_coeff(name, tokens, i);
    BigRational b = lattes_coeff(name, tokens, i);
    if (i != tokens.size())
      unknown(name, "trailing tokens");
    return Preset{std::string(name),
                  lattes2(a, b),
                  {},
                  "liminf 0 in many cases",
                  "Lattes map of [2] on y^2 = x^3 + (" + to_string(a) +
                      ")x + (" + to_string(b) +
                      "); depends on the 2-adic image, not checked here",
                  3,
                  20000};
  }
  unknown(name, "see preset --list");
}

} // namespace perdyn
