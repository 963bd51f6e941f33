#include <cctype>
#include <string>

#include "perdyn/error.hpp"
#include "perdyn/map/rational_map.hpp"

namespace perdyn {

namespace {

constexpr unsigned long kMaxExponent = 4096;

// An element of Q(x) kept as a coprime pair.
struct RatFunc {
  PolyQ num;
  PolyQ den;

  static RatFunc of(PolyQ n) {
    return {std::move(n), PolyQ::constant(BigRational(1))};
  }

  void reduce() {
    PolyQ g = gcd(num, den);
    if (g.degree() > 0) {
      num = num.exact_div(g);
      den = den.exact_div(g);
    }
    // Keep den monic so equal functions have equal representations.
    BigRational lead = den.leading();
    num *= BigRational(1 / lead);
    den *= BigRational(1 / lead);
  }
};

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RatFunc parse() {
    RatFunc r = expr();
    skip_space();
    if (pos_ != text_.size())
      throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return r;
  }

private:
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (accept('+')) {
        RatFunc rhs = term();
        acc = add(acc, rhs, false);
      } else if (accept('-')) {
        RatFunc rhs = term();
        acc = add(acc, rhs, true);
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (accept('*')) {
        RatFunc rhs = factor();
        acc = {acc.num * rhs.num, acc.den * rhs.den};
        acc.reduce();
      } else if (accept('/')) {
        const std::size_t at = pos_;
        RatFunc rhs = factor();
        if (rhs.num.is_zero())
          throw Error(ErrorCode::DegenerateInput,
                      "division by zero at position " + std::to_string(at));
        acc = {acc.num * rhs.den, acc.den * rhs.num};
        acc.reduce();
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (accept('-')) {
      RatFunc r = factor();
      r.num = -r.num;
      return r;
    }
    if (accept('+'))
      return factor();
    return power();
  }

  RatFunc power() {
    RatFunc base = atom();
    if (!accept('^'))
      return base;
    skip_space();
    bool paren = accept('(');
    skip_space();
    const std::size_t at = pos_;
    if (pos_ < text_.size() && text_[pos_] == '-')
      throw SyntaxError(pos_, "negative exponent");
    std::string digits = read_digits();
    if (digits.empty())
      throw SyntaxError(at, "expected a nonnegative integer exponent");
    if (paren && !accept(')'))
      throw SyntaxError(pos_, "expected ')'");
    if (digits.size() > 6 || std::stoul(digits) > kMaxExponent)
      throw Error(ErrorCode::Resource, "exponent " + digits + " exceeds " +
                                           std::to_string(kMaxExponent));
    const auto e = static_cast<unsigned>(std::stoul(digits));
    return {base.num.pow(e), base.den.pow(e)};
  }

  RatFunc atom() {
    skip_space();
    if (pos_ >= text_.size())
      throw SyntaxError(pos_, "unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc r = expr();
      if (!accept(')'))
        throw SyntaxError(pos_, "expected ')'");
      return r;
    }
    if (c == 'x' || c == 'X') {
      ++pos_;
      return RatFunc::of(PolyQ::x());
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t at = pos_;
      std::string digits = read_digits();
      if (pos_ < text_.size() &&
          (text_[pos_] == '.' || text_[pos_] == 'e' || text_[pos_] == 'E'))
        throw SyntaxError(at, "floating-point literal not allowed; use a/b");
      return RatFunc::of(PolyQ::constant(BigRational(BigInt(digits))));
    }
    if (c == '.')
      throw SyntaxError(pos_, "floating-point literal not allowed; use a/b");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  static RatFunc add(const RatFunc &a, const RatFunc &b, bool subtract) {
    PolyQ cross = b.num * a.den;
    RatFunc r{subtract ? a.num * b.den - cross : a.num * b.den + cross,
              a.den * b.den};
    r.reduce();
    return r;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

} // namespace

std::pair<PolyQ, PolyQ> parse_rational_function(std::string_view expr) {
  RatFunc r = Parser(expr).parse();
  return {std::move(r.num), std::move(r.den)};
}

RationalMapQ parse_map(std::string_view expr, const MapLimits &limits) {
  auto [num, den] = parse_rational_function(expr);
  return RationalMapQ(num, den, limits);
}

} // namespace perdyn
