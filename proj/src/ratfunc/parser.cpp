#include <cctype>
#include <limits>

#include "placeforge/errors.hpp"
#include "placeforge/ratfunc/expr.hpp"

namespace placeforge {

namespace {

// Non-monomial bases are expanded by repeated squaring; cap the exponent so
// a typo cannot request an astronomically large expansion.
constexpr std::int64_t kMaxExpandedPower = 1000;

class Parser {
 public:
  Parser(std::string_view text, std::size_t arity, const BaseField& base, const VarNames& names)
      : text_(text), arity_(arity), base_(base), names_(names) {}

  RatFunc parse() {
    RatFunc f = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_digit_at(std::size_t at) const {
    return at < text_.size() && std::isdigit(static_cast<unsigned char>(text_[at]));
  }

  RatFunc expr() {
    RatFunc acc = term();
    for (;;) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RatFunc term() {
    RatFunc acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (peek('/')) {
        const std::size_t at = pos_++;
        RatFunc d = factor();
        if (d.is_zero()) fail_at("division by the zero polynomial", at);
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RatFunc factor() {
    if (peek('-')) {
      ++pos_;
      return -factor();
    }
    const std::size_t start = pos_;
    RatFunc b = base();
    if (!peek('^')) return b;
    ++pos_;
    const std::int64_t e = exponent();
    if (e < 0 && b.is_zero()) fail_at("negative power of zero", start);
    const bool monomial_like = b.num().size() <= 1 && b.den().size() <= 1;
    if (!monomial_like && (e > kMaxExpandedPower || e < -kMaxExpandedPower)) {
      fail_at("exponent too large for a non-monomial base", start);
    }
    try {
      return b.pow(e);
    } catch (const DomainError& err) {
      fail_at(err.what(), start);
    }
  }

  std::int64_t exponent() {
    skip_ws();
    bool negative = false;
    if (pos_ < text_.size() && text_[pos_] == '-') {
      negative = true;
      ++pos_;
      skip_ws();
    }
    const std::size_t start = pos_;
    if (!peek_digit_at(pos_)) fail("expected an integer exponent");
    std::int64_t value = 0;
    while (peek_digit_at(pos_)) {
      const int digit = text_[pos_] - '0';
      if (__builtin_mul_overflow(value, 10, &value) || __builtin_add_overflow(value, digit, &value)) {
        fail_at("exponent overflow", start);
      }
      ++pos_;
    }
    return negative ? -value : value;
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (peek_digit_at(pos_)) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  RatFunc base() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      RatFunc inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return rational();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RatFunc rational() {
    const std::size_t start = pos_;
    Integer num = digits();
    Integer den = 1;
    // "p/q" with q a digit string directly after the slash is one literal.
    std::size_t look = pos_;
    while (look < text_.size() && std::isspace(static_cast<unsigned char>(text_[look]))) ++look;
    if (look < text_.size() && text_[look] == '/') {
      std::size_t after = look + 1;
      while (after < text_.size() && std::isspace(static_cast<unsigned char>(text_[after]))) ++after;
      if (peek_digit_at(after)) {
        pos_ = after;
        den = digits();
        if (den == 0) fail_at("zero denominator", after);
      }
    }
    try {
      Rat r(num, den);
      r.canonicalize();
      return RatFunc::constant(base_, arity_, r);
    } catch (const DomainError& err) {
      fail_at(err.what(), start);
    }
  }

  RatFunc variable() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
      ++pos_;
    }
    const std::string_view ident = text_.substr(start, pos_ - start);
    for (std::size_t i = 0; i < names_.size() && i < arity_; ++i) {
      if (names_[i] == ident) return RatFunc::variable(base_, arity_, i);
    }
    if (ident.size() >= 2 && ident[0] == 'x' && ident[1] != '0') {
      std::size_t index = 0;
      bool numeric = true;
      for (std::size_t k = 1; k < ident.size() && numeric; ++k) {
        if (!std::isdigit(static_cast<unsigned char>(ident[k]))) {
          numeric = false;
        } else if (__builtin_mul_overflow(index, 10, &index) ||
                   __builtin_add_overflow(index, static_cast<std::size_t>(ident[k] - '0'), &index)) {
          fail_at("variable index overflow", start);
        }
      }
      if (numeric) {
        if (index == 0 || index > arity_) {
          fail_at("variable " + std::string(ident) + " out of range for arity " + std::to_string(arity_), start);
        }
        return RatFunc::variable(base_, arity_, index - 1);
      }
    }
    fail_at("unknown identifier '" + std::string(ident) + "'", start);
  }

  std::string_view text_;
  std::size_t arity_;
  const BaseField& base_;
  const VarNames& names_;
  std::size_t pos_ = 0;
};

}  // namespace

RatFunc parse_expr(std::string_view text, std::size_t arity, const BaseField& base, const VarNames& names) {
  return Parser(text, arity, base, names).parse();
}

}  // namespace placeforge
