#include "placeforge/ordgroup/rat.hpp"

#include <cctype>

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

Integer parse_integer(std::string_view text, bool allow_sign) {
  std::size_t i = 0;
  if (allow_sign && i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw ParseError("empty integer in rational '" + std::string(text) + "'");
  for (std::size_t j = i; j < text.size(); ++j) {
    if (!std::isdigit(static_cast<unsigned char>(text[j]))) {
      throw ParseError("invalid digit in rational '" + std::string(text) + "'", j);
    }
  }
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Integer(s, 10);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text, true));
  Integer num = parse_integer(text.substr(0, slash), true);
  Integer den = parse_integer(text.substr(slash + 1), false);
  if (den == 0) throw ParseError("zero denominator in rational '" + std::string(text) + "'", slash + 1);
  Rat r(num, den);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) { return r.get_str(10); }

std::string to_string(const Integer& z) { return z.get_str(10); }

Integer lcm(const Integer& a, const Integer& b) {
  Integer out;
  mpz_lcm(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer out;
  mpz_gcd(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return out;
}

}  // namespace placeforge
