#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace placeforge {

using Integer = mpz_class;
using Rat = mpq_class;

/// Parses "p", "-p" or "p/q" (q > 0) into a canonical rational.
Rat parse_rat(std::string_view text);

/// Canonical decimal form: "p" for integers, "p/q" otherwise.
std::string to_string(const Rat& r);
std::string to_string(const Integer& z);

inline int sign(const Rat& r) { return sgn(r); }
inline int sign(const Integer& z) { return sgn(z); }

inline bool is_integer(const Rat& r) { return r.get_den() == 1; }

Integer lcm(const Integer& a, const Integer& b);
Integer gcd(const Integer& a, const Integer& b);

}  // namespace placeforge
