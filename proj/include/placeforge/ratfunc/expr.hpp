#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "placeforge/ratfunc/ratfunc.hpp"

namespace placeforge {

/// Variable names used by the parser and printer. An empty list means the
/// default names x1..xn. Names "x<k>" are always accepted by the parser.
using VarNames = std::vector<std::string>;

/// Parses an expression in the grammar
///
///   expr     := term (("+" | "-") term)*
///   term     := factor (("*" | "/") factor)*
///   factor   := "-" factor | base ("^" integer)?
///   base     := rational | variable | "(" expr ")"
///   rational := integer ("/" positive-integer)?
///   variable := "x" positive-integer | declared identifier
///
/// Whitespace is insignificant. A digit string followed by "/" and another
/// digit string is a rational literal, so "3/4^2" is (3/4)^2. Throws
/// ParseError (with byte position) on malformed input, zero denominators,
/// division by the zero polynomial and exponent overflow.
RatFunc parse_expr(std::string_view text, std::size_t arity, const BaseField& base, const VarNames& names = {});

/// Prints in the same grammar; parse_expr(to_expr(f)) == f structurally.
std::string to_expr(const RatFunc& f, const VarNames& names = {});
std::string to_expr(const Poly& p, const VarNames& names = {});

}  // namespace placeforge
