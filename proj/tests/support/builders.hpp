#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "placeforge/places/place.hpp"
#include "placeforge/ratfunc/expr.hpp"

namespace placeforge::testing {

inline BaseField Q() { return BaseField::rationals(); }

/// a + b*sqrt(d)
inline QuadScalar qs(const Rat& a, const Rat& b = 0, std::int64_t d = 2) { return QuadScalar(a, b, d); }

/// Single-level place with weights a_i + b_i*sqrt(d).
inline Place single_level(const std::vector<QuadScalar>& w, BaseField base = Q()) {
  const std::int64_t d = w.empty() ? 2 : w.front().d();
  AmbientGroup amb({d});
  std::vector<GroupElem> weights;
  for (const auto& c : w) weights.emplace_back(amb, std::vector<QuadScalar>{c});
  return Place(MonomialPlace(base, amb, weights));
}

inline Place rational_place(const std::vector<long>& w, BaseField base = Q()) {
  std::vector<QuadScalar> c;
  for (long x : w) c.push_back(qs(x));
  return single_level(c, base);
}

/// Lex place with integer weights; rows[i] is the coordinate vector of x_i.
inline Place lex_place(const std::vector<std::vector<long>>& rows, BaseField base = Q()) {
  const std::size_t levels = rows.empty() ? 1 : rows.front().size();
  auto amb = AmbientGroup::lex_rational(levels);
  std::vector<GroupElem> weights;
  for (const auto& r : rows) {
    std::vector<Rat> v(r.begin(), r.end());
    weights.push_back(GroupElem::from_rationals(amb, v));
  }
  return Place(MonomialPlace(base, amb, weights));
}

inline RatFunc expr(const std::string& s, std::size_t n, BaseField base = Q()) { return parse_expr(s, n, base); }

inline GroupElem g1(const QuadScalar& c) { return GroupElem(AmbientGroup({c.d()}), {c}); }

inline GroupElem lexv(const std::vector<long>& v) {
  auto amb = AmbientGroup::lex_rational(v.size());
  return GroupElem::from_rationals(amb, std::vector<Rat>(v.begin(), v.end()));
}

}  // namespace placeforge::testing
