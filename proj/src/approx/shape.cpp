#include "placeforge/approx/shape.hpp"

#include <charconv>

#include "placeforge/errors.hpp"
#include "placeforge/places/invariants.hpp"

namespace placeforge {

namespace {

std::size_t parse_count(std::string_view s, std::string_view whole) {
  std::size_t v = 0;
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size() || s.empty()) {
    throw ParseError("shape: bad parameter in \"" + std::string(whole) + "\"");
  }
  return v;
}

bool all_rational(const Place& p) {
  for (const auto& w : p.variable_values()) {
    for (const auto& c : w.coords()) {
      if (!c.is_rational()) return false;
    }
  }
  return true;
}

[[noreturn]] void infeasible(const std::string& why) { throw InfeasibleError("infeasible shape: " + why); }

}  // namespace

Mode parse_mode(std::string_view text) {
  if (text == "preserve_both") return Mode::preserve_both;
  if (text == "preserve_residues") return Mode::preserve_residues;
  if (text == "preserve_values") return Mode::preserve_values;
  throw ParseError("unknown mode \"" + std::string(text) + "\"");
}

TargetShape parse_shape(std::string_view cls, Mode mode) {
  TargetShape s;
  s.mode = mode;
  const auto colon = cls.find(':');
  const auto name = cls.substr(0, colon);
  const auto args = colon == std::string_view::npos ? std::string_view() : cls.substr(colon + 1);
  if (name == "discrete" && colon == std::string_view::npos) {
    s.cls = ShapeClass::discrete;
  } else if (name == "lex_max_rank" && colon == std::string_view::npos) {
    s.cls = ShapeClass::lex_max_rank;
  } else if (name == "weighted_rational" && colon != std::string_view::npos) {
    s.cls = ShapeClass::weighted_rational;
    s.r1 = parse_count(args, cls);
  } else if (name == "composite_drop" && colon != std::string_view::npos) {
    s.cls = ShapeClass::composite_drop;
    const auto comma = args.find(',');
    if (comma == std::string_view::npos) throw ParseError("shape: composite_drop needs d1,r1");
    s.d1 = parse_count(args.substr(0, comma), cls);
    s.r1 = parse_count(args.substr(comma + 1), cls);
  } else {
    throw ParseError("unknown shape \"" + std::string(cls) + "\"");
  }
  return s;
}

const char* to_string(Mode mode) {
  switch (mode) {
    case Mode::preserve_both:
      return "preserve_both";
    case Mode::preserve_residues:
      return "preserve_residues";
    case Mode::preserve_values:
      return "preserve_values";
  }
  return "?";
}

std::string class_to_string(const TargetShape& shape) {
  switch (shape.cls) {
    case ShapeClass::discrete:
      return "discrete";
    case ShapeClass::weighted_rational:
      return "weighted_rational:" + std::to_string(shape.r1);
    case ShapeClass::lex_max_rank:
      return "lex_max_rank";
    case ShapeClass::composite_drop:
      return "composite_drop:" + std::to_string(shape.d1) + "," + std::to_string(shape.r1);
  }
  return "?";
}

std::size_t target_rational_rank(const TargetShape& shape, std::size_t n) {
  switch (shape.cls) {
    case ShapeClass::discrete:
      return 1;
    case ShapeClass::lex_max_rank:
      return n;
    case ShapeClass::weighted_rational:
    case ShapeClass::composite_drop:
      return shape.r1;
  }
  return 0;
}

bool in_class(const Place& p, const TargetShape& shape) {
  const auto inv = invariants(p);
  switch (shape.cls) {
    case ShapeClass::discrete:
      return inv.discrete;
    case ShapeClass::weighted_rational:
      return inv.rr == shape.r1 && all_rational(p);
    case ShapeClass::lex_max_rank:
      return inv.maximal_rank && inv.rational;
    case ShapeClass::composite_drop:
      return inv.dim == shape.d1 && inv.rr == shape.r1;
  }
  return false;
}

void check_feasible(const Place& q, const TargetShape& shape) {
  const std::size_t n = q.arity();
  const auto inv = invariants(q);
  const std::size_t r1 = target_rational_rank(shape, n);
  if (n == 0) infeasible("no variables");
  if (shape.cls == ShapeClass::weighted_rational && (r1 < 1 || r1 > n)) {
    infeasible("weighted_rational needs 1 <= r1 <= n");
  }
  if (shape.mode == Mode::preserve_both && r1 < inv.rr) {
    infeasible("preserve_both needs rr Q <= r1 (rr Q = " + std::to_string(inv.rr) + ", r1 = " + std::to_string(r1) +
               ")");
  }
  if (shape.cls == ShapeClass::composite_drop) {
    if (shape.mode != Mode::preserve_values) infeasible("composite_drop only preserves values");
    if (inv.dim == 0) infeasible("composite_drop needs dim Q > 0");
    if (r1 < inv.rr + 1 || r1 > n) infeasible("composite_drop needs rr Q + 1 <= r1 <= n");
    if (shape.d1 + r1 != n) {
      infeasible("composite_drop needs d1 + r1 = n (only Abhyankar places are constructible)");
    }
  }
}

}  // namespace placeforge
