#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "placeforge/places/place.hpp"

namespace placeforge {

enum class Mode { preserve_both, preserve_residues, preserve_values };

enum class ShapeClass {
  discrete,           // value group Z
  weighted_rational,  // rational weights on r1 lex levels, rr = r1
  lex_max_rank,       // rank n, residue field K
  composite_drop,     // compose(Q, outer) with dim d1 and rr r1
};

struct TargetShape {
  Mode mode = Mode::preserve_residues;
  ShapeClass cls = ShapeClass::discrete;
  std::size_t d1 = 0;
  std::size_t r1 = 1;

  friend bool operator==(const TargetShape&, const TargetShape&) = default;
};

Mode parse_mode(std::string_view text);
/// "discrete", "weighted_rational:r1", "lex_max_rank", "composite_drop:d1,r1".
TargetShape parse_shape(std::string_view cls, Mode mode = Mode::preserve_residues);

const char* to_string(Mode mode);
std::string class_to_string(const TargetShape& shape);

/// The rational rank a place of this class has on n variables.
std::size_t target_rational_rank(const TargetShape& shape, std::size_t n);

bool in_class(const Place& p, const TargetShape& shape);

/// Throws InfeasibleError naming the violated hypothesis.
void check_feasible(const Place& q, const TargetShape& shape);

}  // namespace placeforge
