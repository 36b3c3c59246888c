#pragma once

#include <compare>
#include <optional>
#include <string>

#include "placeforge/ordgroup/group.hpp"

namespace placeforge {

/// A value v(f): an element of the value group, or +infinity for f = 0.
/// Infinity compares above every group element.
class Value {
 public:
  Value(GroupElem g) : elem_(std::move(g)) {}  // NOLINT(google-explicit-constructor)
  static Value infinity() { return Value(); }

  bool is_infinite() const { return !elem_.has_value(); }
  const GroupElem& elem() const;
  /// +1 for infinity.
  int sign() const { return elem_ ? elem_->sign() : 1; }

  Value operator+(const Value& o) const;

  friend std::strong_ordering operator<=>(const Value& x, const Value& y);
  friend bool operator==(const Value& x, const Value& y) { return (x <=> y) == 0; }

  std::string to_string() const { return elem_ ? elem_->to_string() : "infinity"; }

 private:
  Value() = default;
  std::optional<GroupElem> elem_;
};

}  // namespace placeforge
