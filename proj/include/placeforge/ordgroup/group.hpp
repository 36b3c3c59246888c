#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "placeforge/ordgroup/quad.hpp"

namespace placeforge {

/// A lexicographic product of archimedean levels, level 0 dominant. Each
/// level is a copy of Q(sqrt d) for its own fixed radicand d.
class AmbientGroup {
 public:
  explicit AmbientGroup(std::vector<std::int64_t> radicands);

  /// `levels` copies of Q, ordered lexicographically (radicand 2, unused).
  static AmbientGroup lex_rational(std::size_t levels);

  std::size_t levels() const { return radicands_->size(); }
  std::int64_t radicand(std::size_t level) const { return (*radicands_)[level]; }
  const std::vector<std::int64_t>& radicands() const { return *radicands_; }

  /// Levels of *this followed by the levels of `lower`.
  AmbientGroup concat(const AmbientGroup& lower) const;

  friend bool operator==(const AmbientGroup& x, const AmbientGroup& y) {
    return x.radicands_ == y.radicands_ || *x.radicands_ == *y.radicands_;
  }

 private:
  std::shared_ptr<const std::vector<std::int64_t>> radicands_;
};

/// An element of an AmbientGroup: one quadratic scalar per level.
class GroupElem {
 public:
  explicit GroupElem(const AmbientGroup& ambient);  // zero
  GroupElem(const AmbientGroup& ambient, std::vector<QuadScalar> coords);

  /// Embeds rationals, one per level.
  static GroupElem from_rationals(const AmbientGroup& ambient, const std::vector<Rat>& values);

  const AmbientGroup& ambient() const { return ambient_; }
  const std::vector<QuadScalar>& coords() const { return coords_; }
  const QuadScalar& coord(std::size_t level) const { return coords_[level]; }

  bool is_zero() const;
  /// Index of the first nonzero level, if any.
  std::optional<std::size_t> leading_level() const;
  int sign() const;

  /// Coordinates over the Q-basis {1, sqrt d} of each level: a0, b0, a1, b1, ...
  std::vector<Rat> expand() const;

  GroupElem operator-() const;
  GroupElem operator+(const GroupElem& o) const;
  GroupElem operator-(const GroupElem& o) const;
  GroupElem& operator+=(const GroupElem& o);
  GroupElem operator*(const Rat& k) const;

  /// Coordinates of *this followed by those of `lower`, in ambient().concat(lower.ambient()).
  GroupElem concat(const GroupElem& lower) const;

  friend bool operator==(const GroupElem& x, const GroupElem& y) {
    return x.ambient_ == y.ambient_ && x.coords_ == y.coords_;
  }

  std::string to_string() const;

 private:
  AmbientGroup ambient_;
  std::vector<QuadScalar> coords_;
};

/// Lexicographic comparison over levels; throws DomainError when the
/// ambient groups differ.
std::strong_ordering cmp_elem(const GroupElem& x, const GroupElem& y);

inline std::strong_ordering operator<=>(const GroupElem& x, const GroupElem& y) { return cmp_elem(x, y); }

/// Integer combination sum_i coeffs[i] * elems[i] in `ambient`.
template <class IntRange>
GroupElem combine(const AmbientGroup& ambient, const IntRange& coeffs, const std::vector<GroupElem>& elems) {
  GroupElem out(ambient);
  std::size_t i = 0;
  for (const auto& c : coeffs) {
    if (c != 0) out += elems.at(i) * Rat(c);
    ++i;
  }
  return out;
}

}  // namespace placeforge
