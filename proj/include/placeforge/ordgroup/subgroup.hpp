#pragma once

#include <optional>
#include <vector>

#include "placeforge/ordgroup/group.hpp"
#include "placeforge/ordgroup/lattice.hpp"

namespace placeforge {

/// The subgroup of an AmbientGroup generated by finitely many elements.
///
/// Elements are handled through their expansion over the Q-basis
/// {1, sqrt d} of every level, scaled by a common denominator so that the
/// generators become integer rows; the HNF of those rows is computed once.
class Subgroup {
 public:
  Subgroup(AmbientGroup ambient, std::vector<GroupElem> generators);

  const AmbientGroup& ambient() const { return ambient_; }
  const std::vector<GroupElem>& generators() const { return generators_; }

  std::size_t rational_rank() const { return hnf_.rank; }
  std::size_t convex_rank() const;
  bool contains(const GroupElem& x) const;
  bool in_p_divisible_hull(const GroupElem& x, const Integer& p) const;

  /// A Z-basis (the nonzero HNF rows), as group elements.
  std::vector<GroupElem> basis() const;
  /// Coordinates of x over basis(), if x is in the subgroup.
  std::optional<IntVec> basis_coordinates(const GroupElem& x) const;
  /// Coefficients over generators() expressing x, if x is in the subgroup.
  std::optional<IntVec> generator_coefficients(const GroupElem& x) const;

 private:
  std::optional<IntVec> scaled(const GroupElem& x) const;
  void check_ambient(const GroupElem& x) const;

  AmbientGroup ambient_;
  std::vector<GroupElem> generators_;
  Integer scale_;
  Hnf hnf_;
};

std::size_t rational_rank(const Subgroup& s);
bool subgroup_member(const Subgroup& s, const GroupElem& x);
std::size_t convex_rank(const Subgroup& s);
bool in_p_divisible_hull(const GroupElem& x, const Subgroup& s, const Integer& p);

}  // namespace placeforge
