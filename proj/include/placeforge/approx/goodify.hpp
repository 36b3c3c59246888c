#pragma once

#include <optional>
#include <string>
#include <vector>

#include "placeforge/approx/shape.hpp"
#include "placeforge/ordgroup/embedding.hpp"

namespace placeforge {

/// A homomorphism sources[i] -> images[i], checked as an order embedding on
/// the integer combinations listed in `witnesses`.
struct Iota {
  AmbientGroup source_ambient;
  AmbientGroup image_ambient;
  std::vector<GroupElem> sources;
  std::vector<GroupElem> images;
  std::vector<IntVec> witnesses;
  EmbeddingVerdict verdict;

  /// Image of an element of the source span. Throws DomainError otherwise.
  GroupElem apply(const GroupElem& x) const;
};

struct ElementCheck {
  RatFunc elem;
  int sign_q = 0;
  int sign_p = 0;
  bool residue_equal = false;
};

struct GoodifyResult {
  Place place;
  std::optional<Iota> iota;  // absent for preserve_residues
  std::size_t iterations = 0;
  std::vector<ElementCheck> checks;  // one per nonzero element
  std::vector<std::string> notices;
};

/// Replaces Q by a place P of the target class with the same value signs on
/// `elems`; the residues of value-0 elements agree (preserve_residues,
/// preserve_both) or the values agree through iota (preserve_both,
/// preserve_values). Returns Q with the identity when Q is already in the
/// class. Throws InfeasibleError when a hypothesis of the shape fails.
GoodifyResult goodify(const Place& q, const std::vector<RatFunc>& elems, const TargetShape& shape);

/// A place of the shape's class in the patch-open set given by A and B.
/// Throws DomainError when Q itself is not in that set.
GoodifyResult density_witness(const Place& q, const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                              TargetShape shape);

/// Residues agree: both 0, both infinite, or equal after lifting to K(x).
bool residues_agree(const Place& p, const Place& q, const RatFunc& f);

}  // namespace placeforge
