#pragma once

#include <optional>
#include <vector>

#include "placeforge/ordgroup/group.hpp"
#include "placeforge/ordgroup/lattice.hpp"

namespace placeforge {

/// Outcome of order_embedding_check. `witness` is set for ill_defined (the
/// offending integer relation) and for order_violated (the combination whose
/// sign changed).
struct EmbeddingVerdict {
  enum class Kind { ok, ill_defined, order_violated };
  Kind kind = Kind::ok;
  std::optional<IntVec> witness;

  bool ok() const { return kind == Kind::ok; }
};

/// Checks that sources[i] -> images[i] extends to a well-defined group
/// homomorphism (every integer relation among the sources maps to zero) and
/// that it preserves the sign of every listed witness combination. Sources
/// and images may live in different ambient groups; order is only verified
/// on the witnesses.
EmbeddingVerdict order_embedding_check(const std::vector<GroupElem>& sources, const std::vector<GroupElem>& images,
                                       const std::vector<IntVec>& witnesses);

const char* to_string(EmbeddingVerdict::Kind kind);

}  // namespace placeforge
