#pragma once

#include <cstddef>
#include <vector>

#include "placeforge/approx/shape.hpp"
#include "placeforge/approx/signature.hpp"

namespace placeforge {

struct PerturbResult {
  AmbientGroup ambient;
  std::vector<GroupElem> weights;  // rational, one per variable
  std::size_t iterations = 0;      // approximation rounds used
};

/// Iteration cap for the approximation loop: PLACEFORGE_MAX_ITER, default 64.
std::size_t max_iterations();

/// Rational weights in the shape's class that give every signature entry its
/// recorded sign. Round t replaces each sqrt d by its first continued
/// fraction convergent with denominator >= 2^t and collapses the lex levels
/// with weights 1, 2^-t, 2^-2t, ...; relations with value 0 survive every
/// round. `extra_equalities` are further exponent vectors that must keep
/// value 0 (all of them must have value 0 under q).
///
/// The first level is the primitive integer multiple of the approximation.
/// weighted_rational and lex_max_rank append levels until the rational
/// rank is reached, drawn from the solution space of the equalities and
/// preferring unit directions at the non-pivot columns of the levels so far.
PerturbResult perturb_weights(const SignSignature& sig, const MonomialPlace& q, const TargetShape& shape,
                              const std::vector<Exponents>& extra_equalities = {});

}  // namespace placeforge
