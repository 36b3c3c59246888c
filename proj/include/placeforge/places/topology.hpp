#pragma once

#include <functional>
#include <string>
#include <vector>

#include "placeforge/places/place.hpp"

namespace placeforge {

/// Membership in the patch-open set { P : v_P(a) >= 0 for a in A,
/// v_P(b) > 0 for b in B }. With B empty this is a Zariski-open set.
bool in_basic_open(const Place& p, const std::vector<RatFunc>& a, const std::vector<RatFunc>& b);

/// Valuation divisibility x | y, normally v(x) <= v(y).
using Divisibility = std::function<bool(const RatFunc& x, const RatFunc& y)>;

Divisibility value_divisibility(const Place& p);

struct SpvReport {
  bool pass = true;
  int axiom = 0;                // first failing axiom (1-6), 0 on pass
  std::vector<RatFunc> witness;  // the offending pair or triple
};

/// Checks the six universal axioms of valuation divisibility over every
/// pair and triple drawn from `sample`:
///   1. x|y or y|x
///   2. x|y and y|z imply x|z
///   3. x|y and x|z imply x|y+z
///   4. x|y implies xz|yz
///   5. xz|yz and not 0|z imply x|y
///   6. not 0|1
SpvReport check_spv_axioms(const Place& p, const std::vector<RatFunc>& sample);
/// Same, with an injected divisibility relation (used for negative controls).
SpvReport check_spv_axioms(const std::vector<RatFunc>& sample, const Divisibility& divides,
                           const BaseField& base, std::size_t arity);

}  // namespace placeforge
