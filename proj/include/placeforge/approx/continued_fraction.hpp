#pragma once

#include <cstdint>

#include "placeforge/ordgroup/rat.hpp"

namespace placeforge {

/// The first convergent p/q of the continued fraction of sqrt(d) with
/// q >= min_den. d must not be a perfect square.
Rat sqrt_convergent(std::int64_t d, const Integer& min_den);

}  // namespace placeforge
