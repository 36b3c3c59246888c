#pragma once

#include "placeforge/places/place.hpp"

namespace placeforge {

struct PlaceInvariants {
  std::size_t dim = 0;   // trdeg of the residue field over K
  std::size_t rr = 0;    // rational rank of the value group
  std::size_t rank = 0;  // number of convex jumps of the value group
  bool abhyankar = false;
  bool discrete = false;
  bool rational = false;
  bool prime_divisor = false;
  bool maximal_rank = false;

  friend bool operator==(const PlaceInvariants&, const PlaceInvariants&) = default;
};

PlaceInvariants invariants(const Place& p);

}  // namespace placeforge
