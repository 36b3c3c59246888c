#pragma once

#include "placeforge/places/invariants.hpp"
#include "placeforge/places/place.hpp"
#include "placeforge/ratfunc/json.hpp"

namespace placeforge {

/// {"kind":"monomial","base":..,"arity":n,"ambient":{..},"weights":[coords..]}
/// or {"kind":"composite","inner":{..},"outer":{..}}.
Json place_to_json(const Place& p);
Place place_from_json(const Json& j);

/// Coordinates of the value, or the string "infinity".
Json value_to_json(const Value& v);

Json invariants_to_json(const PlaceInvariants& inv);

}  // namespace placeforge
