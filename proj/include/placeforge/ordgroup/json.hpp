#pragma once

#include <json.hpp>

#include <vector>

#include "placeforge/ordgroup/group.hpp"
#include "placeforge/ordgroup/lattice.hpp"

namespace placeforge {

using Json = nlohmann::json;

// Rationals are decimal strings "p" or "p/q"; plain JSON integers are
// accepted on input.
Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json ambient_to_json(const AmbientGroup& g);  // {"levels":[{"d":2},...]}
AmbientGroup ambient_from_json(const Json& j);

/// One element's coordinates: [{"a":"1","b":"0"}, ...], one entry per level.
Json coords_to_json(const GroupElem& x);
GroupElem coords_from_json(const AmbientGroup& ambient, const Json& j);

/// {"coords":[[...], ...],"levels":[...]}: an ambient group with a list of
/// its elements. A single element serializes as a one-row list.
Json elems_to_json(const AmbientGroup& ambient, const std::vector<GroupElem>& elems);
std::pair<AmbientGroup, std::vector<GroupElem>> elems_from_json(const Json& j);

Json elem_to_json(const GroupElem& x);
GroupElem elem_from_json(const Json& j);

Json intvec_to_json(const IntVec& v);
IntVec intvec_from_json(const Json& j);

}  // namespace placeforge
