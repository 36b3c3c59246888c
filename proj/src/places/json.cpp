#include "placeforge/places/json.hpp"

#include "placeforge/errors.hpp"
#include "placeforge/places/invariants.hpp"

namespace placeforge {

Json place_to_json(const Place& p) {
  if (p.is_composite()) {
    return Json{{"kind", "composite"}, {"inner", place_to_json(p.inner())}, {"outer", place_to_json(p.outer())}};
  }
  const auto& m = p.as_monomial();
  Json weights = Json::array();
  for (const auto& w : m.weights()) weights.push_back(coords_to_json(w));
  return Json{{"kind", "monomial"},
              {"base", base_field_to_json(m.base())},
              {"arity", m.arity()},
              {"ambient", ambient_to_json(m.ambient())},
              {"weights", weights}};
}

Place place_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kind")) throw ParseError("place: expected an object with \"kind\"");
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "composite") {
    return compose(place_from_json(j.at("inner")), place_from_json(j.at("outer")));
  }
  if (kind != "monomial") throw ParseError("place: unknown kind \"" + kind + "\"");
  const BaseField base = base_field_from_json(j.at("base"));
  const AmbientGroup ambient = ambient_from_json(j.at("ambient"));
  const auto& ws = j.at("weights");
  if (!ws.is_array()) throw ParseError("place: weights must be an array");
  std::vector<GroupElem> weights;
  for (const auto& w : ws) weights.push_back(coords_from_json(ambient, w));
  if (j.contains("arity") && j.at("arity").get<std::size_t>() != weights.size()) {
    throw ParseError("place: arity does not match the number of weights");
  }
  return Place(MonomialPlace(base, ambient, std::move(weights)));
}

Json value_to_json(const Value& v) {
  if (v.is_infinite()) return "infinity";
  return coords_to_json(v.elem());
}

Json invariants_to_json(const PlaceInvariants& inv) {
  return Json{{"dim", inv.dim},
              {"rr", inv.rr},
              {"rank", inv.rank},
              {"abhyankar", inv.abhyankar},
              {"discrete", inv.discrete},
              {"rational", inv.rational},
              {"prime_divisor", inv.prime_divisor},
              {"maximal_rank", inv.maximal_rank}};
}

}  // namespace placeforge
