#include "placeforge/ordgroup/json.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing JSON field '") + key + "'");
  return j.at(key);
}

}  // namespace

Json rat_to_json(const Rat& r) { return to_string(r); }

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(Integer(j.dump()));
  throw ParseError("expected a rational as a string \"p/q\" or an integer, got " + j.dump());
}

Json ambient_to_json(const AmbientGroup& g) {
  Json levels = Json::array();
  for (auto d : g.radicands()) levels.push_back({{"d", d}});
  return {{"levels", levels}};
}

namespace {

AmbientGroup levels_from_json(const Json& levels) {
  if (!levels.is_array()) throw ParseError("'levels' must be an array");
  std::vector<std::int64_t> ds;
  for (const auto& l : levels) {
    const Json& d = require(l, "d");
    if (!d.is_number_integer()) throw ParseError("level radicand must be an integer");
    ds.push_back(d.get<std::int64_t>());
  }
  return AmbientGroup(std::move(ds));
}

}  // namespace

AmbientGroup ambient_from_json(const Json& j) { return levels_from_json(require(j, "levels")); }

Json coords_to_json(const GroupElem& x) {
  Json out = Json::array();
  for (const auto& c : x.coords()) out.push_back({{"a", rat_to_json(c.a())}, {"b", rat_to_json(c.b())}});
  return out;
}

GroupElem coords_from_json(const AmbientGroup& ambient, const Json& j) {
  if (!j.is_array()) throw ParseError("element coordinates must be an array of {\"a\",\"b\"} objects");
  if (j.size() != ambient.levels()) {
    throw ParseError("element has " + std::to_string(j.size()) + " coordinates, ambient has " +
                     std::to_string(ambient.levels()) + " levels");
  }
  std::vector<QuadScalar> coords;
  for (std::size_t i = 0; i < j.size(); ++i) {
    coords.emplace_back(rat_from_json(require(j[i], "a")), rat_from_json(require(j[i], "b")), ambient.radicand(i));
  }
  return GroupElem(ambient, std::move(coords));
}

Json elems_to_json(const AmbientGroup& ambient, const std::vector<GroupElem>& elems) {
  Json coords = Json::array();
  for (const auto& e : elems) coords.push_back(coords_to_json(e));
  Json out = ambient_to_json(ambient);
  out["coords"] = std::move(coords);
  return out;
}

std::pair<AmbientGroup, std::vector<GroupElem>> elems_from_json(const Json& j) {
  AmbientGroup ambient = ambient_from_json(j);
  std::vector<GroupElem> elems;
  const Json& coords = require(j, "coords");
  if (!coords.is_array()) throw ParseError("'coords' must be an array");
  for (const auto& c : coords) elems.push_back(coords_from_json(ambient, c));
  return {ambient, std::move(elems)};
}

Json elem_to_json(const GroupElem& x) { return elems_to_json(x.ambient(), {x}); }

GroupElem elem_from_json(const Json& j) {
  auto [ambient, elems] = elems_from_json(j);
  if (elems.size() != 1) throw ParseError("expected exactly one element in 'coords'");
  return elems.front();
}

Json intvec_to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    if (x.fits_slong_p()) {
      out.push_back(x.get_si());
    } else {
      out.push_back(to_string(x));
    }
  }
  return out;
}

IntVec intvec_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an integer array");
  IntVec out;
  for (const auto& x : j) {
    if (x.is_number_integer()) {
      out.emplace_back(x.dump());
    } else if (x.is_string()) {
      out.emplace_back(x.get<std::string>());
    } else {
      throw ParseError("expected an integer, got " + x.dump());
    }
  }
  return out;
}

}  // namespace placeforge
