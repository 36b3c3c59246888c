#include "placeforge/ratfunc/json.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

Json base_field_to_json(const BaseField& k) {
  if (k.is_rationals()) return "Q";
  return {{"p", k.characteristic()}};
}

BaseField base_field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return BaseField::rationals();
  if (j.is_object() && j.contains("p") && j.at("p").is_number_unsigned()) {
    return BaseField::prime(j.at("p").get<std::uint64_t>());
  }
  throw ParseError("base field must be \"Q\" or {\"p\": <prime>}, got " + j.dump());
}

Json poly_to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms()) out.push_back({{"e", e}, {"c", rat_to_json(c)}});
  return out;
}

Poly poly_from_json(const Json& j, const BaseField& base, std::size_t arity) {
  if (!j.is_array()) throw ParseError("polynomial must be an array of {\"e\",\"c\"} terms");
  Poly::Terms terms;
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("e") || !t.contains("c")) throw ParseError("term needs fields 'e' and 'c'");
    auto e = t.at("e").get<Exponents>();
    auto [it, inserted] = terms.try_emplace(std::move(e), rat_from_json(t.at("c")));
    if (!inserted) throw ParseError("repeated exponent vector in polynomial");
  }
  return Poly::from_terms(base, arity, terms);
}

Json ratfunc_to_json(const RatFunc& f) { return {{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}}; }

RatFunc ratfunc_from_json(const Json& j, const BaseField& base, std::size_t arity) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
    throw ParseError("rational function needs fields 'num' and 'den'");
  }
  return RatFunc(poly_from_json(j.at("num"), base, arity), poly_from_json(j.at("den"), base, arity));
}

}  // namespace placeforge
