#include "placeforge/approx/report.hpp"

#include "placeforge/places/json.hpp"

namespace placeforge {

namespace {

Json exponents_to_json(const Exponents& e) { return Json(e); }

Json iota_to_json(const Iota& iota) {
  Json witnesses = Json::array();
  for (const auto& w : iota.witnesses) witnesses.push_back(intvec_to_json(w));
  return Json{{"sources", elems_to_json(iota.source_ambient, iota.sources)},
              {"images", elems_to_json(iota.image_ambient, iota.images)},
              {"witnesses", witnesses}};
}

}  // namespace

const char* sign_symbol(int sign) { return sign > 0 ? "+" : sign < 0 ? "-" : "0"; }

Json report_to_json(const GoodifyResult& r, const VarNames& names) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(Json{{"elem", to_expr(c.elem, names)},
                          {"sign_q", sign_symbol(c.sign_q)},
                          {"sign_p", sign_symbol(c.sign_p)},
                          {"residue_equal", c.residue_equal}});
  }
  Json out{{"place", place_to_json(r.place)}, {"iterations", r.iterations}, {"checks", checks}};
  out["iota"] = r.iota ? iota_to_json(*r.iota) : Json(nullptr);
  if (!r.notices.empty()) out["notices"] = r.notices;
  return out;
}

Json signature_to_json(const SignSignature& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(Json{{"m", exponents_to_json(e.m)}, {"sign", sign_symbol(e.sign)}});
  Json vv = Json::array();
  for (const auto& v : s.value_vectors) vv.push_back(v ? exponents_to_json(*v) : Json(nullptr));
  return Json{{"entries", entries}, {"value_vectors", vv}};
}

}  // namespace placeforge
