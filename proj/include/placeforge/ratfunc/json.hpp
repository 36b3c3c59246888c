#pragma once

#include "placeforge/ordgroup/json.hpp"
#include "placeforge/ratfunc/ratfunc.hpp"

namespace placeforge {

Json base_field_to_json(const BaseField& k);  // "Q" or {"p":5}
BaseField base_field_from_json(const Json& j);

/// [{"e":[1,0],"c":"3/2"}, ...] in ascending exponent order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, const BaseField& base, std::size_t arity);

/// {"num":[...],"den":[...]}
Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j, const BaseField& base, std::size_t arity);

}  // namespace placeforge
