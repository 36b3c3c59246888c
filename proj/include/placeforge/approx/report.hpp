#pragma once

#include "placeforge/approx/goodify.hpp"
#include "placeforge/approx/signature.hpp"
#include "placeforge/ordgroup/json.hpp"
#include "placeforge/ratfunc/expr.hpp"

namespace placeforge {

/// {"place","iota":{"sources","images","witnesses"}|null,"iterations","checks":[...]}
/// plus "notices" when elements were skipped.
Json report_to_json(const GoodifyResult& r, const VarNames& names = {});

/// {"entries":[{"m":[..],"sign":"+"}...],"value_vectors":[[..]|null...]}
Json signature_to_json(const SignSignature& s);

/// "+", "-" or "0".
const char* sign_symbol(int sign);

}  // namespace placeforge
