#include "placeforge/places/topology.hpp"

namespace placeforge {

SpvReport check_spv_axioms(const Place& p, const std::vector<RatFunc>& sample) {
  return check_spv_axioms(sample, value_divisibility(p), p.base(), p.arity());
}

SpvReport check_spv_axioms(const std::vector<RatFunc>& sample, const Divisibility& divides, const BaseField& base,
                           std::size_t arity) {
  const RatFunc zero = RatFunc::zero(base, arity);
  const RatFunc one = RatFunc::constant(base, arity, 1);
  auto fail = [](int axiom, std::vector<RatFunc> witness) { return SpvReport{false, axiom, std::move(witness)}; };

  for (const auto& x : sample) {
    for (const auto& y : sample) {
      if (!divides(x, y) && !divides(y, x)) return fail(1, {x, y});
    }
  }
  // Axioms 2-5 in order, so the first failure reported is the lowest axiom.
  for (int axiom = 2; axiom <= 5; ++axiom) {
    for (const auto& x : sample) {
      for (const auto& y : sample) {
        for (const auto& z : sample) {
          bool holds = true;
          switch (axiom) {
            case 2:
              holds = !(divides(x, y) && divides(y, z)) || divides(x, z);
              break;
            case 3:
              holds = !(divides(x, y) && divides(x, z)) || divides(x, y + z);
              break;
            case 4:
              holds = !divides(x, y) || divides(x * z, y * z);
              break;
            case 5:
              holds = !(divides(x * z, y * z) && !divides(zero, z)) || divides(x, y);
              break;
          }
          if (!holds) return fail(axiom, {x, y, z});
        }
      }
    }
  }
  if (divides(zero, one)) return fail(6, {zero, one});
  return {};
}

}  // namespace placeforge
