#include "placeforge/places/topology.hpp"

namespace placeforge {

bool in_basic_open(const Place& p, const std::vector<RatFunc>& a, const std::vector<RatFunc>& b) {
  for (const auto& f : a) {
    if (value(p, f).sign() < 0) return false;
  }
  for (const auto& f : b) {
    if (value(p, f).sign() <= 0) return false;
  }
  return true;
}

Divisibility value_divisibility(const Place& p) {
  return [p](const RatFunc& x, const RatFunc& y) { return value(p, x) <= value(p, y); };
}

}  // namespace placeforge
