#include "placeforge/ordgroup/subgroup.hpp"

#include <set>

#include "placeforge/errors.hpp"

namespace placeforge {

Subgroup::Subgroup(AmbientGroup ambient, std::vector<GroupElem> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  RatMat rows;
  for (const auto& g : generators_) {
    check_ambient(g);
    rows.push_back(g.expand());
  }
  scale_ = common_denominator(rows);
  hnf_ = hermite_normal_form(scale_to_integers(rows, scale_), 2 * ambient_.levels());
}

void Subgroup::check_ambient(const GroupElem& x) const {
  if (!(x.ambient() == ambient_)) throw DomainError("element does not belong to the subgroup's ambient group");
}

std::optional<IntVec> Subgroup::scaled(const GroupElem& x) const {
  check_ambient(x);
  return scale_to_integers(x.expand(), scale_);
}

std::size_t Subgroup::convex_rank() const {
  // Every element's first nonzero coordinate sits in a pivot column of the
  // echelon form, and every pivot row realizes its own pivot column.
  std::set<std::size_t> levels;
  for (std::size_t i = 0; i < hnf_.rank; ++i) levels.insert(hnf_.pivots[i] / 2);
  return levels.size();
}

bool Subgroup::contains(const GroupElem& x) const {
  auto v = scaled(x);
  return v && hnf_coordinates(hnf_, std::move(*v)).has_value();
}

bool Subgroup::in_p_divisible_hull(const GroupElem& x, const Integer& p) const {
  check_ambient(x);
  RatMat basis_rows;
  for (std::size_t i = 0; i < hnf_.rank; ++i) {
    RatVec row;
    for (const auto& z : hnf_.form[i]) row.emplace_back(z);
    basis_rows.push_back(std::move(row));
  }
  RatVec target;
  for (const auto& c : x.expand()) target.push_back(c * scale_);
  const auto coords = solve_rational(basis_rows, target);
  if (!coords) return false;
  Integer order = 1;
  for (const auto& c : *coords) order = lcm(order, c.get_den());
  if (p <= 1) return order == 1;
  while (order % p == 0) order /= p;
  return order == 1;
}

std::vector<GroupElem> Subgroup::basis() const {
  std::vector<GroupElem> out;
  for (std::size_t i = 0; i < hnf_.rank; ++i) {
    std::vector<QuadScalar> coords;
    for (std::size_t l = 0; l < ambient_.levels(); ++l) {
      coords.emplace_back(Rat(hnf_.form[i][2 * l], scale_), Rat(hnf_.form[i][2 * l + 1], scale_), ambient_.radicand(l));
    }
    out.emplace_back(ambient_, std::move(coords));
  }
  return out;
}

std::optional<IntVec> Subgroup::basis_coordinates(const GroupElem& x) const {
  auto v = scaled(x);
  if (!v) return std::nullopt;
  return hnf_coordinates(hnf_, std::move(*v));
}

std::optional<IntVec> Subgroup::generator_coefficients(const GroupElem& x) const {
  auto v = scaled(x);
  if (!v) return std::nullopt;
  return solve_integer(hnf_, *v);
}

std::size_t rational_rank(const Subgroup& s) { return s.rational_rank(); }
bool subgroup_member(const Subgroup& s, const GroupElem& x) { return s.contains(x); }
std::size_t convex_rank(const Subgroup& s) { return s.convex_rank(); }
bool in_p_divisible_hull(const GroupElem& x, const Subgroup& s, const Integer& p) {
  return s.in_p_divisible_hull(x, p);
}

}  // namespace placeforge
