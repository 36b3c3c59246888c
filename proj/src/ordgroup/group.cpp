#include "placeforge/ordgroup/group.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

AmbientGroup::AmbientGroup(std::vector<std::int64_t> radicands) {
  if (radicands.empty()) throw DomainError("an ambient group needs at least one level");
  for (auto d : radicands) {
    if (!is_squarefree_radicand(d)) {
      throw DomainError("level radicand " + std::to_string(d) + " is not a squarefree integer >= 2");
    }
  }
  radicands_ = std::make_shared<const std::vector<std::int64_t>>(std::move(radicands));
}

AmbientGroup AmbientGroup::lex_rational(std::size_t levels) {
  return AmbientGroup(std::vector<std::int64_t>(levels, 2));
}

AmbientGroup AmbientGroup::concat(const AmbientGroup& lower) const {
  std::vector<std::int64_t> ds = radicands();
  ds.insert(ds.end(), lower.radicands().begin(), lower.radicands().end());
  return AmbientGroup(std::move(ds));
}

GroupElem::GroupElem(const AmbientGroup& ambient) : ambient_(ambient) {
  coords_.reserve(ambient.levels());
  for (std::size_t i = 0; i < ambient.levels(); ++i) coords_.push_back(QuadScalar::rational(0, ambient.radicand(i)));
}

GroupElem::GroupElem(const AmbientGroup& ambient, std::vector<QuadScalar> coords)
    : ambient_(ambient), coords_(std::move(coords)) {
  if (coords_.size() != ambient_.levels()) {
    throw DomainError("element has " + std::to_string(coords_.size()) + " coordinates but the ambient group has " +
                      std::to_string(ambient_.levels()) + " levels");
  }
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].d() != ambient_.radicand(i)) {
      throw DomainError("coordinate radicand does not match level " + std::to_string(i));
    }
  }
}

GroupElem GroupElem::from_rationals(const AmbientGroup& ambient, const std::vector<Rat>& values) {
  std::vector<QuadScalar> coords;
  for (std::size_t i = 0; i < values.size(); ++i) {
    coords.push_back(QuadScalar::rational(values[i], i < ambient.levels() ? ambient.radicand(i) : 2));
  }
  return GroupElem(ambient, std::move(coords));
}

bool GroupElem::is_zero() const { return !leading_level().has_value(); }

std::optional<std::size_t> GroupElem::leading_level() const {
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero()) return i;
  }
  return std::nullopt;
}

int GroupElem::sign() const {
  for (const auto& c : coords_) {
    if (int s = quad_sign(c); s != 0) return s;
  }
  return 0;
}

std::vector<Rat> GroupElem::expand() const {
  std::vector<Rat> out;
  out.reserve(2 * coords_.size());
  for (const auto& c : coords_) {
    out.push_back(c.a());
    out.push_back(c.b());
  }
  return out;
}

GroupElem GroupElem::operator-() const {
  GroupElem out = *this;
  for (auto& c : out.coords_) c = -c;
  return out;
}

GroupElem& GroupElem::operator+=(const GroupElem& o) {
  if (!(ambient_ == o.ambient_)) throw DomainError("group elements live in different ambient groups");
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] = coords_[i] + o.coords_[i];
  return *this;
}

GroupElem GroupElem::operator+(const GroupElem& o) const {
  GroupElem out = *this;
  out += o;
  return out;
}

GroupElem GroupElem::operator-(const GroupElem& o) const { return *this + (-o); }

GroupElem GroupElem::operator*(const Rat& k) const {
  GroupElem out = *this;
  for (auto& c : out.coords_) c = c * k;
  return out;
}

GroupElem GroupElem::concat(const GroupElem& lower) const {
  std::vector<QuadScalar> coords = coords_;
  coords.insert(coords.end(), lower.coords_.begin(), lower.coords_.end());
  return GroupElem(ambient_.concat(lower.ambient_), std::move(coords));
}

std::string GroupElem::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ", ";
    out += coords_[i].to_string();
  }
  return out + ")";
}

std::strong_ordering cmp_elem(const GroupElem& x, const GroupElem& y) {
  if (!(x.ambient() == y.ambient())) throw DomainError("comparing elements of different ambient groups");
  for (std::size_t i = 0; i < x.coords().size(); ++i) {
    const int s = quad_sign(x.coord(i) - y.coord(i));
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace placeforge
