#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "placeforge/places/monomial_place.hpp"
#include "placeforge/places/value.hpp"
#include "placeforge/ratfunc/ratfunc.hpp"

namespace placeforge {

class Place;

/// Composite place Q1Q2: `outer` lives on the residue field of `inner`.
struct CompositePlace {
  std::shared_ptr<const Place> inner;
  std::shared_ptr<const Place> outer;
};

/// The residue field K(u_1..u_k) of a place, purely transcendental over K.
/// Generator u_j is the residue of the Laurent monomial x^{gens[j]} in the
/// original variables; for composites the tower is flattened.
struct ResidueFieldDesc {
  BaseField base;
  IntMat gens;
};

/// Residue f*P: a rational function in the residue generators, or infinity.
class Residue {
 public:
  explicit Residue(RatFunc f) : fn_(std::move(f)) {}
  static Residue infinity() { return Residue(); }

  bool is_infinite() const { return !fn_.has_value(); }
  bool is_zero() const { return fn_ && fn_->is_zero(); }
  const RatFunc& function() const;

  friend bool operator==(const Residue& x, const Residue& y);

 private:
  Residue() = default;
  std::optional<RatFunc> fn_;
};

/// A place of K(x_1..x_n)|K: monomial, or a composite of places.
class Place {
 public:
  Place(MonomialPlace p);  // NOLINT(google-explicit-constructor)

  bool is_monomial() const { return std::holds_alternative<MonomialPlace>(rep_); }
  bool is_composite() const { return !is_monomial(); }
  const MonomialPlace& as_monomial() const { return std::get<MonomialPlace>(rep_); }
  const Place& inner() const { return *std::get<CompositePlace>(rep_).inner; }
  const Place& outer() const { return *std::get<CompositePlace>(rep_).outer; }

  const BaseField& base() const;
  std::size_t arity() const;
  /// Monomial: its own ambient. Composite: inner levels, then outer levels.
  const AmbientGroup& ambient() const { return data_->ambient; }
  /// Residue transcendence degree over K.
  std::size_t dim() const { return data_->residue.gens.size(); }
  const ResidueFieldDesc& residue_field() const { return data_->residue; }
  /// value(x_i) for every variable; these generate the value group.
  const std::vector<GroupElem>& variable_values() const { return data_->variable_values; }
  const Subgroup& value_group() const { return data_->value_group; }

  /// A homomorphic section of the value group: monomial_value of the
  /// returned exponent vector is v, and s(v + w) = s(v) + s(w).
  Exponents splitting(const GroupElem& v) const;

  /// The monomial place with weights variable_values(); it has the same
  /// values as *this on every rational function.
  MonomialPlace flatten() const;

  friend bool operator==(const Place& x, const Place& y);

 private:
  friend Place compose(const Place& inner, const Place& outer);
  struct Derived {
    AmbientGroup ambient;
    ResidueFieldDesc residue;
    std::vector<GroupElem> variable_values;
    Subgroup value_group;
  };
  explicit Place(CompositePlace c);

  std::variant<MonomialPlace, CompositePlace> rep_;
  std::shared_ptr<const Derived> data_;
};

/// Composite place; requires outer.arity() == inner.dim() and equal bases.
Place compose(const Place& inner, const Place& outer);

Value value(const Place& p, const RatFunc& f);
Value value(const Place& p, const Poly& f);
/// Residue of f; 0 for value > 0 (and for f = 0), infinity for value < 0.
Residue residue(const Place& p, const RatFunc& f);

/// Maps a residue (a rational function in the generators u_j) back into
/// K(x_1..x_n) through u_j -> x^{gens[j]}. The map is injective, so residues
/// of different places can be compared after lifting.
RatFunc lift_residue(const Place& p, const RatFunc& r);

std::vector<Exponents> kernel_lattice(const MonomialPlace& p);
Exponents monomial_section(const MonomialPlace& p, const GroupElem& v);

}  // namespace placeforge
