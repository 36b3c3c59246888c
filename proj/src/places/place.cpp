#include "placeforge/places/place.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

void check_operand(const Place& p, const RatFunc& f) {
  if (!(p.base() == f.base())) {
    throw DomainError("element over " + f.base().name() + " evaluated at a place over " + p.base().name());
  }
  if (p.arity() != f.arity()) {
    throw DomainError("element of arity " + std::to_string(f.arity()) + " evaluated at a place of arity " +
                      std::to_string(p.arity()));
  }
}

struct MinTerms {
  GroupElem value;
  std::vector<const Poly::Terms::value_type*> terms;
};

MinTerms min_terms(const MonomialPlace& p, const Poly& poly) {
  auto it = poly.terms().begin();
  MinTerms out{p.monomial_value(it->first), {&*it}};
  for (++it; it != poly.terms().end(); ++it) {
    GroupElem v = p.monomial_value(it->first);
    const auto c = cmp_elem(v, out.value);
    if (c < 0) {
      out.value = std::move(v);
      out.terms.assign(1, &*it);
    } else if (c == 0) {
      out.terms.push_back(&*it);
    }
  }
  return out;
}

Value monomial_value_of(const MonomialPlace& p, const RatFunc& f) {
  if (f.is_zero()) return Value::infinity();
  return min_terms(p, f.num()).value - min_terms(p, f.den()).value;
}

Residue monomial_residue(const MonomialPlace& p, const RatFunc& f) {
  const std::size_t k = p.dim();
  if (f.is_zero()) return Residue(RatFunc::zero(p.base(), k));
  const MinTerms num = min_terms(p, f.num());
  const MinTerms den = min_terms(p, f.den());
  const int s = (num.value - den.value).sign();
  if (s > 0) return Residue(RatFunc::zero(p.base(), k));
  if (s < 0) return Residue::infinity();
  const Exponents& ref = den.terms.front()->first;
  auto collect = [&](const MinTerms& m) {
    Poly::Terms out;
    for (const auto* term : m.terms) out.emplace(p.kernel_coordinates(sub_exponents(term->first, ref)), term->second);
    return out;
  };
  return Residue(RatFunc::from_laurent(p.base(), k, collect(num), collect(den)));
}

Exponents lift_exponents(const IntMat& gens, const Exponents& c, std::size_t arity) {
  Exponents out(arity, 0);
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (c[j] == 0) continue;
    for (std::size_t i = 0; i < arity; ++i) {
      Integer t = gens[j][i] * static_cast<long>(c[j]) + static_cast<long>(out[i]);
      if (!t.fits_slong_p()) throw DomainError("exponent overflow");
      out[i] = t.get_si();
    }
  }
  return out;
}

std::pair<GroupElem, GroupElem> split_levels(const GroupElem& v, const AmbientGroup& upper, const AmbientGroup& lower) {
  if (!(v.ambient() == upper.concat(lower))) throw DomainError("value does not belong to the composite ambient group");
  const auto& c = v.coords();
  const auto mid = c.begin() + static_cast<std::ptrdiff_t>(upper.levels());
  return {GroupElem(upper, {c.begin(), mid}), GroupElem(lower, {mid, c.end()})};
}

Value composite_value(const Place& inner, const Place& outer, const RatFunc& f) {
  const Value v1 = value(inner, f);
  if (v1.is_infinite()) return v1;
  const Exponents section = inner.splitting(v1.elem());
  const Residue r = residue(inner, f.times_monomial(scale_exponents(section, -1)));
  const Value w = value(outer, r.function());
  return v1.elem().concat(w.elem());
}

}  // namespace

const RatFunc& Residue::function() const {
  if (!fn_) throw DomainError("the infinite residue has no function");
  return *fn_;
}

bool operator==(const Residue& x, const Residue& y) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() && y.is_infinite();
  return x.fn_->arity() == y.fn_->arity() && *x.fn_ == *y.fn_;
}

Place::Place(MonomialPlace p) : rep_(std::move(p)) {
  const auto& m = as_monomial();
  data_ = std::make_shared<const Derived>(
      Derived{m.ambient(), ResidueFieldDesc{m.base(), m.kernel_basis()}, m.weights(), m.value_group()});
}

Place::Place(CompositePlace c) : rep_(std::move(c)) {
  const Place& in = inner();
  const Place& out = outer();
  AmbientGroup ambient = in.ambient().concat(out.ambient());
  IntMat gens;
  for (const auto& g : out.residue_field().gens) {
    Exponents c_j;
    for (const auto& x : g) c_j.push_back(x.get_si());
    Exponents lifted = lift_exponents(in.residue_field().gens, c_j, in.arity());
    IntVec row;
    for (auto e : lifted) row.emplace_back(static_cast<long>(e));
    gens.push_back(std::move(row));
  }
  std::vector<GroupElem> values;
  for (std::size_t i = 0; i < in.arity(); ++i) {
    values.push_back(composite_value(in, out, RatFunc::variable(in.base(), in.arity(), i)).elem());
  }
  Subgroup group(ambient, values);
  data_ = std::make_shared<const Derived>(
      Derived{std::move(ambient), ResidueFieldDesc{in.base(), std::move(gens)}, std::move(values), std::move(group)});
}

const BaseField& Place::base() const { return is_monomial() ? as_monomial().base() : inner().base(); }

std::size_t Place::arity() const { return is_monomial() ? as_monomial().arity() : inner().arity(); }

Exponents Place::splitting(const GroupElem& v) const {
  if (is_monomial()) return as_monomial().splitting(v);
  const auto [upper, lower] = split_levels(v, inner().ambient(), outer().ambient());
  const Exponents m = inner().splitting(upper);
  const Exponents c = outer().splitting(lower);
  return add_exponents(m, lift_exponents(inner().residue_field().gens, c, arity()));
}

MonomialPlace Place::flatten() const {
  if (is_monomial()) return as_monomial();
  return MonomialPlace(base(), ambient(), variable_values());
}

bool operator==(const Place& x, const Place& y) {
  if (x.is_monomial() != y.is_monomial()) return false;
  if (x.is_monomial()) return x.as_monomial() == y.as_monomial();
  return x.inner() == y.inner() && x.outer() == y.outer();
}

Place compose(const Place& inner, const Place& outer) {
  if (!(inner.base() == outer.base())) throw DomainError("inner and outer places have different base fields");
  if (outer.arity() != inner.dim()) {
    throw DomainError("outer place has arity " + std::to_string(outer.arity()) + " but the inner residue field has " +
                      std::to_string(inner.dim()) + " generators");
  }
  return Place(CompositePlace{std::make_shared<const Place>(inner), std::make_shared<const Place>(outer)});
}

Value value(const Place& p, const RatFunc& f) {
  check_operand(p, f);
  if (p.is_monomial()) return monomial_value_of(p.as_monomial(), f);
  return composite_value(p.inner(), p.outer(), f);
}

Value value(const Place& p, const Poly& f) { return value(p, RatFunc(f)); }

Residue residue(const Place& p, const RatFunc& f) {
  check_operand(p, f);
  if (p.is_monomial()) return monomial_residue(p.as_monomial(), f);
  if (f.is_zero()) return Residue(RatFunc::zero(p.base(), p.dim()));
  const Residue r = residue(p.inner(), f);
  if (r.is_infinite()) return r;
  if (r.is_zero()) return Residue(RatFunc::zero(p.base(), p.dim()));
  return residue(p.outer(), r.function());
}

RatFunc lift_residue(const Place& p, const RatFunc& r) {
  if (r.arity() != p.dim()) throw DomainError("residue arity does not match the place's residue field");
  const auto& gens = p.residue_field().gens;
  auto lift = [&](const Poly& poly) {
    Poly::Terms out;
    for (const auto& [e, c] : poly.terms()) out.emplace(lift_exponents(gens, e, p.arity()), c);
    return out;
  };
  return RatFunc::from_laurent(p.base(), p.arity(), lift(r.num()), lift(r.den()));
}

std::vector<Exponents> kernel_lattice(const MonomialPlace& p) {
  std::vector<Exponents> out;
  for (const auto& row : p.kernel_basis()) {
    Exponents e;
    for (const auto& x : row) {
      if (!x.fits_slong_p()) throw DomainError("kernel vector does not fit machine-word exponents");
      e.push_back(x.get_si());
    }
    out.push_back(std::move(e));
  }
  return out;
}

Exponents monomial_section(const MonomialPlace& p, const GroupElem& v) { return p.monomial_section(v); }

}  // namespace placeforge
