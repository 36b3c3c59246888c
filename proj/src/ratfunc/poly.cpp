#include "placeforge/ratfunc/poly.hpp"

#include <algorithm>

#include "placeforge/errors.hpp"

namespace placeforge {

Exponents add_exponents(const Exponents& x, const Exponents& y) {
  Exponents out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (__builtin_add_overflow(x[i], y[i], &out[i])) throw DomainError("exponent overflow");
  }
  return out;
}

Exponents sub_exponents(const Exponents& x, const Exponents& y) {
  Exponents out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (__builtin_sub_overflow(x[i], y[i], &out[i])) throw DomainError("exponent overflow");
  }
  return out;
}

Exponents scale_exponents(const Exponents& x, std::int64_t k) {
  Exponents out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (__builtin_mul_overflow(x[i], k, &out[i])) throw DomainError("exponent overflow");
  }
  return out;
}

Poly Poly::constant(BaseField base, std::size_t arity, const Rat& c) {
  Poly p(base, arity);
  p.accumulate(Exponents(arity, 0), base.from_rat(c));
  return p;
}

Poly Poly::variable(BaseField base, std::size_t arity, std::size_t index) {
  if (index >= arity) throw DomainError("variable index out of range");
  Exponents e(arity, 0);
  e[index] = 1;
  return monomial(base, arity, std::move(e));
}

Poly Poly::monomial(BaseField base, std::size_t arity, Exponents e, const Rat& c) {
  Terms t;
  t.emplace(std::move(e), c);
  return from_terms(base, arity, t);
}

Poly Poly::from_terms(BaseField base, std::size_t arity, const Terms& terms) {
  Poly p(base, arity);
  for (const auto& [e, c] : terms) {
    if (e.size() != arity) throw DomainError("exponent vector length does not match arity");
    if (std::any_of(e.begin(), e.end(), [](std::int64_t x) { return x < 0; })) {
      throw DomainError("negative exponent in a polynomial");
    }
    p.accumulate(e, base.from_rat(c));
  }
  return p;
}

void Poly::accumulate(const Exponents& e, const Rat& c) {
  if (base_.is_zero(c)) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = base_.add(it->second, c);
  if (base_.is_zero(it->second)) terms_.erase(it);
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(), [](std::int64_t x) { return x == 0; });
}

const Rat& Poly::leading_coefficient() const {
  if (terms_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return terms_.rbegin()->second;
}

Exponents Poly::min_exponents() const {
  if (terms_.empty()) return Exponents(arity_, 0);
  Exponents m = terms_.begin()->first;
  for (const auto& [e, c] : terms_) {
    for (std::size_t i = 0; i < arity_; ++i) m[i] = std::min(m[i], e[i]);
  }
  return m;
}

Poly Poly::shifted(const Exponents& delta) const {
  Poly out(base_, arity_);
  for (const auto& [e, c] : terms_) {
    Exponents f = add_exponents(e, delta);
    if (std::any_of(f.begin(), f.end(), [](std::int64_t x) { return x < 0; })) {
      throw DomainError("monomial shift produced a negative exponent");
    }
    out.terms_.emplace_hint(out.terms_.end(), std::move(f), c);
  }
  return out;
}

void Poly::check_compatible(const Poly& o) const {
  if (!(base_ == o.base_)) throw DomainError("polynomials over different base fields");
  if (arity_ != o.arity_) throw DomainError("polynomials of different arity");
}

Poly Poly::operator-() const {
  Poly out(base_, arity_);
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, base_.neg(c));
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  check_compatible(o);
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.accumulate(e, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
  check_compatible(o);
  Poly out(base_, arity_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) out.accumulate(add_exponents(e1, e2), base_.mul(c1, c2));
  }
  return out;
}

Poly Poly::scaled(const Rat& c) const {
  const Rat k = base_.from_rat(c);
  Poly out(base_, arity_);
  if (base_.is_zero(k)) return out;
  for (const auto& [e, v] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, base_.mul(v, k));
  return out;
}

Poly Poly::pow(std::uint64_t e) const {
  if (terms_.size() == 1) {
    if (e > static_cast<std::uint64_t>(INT64_MAX)) throw DomainError("exponent overflow");
    const auto& [exps, c] = *terms_.begin();
    Rat coeff = 1;
    Rat b = c;
    for (std::uint64_t k = e; k; k >>= 1) {
      if (k & 1) coeff = base_.mul(coeff, b);
      b = base_.mul(b, b);
    }
    Poly out(base_, arity_);
    out.accumulate(scale_exponents(exps, static_cast<std::int64_t>(e)), coeff);
    return out;
  }
  Poly result = constant(base_, arity_, 1);
  Poly b = *this;
  for (std::uint64_t k = e; k; k >>= 1) {
    if (k & 1) result = result * b;
    if (k > 1) b = b * b;
  }
  return result;
}

}  // namespace placeforge
