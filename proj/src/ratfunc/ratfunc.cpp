#include "placeforge/ratfunc/ratfunc.hpp"

#include <algorithm>

#include "placeforge/errors.hpp"

namespace placeforge {

RatFunc::RatFunc(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (!(num_.base() == den_.base()) || num_.arity() != den_.arity()) {
    throw DomainError("numerator and denominator disagree on base field or arity");
  }
  if (den_.is_zero()) throw DomainError("division by the zero polynomial");
  canonicalize();
}

RatFunc::RatFunc(Poly p) : RatFunc(p, Poly::constant(p.base(), p.arity(), 1)) {}

RatFunc RatFunc::zero(BaseField base, std::size_t arity) { return RatFunc(Poly(base, arity)); }

RatFunc RatFunc::constant(BaseField base, std::size_t arity, const Rat& c) {
  return RatFunc(Poly::constant(base, arity, c));
}

RatFunc RatFunc::variable(BaseField base, std::size_t arity, std::size_t index) {
  return RatFunc(Poly::variable(base, arity, index));
}

RatFunc RatFunc::laurent_monomial(BaseField base, std::size_t arity, const Exponents& e, const Rat& c) {
  Poly::Terms num;
  num.emplace(e, c);
  Poly::Terms den;
  den.emplace(Exponents(arity, 0), Rat(1));
  return from_laurent(base, arity, num, den);
}

RatFunc RatFunc::from_laurent(BaseField base, std::size_t arity, const Poly::Terms& num, const Poly::Terms& den) {
  // Multiply both sides by x^shift where shift clears every negative exponent.
  Exponents shift(arity, 0);
  for (const auto* terms : {&num, &den}) {
    for (const auto& [e, c] : *terms) {
      if (e.size() != arity) throw DomainError("exponent vector length does not match arity");
      for (std::size_t i = 0; i < arity; ++i) shift[i] = std::max(shift[i], -e[i]);
    }
  }
  auto shifted = [&](const Poly::Terms& terms) {
    Poly::Terms out;
    for (const auto& [e, c] : terms) {
      auto [it, inserted] = out.try_emplace(add_exponents(e, shift), c);
      if (!inserted) it->second += c;
    }
    return Poly::from_terms(base, arity, out);
  };
  return RatFunc(shifted(num), shifted(den));
}

void RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(den_.base(), den_.arity(), 1);
    return;
  }
  const Exponents a = num_.min_exponents();
  const Exponents b = den_.min_exponents();
  Exponents common(a.size());
  bool nontrivial = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    common[i] = -std::min(a[i], b[i]);
    nontrivial |= common[i] != 0;
  }
  if (nontrivial) {
    num_ = num_.shifted(common);
    den_ = den_.shifted(common);
  }
  const Rat lead = den_.leading_coefficient();
  if (lead != 1) {
    const Rat k = den_.base().inv(lead);
    num_ = num_.scaled(k);
    den_ = den_.scaled(k);
  }
}

void RatFunc::check_compatible(const RatFunc& o) const {
  if (!(base() == o.base())) throw DomainError("rational functions over different base fields");
  if (arity() != o.arity()) throw DomainError("rational functions of different arity");
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_); }

RatFunc RatFunc::operator+(const RatFunc& o) const {
  check_compatible(o);
  if (den_ == o.den_) return RatFunc(num_ + o.num_, den_);
  return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RatFunc RatFunc::operator-(const RatFunc& o) const { return *this + (-o); }

RatFunc RatFunc::operator*(const RatFunc& o) const {
  check_compatible(o);
  return RatFunc(num_ * o.num_, den_ * o.den_);
}

RatFunc RatFunc::operator/(const RatFunc& o) const {
  check_compatible(o);
  if (o.is_zero()) throw DomainError("division by zero");
  return RatFunc(num_ * o.den_, den_ * o.num_);
}

RatFunc RatFunc::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  return RatFunc(den_, num_);
}

RatFunc RatFunc::pow(std::int64_t e) const {
  if (e < 0) {
    if (e == INT64_MIN) throw DomainError("exponent overflow");
    return inverse().pow(-e);
  }
  const auto k = static_cast<std::uint64_t>(e);
  return RatFunc(num_.pow(k), den_.pow(k));
}

RatFunc RatFunc::times_monomial(const Exponents& e) const {
  Exponents pos(e.size(), 0);
  Exponents neg(e.size(), 0);
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] > 0) {
      pos[i] = e[i];
    } else if (e[i] == INT64_MIN) {
      throw DomainError("exponent overflow");
    } else {
      neg[i] = -e[i];
    }
  }
  return RatFunc(num_.shifted(pos), den_.shifted(neg));
}

bool operator==(const RatFunc& f, const RatFunc& g) {
  f.check_compatible(g);
  return f.num_ * g.den_ == g.num_ * f.den_;
}

RatFunc arith(ArithOp op, const RatFunc& f, const RatFunc& g) {
  switch (op) {
    case ArithOp::add:
      return f + g;
    case ArithOp::sub:
      return f - g;
    case ArithOp::mul:
      return f * g;
    case ArithOp::div:
      return f / g;
  }
  throw DomainError("unknown arithmetic operation");
}

bool eq_zero(const RatFunc& f) { return f.is_zero(); }

}  // namespace placeforge
