#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "placeforge/ratfunc/base_field.hpp"

namespace placeforge {

/// Exponent vector of a (Laurent) monomial.
using Exponents = std::vector<std::int64_t>;

Exponents add_exponents(const Exponents& x, const Exponents& y);  // overflow-checked
Exponents sub_exponents(const Exponents& x, const Exponents& y);
Exponents scale_exponents(const Exponents& x, std::int64_t k);

/// Sparse polynomial in `arity` variables over a BaseField. Terms are kept
/// in a map keyed by exponent vector (lexicographic order), never with a
/// zero coefficient.
class Poly {
 public:
  using Terms = std::map<Exponents, Rat>;

  Poly(BaseField base, std::size_t arity) : base_(base), arity_(arity) {}

  static Poly constant(BaseField base, std::size_t arity, const Rat& c);
  static Poly variable(BaseField base, std::size_t arity, std::size_t index);
  static Poly monomial(BaseField base, std::size_t arity, Exponents e, const Rat& c = 1);
  /// Validates exponent lengths and signs, maps coefficients into the field
  /// and drops zeros.
  static Poly from_terms(BaseField base, std::size_t arity, const Terms& terms);

  const BaseField& base() const { return base_; }
  std::size_t arity() const { return arity_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  /// Coefficient of the lexicographically largest exponent.
  const Rat& leading_coefficient() const;
  /// Componentwise minimum exponent over all terms (zero vector for 0).
  Exponents min_exponents() const;
  /// Multiplies by x^delta; the result must have nonnegative exponents.
  Poly shifted(const Exponents& delta) const;

  Poly operator-() const;
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Rat& c) const;
  Poly pow(std::uint64_t e) const;

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.base_ == y.base_ && x.arity_ == y.arity_ && x.terms_ == y.terms_;
  }

 private:
  void check_compatible(const Poly& o) const;
  void accumulate(const Exponents& e, const Rat& c);

  BaseField base_;
  std::size_t arity_;
  Terms terms_;
};

}  // namespace placeforge
