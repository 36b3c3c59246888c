#pragma once

#include <cstdint>

#include "placeforge/ratfunc/poly.hpp"

namespace placeforge {

/// A rational function num/den in K(x_1..x_n).
///
/// Canonical scaling only: the common monomial content of num and den is
/// removed and den's lexicographically largest term is made monic. No
/// polynomial gcd is taken, so two representations of the same function
/// may differ; compare with operator== (cross multiplication) or eq_zero.
class RatFunc {
 public:
  RatFunc(Poly num, Poly den);
  explicit RatFunc(Poly p);

  static RatFunc zero(BaseField base, std::size_t arity);
  static RatFunc constant(BaseField base, std::size_t arity, const Rat& c);
  static RatFunc variable(BaseField base, std::size_t arity, std::size_t index);
  /// x^e for an integer (possibly negative) exponent vector.
  static RatFunc laurent_monomial(BaseField base, std::size_t arity, const Exponents& e, const Rat& c = 1);
  /// Builds (sum num) / (sum den) from Laurent terms with arbitrary signs of
  /// exponents.
  static RatFunc from_laurent(BaseField base, std::size_t arity, const Poly::Terms& num, const Poly::Terms& den);

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  const BaseField& base() const { return num_.base(); }
  std::size_t arity() const { return num_.arity(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_one(); }

  RatFunc operator-() const;
  RatFunc operator+(const RatFunc& o) const;
  RatFunc operator-(const RatFunc& o) const;
  RatFunc operator*(const RatFunc& o) const;
  /// Throws DomainError when o is zero.
  RatFunc operator/(const RatFunc& o) const;
  RatFunc inverse() const;
  RatFunc pow(std::int64_t e) const;
  /// Multiplies by the Laurent monomial x^e.
  RatFunc times_monomial(const Exponents& e) const;

  /// Mathematical equality, decided by cross multiplication.
  friend bool operator==(const RatFunc& f, const RatFunc& g);

 private:
  void canonicalize();
  void check_compatible(const RatFunc& o) const;

  Poly num_;
  Poly den_;
};

enum class ArithOp { add, sub, mul, div };

RatFunc arith(ArithOp op, const RatFunc& f, const RatFunc& g);
bool eq_zero(const RatFunc& f);

}  // namespace placeforge
