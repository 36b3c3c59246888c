#pragma once

#include <cstdint>
#include <string>

#include "placeforge/ordgroup/rat.hpp"

namespace placeforge {

/// True iff d >= 2 and no prime square divides d.
bool is_squarefree_radicand(std::int64_t d);

/// An element a + b*sqrt(d) of the real quadratic field Q(sqrt d).
///
/// The radicand is carried by the scalar so that sign determination is
/// self-contained; arithmetic between scalars requires equal radicands.
class QuadScalar {
 public:
  /// Zero in Q(sqrt 2).
  QuadScalar() = default;
  QuadScalar(Rat a, Rat b, std::int64_t d);

  static QuadScalar rational(Rat a, std::int64_t d = 2) { return QuadScalar(std::move(a), Rat(0), d); }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  std::int64_t d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }

  QuadScalar operator-() const { return QuadScalar(-a_, -b_, d_, Unchecked{}); }
  QuadScalar operator+(const QuadScalar& o) const;
  QuadScalar operator-(const QuadScalar& o) const;
  QuadScalar operator*(const Rat& k) const { return QuadScalar(a_ * k, b_ * k, d_, Unchecked{}); }

  friend bool operator==(const QuadScalar& x, const QuadScalar& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  std::string to_string() const;

 private:
  struct Unchecked {};
  QuadScalar(Rat a, Rat b, std::int64_t d, Unchecked) : a_(std::move(a)), b_(std::move(b)), d_(d) {}

  Rat a_{0};
  Rat b_{0};
  std::int64_t d_ = 2;
};

/// Exact sign of a + b*sqrt(d): case split on the signs of a and b, and
/// a^2 against b^2*d when they disagree.
int quad_sign(const QuadScalar& s);

}  // namespace placeforge
