#pragma once

#include <cstdint>
#include <string>

#include "placeforge/ordgroup/rat.hpp"

namespace placeforge {

/// The constant field K: the rationals, or F_p for a prime p < 2^61.
///
/// Field elements are carried as Rat in both cases; over F_p they are kept
/// as integer residues in [0, p) and multiplied in 128-bit machine words.
class BaseField {
 public:
  static BaseField rationals() { return BaseField(0); }
  static BaseField prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  bool is_prime_field() const { return p_ != 0; }
  /// 0 for Q.
  std::uint64_t characteristic() const { return p_; }

  /// Maps a rational into the field. Throws DomainError when the
  /// denominator is divisible by p.
  Rat from_rat(const Rat& r) const;

  Rat add(const Rat& x, const Rat& y) const;
  Rat sub(const Rat& x, const Rat& y) const;
  Rat mul(const Rat& x, const Rat& y) const;
  Rat neg(const Rat& x) const;
  Rat inv(const Rat& x) const;
  bool is_zero(const Rat& x) const { return sgn(x) == 0; }

  /// "Q" or "F<p>".
  std::string name() const;

  friend bool operator==(const BaseField& a, const BaseField& b) { return a.p_ == b.p_; }

 private:
  explicit BaseField(std::uint64_t p) : p_(p) {}
  std::uint64_t residue(const Rat& x) const;

  std::uint64_t p_;
};

bool is_prime(std::uint64_t n);

}  // namespace placeforge
