#pragma once

#include <optional>
#include <vector>

#include "placeforge/places/place.hpp"

namespace placeforge {

/// An exponent vector m with the sign of its value. Stored with the first
/// nonzero coordinate positive; (-m, -s) is implied.
struct SignEntry {
  Exponents m;
  int sign = 0;

  friend bool operator==(const SignEntry&, const SignEntry&) = default;
};

/// The finitely many linear sign conditions on the weights that fix, for
/// every source element, its minimal terms, their ties and its value sign.
struct SignSignature {
  std::size_t arity = 0;
  std::vector<SignEntry> entries;  // sorted by m, no duplicates
  /// Per source element: an exponent vector whose value is the element's
  /// value (minimal numerator term minus minimal denominator term).
  /// nullopt for zero elements, which are skipped.
  std::vector<std::optional<Exponents>> value_vectors;
};

/// A composite Q is evaluated through its flattened monomial place. With
/// `compare_values`, the differences of the value vectors of every two
/// elements are added too, which fixes the order among the values. Throws
/// DomainError if two conditions contradict each other.
SignSignature signature(const Place& q, const std::vector<RatFunc>& elems, bool compare_values = false);

/// Whether the weights satisfy every entry.
bool satisfies(const SignSignature& sig, const MonomialPlace& p);

}  // namespace placeforge
