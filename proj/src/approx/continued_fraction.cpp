#include "placeforge/approx/continued_fraction.hpp"

#include "placeforge/errors.hpp"

namespace placeforge {

Rat sqrt_convergent(std::int64_t d, const Integer& min_den) {
  const Integer dd(static_cast<long>(d));
  Integer a0 = sqrt(dd);
  if (a0 * a0 == dd) throw DomainError("sqrt_convergent: perfect square");
  // Periodic expansion: m' = q*a - m, q' = (d - m'^2)/q, a' = (a0 + m')/q'.
  Integer m = 0, q = 1, a = a0;
  Integer h_prev = 1, h = a0;
  Integer k_prev = 0, k = 1;
  while (k < min_den) {
    m = q * a - m;
    q = (dd - m * m) / q;
    a = (a0 + m) / q;
    Integer h_next = a * h + h_prev;
    Integer k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
  return Rat(h, k);
}

}  // namespace placeforge
