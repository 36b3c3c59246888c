#include "placeforge/places/invariants.hpp"

namespace placeforge {

PlaceInvariants invariants(const Place& p) {
  PlaceInvariants out;
  const std::size_t n = p.arity();
  out.dim = p.dim();
  out.rr = p.value_group().rational_rank();
  out.rank = p.value_group().convex_rank();
  out.abhyankar = out.dim + out.rr == n;
  // A finitely generated torsion-free group of rational rank 1 is cyclic.
  out.discrete = out.rr == 1;
  out.rational = out.dim == 0;
  out.prime_divisor = n > 0 && out.dim == n - 1 && out.discrete;
  out.maximal_rank = out.rank == n;
  return out;
}

}  // namespace placeforge
