#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "placeforge/ordgroup/rat.hpp"

namespace placeforge {

using IntVec = std::vector<Integer>;
using IntMat = std::vector<IntVec>;
using RatVec = std::vector<Rat>;
using RatMat = std::vector<RatVec>;

/// Row-style Hermite normal form: `transform * input == form`, `transform`
/// unimodular. The first `rank` rows of `form` are nonzero and in echelon
/// form with positive pivots; entries above each pivot lie in [0, pivot).
/// The remaining rows are zero.
struct Hnf {
  IntMat form;
  IntMat transform;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
  std::size_t rank = 0;
};

Hnf hermite_normal_form(const IntMat& rows, std::size_t ncols);

/// The nonzero HNF rows of the lattice spanned by `rows`.
IntMat hnf_basis(const IntMat& rows, std::size_t ncols);

/// HNF-canonical basis of { k in Z^m : sum_i k_i * rows[i] == 0 }.
IntMat left_kernel(const IntMat& rows, std::size_t ncols);

/// Coordinates of `target` over the nonzero rows of `hnf.form`, if it lies
/// in their integer span.
std::optional<IntVec> hnf_coordinates(const Hnf& hnf, IntVec target);

/// Some integer vector c with sum_i c_i * rows[i] == target, if one exists
/// (coefficients over the rows that produced `hnf`).
std::optional<IntVec> solve_integer(const Hnf& hnf, const IntVec& target);

/// Reduces v modulo the lattice with HNF basis `basis`, leaving each pivot
/// coordinate in the centered range (-h/2, h/2].
IntVec reduce_centered(IntVec v, const IntMat& basis);

/// Smallest positive integer D with D * m integral, and the scaled matrix.
Integer common_denominator(const RatMat& m);
IntMat scale_to_integers(const RatMat& m, const Integer& scale);
/// nullopt when some entry of D * v is not an integer.
std::optional<IntVec> scale_to_integers(const RatVec& v, const Integer& scale);

/// Rank over Q.
std::size_t rational_rank(const RatMat& rows, std::size_t ncols);

/// Reduced row echelon form over Q; returns the pivot columns.
std::vector<std::size_t> rref(RatMat& rows, std::size_t ncols);

/// Basis of { x in Q^ncols : rows * x == 0 } (one vector per free column,
/// in column order).
RatMat right_nullspace(const RatMat& rows, std::size_t ncols);

/// Coefficients c with sum_i c_i * rows[i] == target over Q, for linearly
/// independent rows; nullopt if target is outside their span.
std::optional<RatVec> solve_rational(const RatMat& rows, const RatVec& target);

IntVec add(const IntVec& x, const IntVec& y);
IntVec scaled(const IntVec& x, const Integer& k);
bool is_zero(const IntVec& x);

}  // namespace placeforge
