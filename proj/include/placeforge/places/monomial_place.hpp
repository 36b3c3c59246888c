#pragma once

#include <memory>
#include <vector>

#include "placeforge/ordgroup/lattice.hpp"
#include "placeforge/ordgroup/subgroup.hpp"
#include "placeforge/ratfunc/poly.hpp"

namespace placeforge {

/// A Gauss (monomial) place on K(x_1..x_n): x^e has value sum_i e_i*w_i
/// and a nonzero polynomial takes the minimum over its terms.
///
/// Construction precomputes the HNF of the weight lattice. Its kernel
/// {m : sum m_i w_i = 0} indexes the residue field: generator j is the
/// Laurent monomial x^{kernel_basis()[j]}.
class MonomialPlace {
 public:
  MonomialPlace(BaseField base, AmbientGroup ambient, std::vector<GroupElem> weights);

  const BaseField& base() const { return data_->base; }
  std::size_t arity() const { return data_->weights.size(); }
  const AmbientGroup& ambient() const { return data_->ambient; }
  const std::vector<GroupElem>& weights() const { return data_->weights; }

  /// HNF basis of the kernel lattice, one row per residue generator.
  const IntMat& kernel_basis() const { return data_->kernel; }
  std::size_t dim() const { return data_->kernel.size(); }
  const Subgroup& value_group() const { return data_->value_group; }

  GroupElem monomial_value(const Exponents& e) const;
  /// Coordinates of a kernel vector over kernel_basis(). Throws DomainError
  /// if m is not in the kernel lattice.
  Exponents kernel_coordinates(const Exponents& m) const;

  /// The canonical exponent vector m with sum m_i w_i = v: a particular
  /// solution reduced modulo the kernel to centered pivot residues. Throws
  /// DomainError if v is outside the value group.
  Exponents monomial_section(const GroupElem& v) const;

  /// A group homomorphism s from the value group to Z^n with
  /// monomial_value(s(v)) = v: canonical sections of the HNF basis elements,
  /// extended linearly.
  Exponents splitting(const GroupElem& v) const;

  friend bool operator==(const MonomialPlace& x, const MonomialPlace& y) {
    return x.base() == y.base() && x.ambient() == y.ambient() && x.weights() == y.weights();
  }

 private:
  struct Data {
    BaseField base;
    AmbientGroup ambient;
    std::vector<GroupElem> weights;
    Integer scale;
    Hnf hnf;
    IntMat kernel;
    Subgroup value_group;
    std::vector<IntVec> basis_sections;
  };
  IntVec scaled(const GroupElem& v) const;
  IntVec canonical_section(const IntVec& scaled_target) const;

  std::shared_ptr<const Data> data_;
};

}  // namespace placeforge
