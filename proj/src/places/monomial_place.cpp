#include "placeforge/places/monomial_place.hpp"

#include "placeforge/errors.hpp"
#include "placeforge/places/value.hpp"

namespace placeforge {

namespace {

Exponents to_exponents(const IntVec& v) {
  Exponents out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (!x.fits_slong_p()) throw DomainError("lattice vector does not fit machine-word exponents");
    out.push_back(x.get_si());
  }
  return out;
}

IntVec to_intvec(const Exponents& e) {
  IntVec out;
  out.reserve(e.size());
  for (auto x : e) out.emplace_back(static_cast<long>(x));
  return out;
}

}  // namespace

const GroupElem& Value::elem() const {
  if (!elem_) throw DomainError("the infinite value has no group element");
  return *elem_;
}

Value Value::operator+(const Value& o) const {
  if (is_infinite() || o.is_infinite()) return infinity();
  return Value(*elem_ + *o.elem_);
}

std::strong_ordering operator<=>(const Value& x, const Value& y) {
  if (x.is_infinite() || y.is_infinite()) return x.is_infinite() <=> y.is_infinite();
  return cmp_elem(*x.elem_, *y.elem_);
}

MonomialPlace::MonomialPlace(BaseField base, AmbientGroup ambient, std::vector<GroupElem> weights) {
  RatMat rows;
  for (const auto& w : weights) {
    if (!(w.ambient() == ambient)) throw DomainError("weight does not belong to the place's ambient group");
    rows.push_back(w.expand());
  }
  const Integer scale = common_denominator(rows);
  const std::size_t ncols = 2 * ambient.levels();
  IntMat int_rows = scale_to_integers(rows, scale);
  Hnf hnf = hermite_normal_form(int_rows, ncols);
  IntMat kernel = left_kernel(int_rows, ncols);
  Subgroup value_group(ambient, weights);
  auto data = std::make_shared<Data>(Data{base, ambient, std::move(weights), scale, std::move(hnf), std::move(kernel),
                                           std::move(value_group), {}});
  data_ = data;
  for (std::size_t i = 0; i < data->hnf.rank; ++i) data->basis_sections.push_back(canonical_section(data->hnf.form[i]));
}

GroupElem MonomialPlace::monomial_value(const Exponents& e) const {
  if (e.size() != arity()) throw DomainError("exponent vector length does not match the place's arity");
  GroupElem out(ambient());
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) out += weights()[i] * Rat(static_cast<long>(e[i]));
  }
  return out;
}

Exponents MonomialPlace::kernel_coordinates(const Exponents& m) const {
  IntVec rest = to_intvec(m);
  IntVec coords;
  for (const auto& row : kernel_basis()) {
    std::size_t p = 0;
    while (row[p] == 0) ++p;
    if (!mpz_divisible_p(rest[p].get_mpz_t(), row[p].get_mpz_t())) {
      throw DomainError("exponent vector is not in the kernel lattice");
    }
    Integer q;
    mpz_divexact(q.get_mpz_t(), rest[p].get_mpz_t(), row[p].get_mpz_t());
    for (std::size_t j = 0; j < rest.size(); ++j) rest[j] -= q * row[j];
    coords.push_back(q);
  }
  if (!is_zero(rest)) throw DomainError("exponent vector is not in the kernel lattice");
  return to_exponents(coords);
}

IntVec MonomialPlace::scaled(const GroupElem& v) const {
  if (!(v.ambient() == ambient())) throw DomainError("value does not belong to the place's ambient group");
  auto s = scale_to_integers(v.expand(), data_->scale);
  if (!s) throw DomainError("value " + v.to_string() + " is not in the value group");
  return std::move(*s);
}

IntVec MonomialPlace::canonical_section(const IntVec& scaled_target) const {
  auto m = solve_integer(data_->hnf, scaled_target);
  if (!m) throw DomainError("value is not in the value group");
  return reduce_centered(std::move(*m), data_->kernel);
}

Exponents MonomialPlace::monomial_section(const GroupElem& v) const { return to_exponents(canonical_section(scaled(v))); }

Exponents MonomialPlace::splitting(const GroupElem& v) const {
  auto y = hnf_coordinates(data_->hnf, scaled(v));
  if (!y) throw DomainError("value " + v.to_string() + " is not in the value group");
  IntVec m(arity(), Integer(0));
  for (std::size_t i = 0; i < y->size(); ++i) {
    if ((*y)[i] != 0) m = add(m, placeforge::scaled(data_->basis_sections[i], (*y)[i]));
  }
  return to_exponents(m);
}

}  // namespace placeforge
