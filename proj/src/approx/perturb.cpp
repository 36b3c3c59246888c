#include "placeforge/approx/perturb.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "placeforge/approx/continued_fraction.hpp"
#include "placeforge/errors.hpp"

namespace placeforge {

namespace {

[[noreturn]] void infeasible(const std::string& why) { throw InfeasibleError("infeasible shape: " + why); }

RatVec to_ratvec(const Exponents& m) { return RatVec(m.begin(), m.end()); }

Rat dot(const Exponents& m, const RatVec& w) {
  Rat s = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] != 0) s += w[i] * Rat(static_cast<long>(m[i]));
  }
  return s;
}

// The approximation of round t, as one rational weight per variable.
RatVec approximate(const MonomialPlace& q, std::size_t t) {
  const Integer min_den = Integer(1) << static_cast<mp_bitcnt_t>(t);
  const Rat eps(Integer(1), min_den);
  const auto& amb = q.ambient();
  std::vector<Rat> sqrt_approx;
  for (std::size_t l = 0; l < amb.levels(); ++l) sqrt_approx.push_back(sqrt_convergent(amb.radicand(l), min_den));
  RatVec out(q.arity(), Rat(0));
  for (std::size_t i = 0; i < q.arity(); ++i) {
    Rat scale = 1;
    for (std::size_t l = 0; l < amb.levels(); ++l) {
      const auto& c = q.weights()[i].coord(l);
      out[i] += scale * (c.a() + c.b() * sqrt_approx[l]);
      scale *= eps;
    }
  }
  return out;
}

// Positive primitive integer multiple.
IntVec primitive(const RatVec& v) {
  auto iv = *scale_to_integers(v, common_denominator({v}));
  Integer g = 0;
  for (const auto& x : iv) g = gcd(g, x);
  if (g != 0) {
    for (auto& x : iv) x /= g;
  }
  return iv;
}

bool is_zero(const RatVec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

RatVec to_ratvec(const IntVec& v) {
  RatVec out;
  for (const auto& x : v) out.emplace_back(x);
  return out;
}

// Appends levels from the equality solution space until rank `target`.
void add_tie_breaks(std::vector<IntVec>& levels, const RatMat& equalities, std::size_t n, std::size_t target) {
  RatMat eq = equalities;
  const auto eq_pivots = rref(eq, n);
  std::vector<bool> eq_pivot(n, false);
  for (auto p : eq_pivots) eq_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (!eq_pivot[j]) free_cols.push_back(j);
  }
  const RatMat basis = right_nullspace(equalities, n);

  auto level_rows = [&] {
    RatMat rows;
    for (const auto& l : levels) rows.push_back(to_ratvec(l));
    return rows;
  };
  while (true) {
    RatMat rows = level_rows();
    const std::size_t rank = rational_rank(rows, n);
    if (rank >= target) return;
    auto pivots = rref(rows, n);
    std::vector<bool> is_pivot(n, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::optional<std::size_t> choice;
    for (int pass = 0; pass < 2 && !choice; ++pass) {
      for (std::size_t k = 0; k < basis.size() && !choice; ++k) {
        if (pass == 0 && is_pivot[free_cols[k]]) continue;
        RatMat extended = level_rows();
        extended.push_back(basis[k]);
        if (rational_rank(extended, n) > rank) choice = k;
      }
    }
    if (!choice) infeasible("the signature equalities leave rational rank below " + std::to_string(target));
    levels.push_back(primitive(basis[*choice]));
  }
}

}  // namespace

std::size_t max_iterations() {
  if (const char* env = std::getenv("PLACEFORGE_MAX_ITER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 64;
}

PerturbResult perturb_weights(const SignSignature& sig, const MonomialPlace& q, const TargetShape& shape,
                              const std::vector<Exponents>& extra_equalities) {
  if (shape.cls == ShapeClass::composite_drop) throw DomainError("perturb_weights: composite_drop is built by goodify");
  if (sig.arity != q.arity()) throw DomainError("perturb_weights: signature arity mismatch");
  const std::size_t n = q.arity();

  RatMat equalities;
  for (const auto& e : sig.entries) {
    if (e.sign == 0 && !std::all_of(e.m.begin(), e.m.end(), [](auto x) { return x == 0; })) {
      equalities.push_back(to_ratvec(e.m));
    }
  }
  for (const auto& m : extra_equalities) {
    if (!q.monomial_value(m).is_zero()) throw DomainError("perturb_weights: extra equality has nonzero value");
    equalities.push_back(to_ratvec(m));
  }
  const std::size_t eq_rank = rational_rank(equalities, n);
  if (shape.cls == ShapeClass::lex_max_rank && eq_rank > 0) {
    infeasible("lex_max_rank needs every signature relation to be strict");
  }

  const std::size_t cap = max_iterations();
  std::optional<RatVec> found;
  std::size_t rounds = 0;
  while (rounds < cap && !found) {
    RatVec w = approximate(q, rounds++);
    bool ok = true;
    for (const auto& e : sig.entries) {
      if (sgn(dot(e.m, w)) != e.sign) {
        ok = false;
        break;
      }
    }
    if (ok) found = std::move(w);
  }
  if (!found) throw Error("perturb_weights: no approximation within " + std::to_string(cap) + " iterations");

  std::vector<IntVec> levels;
  if (!is_zero(*found)) {
    levels.push_back(primitive(*found));
  } else {
    // Nothing strict to keep: any nonzero direction respecting the equalities.
    add_tie_breaks(levels, equalities, n, 1);
  }
  const std::size_t target = target_rational_rank(shape, n);
  if (target > 1) add_tie_breaks(levels, equalities, n, target);

  PerturbResult out{AmbientGroup::lex_rational(levels.size()), {}, rounds};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rat> coords;
    for (const auto& l : levels) coords.emplace_back(l[i]);
    out.weights.push_back(GroupElem::from_rationals(out.ambient, coords));
  }
  return out;
}

}  // namespace placeforge
