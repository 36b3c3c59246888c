#include "placeforge/approx/goodify.hpp"

#include <algorithm>
#include <numeric>

#include "placeforge/approx/perturb.hpp"
#include "placeforge/errors.hpp"
#include "placeforge/places/topology.hpp"

namespace placeforge {

namespace {

IntVec unit(std::size_t k, std::size_t i) {
  IntVec v(k, Integer(0));
  v[i] = 1;
  return v;
}

// Each coefficient vector, and the difference of every pair.
std::vector<IntVec> pair_witnesses(const std::vector<IntVec>& rows) {
  std::vector<IntVec> out = rows;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) out.push_back(add(rows[i], scaled(rows[j], -1)));
  }
  return out;
}

Iota make_iota(const Place& q, const Place& p, std::vector<GroupElem> sources, std::vector<GroupElem> images,
               std::vector<IntVec> witnesses) {
  Iota iota{q.ambient(), p.ambient(), std::move(sources), std::move(images), std::move(witnesses), {}};
  iota.verdict = order_embedding_check(iota.sources, iota.images, iota.witnesses);
  if (!iota.verdict.ok()) {
    throw Error(std::string("goodify: value map is not an order embedding (") + to_string(iota.verdict.kind) + ")");
  }
  return iota;
}

// Source values of the nonzero elements, with unit and pairwise witnesses.
Iota value_iota(const Place& q, const Place& p, const std::vector<RatFunc>& nonzero) {
  std::vector<GroupElem> sources, images;
  std::vector<IntVec> units;
  for (std::size_t i = 0; i < nonzero.size(); ++i) {
    sources.push_back(value(q, nonzero[i]).elem());
    images.push_back(value(p, nonzero[i]).elem());
    units.push_back(unit(nonzero.size(), i));
  }
  return make_iota(q, p, std::move(sources), std::move(images), pair_witnesses(units));
}

// Exponent vectors sum_i c_i m_i for every integer relation sum_i c_i v(a_i) = 0.
std::vector<Exponents> value_relations(const Place& q, const SignSignature& sig) {
  std::vector<Exponents> ms;
  std::vector<GroupElem> values;
  const MonomialPlace flat = q.flatten();
  for (const auto& m : sig.value_vectors) {
    if (!m) continue;
    ms.push_back(*m);
    values.push_back(flat.monomial_value(*m));
  }
  if (ms.empty()) return {};
  RatMat expanded;
  for (const auto& v : values) expanded.push_back(v.expand());
  const auto rows = scale_to_integers(expanded, common_denominator(expanded));
  std::vector<Exponents> out;
  for (const auto& c : left_kernel(rows, expanded.front().size())) {
    Exponents r(q.arity(), 0);
    for (std::size_t i = 0; i < ms.size(); ++i) {
      if (c[i] != 0) r = add_exponents(r, scale_exponents(ms[i], c[i].get_si()));
    }
    out.push_back(std::move(r));
  }
  return out;
}

// Nonzero primitive integer vectors of length m by increasing L1 norm; within
// a norm, fewer negative entries first, then descending lexicographic.
std::vector<Exponents> candidate_weights(std::size_t m, long norm) {
  std::vector<Exponents> out;
  Exponents cur(m, 0);
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == m) {
      for (long s : {left, -left}) {
        cur[i] = s;
        long g = 0;
        for (auto x : cur) g = std::gcd(g, std::labs(x));
        if (g == 1) out.push_back(cur);
        if (left == 0) break;
      }
      return;
    }
    for (long a = left; a >= 0; --a) {
      for (long s : {a, -a}) {
        cur[i] = s;
        self(self, i + 1, left - a);
        if (a == 0) break;
      }
    }
  };
  if (m > 0) rec(rec, 0, norm);
  auto negatives = [](const Exponents& e) { return std::count_if(e.begin(), e.end(), [](auto x) { return x < 0; }); };
  std::stable_sort(out.begin(), out.end(), [&](const Exponents& x, const Exponents& y) {
    if (negatives(x) != negatives(y)) return negatives(x) < negatives(y);
    return x > y;
  });
  return out;
}

constexpr long kMaxOuterNorm = 12;

// A discrete monomial place on K(u_1..u_m) giving every residue value 0.
std::optional<Place> choose_drop_step(const BaseField& base, std::size_t m, const std::vector<RatFunc>& residues) {
  const AmbientGroup amb = AmbientGroup::lex_rational(1);
  for (long norm = 1; norm <= kMaxOuterNorm; ++norm) {
    for (const auto& w : candidate_weights(m, norm)) {
      std::vector<GroupElem> weights;
      for (auto x : w) weights.push_back(GroupElem::from_rationals(amb, {Rat(x)}));
      Place d(MonomialPlace(base, amb, std::move(weights)));
      if (std::all_of(residues.begin(), residues.end(), [&](const RatFunc& r) { return value(d, r).sign() == 0; })) {
        return d;
      }
    }
  }
  return std::nullopt;
}

GoodifyResult composite_drop(const Place& q, const std::vector<RatFunc>& nonzero, const TargetShape& shape) {
  const BaseField base = q.base();
  const std::size_t k = nonzero.size();
  std::vector<GroupElem> values;
  for (const auto& a : nonzero) values.push_back(value(q, a).elem());
  const Subgroup s(q.ambient(), values);
  const auto basis = s.basis();

  // b_j = prod_i a_i^{g_ji} has value gamma_j. The unit a'_i is
  // a_i^-1 * prod_j b_j^{e_ij} = prod_l a_l^{c_l}, and with u_l = a_l x^{-s(v_l)}
  // its residue is prod_l res(u_l)^{c_l} because the splitting s is additive.
  std::vector<IntVec> g, coords;
  for (const auto& b : basis) g.push_back(*s.generator_coefficients(b));
  std::vector<RatFunc> unit_residues;
  for (std::size_t l = 0; l < k; ++l) {
    const Exponents shift = scale_exponents(q.splitting(values[l]), -1);
    unit_residues.push_back(residue(q, nonzero[l].times_monomial(shift)).function());
  }
  std::vector<RatFunc> residues;
  for (std::size_t i = 0; i < k; ++i) {
    IntVec e = *s.basis_coordinates(values[i]);
    IntVec c = scaled(unit(k, i), -1);
    for (std::size_t j = 0; j < basis.size(); ++j) c = add(c, scaled(g[j], e[j]));
    RatFunc r = RatFunc::constant(base, q.dim(), 1);
    for (std::size_t l = 0; l < k; ++l) {
      if (c[l] != 0) r = r * unit_residues[l].pow(c[l].get_si());
    }
    if (r.is_zero()) throw Error("composite_drop: unit correction lost value 0");
    residues.push_back(std::move(r));
    coords.push_back(std::move(e));
  }

  // Outer tower: dim Q - d1 discrete steps, each keeping every residue a unit.
  std::optional<Place> outer;
  std::size_t m = q.dim();
  while (m > shape.d1) {
    auto step = choose_drop_step(base, m, residues);
    if (!step) {
      throw InfeasibleError("infeasible shape: no monomial outer place keeps every unit residue nonzero");
    }
    for (auto& r : residues) r = residue(*step, r).function();
    outer = outer ? compose(*outer, *step) : *step;
    --m;
  }
  Place p = compose(q, *outer);

  std::vector<GroupElem> p_values;
  for (const auto& a : nonzero) p_values.push_back(value(p, a).elem());
  std::vector<GroupElem> images;
  for (const auto& gj : g) images.push_back(combine(p.ambient(), gj, p_values));
  GoodifyResult out{p, make_iota(q, p, basis, std::move(images), pair_witnesses(coords)), 0, {}, {}};
  for (std::size_t i = 0; i < k; ++i) {
    if (!(p_values[i] == out.iota->apply(values[i]))) {
      throw Error("composite_drop: value(P, a) differs from iota(value(Q, a))");
    }
  }
  return out;
}

}  // namespace

GroupElem Iota::apply(const GroupElem& x) const {
  const Subgroup s(source_ambient, sources);
  const auto c = s.generator_coefficients(x);
  if (!c) throw DomainError("iota: element outside the source span");
  return combine(image_ambient, *c, images);
}

bool residues_agree(const Place& p, const Place& q, const RatFunc& f) {
  const Residue rp = residue(p, f);
  const Residue rq = residue(q, f);
  if (rp.is_infinite() || rq.is_infinite()) return rp.is_infinite() && rq.is_infinite();
  if (rp.is_zero() || rq.is_zero()) return rp.is_zero() && rq.is_zero();
  return lift_residue(p, rp.function()) == lift_residue(q, rq.function());
}

GoodifyResult goodify(const Place& q, const std::vector<RatFunc>& elems, const TargetShape& shape) {
  std::vector<RatFunc> nonzero;
  std::vector<std::string> notices;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (elems[i].arity() != q.arity() || !(elems[i].base() == q.base())) {
      throw DomainError("goodify: element " + std::to_string(i) + " does not match the place");
    }
    if (elems[i].is_zero()) {
      notices.push_back("element " + std::to_string(i) + " is zero; skipped");
    } else {
      nonzero.push_back(elems[i]);
    }
  }
  const bool wants_iota = shape.mode != Mode::preserve_residues;

  GoodifyResult out{q, std::nullopt, 0, {}, std::move(notices)};
  if (in_class(q, shape)) {
    if (wants_iota) out.iota = value_iota(q, q, nonzero);
  } else {
    check_feasible(q, shape);
    if (shape.cls == ShapeClass::composite_drop) {
      auto r = composite_drop(q, nonzero, shape);
      out.place = r.place;
      out.iota = std::move(r.iota);
    } else {
      const SignSignature sig = signature(q, nonzero, wants_iota);
      const auto relations = wants_iota ? value_relations(q, sig) : std::vector<Exponents>{};
      const auto pr = perturb_weights(sig, q.flatten(), shape, relations);
      out.place = Place(MonomialPlace(q.base(), pr.ambient, pr.weights));
      out.iterations = pr.iterations;
      if (wants_iota) out.iota = value_iota(q, out.place, nonzero);
    }
    if (!in_class(out.place, shape)) throw Error("goodify: constructed place is not in the target class");
  }

  const bool keep_residues = shape.mode != Mode::preserve_values;
  for (const auto& a : nonzero) {
    ElementCheck c{a, value(q, a).sign(), value(out.place, a).sign(), residues_agree(out.place, q, a)};
    if (c.sign_q != c.sign_p) throw Error("goodify: value sign changed for " + std::to_string(out.checks.size()));
    if (keep_residues && !c.residue_equal) throw Error("goodify: residue not preserved");
    out.checks.push_back(std::move(c));
  }
  return out;
}

GoodifyResult density_witness(const Place& q, const std::vector<RatFunc>& a, const std::vector<RatFunc>& b,
                              TargetShape shape) {
  if (!in_basic_open(q, a, b)) throw DomainError("density_witness: Q is not in the given neighborhood");
  shape.mode = Mode::preserve_residues;
  std::vector<RatFunc> elems = a;
  elems.insert(elems.end(), b.begin(), b.end());
  auto out = goodify(q, elems, shape);
  if (!in_basic_open(out.place, a, b)) throw Error("density_witness: result left the neighborhood");
  return out;
}

}  // namespace placeforge
