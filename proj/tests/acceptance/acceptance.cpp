// One line per acceptance criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "builders.hpp"
#include "derived_examples.hpp"
#include "golden.hpp"
#include "placeforge/approx/goodify.hpp"
#include "placeforge/errors.hpp"
#include "placeforge/places/invariants.hpp"
#include "placeforge/places/topology.hpp"
#include "random_expr.hpp"

namespace placeforge {
namespace {

using namespace placeforge::testing;

constexpr double kAxiomSeconds = 60;
constexpr double kDensitySeconds = 120;
constexpr std::size_t kMaxIterations = 64;

struct Outcome {
  bool pass = true;
  std::string detail;
  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(std::uint64_t seed) : eng(seed) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin() { return range(0, 1) == 1; }

  /// Up to 4 terms of total degree at most `deg`.
  Poly poly(const BaseField& k, std::size_t n, long deg) {
    Poly::Terms t;
    for (long terms = range(1, 4); terms > 0; --terms) {
      Exponents e(n, 0);
      for (long left = range(0, deg); left > 0; --left) ++e[range(0, static_cast<long>(n) - 1)];
      const Rat c = k.from_rat(Rat(range(-6, 6)));
      if (c != 0) t[e] = c;
    }
    if (t.empty()) t[Exponents(n, 0)] = 1;
    return Poly::from_terms(k, n, t);
  }
  RatFunc ratfunc(const BaseField& k, std::size_t n, long deg = 6) { return RatFunc(poly(k, n, deg), poly(k, n, deg)); }

  QuadScalar quad(std::int64_t d) { return qs(range(-2, 3), range(-1, 1), d); }

  /// Quadratic weights on `levels` lex levels sharing one radicand.
  Place quadratic(const BaseField& k, std::size_t n, std::size_t levels) {
    const std::int64_t d = std::array<std::int64_t, 3>{2, 3, 5}[range(0, 2)];
    const AmbientGroup amb(std::vector<std::int64_t>(levels, d));
    std::vector<GroupElem> w;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<QuadScalar> c;
      for (std::size_t l = 0; l < levels; ++l) c.push_back(quad(d));
      w.emplace_back(amb, c);
    }
    return Place(MonomialPlace(k, amb, w));
  }

  Place monomial(const BaseField& k, std::size_t n) {
    if (coin()) return quadratic(k, n, range(1, 2));
    std::vector<std::vector<long>> rows(n, std::vector<long>(range(1, 2)));
    for (auto& r : rows)
      for (auto& x : r) x = range(-2, 2);
    return lex_place(rows, k);
  }

  Place any(const BaseField& k, std::size_t n) {
    const Place inner = monomial(k, n);
    if (inner.dim() == 0 || coin()) return inner;
    return compose(inner, monomial(k, inner.dim()));
  }

  Place with_residues(const BaseField& k, std::size_t n) {
    for (;;) {
      Place p = monomial(k, n);
      if (p.dim() > 0) return p;
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// f times a monomial of value -v(f); f must be nonzero.
RatFunc normalize(const Place& p, const RatFunc& f) {
  return f * RatFunc::laurent_monomial(p.base(), p.arity(), p.splitting(-value(p, f).elem()));
}

Outcome valuation_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng g(1001);
  Outcome o;
  int pairs = 0, unit_pairs = 0;
  for (int round = 0; round < 20; ++round) {
    const BaseField k = round % 2 ? BaseField::prime(5) : Q();
    const std::size_t n = g.range(2, 4);
    const Place p = g.any(k, n);
    for (int t = 0; t < 50; ++t, ++pairs) {
      const RatFunc f = g.ratfunc(k, n), h = g.ratfunc(k, n);
      const Value vf = value(p, f), vh = value(p, h), vs = value(p, f + h);
      if (value(p, f * h) != vf + vh) o.fail("value(fg) != value(f) + value(g) for " + to_expr(f) + ", " + to_expr(h));
      if (vs < std::min(vf, vh)) o.fail("value(f+g) < min for " + to_expr(f) + ", " + to_expr(h));
      if (vf != vh && vs != std::min(vf, vh)) o.fail("value(f+g) != min for " + to_expr(f) + ", " + to_expr(h));
      if (vf.is_infinite() || vh.is_infinite()) continue;
      const RatFunc u = normalize(p, f), w = normalize(p, h);
      ++unit_pairs;
      if (value(p, u).sign() != 0 || value(p, w).sign() != 0) o.fail("normalization is not a unit");
      if (!(residue(p, u * w) == Residue(residue(p, u).function() * residue(p, w).function()))) {
        o.fail("residue not multiplicative for " + to_expr(u) + ", " + to_expr(w));
      }
    }
  }
  const double s = seconds_since(t0);
  if (s >= kAxiomSeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail = std::to_string(pairs) + " pairs under 20 places, " + std::to_string(unit_pairs) +
               " residue pairs, " + std::to_string(s).substr(0, 4) + " s";
  }
  return o;
}

Outcome independent_weights() {
  Outcome o;
  const Place p = single_level({qs(1), qs(0, 1), qs(0), qs(0)});
  const auto& vg = p.value_group();
  const Subgroup expected(vg.ambient(), {g1(qs(1)), g1(qs(0, 1))});
  for (const auto& x : expected.generators()) {
    if (!subgroup_member(vg, x)) o.fail(x.to_string() + " not in the value group");
  }
  for (const auto& x : vg.generators()) {
    if (!subgroup_member(expected, x)) o.fail(x.to_string() + " not in <1> + <sqrt2>");
  }
  const auto kernel = kernel_lattice(p.as_monomial());
  if (kernel.size() != 2) o.fail("kernel rank " + std::to_string(kernel.size()));
  if (p.residue_field().gens.size() != 2) o.fail("residue field has " + std::to_string(p.dim()) + " generators");
  if (rational_rank(vg) != 2) o.fail("rational rank " + std::to_string(rational_rank(vg)));
  if (o.pass) o.detail = "value group <1> + <sqrt2>, kernel rank 2, 2 residue generators";
  return o;
}

Outcome abhyankar() {
  Rng g(1003);
  Outcome o;
  int monomial = 0, composite = 0;
  for (int round = 0; round < 200; ++round) {
    const BaseField k = round % 3 ? Q() : BaseField::prime(5);
    const std::size_t n = g.range(1, 4);
    const Place p = round % 2 ? g.monomial(k, n) : g.any(k, n);
    const auto inv = invariants(p);
    if (p.is_monomial()) {
      ++monomial;
      if (inv.dim + inv.rr != n) o.fail("monomial place with dim + rr != n");
    } else {
      ++composite;
      if (inv.dim + inv.rr > n) o.fail("composite place with dim + rr > n");
    }
  }
  if (o.pass) o.detail = std::to_string(monomial) + " monomial, " + std::to_string(composite) + " composite";
  return o;
}

Outcome composition() {
  Rng g(1004);
  Outcome o;
  int compared = 0;
  for (int round = 0; round < 50; ++round) {
    const BaseField k = round % 2 ? Q() : BaseField::prime(5);
    const std::size_t n = g.range(2, 4);
    const Place inner = g.with_residues(k, n);
    const Place outer = g.any(k, inner.dim());
    const Place p = compose(inner, outer);
    if (convex_rank(p.value_group()) != convex_rank(inner.value_group()) + convex_rank(outer.value_group())) {
      o.fail("convex rank does not add");
    }
    // Units of the inner place: their composite value is (0, outer value of the residue).
    const std::size_t skip = inner.ambient().levels();
    std::vector<std::pair<Value, Value>> units;
    for (int t = 0; t < 8; ++t) {
      const RatFunc f = g.ratfunc(k, n, 4);
      if (value(inner, f).is_infinite()) continue;
      const RatFunc u = normalize(inner, f);
      const Value vp = value(p, u);
      const Value vo = value(outer, residue(inner, u).function());
      if (vp.is_infinite() != vo.is_infinite()) o.fail("infinite value mismatch");
      if (vp.is_infinite()) continue;
      const auto& c = vp.elem().coords();
      for (std::size_t l = 0; l < skip; ++l) {
        if (!c[l].is_zero()) o.fail("unit with nonzero inner part");
      }
      const GroupElem tail(outer.ambient(), std::vector<QuadScalar>(c.begin() + skip, c.end()));
      if (!(tail == vo.elem())) o.fail("outer part differs from the outer value of the residue");
      units.emplace_back(vp, vo);
    }
    for (const auto& [a, oa] : units) {
      for (const auto& [b, ob] : units) {
        ++compared;
        if ((a <=> b) != (oa <=> ob)) o.fail("composite order disagrees with the outer order");
      }
    }
  }
  if (o.pass) o.detail = "50 pairs, " + std::to_string(compared) + " unit comparisons";
  return o;
}

Outcome density() {
  const auto t0 = std::chrono::steady_clock::now();
  Rng g(1005);
  Outcome o;
  const char* classes[] = {"discrete", "weighted_rational:1", "lex_max_rank"};
  std::size_t max_iter = 0;
  int in_b = 0, units = 0;
  for (int round = 0; round < 100; ++round) {
    const auto shape = parse_shape(classes[round % 3]);
    const std::size_t n = g.range(2, 4);
    const std::size_t levels = shape.cls == ShapeClass::lex_max_rank ? (n + 1) / 2 : 1;
    Place q = g.quadratic(Q(), n, levels);
    while (shape.cls == ShapeClass::lex_max_rank && q.dim() != 0) q = g.quadratic(Q(), n, levels);
    std::vector<RatFunc> a, b;
    for (long k = g.range(2, 5); k > 0; --k) {
      RatFunc f = g.ratfunc(Q(), n, 3);
      if (f.is_zero()) continue;
      const int s = value(q, f).sign();
      if (s < 0) f = RatFunc::laurent_monomial(Q(), n, Exponents(n, 0)) / f;
      (s != 0 && g.coin() ? b : a).push_back(f);
    }
    const std::string label = "instance " + std::to_string(round) + " (" + classes[round % 3] + ")";
    if (!in_basic_open(q, a, b)) {
      o.fail(label + ": Q outside its own neighborhood");
      continue;
    }
    try {
      const auto r = density_witness(q, a, b, shape);
      max_iter = std::max(max_iter, r.iterations);
      in_b += static_cast<int>(b.size());
      if (!in_basic_open(r.place, a, b)) o.fail(label + ": P outside the neighborhood");
      if (!in_class(r.place, shape)) o.fail(label + ": P not in the class");
      if (shape.cls == ShapeClass::weighted_rational && !invariants(r.place).prime_divisor) {
        o.fail(label + ": P is not a prime divisor");
      }
      if (r.iterations > kMaxIterations) o.fail(label + ": " + std::to_string(r.iterations) + " iterations");
      for (const auto* set : {&a, &b}) {
        for (const auto& f : *set) {
          if (value(q, f).sign() != 0) continue;
          ++units;
          if (!residues_agree(r.place, q, f)) {
            o.fail(label + ": residue of " + to_expr(f) + " changed");
          }
        }
      }
    } catch (const Error& e) {
      o.fail(label + ": " + e.what());
    }
  }
  const double s = seconds_since(t0);
  if (s >= kDensitySeconds) o.fail("took " + std::to_string(s) + " s");
  if (o.pass) {
    o.detail = "100 instances, " + std::to_string(in_b) + " elements in B, " + std::to_string(units) +
               " value-0 residues, at most " + std::to_string(max_iter) + " iterations, " +
               std::to_string(s).substr(0, 4) + " s";
  }
  return o;
}

Outcome oracle() {
  Outcome o;
  const auto examples = derived_examples();
  for (const auto& ex : examples) {
    const auto naive_value = naive::value(ex.weights, ex.num, ex.den);
    const auto lib = to_naive(value(ex.place, expr(ex.expr, ex.place.arity())));
    const auto same = [](const auto& x, const auto& y) {
      return x.has_value() == y.has_value() && (!x || naive::equal(*x, *y));
    };
    if (!same(naive_value, ex.expected)) o.fail(ex.name + ": naive evaluator differs from the worked value");
    if (!same(naive_value, lib)) o.fail(ex.name + ": naive evaluator differs from the library");
  }
  if (o.pass) {
    o.detail = std::to_string(examples.size()) + " worked values, " + std::to_string(naive::exact_fallbacks()) +
               " exact sign fallbacks";
  }
  return o;
}

Outcome spv_axioms() {
  Rng g(1007);
  Outcome o;
  for (int round = 0; round < 20; ++round) {
    const BaseField k = round % 2 ? Q() : BaseField::prime(5);
    const std::size_t n = g.range(2, 4);
    const Place p = g.any(k, n);
    std::vector<RatFunc> sample;
    for (int t = 0; t < 5; ++t) sample.push_back(g.ratfunc(k, n, 3));
    sample.push_back(round % 2 ? RatFunc::zero(k, n) : g.ratfunc(k, n, 3));
    const auto report = check_spv_axioms(p, sample);
    if (!report.pass) o.fail("place " + std::to_string(round) + " fails axiom " + std::to_string(report.axiom));
  }
  if (o.pass) o.detail = "20 places, 6-element samples, all triples";
  return o;
}

Outcome cli_determinism() {
  Outcome o;
  const auto cases = run_golden_cases(PLACEFORGE_GOLDEN_DIR);
  for (const auto& c : cases) {
    if (!c.pass) o.fail("golden " + c.name + ": " + c.detail);
  }
  int checked = 0;
  ExprGen gen(1008, 3);
  while (checked < 100) {
    const std::string text = gen.expr();
    RatFunc f = RatFunc::zero(Q(), 3);
    try {
      f = expr(text, 3);
    } catch (const Error&) {
      continue;  // division by zero in the random text
    }
    ++checked;
    const std::string printed = to_expr(f);
    const RatFunc back = expr(printed, 3);
    if (!(back == f) || to_expr(back) != printed) o.fail("not idempotent: " + text);
  }
  if (o.pass) o.detail = std::to_string(cases.size()) + " golden cases, 100 expressions";
  return o;
}

}  // namespace
}  // namespace placeforge

int main() {
  using namespace placeforge;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"valuation axioms", valuation_axioms}, {"independent weights", independent_weights},
      {"Abhyankar inequality", abhyankar},    {"composition", composition},
      {"density witness", density},           {"independent oracle", oracle},
      {"Spv axioms", spv_axioms},             {"CLI determinism", cli_determinism},
  };
  int failures = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    failures += !o.pass;
    std::printf("criterion %d (%s): %s  %s\n", index, name, o.pass ? "PASS" : "FAIL", o.detail.c_str());
  }
  return failures == 0 ? 0 : 1;
}
