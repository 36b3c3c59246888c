#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "builders.hpp"
#include "placeforge/approx/continued_fraction.hpp"
#include "placeforge/approx/perturb.hpp"
#include "placeforge/approx/report.hpp"
#include "placeforge/errors.hpp"
#include "placeforge/places/invariants.hpp"
#include "placeforge/places/json.hpp"
#include "placeforge/places/topology.hpp"

namespace placeforge {
namespace {

using namespace placeforge::testing;

const Place kSqrt2 = single_level({qs(1), qs(0, 1)});

std::vector<RatFunc> exprs(std::initializer_list<const char*> ss, std::size_t n) {
  std::vector<RatFunc> out;
  for (const char* s : ss) out.push_back(expr(s, n));
  return out;
}

std::vector<std::vector<long>> integer_levels(const MonomialPlace& p) {
  std::vector<std::vector<long>> out;
  for (const auto& w : p.weights()) {
    std::vector<long> row;
    for (const auto& c : w.coords()) {
      EXPECT_TRUE(c.is_rational());
      EXPECT_TRUE(is_integer(c.a()));
      row.push_back(c.a().get_num().get_si());
    }
    out.push_back(row);
  }
  return out;
}

TEST(ContinuedFraction, SqrtTwoConvergents) {
  EXPECT_EQ(sqrt_convergent(2, 1), Rat(1));
  EXPECT_EQ(sqrt_convergent(2, 2), Rat(3, 2));
  EXPECT_EQ(sqrt_convergent(2, 3), Rat(7, 5));
  EXPECT_EQ(sqrt_convergent(3, 1), Rat(1));  // 1, 2, 5/3, 7/4
  EXPECT_EQ(sqrt_convergent(3, 2), Rat(5, 3));
  EXPECT_EQ(sqrt_convergent(3, 4), Rat(7, 4));
  EXPECT_THROW(sqrt_convergent(4, 1), DomainError);
}

TEST(ContinuedFraction, ConvergentsGetClose) {
  for (std::int64_t d : {2, 3, 5, 7, 13, 94}) {
    const Rat c = sqrt_convergent(d, Integer(1) << 40);
    EXPECT_GE(c.get_den(), Integer(1) << 40);
    EXPECT_LT(abs(c * c - Rat(d)), Rat(1, 1 << 30)) << d;
  }
}

TEST(Signature, Examples) {
  auto s = signature(kSqrt2, exprs({"x1 + x2"}, 2));
  EXPECT_EQ(s.entries, (std::vector<SignEntry>{{{1, -1}, -1}, {{1, 0}, 1}}));

  auto t = signature(kSqrt2, exprs({"x1^2/x2"}, 2));
  EXPECT_EQ(t.entries, (std::vector<SignEntry>{{{2, -1}, 1}}));

  auto u = signature(kSqrt2, exprs({"1"}, 2));
  EXPECT_EQ(u.entries, (std::vector<SignEntry>{{{0, 0}, 0}}));

  auto z = signature(kSqrt2, exprs({"0", "x1"}, 2));
  ASSERT_EQ(z.value_vectors.size(), 2u);
  EXPECT_FALSE(z.value_vectors[0].has_value());
  EXPECT_EQ(*z.value_vectors[1], (Exponents{1, 0}));
}

TEST(Perturb, DiscreteExample) {
  const auto sig = signature(kSqrt2, exprs({"x1 + x2", "x1^2/x2"}, 2));
  const auto r = perturb_weights(sig, kSqrt2.as_monomial(), parse_shape("discrete"));
  const MonomialPlace p(Q(), r.ambient, r.weights);
  EXPECT_EQ(integer_levels(p), (std::vector<std::vector<long>>{{2}, {3}}));
  EXPECT_EQ(r.iterations, 2u);
  EXPECT_TRUE(satisfies(sig, p));
}

TEST(Perturb, RationalInputUnchanged) {
  const Place q = rational_place({2, 3});
  const auto sig = signature(q, exprs({"x1 + x2", "x1^2/x2"}, 2));
  const auto r = perturb_weights(sig, q.as_monomial(), parse_shape("discrete"));
  EXPECT_EQ(integer_levels(MonomialPlace(Q(), r.ambient, r.weights)), (std::vector<std::vector<long>>{{2}, {3}}));
}

TEST(Perturb, LexMaxRankExample) {
  const auto sig = signature(kSqrt2, exprs({"x1 + x2", "x1^2/x2"}, 2));
  const auto r = perturb_weights(sig, kSqrt2.as_monomial(), parse_shape("lex_max_rank"));
  const MonomialPlace p(Q(), r.ambient, r.weights);
  EXPECT_EQ(integer_levels(p), (std::vector<std::vector<long>>{{2, 0}, {3, 1}}));
  const auto inv = invariants(Place(p));
  EXPECT_EQ(inv.rank, 2u);
  EXPECT_TRUE(inv.rational);
}

TEST(Perturb, LexMaxRankRejectsTies) {
  const Place q = rational_place({1, 1});
  const auto sig = signature(q, exprs({"x1 + x2"}, 2));
  EXPECT_THROW(perturb_weights(sig, q.as_monomial(), parse_shape("lex_max_rank")), InfeasibleError);
}

TEST(Perturb, IterationCapFromEnvironment) {
  const auto sig = signature(kSqrt2, exprs({"x1 + x2", "x1^2/x2"}, 2));
  setenv("PLACEFORGE_MAX_ITER", "1", 1);
  EXPECT_EQ(max_iterations(), 1u);
  EXPECT_THROW(perturb_weights(sig, kSqrt2.as_monomial(), parse_shape("discrete")), Error);
  unsetenv("PLACEFORGE_MAX_ITER");
  EXPECT_EQ(max_iterations(), 64u);
}

TEST(Perturb, WeightedRationalKeepsEqualities) {
  // x1 and x2*x3 tie; the tie must survive the second level too.
  const Place q = single_level({qs(1, 1), qs(1), qs(0, 1)});
  const auto sig = signature(q, exprs({"x1 + x2*x3", "x2"}, 3));
  const auto r = perturb_weights(sig, q.as_monomial(), parse_shape("weighted_rational:2"));
  const MonomialPlace p(Q(), r.ambient, r.weights);
  EXPECT_TRUE(satisfies(sig, p));
  EXPECT_EQ(invariants(Place(p)).rr, 2u);
  EXPECT_THROW(perturb_weights(sig, q.as_monomial(), parse_shape("weighted_rational:3")), InfeasibleError);
}

TEST(Shape, Parsing) {
  EXPECT_EQ(parse_shape("weighted_rational:1").r1, 1u);
  const auto s = parse_shape("composite_drop:0,2", Mode::preserve_values);
  EXPECT_EQ(s.cls, ShapeClass::composite_drop);
  EXPECT_EQ(s.d1, 0u);
  EXPECT_EQ(s.r1, 2u);
  EXPECT_EQ(class_to_string(s), "composite_drop:0,2");
  EXPECT_THROW(parse_shape("discrete:1"), ParseError);
  EXPECT_THROW(parse_shape("weighted_rational:x"), ParseError);
  EXPECT_THROW(parse_mode("keep"), ParseError);
}

TEST(Goodify, PreserveResiduesDiscrete) {
  const auto elems = exprs({"x1 + x2", "x1^2/x2"}, 2);
  const auto r = goodify(kSqrt2, elems, parse_shape("discrete"));
  EXPECT_EQ(integer_levels(r.place.as_monomial()), (std::vector<std::vector<long>>{{2}, {3}}));
  EXPECT_FALSE(r.iota.has_value());
  const auto u = expr("(x1 + x2)/x1", 2);
  EXPECT_EQ(residue(kSqrt2, u).function(), expr("1", 0));
  EXPECT_EQ(residue(r.place, u).function(), expr("1", 1));
  EXPECT_TRUE(residues_agree(r.place, kSqrt2, u));
}

TEST(Goodify, CompositeDropExample) {
  const Place q = rational_place({1, 0});
  const auto r = goodify(q, exprs({"x1"}, 2), parse_shape("composite_drop:0,2", Mode::preserve_values));
  ASSERT_TRUE(r.place.is_composite());
  EXPECT_EQ(r.place.inner(), q);
  EXPECT_EQ(r.place.outer(), rational_place({1}));
  EXPECT_EQ(value(r.place, expr("x1", 2)), Value(lexv({1, 0})));
  ASSERT_TRUE(r.iota.has_value());
  EXPECT_EQ(r.iota->apply(g1(qs(1))), lexv({1, 0}));
  const auto inv = invariants(r.place);
  EXPECT_EQ(inv.dim, 0u);
  EXPECT_EQ(inv.rr, 2u);
}

TEST(Goodify, CompositeDropHypotheses) {
  const auto drop = [](const char* s) { return parse_shape(s, Mode::preserve_values); };
  EXPECT_THROW(goodify(kSqrt2, exprs({"x1"}, 2), drop("composite_drop:0,1")), InfeasibleError);  // dim Q = 0
  const Place q = rational_place({1, 0, 0});
  EXPECT_THROW(goodify(q, exprs({"x1"}, 3), drop("composite_drop:0,1")), InfeasibleError);  // r1 < rr+1
  EXPECT_THROW(goodify(q, exprs({"x1"}, 3), drop("composite_drop:0,2")), InfeasibleError);  // d1 + r1 < n
  EXPECT_NO_THROW(goodify(q, exprs({"x1"}, 3), drop("composite_drop:1,2")));
  EXPECT_THROW(goodify(q, exprs({"x1"}, 3), parse_shape("composite_drop:1,2", Mode::preserve_both)),
               InfeasibleError);
}

TEST(Goodify, CompositeDropFailsOnMonomialResidueInOneVariable) {
  const Place q = rational_place({1, 0});
  EXPECT_THROW(goodify(q, exprs({"x2"}, 2), parse_shape("composite_drop:0,2", Mode::preserve_values)),
               InfeasibleError);
}

TEST(Goodify, IdentityWhenAlreadyInClass) {
  const Place q = rational_place({2, 3});
  const auto elems = exprs({"x1 + x2", "x1^2/x2"}, 2);
  const auto r = goodify(q, elems, parse_shape("discrete", Mode::preserve_both));
  EXPECT_EQ(r.place, q);
  EXPECT_EQ(r.iterations, 0u);
  ASSERT_TRUE(r.iota.has_value());
  EXPECT_EQ(r.iota->sources, r.iota->images);
}

TEST(Goodify, PreserveBothNeedsRank) {
  EXPECT_THROW(goodify(kSqrt2, exprs({"x1"}, 2), parse_shape("discrete", Mode::preserve_both)), InfeasibleError);
  const auto r = goodify(kSqrt2, exprs({"x1", "x2", "x1 + x2"}, 2), parse_shape("weighted_rational:2", Mode::preserve_both));
  ASSERT_TRUE(r.iota.has_value());
  EXPECT_TRUE(r.iota->verdict.ok());
  for (const auto& a : exprs({"x1", "x2", "x1+x2"}, 2)) {
    EXPECT_EQ(value(r.place, a).elem(), r.iota->apply(value(kSqrt2, a).elem()));
  }
}

TEST(DensityWitness, Examples) {
  const auto a = exprs({"x1 + x2", "x1^2/x2"}, 2);
  const auto b = exprs({"x1"}, 2);
  const auto r = density_witness(kSqrt2, a, b, parse_shape("discrete"));
  EXPECT_EQ(integer_levels(r.place.as_monomial()), (std::vector<std::vector<long>>{{2}, {3}}));
  EXPECT_TRUE(in_basic_open(r.place, a, b));
  EXPECT_EQ(value(r.place, a[0]), Value(g1(qs(2))));
  EXPECT_EQ(value(r.place, a[1]), Value(g1(qs(1))));
  EXPECT_EQ(value(r.place, b[0]), Value(g1(qs(2))));

  const auto pd = density_witness(kSqrt2, b, {}, parse_shape("weighted_rational:1"));
  EXPECT_EQ(integer_levels(pd.place.as_monomial()), (std::vector<std::vector<long>>{{1}, {1}}));
  EXPECT_TRUE(invariants(pd.place).prime_divisor);
  EXPECT_EQ(kernel_lattice(pd.place.as_monomial()), (std::vector<Exponents>{{1, -1}}));

  EXPECT_THROW(density_witness(kSqrt2, exprs({"1/x1"}, 2), {}, parse_shape("discrete")), DomainError);
}

TEST(Report, Format) {
  const auto r = goodify(kSqrt2, exprs({"x1 + x2", "0"}, 2), parse_shape("discrete"));
  const Json j = report_to_json(r);
  EXPECT_EQ(j["iterations"], 2);
  EXPECT_TRUE(j["iota"].is_null());
  EXPECT_EQ(j["checks"][0]["elem"], "x1 + x2");
  EXPECT_EQ(j["checks"][0]["sign_q"], "+");
  EXPECT_EQ(j["checks"][0]["residue_equal"], true);
  EXPECT_EQ(j["notices"][0], "element 1 is zero; skipped");
  EXPECT_EQ(place_from_json(j["place"]), r.place);
}

// Random monomial and composite Q against every class.

struct Gen {
  std::mt19937_64 rng;
  explicit Gen(std::uint64_t s) : rng(s) {}
  long range(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

  RatFunc element(std::size_t n) {
    auto poly = [&] {
      Poly::Terms t;
      for (long k = range(1, 3); k > 0; --k) {
        Exponents e(n);
        for (auto& x : e) x = range(0, 2);
        t[e] = range(1, 3);
      }
      return Poly::from_terms(Q(), n, t);
    };
    return RatFunc(poly(), poly());
  }

  Place quadratic(std::size_t n) {
    std::vector<QuadScalar> w;
    for (std::size_t i = 0; i < n; ++i) w.push_back(qs(range(-1, 2), range(-1, 1), range(0, 1) ? 2 : 5));
    const std::int64_t d = w.front().d();
    for (auto& c : w) c = qs(c.a(), c.b(), d);
    return single_level(w);
  }
};

TEST(Goodify, RandomSignAndResiduePreservation) {
  Gen g(11);
  const char* classes[] = {"discrete", "weighted_rational:1", "weighted_rational:2", "lex_max_rank"};
  int built = 0;
  for (int round = 0; round < 120; ++round) {
    const std::size_t n = g.range(2, 3);
    Place q = g.quadratic(n);
    if (q.dim() > 0 && g.range(0, 1)) q = compose(q, g.quadratic(q.dim()));
    std::vector<RatFunc> elems;
    for (long k = g.range(1, 3); k > 0; --k) elems.push_back(g.element(n));
    const auto shape = parse_shape(classes[round % 4]);
    try {
      const auto r = goodify(q, elems, shape);
      ++built;
      EXPECT_TRUE(in_class(r.place, shape));
      EXPECT_LE(r.iterations, 64u);
      for (const auto& a : elems) {
        EXPECT_EQ(value(q, a).sign(), value(r.place, a).sign());
        if (value(q, a).sign() == 0) {
          EXPECT_TRUE(residues_agree(r.place, q, a));
        }
      }
      // Idempotence.
      const auto again = goodify(r.place, elems, shape);
      EXPECT_EQ(place_to_json(again.place), place_to_json(r.place));
    } catch (const InfeasibleError&) {
    }
  }
  EXPECT_GT(built, 60);
}

TEST(Goodify, RandomPreserveBothIsAnEmbedding) {
  Gen g(12);
  int built = 0;
  for (int round = 0; round < 60; ++round) {
    const std::size_t n = g.range(2, 3);
    const Place q = g.quadratic(n);
    std::vector<RatFunc> elems;
    for (long k = g.range(1, 4); k > 0; --k) elems.push_back(g.element(n));
    const auto shape = parse_shape(round % 2 ? "lex_max_rank" : "weighted_rational:2", Mode::preserve_both);
    try {
      const auto r = goodify(q, elems, shape);
      ++built;
      ASSERT_TRUE(r.iota.has_value());
      EXPECT_TRUE(r.iota->verdict.ok());
      for (const auto& a : elems) EXPECT_EQ(value(r.place, a).elem(), r.iota->apply(value(q, a).elem()));
    } catch (const InfeasibleError&) {
    }
  }
  EXPECT_GT(built, 20);
}

TEST(Goodify, RandomCompositeDrop) {
  Gen g(13);
  int built = 0;
  for (int round = 0; round < 40; ++round) {
    const std::size_t n = 3;
    std::vector<long> w{g.range(1, 3), 0, 0};
    if (g.range(0, 1)) w[1] = g.range(1, 3);
    const Place q = rational_place(w);
    std::vector<RatFunc> elems;
    for (long k = g.range(1, 3); k > 0; --k) elems.push_back(g.element(n));
    const std::size_t rr = invariants(q).rr;
    const std::size_t r1 = g.range(rr + 1, 3);
    const auto shape = parse_shape("composite_drop:" + std::to_string(n - r1) + "," + std::to_string(r1),
                                   Mode::preserve_values);
    try {
      const auto r = goodify(q, elems, shape);
      ++built;
      const auto inv = invariants(r.place);
      EXPECT_EQ(inv.dim, shape.d1);
      EXPECT_EQ(inv.rr, r1);
      for (const auto& a : elems) {
        EXPECT_EQ(value(r.place, a).elem(), r.iota->apply(value(q, a).elem()));
        EXPECT_EQ(value(q, a).sign(), value(r.place, a).sign());
      }
    } catch (const InfeasibleError&) {
    }
  }
  EXPECT_GT(built, 20);
}

}  // namespace
}  // namespace placeforge
