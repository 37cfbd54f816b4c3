#include "laws.hpp"

#include <gtest/gtest.h>

using namespace qmtest;

namespace {

QGraph zslice() { return make_scenario("z-slice", {}, Q{}).graph; }
QGraph step() { return make_scenario("step", {}, Q{}).graph; }

}  // namespace

TEST(Relation, Examples) {
  const Q f;
  EXPECT_TRUE(qm_related(f, QPair{{q(0)}, {q(0)}}, QPair{{q(1)}, {q(1)}}));
  EXPECT_FALSE(qm_related(f, QPair{{q(0)}, {q(1)}}, QPair{{q(1)}, {q(-1)}}));
  EXPECT_TRUE(mono_related(f, QPair{{q(0)}, {q(0)}}, QPair{{q(1)}, {q(1)}}));
  EXPECT_FALSE(mono_related(f, QPair{{q(0)}, {q(1)}}, QPair{{q(1)}, {q(0)}}));
  EXPECT_THROW(qm_related(f, QPair{{q(0)}, {q(0)}}, QPair{{q(1), q(0)}, {q(1), q(0)}}), DimensionMismatch);
}

TEST(Graph, DeduplicatesAndReportsDomains) {
  const QGraph t(Q{}, 1, {{{q(1)}, {q(2)}}, {{q(1)}, {q(2)}}, {{q(0)}, {q(0)}}, {{q(1)}, {q(-1)}}});
  EXPECT_EQ(t.size(), 3u);
  EXPECT_EQ(t.domain(), (std::vector<QVec>{{q(0)}, {q(1)}}));
  EXPECT_EQ(t.effective_domain(), (std::vector<QVec>{{q(1)}}));
  EXPECT_EQ(t.image({q(1)}).size(), 2u);
  EXPECT_THROW(QGraph(Q{}, 2, {{{q(1)}, {q(2)}}}), DimensionMismatch);
}

TEST(Graph, ExampleOperatorsAreQuasimonotone) {
  EXPECT_TRUE(is_quasimonotone(zslice()));
  EXPECT_TRUE(is_monotone(zslice()));
  EXPECT_TRUE(is_quasimonotone(step()));
  const QGraph bad(Q{}, 1, {{{q(0)}, {q(1)}}, {{q(1)}, {q(-1)}}});
  const auto r = is_quasimonotone(bad);
  ASSERT_FALSE(r);
  EXPECT_FALSE(literal_related(r.witness->first, r.witness->second));
}

TEST(Polar, ZSliceFibreAtOneHalf) {
  const auto t = zslice();
  const QVec half{q(1, 2)};
  EXPECT_EQ(v_set(t, half), (std::vector<QVec>{{q(-2)}, {q(-1)}, {q(0)}}));
  EXPECT_TRUE(polar_member(t, {half, {q(1)}}));
  const auto r = polar_member(t, {half, {q(-1)}});
  EXPECT_FALSE(r);
  ASSERT_TRUE(r.witness);
  EXPECT_FALSE(literal_related({half, {q(-1)}}, *r.witness));
  EXPECT_TRUE(cone_equal(polar_fiber(t, half), VCone<Q>::make(Q{}, 1, {{q(1)}})));
}

TEST(Polar, ZeroCovectorIsInEveryPolar) {
  for (const auto& t : fuzz_corpus(50, 3)) {
    EXPECT_TRUE(polar_member(t, {QVec(t.dim(), q(2)), QVec(t.dim(), q(0))}));
  }
  const QGraph single(Q{}, 1, {{{q(3)}, {q(0)}}});
  EXPECT_TRUE(polar_fiber(single, {q(-7)}).normals.empty());
}

TEST(Polar, IdentityOnTheUnitCircle) {
  const auto t = make_scenario("identity", {}, Q{}).graph;
  EXPECT_EQ(t.size(), 8u);
  // no unit-circle point lies strictly inside B((1/2, 0), 1/2)
  EXPECT_TRUE(v_set(t, {q(1), q(0)}).empty());
  // an interior ring does
  const auto two = make_scenario("identity", ScenarioParams{.n = 16, .rings = 3}, Q{}).graph;
  for (const auto& y : v_set(two, {q(1), q(0)})) {
    EXPECT_LT(dot(y - QVec{q(1, 2), q(0)}, y - QVec{q(1, 2), q(0)}), q(1, 4));
  }
  EXPECT_FALSE(v_set(two, {q(1), q(0)}).empty());
}

TEST(Polar, IdentityFibreAtAxisPoint) {
  const ApproxField f{1e-9};
  const auto t = make_scenario("identity", ScenarioParams{.n = 64, .rings = 11}, f).graph;
  const auto fib = polar_fiber(t, {1.0, 0.0});
  EXPECT_TRUE(hcone_member(fib, {1.0, 0.0}));
  EXPECT_TRUE(hcone_member(fib, {3.0, 0.0}));
  EXPECT_FALSE(hcone_member(fib, {0.0, 1.0}));
  EXPECT_FALSE(hcone_member(fib, {-1.0, 0.0}));
}

TEST(EPolyhedron, Examples) {
  EXPECT_TRUE(e_polyhedron(QGraph(Q{}, 1, {{{q(0)}, {q(0)}}})).constraints.empty());
  const QGraph three(Q{}, 1, {{{q(-1)}, {q(-1)}}, {{q(0)}, {q(1)}}, {{q(0)}, {q(-1)}}});
  const auto c = polyhedron_classify(e_polyhedron(three));
  EXPECT_EQ(c.kind, PolyhedronKind::Singleton);
  EXPECT_EQ(c.point, (QVec{q(0)}));
}

TEST(Conic, ZSliceHullIsQuasimonotone) {
  const auto c = conic_hull(zslice(), true);
  EXPECT_TRUE(conic_qm_check(c));
  EXPECT_EQ(c.fiber({q(1, 2)})->generators.size(), 0u);
  EXPECT_FALSE(conic_hull(zslice(), false).fiber({q(1, 2)}));
  EXPECT_EQ(c.effective_domain().size(), 5u);
}

TEST(Conic, CoherenceOnCorpus) {
  for (const auto& t : fuzz_corpus(150, 5)) {
    EXPECT_EQ(is_quasimonotone(t).holds, conic_qm_check(conic_hull(t, true)).holds) << serialize(t);
  }
}

TEST(Oracles, QuasimonotoneAndMonotoneMatchLiteralDefinitions) {
  for (const auto& t : fuzz_corpus()) {
    ASSERT_EQ(is_quasimonotone(t).holds, literal_quasimonotone(t)) << serialize(t);
    bool mono = true;
    for (const auto& p : t.pairs()) {
      for (const auto& r : t.pairs()) mono = mono && dot(p.x - r.x, p.xstar - r.xstar) >= 0;
    }
    ASSERT_EQ(is_monotone(t).holds, mono);
  }
}

TEST(TranslatePerturb, ShiftsPairs) {
  const auto t = zslice();
  const auto s = translate(t, QVec{q(3)});
  EXPECT_TRUE(s.contains({{q(5)}, {q(1)}}));
  const auto p = perturb(t, QVec{q(-1)});
  EXPECT_TRUE(p.contains({{q(0)}, {q(0)}}));
  EXPECT_TRUE(cone_equal(polar_fiber(s, {q(7, 2)}), polar_fiber(t, {q(1, 2)})));
}

TEST(Laws, PolarityLawsOnFuzzSample) {
  std::mt19937_64 rng(99);
  LawReport rep;
  for (const auto& t : fuzz_corpus(80, 17)) check_laws(t, rng, rep, 6, 6);
  for (const auto& [law, count] : rep.violations) EXPECT_EQ(count, 0u) << law;
  EXPECT_EQ(rep.probes, 80u * 36u);
}
