#include "jonesrt/skein.h"

#include <gtest/gtest.h>

#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "test_util.h"

namespace jonesrt {
namespace {

using testing::LoadAllCorpus;
using testing::LoadCorpus;

LaurentPolynomial P(std::map<int, mpz_class> terms) { return LaurentPolynomial::FromTerms(terms); }

TEST(BracketNaive, UnknotIsLoopValue) {
  EXPECT_EQ(BracketNaive(Unknot()), LoopValue());
  EXPECT_TRUE(BracketNaive(Unknot(), {.reduced = true}).is_one());
}

TEST(BracketNaive, PositiveKink) {
  EXPECT_EQ(BracketNaive(LoadCorpus("kink_positive")), P({{5, 1}, {1, 1}}));
  EXPECT_TRUE(BracketNaive(LoadCorpus("kink_positive"), {true, true}).is_one());
  EXPECT_TRUE(BracketNaive(LoadCorpus("kink_negative"), {true, true}).is_one());
}

TEST(BracketNaive, Trefoil) {
  LinkDiagram d = LoadCorpus("trefoil_pd");
  EXPECT_EQ(BracketNaive(d, {.reduced = true}), P({{5, -1}, {-3, -1}, {-7, 1}}));
  EXPECT_EQ(BracketNaive(d, {true, true}), P({{-4, 1}, {-12, 1}, {-16, -1}}));
}

TEST(BracketFast, MatchesNaiveOnCorpus) {
  for (const auto& [name, d] : LoadAllCorpus()) {
    if (d.num_crossings() > 12) continue;
    SCOPED_TRACE(name);
    EXPECT_EQ(BracketFast(d), BracketNaive(d));
    EngineOptions greedy;
    greedy.plan_kind = PlanKind::kGreedy;
    EXPECT_EQ(BracketFast(d, {}, greedy), BracketNaive(d));
  }
}

TEST(BracketFast, MatchesOnTwistedAndCabled) {
  LinkDiagram hopf = LoadCorpus("hopf");
  hopf.framings = {1, -2};
  for (int j = 1; j <= 3; ++j) {
    LinkDiagram c = Cable(hopf, {j, 1});
    SCOPED_TRACE(j);
    if (c.num_crossings() <= 16) EXPECT_EQ(BracketFast(c), BracketNaive(c));
  }
  LinkDiagram trefoil = LoadCorpus("trefoil_pd");
  LinkDiagram c2 = Cable(trefoil, {2});
  EXPECT_EQ(BracketFast(c2), BracketNaive(c2));
  EngineOptions plain;
  plain.use_twist_regions = false;
  EXPECT_EQ(BracketFast(c2, {}, plain), BracketNaive(c2));
}

TEST(BracketAtRoot, AgreesWithPolynomialEvaluation) {
  for (const char* name : {"trefoil_pd", "knot_4_1", "borromean", "hopf"}) {
    LinkDiagram d = LoadCorpus(name);
    LaurentPolynomial p = BracketFast(d);
    for (int r = 3; r <= 6; ++r) {
      SCOPED_TRACE(std::string(name) + " r=" + std::to_string(r));
      CyclotomicValue exact = BracketAtRoot(d, r);
      EXPECT_EQ(exact, EvalAtRoot(p, r, Variable::kA));
      std::complex<double> f = BracketAtRootFloat(d, r);
      EXPECT_NEAR(std::abs(f - exact.ToComplex()), 0.0, 1e-9);
    }
  }
}

TEST(UnreducedJones, UnknotAndFraming) {
  EXPECT_EQ(UnreducedJones(Unknot(), false), LoopValue());
  EXPECT_EQ(UnreducedJones(LoadCorpus("kink_positive"), false), LoopValue());
  LaurentPolynomial framed = UnreducedJones(Unknot(2), true);
  EXPECT_EQ(framed, LoopValue().Shifted(6));
}

TEST(Engine, WidthBudget) {
  LinkDiagram d = LoadCorpus("torus_3_5");
  EngineOptions tight;
  tight.max_width = 2;
  EXPECT_THROW(BracketFast(d, {}, tight), BudgetError);
}

TEST(Engine, CableTwistsFormARegion) {
  LinkDiagram c = Cable(LoadCorpus("trefoil_pd"), {3});
  ASSERT_EQ(c.twist_regions.size(), 1u);
  EXPECT_EQ(c.twist_regions[0].blocks.size(), 3u);
  EngineOptions plain;
  plain.use_twist_regions = false;
  EXPECT_LE(ContractionWidth(c), ContractionWidth(c, plain));
  EXPECT_EQ(BracketFast(c), BracketFast(c, {}, plain));
}

TEST(Engine, ContractionWidth) {
  EXPECT_EQ(ContractionWidth(Unknot()), 0);
  EXPECT_EQ(ContractionWidth(LoadCorpus("kink_positive")), 0);
  const LinkDiagram d = LoadCorpus("knot_6_1");
  EXPECT_LE(ContractionWidth(d), GreedyPlan(d).max_width);
  EXPECT_LE(ContractionWidth(d), SweepPlan(d).max_width);
}

TEST(Plan, RoundTrip) {
  LinkDiagram d = LoadCorpus("knot_6_1");
  ContractionPlan plan = GreedyPlan(d);
  ContractionPlan back = PlanFromJson(PlanToJson(plan), d);
  EXPECT_EQ(back.order, plan.order);
  EXPECT_EQ(back.max_width, plan.max_width);
  EXPECT_THROW(PlanFromJson(R"({"order": [0, 0]})", d), InputError);
  EngineOptions fixed;
  fixed.plan = &plan;
  EXPECT_EQ(BracketFast(d, {}, fixed), BracketNaive(d));
}

}  // namespace
}  // namespace jonesrt
