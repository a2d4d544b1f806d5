#include "jonesrt/constructions.h"

#include <gtest/gtest.h>

#include "jonesrt/diagram_io.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "jonesrt/skein.h"
#include "test_util.h"

namespace jonesrt {
namespace {

using testing::LoadCorpus;

LaurentPolynomial ZeroFramedReduced(const LinkDiagram& d) { return BracketFast(d, {true, true}); }

bool SameUpToMirror(const LinkDiagram& a, const LinkDiagram& b) {
  return ZeroFramedReduced(a) == ZeroFramedReduced(b) ||
         ZeroFramedReduced(a) == ZeroFramedReduced(Mirror(b));
}

TEST(Templates, WhiteheadShape) {
  Template t = WhiteheadTemplate();
  EXPECT_EQ(t.n, 1);
  EXPECT_EQ(t.diagram.num_components(), 2u);
  EXPECT_EQ(t.diagram.num_crossings(), 6u);
  EXPECT_EQ(t.diagram.twist_sites.size(), 1u);
  EXPECT_EQ(ComputeLinkingMatrix(t.diagram).entries[0][1], 0);
  EXPECT_EQ(UnreducedJones(DeleteComponents(t.diagram, {true, false}), false), LoopValue());
  EXPECT_EQ(UnreducedJones(DeleteComponents(t.diagram, {false, true}), false), LoopValue());
  EXPECT_NE(UnreducedJones(t.diagram, false), LoopValue() * LoopValue());
}

TEST(Templates, BorromeanIsBrunnian) {
  Template t = BorromeanTemplate();
  EXPECT_EQ(t.n, 2);
  EXPECT_EQ(t.diagram.num_components(), 3u);
  const LaurentPolynomial unlink2 = LoopValue() * LoopValue();
  for (int drop = 0; drop < 3; ++drop) {
    std::vector<bool> keep(3, true);
    keep[drop] = false;
    EXPECT_EQ(UnreducedJones(DeleteComponents(t.diagram, keep), false), unlink2) << drop;
  }
  EXPECT_TRUE(SameUpToMirror(t.diagram, LoadCorpus("borromean")));
}

TEST(BuildTwistedKnot, OrderZeroIsUnknot) {
  LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {0});
  EXPECT_EQ(k.num_components(), 1u);
  EXPECT_EQ(UnreducedJones(k, false), LoopValue());
}

TEST(BuildTwistedKnot, OrderOneGivesTrefoilAndFigureEight) {
  LinkDiagram plus = BuildTwistedKnot(WhiteheadTemplate(), {1});
  LinkDiagram minus = BuildTwistedKnot(WhiteheadTemplate(), {-1});
  EXPECT_EQ(plus.num_crossings(), 4u);
  const LinkDiagram trefoil = LoadCorpus("trefoil_pd");
  const LinkDiagram eight = LoadCorpus("knot_4_1");
  EXPECT_TRUE((SameUpToMirror(plus, trefoil) && SameUpToMirror(minus, eight)) ||
              (SameUpToMirror(plus, eight) && SameUpToMirror(minus, trefoil)));
}

TEST(BuildTwistedKnot, CrossingCountAndFraming) {
  for (int r = 1; r <= 4; ++r) {
    LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {r});
    EXPECT_EQ(k.num_crossings(), static_cast<std::size_t>(2 * r + 2));
    EXPECT_EQ(k.framings, std::vector<int>{0});
  }
}

TEST(BuildTwistedKnot, BorromeanPartialTwistsAreTrivial) {
  Template t = BorromeanTemplate();
  for (int a = 1; a <= 3; ++a) {
    EXPECT_EQ(UnreducedJones(BuildTwistedKnot(t, {a, 0}), false), LoopValue());
    EXPECT_EQ(UnreducedJones(BuildTwistedKnot(t, {0, a}), false), LoopValue());
    for (int b = 1; b <= 3; ++b) {
      EXPECT_NE(UnreducedJones(BuildTwistedKnot(t, {a, b}), false), LoopValue()) << a << "," << b;
    }
  }
}

TEST(BuildTwistedKnot, LengthMismatch) {
  EXPECT_THROW(BuildTwistedKnot(WhiteheadTemplate(), {1, 2}), InputError);
}

TEST(Congruence, WhiteheadOrderRAgainstUnknot) {
  for (int r = 3; r <= 5; ++r) {
    LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {r});
    CongruenceReport rep = CheckCongruence(k, Unknot(), r, r - 1, 2);
    EXPECT_TRUE(rep.pass) << CongruenceToTable(rep);
  }
  LinkDiagram k4 = BuildTwistedKnot(WhiteheadTemplate(), {4});
  EXPECT_FALSE(CheckCongruence(k4, Unknot(), 5, 4, 2).pass);
}

TEST(Congruence, Reflexive) {
  LinkDiagram k = LoadCorpus("knot_5_2");
  EXPECT_TRUE(CheckCongruence(k, k, 5, 3, 2).pass);
}

TEST(Congruence, UnrelatedKnotsDifferAtLevelFive) {
  CongruenceReport rep = CheckCongruence(LoadCorpus("trefoil_pd"), LoadCorpus("knot_4_1"), 5, 4, 2);
  EXPECT_FALSE(rep.pass);
  EXPECT_EQ(rep.entries.size(), 6u);
}

TEST(Congruence, LevelThreeSeesNoKnotting) {
  for (const char* name : {"trefoil_pd", "knot_4_1", "knot_5_2", "knot_6_1"}) {
    EXPECT_TRUE(CheckCongruence(LoadCorpus(name), Unknot(), 3, 2, 2).pass) << name;
  }
}

TEST(Congruence, FloatMode) {
  CheckOptions opts;
  opts.rt.arithmetic = Arithmetic::kFloat;
  LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {4});
  EXPECT_TRUE(CheckCongruence(k, Unknot(), 4, 3, 2, opts).pass);
  EXPECT_FALSE(CheckCongruence(k, Unknot(), 5, 4, 2, opts).pass);
}

TEST(OneOverQ, UnknotCableIsIdentityMatrix) {
  SurgeryPresentation p = SurgeryPresentationOneOverQ(Unknot(), 3);
  LinkingMatrix m = ComputeLinkingMatrix(p.link);
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) EXPECT_EQ(m.entries[i][j], i == j ? 1 : 0);
  }
  LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {2});
  LinkingMatrix mk = ComputeLinkingMatrix(SurgeryPresentationOneOverQ(k, 2).link);
  EXPECT_EQ(mk.entries, (std::vector<std::vector<long>>{{1, 0}, {0, 1}}));
  EXPECT_THROW(SurgeryPresentationOneOverQ(k, 0), InputError);
  SurgeryPresentation one = SurgeryPresentationOneOverQ(k, 1);
  EXPECT_EQ(one.link.framings, std::vector<int>{1});
}

TEST(UnknotCongruence, WhiteheadLevelFive) {
  ScenarioReport rep = VerifyUnknotCongruence(1, {5}, 4);
  EXPECT_TRUE(rep.pass) << rep.ToTable();
  EXPECT_THROW(VerifyUnknotCongruence(1, {0}, 4), InputError);
}

TEST(UnknotCongruence, BorromeanThreeFour) {
  ScenarioReport rep = VerifyUnknotCongruence(2, {3, 4}, 3);
  EXPECT_TRUE(rep.pass) << rep.ToTable();
}

const ReportLine* FindLine(const ScenarioReport& rep, const std::string& check) {
  for (const ReportLine& line : rep.lines) {
    if (line.check == check) return &line;
  }
  return nullptr;
}

TEST(OneOverQSurgery, WhiteheadLevelFive) {
  ScenarioReport rep = VerifyOneOverQSurgery(1, {5}, -2);
  EXPECT_TRUE(rep.pass) << rep.ToTable();
  ASSERT_NE(FindLine(rep, "tau_5(M) = 1"), nullptr);
  EXPECT_NE(FindLine(rep, "tau_5(M) = 1")->detail.find("width 12"), std::string::npos);
  EXPECT_EQ(FindLine(rep, "tau_5(M) direct"), nullptr);
  EXPECT_EQ(FindLine(rep, "volume bounds"), nullptr);
  EXPECT_EQ(FindLine(rep, "M hyperbolic")->status, Status::kUnchecked);
}

TEST(OneOverQSurgery, DirectRouteAgrees) {
  CheckOptions opts;
  opts.direct_surgery = true;
  ScenarioReport rep = VerifyOneOverQSurgery(2, {3, 4}, 2, opts);
  EXPECT_TRUE(rep.pass) << rep.ToTable();
  for (const char* check : {"tau_3(M) direct", "tau_4(M) direct"}) {
    ASSERT_NE(FindLine(rep, check), nullptr) << check;
    EXPECT_EQ(FindLine(rep, check)->status, Status::kPass);
  }
}

TEST(OneOverQSurgery, LargeQAddsVolumeBounds) {
  ScenarioReport rep = VerifyOneOverQSurgery(2, {3, 4}, 25);
  EXPECT_TRUE(rep.pass) << rep.ToTable();
  ASSERT_NE(FindLine(rep, "vol(M) > n/2"), nullptr);
  EXPECT_EQ(FindLine(rep, "vol(M) > n/2")->status, Status::kPass);
  ScenarioReport mid = VerifyOneOverQSurgery(2, {3, 4}, 13);
  EXPECT_EQ(FindLine(mid, "vol(M) > n/2")->status, Status::kUnchecked);
  EXPECT_NE(mid.ToJson().find("\"scenario\""), std::string::npos);
  EXPECT_THROW(VerifyOneOverQSurgery(2, {3}, 2), InputError);
  EXPECT_THROW(VerifyOneOverQSurgery(1, {5}, 0), InputError);
}

}  // namespace
}  // namespace jonesrt
