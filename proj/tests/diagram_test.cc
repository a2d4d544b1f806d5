#include "jonesrt/diagram.h"

#include <gtest/gtest.h>

#include <string>

#include "jonesrt/constructions.h"
#include "jonesrt/diagram_io.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/skein.h"
#include "test_util.h"

namespace jonesrt {
namespace {

using testing::LoadAllCorpus;
using testing::LoadCorpus;

void ExpectInputError(const std::string& text, const std::string& fragment) {
  try {
    ParseDiagram(text);
    ADD_FAILURE() << "accepted: " << text;
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find(fragment), std::string::npos) << e.what();
  }
}

TEST(Parse, RejectsMalformedDocuments) {
  ExpectInputError("{", "malformed JSON");
  ExpectInputError("[]", "expected an object");
  ExpectInputError(R"({"components": [[1]]})", "missing \"crossings\"");
  ExpectInputError(R"({"crossings": [[1, 2, 3, "+"]], "components": [[1, 2, 3]]})",
                   "expected [e1,e2,e3,e4,sign]");
  ExpectInputError(R"({"crossings": [[1, 2, 2, 1, "x"]], "components": [[1, 2]]})",
                   "expected \"+\", \"-\", 1 or -1");
}

TEST(Parse, RejectsInvalidDiagrams) {
  ExpectInputError(R"({"crossings": [[1, 2, 3, 4, "+"]], "components": [[1, 2, 3, 4]]})", "edge");
  ExpectInputError(R"({"crossings": [], "components": [[1]], "framings": [0, 0]})", "equal length");
  ExpectInputError(R"({"crossings": [], "components": [[1]], "orientations": [2]})",
                   "orientations[0]");
  ExpectInputError(R"({"crossings": [], "components": [[1, 2]]})", "single edge");
}

TEST(Parse, RejectsBadTwistSites) {
  ExpectInputError(
      R"({"crossings": [], "components": [[1]], "twist_sites": [{"edges": [1, 9], "sign": "+"}]})",
      "not found");
  ExpectInputError(
      R"({"crossings": [], "components": [[1]], "twist_sites": [{"edges": [1, 1], "sign": "+"}]})",
      "distinct");
}

TEST(Parse, RoundTripsCorpus) {
  for (const auto& [name, d] : LoadAllCorpus()) {
    SCOPED_TRACE(name);
    EXPECT_EQ(ParseDiagram(SerializeDiagram(d)), d);
  }
}

TEST(Parse, RoundTripsTemplates) {
  for (const Template& t : {WhiteheadTemplate(), BorromeanTemplate()}) {
    EXPECT_EQ(ParseDiagram(SerializeDiagram(t.diagram)), t.diagram);
  }
  LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {3});
  EXPECT_EQ(ParseDiagram(SerializeDiagram(k)), k);
}

TEST(Writhe, SimpleExamples) {
  EXPECT_EQ(Writhe(LoadCorpus("kink_positive")), 1);
  EXPECT_EQ(Writhe(LoadCorpus("kink_negative")), -1);
  EXPECT_EQ(Writhe(LoadCorpus("knot_4_1")), 0);
  EXPECT_EQ(SelfWrithes(LoadCorpus("hopf")), (std::vector<int>{0, 0}));
}

TEST(LinkingMatrix, Examples) {
  LinkDiagram hopf = LoadCorpus("hopf");
  hopf.framings = {2, -3};
  EXPECT_EQ(ComputeLinkingMatrix(hopf).entries, (std::vector<std::vector<long>>{{2, 1}, {1, -3}}));
  EXPECT_EQ(ComputeLinkingMatrix(LoadCorpus("hopf_negative")).entries,
            (std::vector<std::vector<long>>{{0, -1}, {-1, 0}}));
  EXPECT_EQ(ComputeLinkingMatrix(LoadCorpus("borromean")).entries,
            (std::vector<std::vector<long>>(3, std::vector<long>(3, 0))));
  EXPECT_EQ(ComputeLinkingMatrix(LoadCorpus("torus_2_4")).entries,
            (std::vector<std::vector<long>>{{0, 2}, {2, 0}}));
}

TEST(Mirror, NegatesWritheAndBracketExponents) {
  for (const char* name : {"trefoil_pd", "knot_5_2", "hopf"}) {
    SCOPED_TRACE(name);
    LinkDiagram d = LoadCorpus(name);
    LinkDiagram m = Mirror(d);
    EXPECT_EQ(Writhe(m), -Writhe(d));
    EXPECT_EQ(BracketNaive(m), BracketNaive(d).Substitute(-1));
    EXPECT_EQ(Mirror(m), d);
  }
}

TEST(DisjointUnion, BracketMultiplies) {
  LinkDiagram a = LoadCorpus("trefoil_pd");
  LinkDiagram b = LoadCorpus("hopf");
  LinkDiagram u = DisjointUnion(a, b);
  EXPECT_EQ(u.num_components(), 3u);
  EXPECT_NO_THROW(ValidateDiagram(u));
  EXPECT_EQ(BracketNaive(u), BracketNaive(a) * BracketNaive(b));
}

TEST(Unlink, FramingsAndValidity) {
  LinkDiagram u = Unlink({1, -1, 0});
  EXPECT_EQ(u.num_components(), 3u);
  EXPECT_EQ(u.framings, (std::vector<int>{1, -1, 0}));
  EXPECT_NO_THROW(ValidateDiagram(u));
  EXPECT_EQ(EmptyDiagram().num_components(), 0u);
}

TEST(Twists, AdditiveAtASite) {
  const LinkDiagram t = WhiteheadTemplate().diagram;
  for (int a : {-1, 1, 2}) {
    for (int b : {-2, 1}) {
      SCOPED_TRACE(std::to_string(a) + "+" + std::to_string(b));
      LinkDiagram twice = InsertFullTwists(InsertFullTwists(t, 0, a), 0, b);
      LinkDiagram once = InsertFullTwists(t, 0, a + b);
      EXPECT_NO_THROW(ValidateDiagram(twice));
      EXPECT_EQ(twice.num_crossings(), t.num_crossings() + 2 * (std::abs(a) + std::abs(b)));
      EXPECT_EQ(BracketFast(twice), BracketFast(once));
    }
  }
}

TEST(Twists, ZeroIsIdentityAndBadSiteThrows) {
  const LinkDiagram t = WhiteheadTemplate().diagram;
  EXPECT_EQ(BracketFast(InsertFullTwists(t, 0, 0)), BracketFast(t));
  EXPECT_THROW(InsertFullTwists(t, 7, 1), InputError);
}

TEST(Cable, CrossingCountAndComponents) {
  LinkDiagram trefoil = LoadCorpus("trefoil_pd");
  LinkDiagram c = Cable(trefoil, {3});
  EXPECT_EQ(c.num_components(), 3u);
  EXPECT_NO_THROW(ValidateDiagram(c));
  // 9 crossings per original crossing, plus the full twists undoing the writhe.
  EXPECT_EQ(c.num_crossings(), 9 * trefoil.num_crossings() + 6 * std::abs(Writhe(trefoil)));
  LinkingMatrix m = ComputeLinkingMatrix(c);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.entries[i][j], 0);
  }
}

TEST(DeleteComponents, KeepsSelected) {
  LinkDiagram b = LoadCorpus("borromean");
  LinkDiagram two = DeleteComponents(b, {true, false, true});
  EXPECT_EQ(two.num_components(), 2u);
  EXPECT_EQ(BracketFast(two), BracketFast(Unlink({0, 0})));
}

}  // namespace
}  // namespace jonesrt
