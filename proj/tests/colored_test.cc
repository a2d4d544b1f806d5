#include "jonesrt/colored.h"

#include <gtest/gtest.h>

#include <string>

#include "jonesrt/constructions.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "jonesrt/skein.h"
#include "test_util.h"

namespace jonesrt {
namespace {

using testing::LoadCorpus;

// (A^2n - A^-2n) / (A^2 - A^-2)
LaurentPolynomial QuantumIntegerInA(int n) {
  LaurentPolynomial p = TToA(QuantumInteger(n));
  return n % 2 == 0 ? -p : p;
}

TEST(ColoredJones, UnknotIsQuantumInteger) {
  for (int n = 1; n <= 8; ++n) {
    SCOPED_TRACE(n);
    EXPECT_EQ(ColoredJones(Unknot(), n), TToA(QuantumInteger(n)));
    EXPECT_EQ(ColoredJones(LoadCorpus("kink_positive"), n), TToA(QuantumInteger(n)));
  }
  EXPECT_THROW(ColoredJones(Unknot(), 0), InputError);
}

TEST(ColoredJones, ColorTwoIsJones) {
  for (const char* name : {"trefoil_pd", "knot_4_1", "knot_5_2", "torus_3_4"}) {
    SCOPED_TRACE(name);
    LinkDiagram d = LoadCorpus(name);
    EXPECT_EQ(ColoredJones(d, 2), UnreducedJones(d, false));
    EXPECT_TRUE(ColoredJones(d, 1).is_one());
  }
}

TEST(ColoredJones, DivisibleByQuantumInteger) {
  LinkDiagram d = LoadCorpus("trefoil_pd");
  for (int n = 2; n <= 4; ++n) {
    SCOPED_TRACE(n);
    EXPECT_TRUE(ColoredJones(d, n).DivideExact(TToA(QuantumInteger(n))).has_value());
  }
}

TEST(ColoredJones, MirrorInvertsVariable) {
  LinkDiagram d = LoadCorpus("knot_5_2");
  for (int n = 2; n <= 3; ++n) {
    EXPECT_EQ(ColoredJones(Mirror(d), n), ColoredJones(d, n).Substitute(-1));
  }
}

TEST(ColoredJones, RejectsLinks) { EXPECT_THROW(ColoredJones(LoadCorpus("hopf"), 2), InputError); }

TEST(MultiColoredJones, HopfIsSignedQuantumIntegerOfProduct) {
  for (const char* name : {"hopf", "hopf_negative"}) {
    LinkDiagram d = LoadCorpus(name);
    for (int a = 1; a <= 3; ++a) {
      for (int b = 1; b <= 3; ++b) {
        SCOPED_TRACE(std::string(name) + " " + std::to_string(a) + "," + std::to_string(b));
        LaurentPolynomial expect = QuantumIntegerInA(a * b);
        if ((a + b) % 2 != 0) expect = -expect;
        EXPECT_EQ(MultiColoredJones(d, {a, b}), expect);
      }
    }
  }
}

TEST(MultiColoredJones, DistantUnionMultiplies) {
  LinkDiagram u = Unlink({0, 0});
  EXPECT_EQ(MultiColoredJones(u, {2, 3}), TToA(QuantumInteger(2) * QuantumInteger(3)));
  EXPECT_THROW(MultiColoredJones(u, {2}), InputError);
}

TEST(FramingFactor, KnotIndependent) {
  const LinkDiagram knots[] = {LoadCorpus("trefoil_pd"),
                               BuildTwistedKnot(WhiteheadTemplate(), {2})};
  for (int n = 1; n <= 4; ++n) {
    for (int f = -2; f <= 2; ++f) {
      SCOPED_TRACE(std::to_string(n) + " f=" + std::to_string(f));
      const LaurentPolynomial factor = FramingFactor(n, f);
      for (const LinkDiagram& k : knots) {
        const LaurentPolynomial zero = ColoredJones(k, n);
        const LaurentPolynomial framed = ColoredJones(WithFramings(k, {f}), n, true);
        EXPECT_EQ(framed, zero * factor);
      }
    }
  }
}

TEST(FramingFactor, Values) {
  EXPECT_TRUE(FramingFactor(3, 0).is_one());
  EXPECT_TRUE(FramingFactor(1, 5).is_one());
  EXPECT_EQ(FramingFactor(2, 1), LaurentPolynomial::Monomial(-1, 3));
  EXPECT_EQ(FramingFactor(3, -1), LaurentPolynomial::Monomial(1, -8));
  EXPECT_EQ(FramingFactor(2, 2), LaurentPolynomial::Monomial(1, 6));
}

TEST(ColoredJonesAtRoot, VanishesAtMatchingLevel) {
  for (const char* name : {"trefoil_pd", "knot_4_1", "knot_5_2"}) {
    LinkDiagram d = LoadCorpus(name);
    for (int n = 3; n <= 5; ++n) {
      SCOPED_TRACE(std::string(name) + " N=" + std::to_string(n));
      EXPECT_TRUE(ColoredJonesAtRoot(d, n, n).is_zero());
      EXPECT_FALSE(ColoredJonesAtRoot(d, n - 1, n).is_zero());
    }
  }
}

TEST(ColoredJonesAtRoot, AgreesWithPolynomial) {
  LinkDiagram d = LoadCorpus("knot_4_1");
  for (int r = 3; r <= 6; ++r) {
    for (int n = 1; n <= 3; ++n) {
      SCOPED_TRACE(std::to_string(r) + " N=" + std::to_string(n));
      const CyclotomicValue exact = ColoredJonesAtRoot(d, n, r);
      EXPECT_EQ(exact, EvalAtRoot(ColoredJones(d, n), r, Variable::kA));
      const std::complex<double> f = MultiColoredJonesAtRootFloat(d, {n}, r);
      EXPECT_NEAR(std::abs(f - exact.ToComplex()), 0.0, 1e-9);
    }
  }
}

TEST(CableExpansion, ChebyshevTerms) {
  using E = std::vector<std::pair<std::vector<int>, long>>;
  EXPECT_EQ(CableExpansion({3}), (E{{{2}, 1}, {{0}, -1}}));
  auto two = CableExpansion({2, 3});
  EXPECT_EQ(two.size(), 2u);
  EXPECT_EQ(CableExpansion({}).size(), 1u);
}

TEST(CableCache, ReusesEntries) {
  CableCache cache;
  LinkDiagram d = LoadCorpus("trefoil_pd");
  const LaurentPolynomial a = ColoredJones(d, 4, false, {}, &cache);
  const std::size_t filled = cache.size();
  EXPECT_GT(filled, 0u);
  EXPECT_EQ(ColoredJones(d, 4, false, {}, &cache), a);
  EXPECT_EQ(cache.size(), filled);
  EXPECT_EQ(cache.Get(d, {2}), cache.Get(d, {2}));
}

}  // namespace
}  // namespace jonesrt
