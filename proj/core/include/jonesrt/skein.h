#ifndef JONESRT_SKEIN_H_
#define JONESRT_SKEIN_H_

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "jonesrt/cyclotomic.h"
#include "jonesrt/diagram.h"
#include "jonesrt/laurent.h"

namespace jonesrt {

// Order in which crossings are absorbed into the frontier. widths[i] is the
// number of open strand ends after absorbing order[i].
struct ContractionPlan {
  std::string strategy;
  std::vector<int> order;
  std::vector<int> widths;
  int max_width = 0;
};

ContractionPlan SweepPlan(const LinkDiagram& d);
ContractionPlan GreedyPlan(const LinkDiagram& d);
// The narrower of the two.
ContractionPlan BestPlan(const LinkDiagram& d);
std::string PlanToJson(const ContractionPlan& plan);
// Throws InputError if the order is not a permutation of the crossings.
ContractionPlan PlanFromJson(std::string_view text, const LinkDiagram& d);

enum class PlanKind { kAuto, kSweep, kGreedy };

// Frontier width hard limit supported by the state encoding.
inline constexpr int kMaxSupportedWidth = 42;

struct EngineOptions {
  // Frontier cap; defaults to JONESRT_MAX_WIDTH when set, else 32.
  int max_width = DefaultMaxWidth();
  PlanKind plan_kind = PlanKind::kAuto;
  // Overrides plan_kind when non-null.
  const ContractionPlan* plan = nullptr;
  // Contract recorded twist regions by repeated squaring of one block.
  bool use_twist_regions = true;
  // Regions wider than this are contracted crossing by crossing.
  int max_power_strands = 6;

  static int DefaultMaxWidth();
};

struct BracketNormalization {
  // Divide by the unknot value, so the round unknot evaluates to 1.
  bool reduced = false;
  // Multiply by (-A^3)^(-writhe).
  bool zero_framed = false;
};

// Brute-force state sum over all 2^c smoothings; c <= 24.
LaurentPolynomial BracketNaive(const LinkDiagram& d, BracketNormalization norm = {});
inline constexpr int kNaiveCrossingLimit = 24;

// Frontier contraction over planar matchings.
LaurentPolynomial BracketFast(const LinkDiagram& d, BracketNormalization norm = {},
                              const EngineOptions& opts = {});

// Frontier width the engine reaches on d: plain crossings and each twist
// region it contracts as one node. Throws InputError for a bad fixed plan.
int ContractionWidth(const LinkDiagram& d, const EngineOptions& opts = {});

// Unnormalized bracket evaluated directly at A = zeta, the primitive root of
// order 4r.
CyclotomicValue BracketAtRoot(const LinkDiagram& d, int r, const EngineOptions& opts = {});
std::complex<double> BracketAtRootFloat(const LinkDiagram& d, int r,
                                        const EngineOptions& opts = {});

// Bracket value of the framed link: the raw bracket times
// (-A^3)^(f_i - w_ii) per component, with f_i the stored framing (framed)
// or 0 (not framed) and w_ii the component's self-writhe. Unknot -> [2].
LaurentPolynomial UnreducedJones(const LinkDiagram& d, bool framed, const EngineOptions& opts = {});
CyclotomicValue UnreducedJonesAtRoot(const LinkDiagram& d, bool framed, int r,
                                     const EngineOptions& opts = {});
std::complex<double> UnreducedJonesAtRootFloat(const LinkDiagram& d, bool framed, int r,
                                               const EngineOptions& opts = {});

// Exponent m such that UnreducedJones = (-A^3)^m * raw bracket.
int FramingCorrectionExponent(const LinkDiagram& d, bool framed);

// The loop value -A^2 - A^-2.
LaurentPolynomial LoopValue();

}  // namespace jonesrt

#endif  // JONESRT_SKEIN_H_
