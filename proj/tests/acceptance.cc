#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "jonesrt/bounds.h"
#include "jonesrt/colored.h"
#include "jonesrt/constructions.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "jonesrt/rt.h"
#include "jonesrt/skein.h"
#include "test_util.h"

namespace jonesrt {
namespace {

using testing::DataDir;
using testing::LoadAllCorpus;
using testing::LoadCorpus;

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string Fixed(double v, int digits = 2) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

CyclotomicValue QuantumIntegerAt(int n, int r) {
  return EvalAtRoot(QuantumInteger(n), r, Variable::kT);
}

Outcome UnknotNormalization() {
  const auto start = Clock::now();
  int equal = 0;
  for (int n = 1; n <= 8; ++n) {
    const LaurentPolynomial j = ColoredJones(Unknot(), n);
    const auto in_t = AToT(j);
    if (j == TToA(QuantumInteger(n)) && in_t && *in_t == QuantumInteger(n)) ++equal;
  }
  const double s = Seconds(start);
  return {equal == 8 && s < 1.0, std::to_string(equal) + "/8 equal [N], " + Fixed(s, 3) + " s"};
}

Outcome WhiteheadCongruence() {
  const auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (int r = 3; r <= 5; ++r) {
    const LinkDiagram k = BuildTwistedKnot(WhiteheadTemplate(), {r});
    int equal = 0;
    for (int n = 1; n <= r - 1; ++n) equal += ColoredJonesAtRoot(k, n, r) == QuantumIntegerAt(n, r);
    const CyclotomicValue two = QuantumIntegerAt(2, r);
    const bool cable = UnreducedJonesAtRoot(Cable(k, {2}), true, r) == two * two;
    ok = ok && equal == r - 1 && cable;
    detail += "r=" + std::to_string(r) + ": " + std::to_string(equal) + "/" +
              std::to_string(r - 1) + " colors, cable " + (cable ? "equal" : "differs") + "; ";
  }
  const double s = Seconds(start);
  return {ok && s < 60.0, detail + Fixed(s) + " s"};
}

Outcome BorromeanCongruence() {
  const auto start = Clock::now();
  const LinkDiagram k = BuildTwistedKnot(BorromeanTemplate(), {3, 4});
  bool ok = true;
  std::string detail = std::to_string(k.num_crossings()) + " crossings; ";
  for (int r : {3, 4}) {
    int equal = 0;
    for (int n = 1; n <= r - 1; ++n) equal += ColoredJonesAtRoot(k, n, r) == QuantumIntegerAt(n, r);
    ok = ok && equal == r - 1;
    detail += "e_" + std::to_string(r) + ": " + std::to_string(equal) + "/" +
              std::to_string(r - 1) + " colors; ";
  }
  const double s = Seconds(start);
  return {ok && s < 120.0, detail + Fixed(s) + " s"};
}

Outcome SurgeryInstance(int n, const std::vector<int>& levels, int q) {
  const auto start = Clock::now();
  const LinkDiagram k =
      BuildTwistedKnot(n == 1 ? WhiteheadTemplate() : BorromeanTemplate(), levels);
  const SurgeryPresentation m = SurgeryPresentationOneOverQ(k, q);
  bool ok = true;
  std::string detail;
  int fused_width = 0;
  int direct_width = 0;
  for (int r : levels) {
    for (int j = 1; j <= r - 2; ++j)
      fused_width = std::max(fused_width, ContractionWidth(Cable(k, {j})));
    direct_width = std::max(direct_width, ContractionWidth(Cable(m.link, {r - 2, r - 2})));
    const RTValue fused = ParallelSurgeryInvariant(k, q, 1, r);
    const RTValue direct = RtInvariant(m, r);
    ok = ok && fused.exact && fused.IsOne() && direct.exact && direct.IsOne();
    detail += "tau_" + std::to_string(r) + " fused " + fused.ToString() + ", direct " +
              direct.ToString() + "; ";
  }
  const double s = Seconds(start);
  ok = ok && fused_width <= 12 && s < 600.0;
  return {ok, detail + "fused width " + std::to_string(fused_width) + ", direct width " +
                  std::to_string(direct_width) + ", " + Fixed(s) + " s"};
}

Outcome SurgeryInstances() {
  const Outcome a = SurgeryInstance(1, {5}, 2);
  const Outcome b = SurgeryInstance(2, {3, 4}, 2);
  return {a.pass && b.pass, "(1,5,2): " + a.detail + " | (2,(3,4),2): " + b.detail};
}

Outcome SphereIsOne() {
  const auto start = Clock::now();
  LinkDiagram hopf = LoadCorpus("hopf");
  hopf.framings = {0, 0};
  const SurgeryPresentation spheres[] = {
      {EmptyDiagram(), "empty"}, {Unknot(1), "U+"}, {Unknot(-1), "U-"}, {hopf, "hopf(0,0)"}};
  int ones = 0;
  int total = 0;
  for (int r = 3; r <= 8; ++r) {
    for (const auto& p : spheres) {
      const RTValue v = RtInvariant(p, r);
      ones += v.exact && v.IsOne();
      ++total;
    }
  }
  const double s = Seconds(start);
  return {ones == total && s < 30.0,
          std::to_string(ones) + "/" + std::to_string(total) + " exactly 1, " + Fixed(s) + " s"};
}

Outcome OracleEquivalence() {
  const auto start = Clock::now();
  std::vector<std::pair<std::string, LinkDiagram>> cases;
  for (auto& [name, d] : LoadAllCorpus()) cases.emplace_back(name, std::move(d));
  for (const char* name :
       {"kink_positive", "kink_negative", "hopf", "hopf_negative", "unknot_braid"}) {
    const LinkDiagram d = LoadCorpus(name);
    cases.emplace_back(std::string(name) + " 2-cable",
                       Cable(d, std::vector<int>(d.num_components(), 2)));
  }
  cases.emplace_back("hopf (2,1)-cable", Cable(LoadCorpus("hopf"), {2, 1}));
  for (int order = -1; order <= 2; ++order) {
    cases.emplace_back("whitehead " + std::to_string(order),
                       BuildTwistedKnot(WhiteheadTemplate(), {order}));
  }
  cases.emplace_back("whitehead template", WhiteheadTemplate().diagram);
  cases.emplace_back("borromean template", BorromeanTemplate().diagram);
  cases.emplace_back("borromean 1,-1", BuildTwistedKnot(BorromeanTemplate(), {1, -1}));
  int checked = 0;
  int equal = 0;
  int cabled_or_twisted = 0;
  for (const auto& [name, d] : cases) {
    if (d.num_crossings() > 12) continue;
    ++checked;
    if (name.find("cable") != std::string::npos || name.find("whitehead") != std::string::npos ||
        name.find("borromean ") != std::string::npos) {
      ++cabled_or_twisted;
    }
    if (BracketFast(d) == BracketNaive(d)) {
      ++equal;
    } else {
      std::fprintf(stderr, "bracket mismatch on %s\n", name.c_str());
    }
  }
  const double s = Seconds(start);
  return {equal == checked && checked >= 30 && cabled_or_twisted > 0 && s < 60.0,
          std::to_string(equal) + "/" + std::to_string(checked) +
              " diagrams with <= 12 crossings (" + std::to_string(cabled_or_twisted) +
              " cabled or twisted), " + Fixed(s) + " s"};
}

Outcome FramingFactorIndependence() {
  const LinkDiagram knots[] = {LoadCorpus("trefoil_pd"),
                               BuildTwistedKnot(WhiteheadTemplate(), {2})};
  int equal = 0;
  int total = 0;
  for (int n = 1; n <= 4; ++n) {
    for (int f = -2; f <= 2; ++f) {
      std::vector<LaurentPolynomial> ratios;
      for (const LinkDiagram& k : knots) {
        const LaurentPolynomial zero = ColoredJones(k, n);
        const LaurentPolynomial framed = ColoredJones(WithFramings(k, {f}), n, true);
        if (auto ratio = framed.DivideExact(zero)) ratios.push_back(*ratio);
      }
      ++total;
      equal += ratios.size() == 2 && ratios[0] == ratios[1] && ratios[0] == FramingFactor(n, f);
    }
  }
  return {equal == total, std::to_string(equal) + "/" + std::to_string(total) +
                              " (N, f) pairs with identical ratio equal to the factor"};
}

Outcome VanishingAtMatchingLevel() {
  int zeros = 0;
  int total = 0;
  for (const char* name : {"trefoil_pd", "knot_4_1", "knot_5_2"}) {
    for (int n = 3; n <= 5; ++n) {
      zeros += ColoredJonesAtRoot(LoadCorpus(name), n, n).is_zero();
      ++total;
    }
  }
  return {zeros == total, std::to_string(zeros) + "/" + std::to_string(total) + " vanish"};
}

Outcome BoundsArithmetic() {
  const bool cusped = std::abs(CuspedLowerBound(1) - 2.02988) < 5e-6;
  bool rejects = true;
  for (long q = -12; q <= 12; ++q) {
    try {
      FillingLowerBound(1, q);
      rejects = false;
    } catch (const InputError&) {
    }
  }
  bool monotone = true;
  for (int n = 1; n <= 3; ++n) {
    for (long q = 13; q < 1000; ++q) {
      const double b = FillingLowerBound(n, q);
      monotone = monotone && b < FillingLowerBound(n, q + 1) && b < n;
    }
    monotone = monotone && FillingLowerBound(n, 1000) > 0.99 * n;
  }
  bool half_matches = true;
  long first_half = 0;
  for (long q = 13; q <= 40; ++q) {
    const bool exceeds = FillingLowerBound(1, q) > 0.5;
    if (exceeds && first_half == 0) first_half = q;
    half_matches = half_matches && exceeds == (q >= 25);
  }
  return {cusped && rejects && monotone && half_matches,
          "cusped(1) = " + Fixed(CuspedLowerBound(1), 5) + (rejects ? ", rejects" : ", accepts") +
              " |q| <= 12, " + (monotone ? "monotone" : "not monotone") +
              ", bound > n/2 first at q = " + std::to_string(first_half) + " (expected 25)"};
}

Outcome KirbyStability() {
  const auto start = Clock::now();
  int stable = 0;
  int total = 0;
  std::string failed;
  std::vector<std::filesystem::path> files;
  for (const auto& e : std::filesystem::directory_iterator(DataDir() + "/presentations")) {
    if (e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  for (const auto& path : files) {
    const SurgeryPresentation p = ParsePresentation(ReadTextFile(path.string()));
    for (int r = 3; r <= 5; ++r) {
      ++total;
      if (VerifyKirbyStability(p, r, {}, 0.0)) {
        ++stable;
      } else {
        failed += " " + p.label + "@" + std::to_string(r);
      }
    }
  }
  return {stable == total && !files.empty(), std::to_string(stable) + "/" + std::to_string(total) +
                                                 " (presentation, r) pairs over " +
                                                 std::to_string(files.size()) + " presentations" +
                                                 failed + ", " + Fixed(Seconds(start)) + " s"};
}

}  // namespace
}  // namespace jonesrt

int main() {
  using jonesrt::Outcome;
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"unknot normalization", jonesrt::UnknotNormalization},
      {"whitehead twist knots congruent to the unknot, r = 3, 4, 5", jonesrt::WhiteheadCongruence},
      {"borromean twist knot (3, 4) congruent to the unknot", jonesrt::BorromeanCongruence},
      {"tau_r = 1 for 1/2 surgery, (1, 5) and (2, (3, 4))", jonesrt::SurgeryInstances},
      {"tau_r(S^3) = 1, r = 3..8", jonesrt::SphereIsOne},
      {"fast bracket equals naive bracket", jonesrt::OracleEquivalence},
      {"framing factor independent of the knot", jonesrt::FramingFactorIndependence},
      {"J_N(K, e_N) = 0", jonesrt::VanishingAtMatchingLevel},
      {"volume bound arithmetic", jonesrt::BoundsArithmetic},
      {"Kirby stabilization invariance", jonesrt::KirbyStability},
  };
  int failures = 0;
  int index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    failures += !o.pass;
    std::printf("%s %2d %s: %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%d criteria passed\n", index - failures, index);
  return failures == 0 ? 0 : 1;
}
