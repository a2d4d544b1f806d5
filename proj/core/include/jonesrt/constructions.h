#ifndef JONESRT_CONSTRUCTIONS_H_
#define JONESRT_CONSTRUCTIONS_H_

#include <string>
#include <string_view>
#include <vector>

#include "jonesrt/diagram.h"
#include "jonesrt/rt.h"

namespace jonesrt {

// U together with n crossing circles. Component 0 is U; twist site i lies on
// U inside circle i + 1.
struct Template {
  std::string name;
  LinkDiagram diagram;
  int n = 0;
};

Template WhiteheadTemplate();
Template BorromeanTemplate();
// A diagram document whose twist sites all lie on component 0.
Template ParseTemplate(std::string_view text, std::string name = "custom");
Template TemplateByName(const std::string& name);

// Twists site i by orders[i], then drops the circles. The result is U(r)
// with framing 0. Throws InputError on a length mismatch.
LinkDiagram BuildTwistedKnot(const Template& t, const std::vector<int>& orders);

struct CheckOptions {
  RtOptions rt;
  double tolerance = 1e-9;
  // VerifyOneOverQSurgery also sums over the cables of the full presentation.
  bool direct_surgery = false;
};

struct CongruenceEntry {
  std::string kind;  // "cable" or "color"
  int index = 0;
  std::string first;
  std::string second;
  bool equal = false;
};

struct CongruenceReport {
  int level = 0;
  std::vector<CongruenceEntry> entries;
  bool pass = false;
};

// Compares J(K^j, e_r) for j <= max_cable and J_N(K, e_r) for N <= max_color
// of two 0-framed knots.
CongruenceReport CheckCongruence(const LinkDiagram& k1, const LinkDiagram& k2, int r, int max_color,
                                 int max_cable, const CheckOptions& opts = {});

// q-cable of k (0-framing) with framing sign(q) on every copy.
SurgeryPresentation SurgeryPresentationOneOverQ(const LinkDiagram& k, long q,
                                                const std::string& name = "K");

enum class Status { kPass, kFail, kUnchecked };

struct ReportLine {
  std::string check;
  std::string detail;
  Status status = Status::kPass;
};

struct ScenarioReport {
  std::string scenario;
  int n = 0;
  std::vector<int> levels;
  long q = 0;
  std::vector<ReportLine> lines;
  bool pass = false;

  std::string ToJson() const;
  std::string ToTable() const;
};

// Congruence with the unknot at each level r_i (colors up to max_color,
// capped at r_i - 1, and 2-cables), plus the triviality of each partial
// twist.
ScenarioReport VerifyUnknotCongruence(int n, const std::vector<int>& levels, int max_color,
                                      const CheckOptions& opts = {});
// tau_r of 1/q surgery on U(r) and on the unknot at each level, plus volume
// bounds when |q| > 12. tau_r is computed by ParallelSurgeryInvariant, and
// also directly from the presentation when opts.direct_surgery is set.
ScenarioReport VerifyOneOverQSurgery(int n, const std::vector<int>& levels, long q,
                                     const CheckOptions& opts = {});

std::string CongruenceToJson(const CongruenceReport& r);
std::string CongruenceToTable(const CongruenceReport& r);

}  // namespace jonesrt

#endif  // JONESRT_CONSTRUCTIONS_H_
