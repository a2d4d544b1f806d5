#include "jonesrt/constructions.h"

#include <cstdio>
#include <cstdlib>
#include <map>
#include <sstream>

#include "diagram_internal.h"
#include "jonesrt/bounds.h"
#include "jonesrt/colored.h"
#include "jonesrt/diagram_io.h"
#include "jonesrt/diagram_ops.h"
#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "jonesrt/skein.h"
#include "json_internal.h"

namespace jonesrt {
namespace {

// Builds a diagram bottom to top from cups, braid crossings, crossing
// circles and caps. Points on the same wire are merged with a union-find.
class PlatBuilder {
 public:
  // Geometric crossing: ends counter-clockwise, strands join k and k + 2.
  struct Geo {
    std::array<int, 4> ends;
    int over_pair;  // 0: ends 0-2 pass over, 1: ends 1-3
  };

  void Cup(int pos) {
    const int n = uf_.Add();
    top_.insert(top_.begin() + pos, {n, n});
  }

  void Cap(int pos) {
    uf_.Union(top_[pos], top_[pos + 1]);
    top_.erase(top_.begin() + pos, top_.begin() + pos + 2);
  }

  // Crossing of positions i, i + 1; ends SW, SE, NE, NW.
  void Sigma(int i, bool sw_ne_over) {
    Geo g = NewCrossing(sw_ne_over ? 0 : 1);
    uf_.Union(g.ends[0], top_[i]);
    uf_.Union(g.ends[1], top_[i + 1]);
    top_[i] = g.ends[3];
    top_[i + 1] = g.ends[2];
    geos_.push_back(g);
  }

  struct Ring {
    int strand_left;   // point on strand i inside the circle
    int strand_right;  // point on strand i + 1 inside the circle
    int circle;        // point on the circle
  };

  // Circle around positions i, i + 1: the upper arc passes over both
  // strands, the lower arc under. Ends are S, E, N, W.
  Ring Encircle(int i) {
    Geo bl = NewCrossing(0), br = NewCrossing(0), tl = NewCrossing(1), tr = NewCrossing(1);
    enum { S, E, N, W };
    uf_.Union(bl.ends[S], top_[i]);
    uf_.Union(br.ends[S], top_[i + 1]);
    uf_.Union(tl.ends[S], bl.ends[N]);
    uf_.Union(tr.ends[S], br.ends[N]);
    uf_.Union(tl.ends[W], bl.ends[W]);
    uf_.Union(tl.ends[E], tr.ends[W]);
    uf_.Union(tr.ends[E], br.ends[E]);
    uf_.Union(bl.ends[E], br.ends[W]);
    top_[i] = tl.ends[N];
    top_[i + 1] = tr.ends[N];
    for (const Geo& g : {bl, br, tl, tr}) geos_.push_back(g);
    return {tl.ends[S], tr.ends[S], tl.ends[E]};
  }

  // Components are traversed from each seed in turn; seeds are crossing ends
  // and the strand leaves its crossing through them.
  LinkDiagram Finish(const std::vector<int>& seeds, const std::vector<std::pair<int, int>>& sites) {
    if (!top_.empty()) throw DomainError("plat builder: unclosed strands");
    std::map<int, std::pair<int, int>> end_of_point;  // point -> (crossing, end)
    std::map<int, std::vector<std::pair<int, int>>> wire;
    for (std::size_t c = 0; c < geos_.size(); ++c) {
      for (int k = 0; k < 4; ++k) {
        end_of_point[geos_[c].ends[k]] = {static_cast<int>(c), k};
        wire[uf_.Find(geos_[c].ends[k])].push_back({static_cast<int>(c), k});
      }
    }
    std::map<int, int> edge_of_root;
    for (const auto& [root, ends] : wire) {
      if (ends.size() != 2) throw DomainError("plat builder: malformed wire");
      edge_of_root[root] = static_cast<int>(edge_of_root.size()) + 1;
    }
    auto edge_at = [&](int c, int k) { return edge_of_root[uf_.Find(geos_[c].ends[k])]; };
    auto other_end = [&](int c, int k) {
      const auto& ends = wire[uf_.Find(geos_[c].ends[k])];
      return ends[0] == std::make_pair(c, k) ? ends[1] : ends[0];
    };

    std::vector<std::array<bool, 4>> incoming(geos_.size(), {false, false, false, false});
    std::vector<std::array<bool, 4>> seen(geos_.size(), {false, false, false, false});
    LinkDiagram d;
    auto walk = [&](int c0, int k0) {
      std::vector<int> comp;
      int c = c0, k = k0;
      do {
        seen[c][k] = true;
        comp.push_back(edge_at(c, k));
        auto [c2, k2] = other_end(c, k);
        seen[c2][k2] = true;
        incoming[c2][k2] = true;
        c = c2;
        k = (k2 + 2) % 4;
      } while (!(c == c0 && k == k0));
      d.components.push_back(std::move(comp));
    };
    for (int s : seeds) {
      auto [c, k] = end_of_point.at(s);
      if (!seen[c][k]) walk(c, k);
    }
    for (std::size_t c = 0; c < geos_.size(); ++c) {
      for (int k = 0; k < 4; ++k) {
        if (!seen[c][k]) walk(static_cast<int>(c), k);
      }
    }
    for (std::size_t c = 0; c < geos_.size(); ++c) {
      std::array<int, 4> ccw;
      for (int k = 0; k < 4; ++k) ccw[k] = edge_at(static_cast<int>(c), k);
      const int over = geos_[c].over_pair;
      const int under = 1 - over;
      const int under_in = incoming[c][under] ? under : under + 2;
      const int over_in = incoming[c][over] ? over : over + 2;
      d.crossings.push_back(internal::MakeCrossing(ccw, under_in, over_in));
    }
    d.orientations.assign(d.components.size(), 1);
    d.framings.assign(d.components.size(), 0);
    for (const auto& [a, b] : sites) {
      auto [ca, ka] = end_of_point.at(a);
      auto [cb, kb] = end_of_point.at(b);
      d.twist_sites.push_back({{edge_at(ca, ka), edge_at(cb, kb)}, 1});
    }
    LinkDiagram out = Renumbered(d);
    ValidateDiagram(out);
    return out;
  }

 private:
  Geo NewCrossing(int over_pair) {
    Geo g;
    for (int& e : g.ends) e = uf_.Add();
    g.over_pair = over_pair;
    return g;
  }

  internal::UnionFind uf_;
  std::vector<int> top_;
  std::vector<Geo> geos_;
};

void CheckLevels(const std::vector<int>& levels) {
  for (int r : levels) {
    if (r < 3) throw InputError("levels must be >= 3, got " + std::to_string(r));
  }
}

Template TemplateForN(int n) {
  if (n == 1) return WhiteheadTemplate();
  if (n == 2) return BorromeanTemplate();
  throw InputError("built-in templates exist for n = 1 and n = 2, got n = " + std::to_string(n));
}

std::string JoinInts(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string ValueString(const CyclotomicValue& v) { return v.ToString(); }

std::string ValueString(std::complex<double> v) {
  char buf[96];
  std::snprintf(buf, sizeof(buf), "%.12g%+.12gi", v.real(), v.imag());
  return buf;
}

const char* StatusName(Status s) {
  switch (s) {
    case Status::kPass:
      return "pass";
    case Status::kFail:
      return "fail";
    case Status::kUnchecked:
      return "unchecked";
  }
  return "?";
}

void Finalize(ScenarioReport& report) {
  report.pass = true;
  for (const auto& line : report.lines) {
    if (line.status == Status::kFail) report.pass = false;
  }
}

}  // namespace

Template WhiteheadTemplate() {
  PlatBuilder b;
  b.Cup(0);
  b.Cup(1);
  auto ring = b.Encircle(0);
  b.Sigma(1, true);
  b.Sigma(1, true);
  b.Cap(0);
  b.Cap(0);
  Template t;
  t.name = "whitehead";
  t.n = 1;
  t.diagram = b.Finish({ring.strand_left, ring.circle}, {{ring.strand_left, ring.strand_right}});
  return t;
}

Template BorromeanTemplate() {
  PlatBuilder b;
  b.Cup(0);
  b.Cup(1);
  auto lower = b.Encircle(0);
  auto upper = b.Encircle(1);
  b.Cap(0);
  b.Cap(0);
  Template t;
  t.name = "borromean";
  t.n = 2;
  t.diagram =
      b.Finish({upper.strand_left, upper.circle, lower.circle},
               {{upper.strand_left, upper.strand_right}, {lower.strand_left, lower.strand_right}});
  return t;
}

Template ParseTemplate(std::string_view text, std::string name) {
  Template t;
  t.name = std::move(name);
  t.diagram = ParseDiagram(text);
  t.n = static_cast<int>(t.diagram.twist_sites.size());
  if (t.n == 0) throw InputError("template has no twist sites");
  const EdgeIndex idx = BuildEdgeIndex(t.diagram);
  for (const auto& site : t.diagram.twist_sites) {
    for (int e : site.edges) {
      if (idx.at(e).component != 0)
        throw InputError("template twist sites must lie on component 0");
    }
  }
  return t;
}

Template TemplateByName(const std::string& name) {
  if (name == "whitehead") return WhiteheadTemplate();
  if (name == "borromean") return BorromeanTemplate();
  throw InputError("unknown template \"" + name + "\" (expected whitehead or borromean)");
}

LinkDiagram BuildTwistedKnot(const Template& t, const std::vector<int>& orders) {
  if (static_cast<int>(orders.size()) != t.n) {
    throw InputError("template " + t.name + " has " + std::to_string(t.n) + " sites, got " +
                     std::to_string(orders.size()) + " orders");
  }
  LinkDiagram d = t.diagram;
  for (int i = 0; i < t.n; ++i) d = InsertFullTwists(d, i, orders[i]);
  std::vector<bool> keep(d.num_components(), false);
  keep[0] = true;
  return WithFramings(DeleteComponents(d, keep), {0});
}

CongruenceReport CheckCongruence(const LinkDiagram& k1, const LinkDiagram& k2, int r, int max_color,
                                 int max_cable, const CheckOptions& opts) {
  if (r < 3) throw InputError("level r must be >= 3, got " + std::to_string(r));
  for (const LinkDiagram* k : {&k1, &k2}) {
    if (k->num_components() != 1) throw InputError("congruence compares knots");
  }
  const LinkDiagram a = WithFramings(k1, {0});
  const LinkDiagram b = WithFramings(k2, {0});
  const EngineOptions& eng = opts.rt.engine;
  const bool exact = opts.rt.arithmetic == Arithmetic::kExact;
  CongruenceReport report;
  report.level = r;
  auto add = [&](const std::string& kind, int index, auto va, auto vb, bool equal) {
    report.entries.push_back({kind, index, ValueString(va), ValueString(vb), equal});
  };
  for (int j = 1; j <= max_cable; ++j) {
    if (exact) {
      auto va = UnreducedJonesAtRoot(Cable(a, {j}), true, r, eng);
      auto vb = UnreducedJonesAtRoot(Cable(b, {j}), true, r, eng);
      add("cable", j, va, vb, va == vb);
    } else {
      auto va = UnreducedJonesAtRootFloat(Cable(a, {j}), true, r, eng);
      auto vb = UnreducedJonesAtRootFloat(Cable(b, {j}), true, r, eng);
      add("cable", j, va, vb, std::abs(va - vb) <= opts.tolerance);
    }
  }
  for (int n = 1; n <= max_color; ++n) {
    if (exact) {
      auto va = ColoredJonesAtRoot(a, n, r, false, eng, opts.rt.cache);
      auto vb = ColoredJonesAtRoot(b, n, r, false, eng, opts.rt.cache);
      add("color", n, va, vb, va == vb);
    } else {
      auto va = MultiColoredJonesAtRootFloat(a, {n}, r, false, eng, opts.rt.cache);
      auto vb = MultiColoredJonesAtRootFloat(b, {n}, r, false, eng, opts.rt.cache);
      add("color", n, va, vb, std::abs(va - vb) <= opts.tolerance);
    }
  }
  report.pass = true;
  for (const auto& e : report.entries) report.pass = report.pass && e.equal;
  return report;
}

SurgeryPresentation SurgeryPresentationOneOverQ(const LinkDiagram& k, long q,
                                                const std::string& name) {
  if (q == 0) throw InputError("q must be nonzero");
  if (k.num_components() != 1) throw InputError("1/q surgery needs a knot");
  const int copies = static_cast<int>(std::labs(q));
  LinkDiagram cable = Cable(WithFramings(k, {0}), {copies});
  SurgeryPresentation p;
  p.link = WithFramings(cable, std::vector<int>(copies, q > 0 ? 1 : -1));
  p.label = "1/" + std::to_string(q) + " surgery on " + name;
  return p;
}

ScenarioReport VerifyUnknotCongruence(int n, const std::vector<int>& levels, int max_color,
                                      const CheckOptions& opts) {
  const Template t = TemplateForN(n);
  if (static_cast<int>(levels.size()) != n) {
    throw InputError("n = " + std::to_string(n) + " needs " + std::to_string(n) + " levels");
  }
  CheckLevels(levels);
  ScenarioReport report;
  report.scenario = "theorem-1-2";
  report.n = n;
  report.levels = levels;
  const LinkDiagram k = BuildTwistedKnot(t, levels);
  const LinkDiagram unknot = Unknot();
  report.lines.push_back({"construct K",
                          t.name + " template twisted with orders (" + JoinInts(levels) +
                              "): " + std::to_string(k.num_crossings()) + " crossings",
                          Status::kPass});
  const LaurentPolynomial unknot_jones = LoopValue();
  for (int i = 0; i < n; ++i) {
    std::vector<int> partial = levels;
    partial[i] = 0;
    const bool trivial =
        UnreducedJones(BuildTwistedKnot(t, partial), false, opts.rt.engine) == unknot_jones;
    report.lines.push_back({"partial twist leaves U unknotted",
                            "orders (" + JoinInts(partial) + "): Jones " +
                                (trivial ? "equals" : "differs from") + " [2]",
                            trivial ? Status::kPass : Status::kFail});
  }
  const bool nontrivial = UnreducedJones(k, false, opts.rt.engine) != unknot_jones;
  report.lines.push_back({"K is nontrivial",
                          nontrivial ? "Jones differs from [2]" : "Jones equals [2]",
                          nontrivial ? Status::kPass : Status::kFail});
  for (int r : levels) {
    const int colors = std::min(max_color, r - 1);
    CongruenceReport c = CheckCongruence(k, unknot, r, colors, 2, opts);
    int failed = 0;
    for (const auto& e : c.entries) failed += e.equal ? 0 : 1;
    report.lines.push_back({"J_N(K, e_" + std::to_string(r) + ") = [N]",
                            "N <= " + std::to_string(colors) +
                                " and cables j <= 2: " + std::to_string(c.entries.size() - failed) +
                                "/" + std::to_string(c.entries.size()) + " equal",
                            c.pass ? Status::kPass : Status::kFail});
  }
  report.lines.push_back({"K hyperbolic", "not checked", Status::kUnchecked});
  Finalize(report);
  return report;
}

ScenarioReport VerifyOneOverQSurgery(int n, const std::vector<int>& levels, long q,
                                     const CheckOptions& opts) {
  const Template t = TemplateForN(n);
  if (static_cast<int>(levels.size()) != n) {
    throw InputError("n = " + std::to_string(n) + " needs " + std::to_string(n) + " levels");
  }
  CheckLevels(levels);
  if (q == 0) throw InputError("q must be nonzero");
  ScenarioReport report;
  report.scenario = "theorem-1-1";
  report.n = n;
  report.levels = levels;
  report.q = q;
  const LinkDiagram k = BuildTwistedKnot(t, levels);
  const SurgeryPresentation m = SurgeryPresentationOneOverQ(k, q, "U(" + JoinInts(levels) + ")");
  report.lines.push_back({"presentation",
                          m.label + ": " + std::to_string(m.link.num_components()) +
                              " components, " + std::to_string(m.link.num_crossings()) +
                              " crossings",
                          Status::kPass});
  const int copies = static_cast<int>(std::labs(q));
  const int framing = q > 0 ? 1 : -1;
  const LinkDiagram k0 = WithFramings(k, {0});
  for (int r : levels) {
    const std::string tag = "tau_" + std::to_string(r);
    int width = 0;
    for (int j = 1; j <= r - 2; ++j) {
      width = std::max(width, ContractionWidth(Cable(k0, {j}), opts.rt.engine));
    }
    const RTValue tau = ParallelSurgeryInvariant(k, copies, framing, r, opts.rt);
    const RTValue ref = ParallelSurgeryInvariant(Unknot(), copies, framing, r, opts.rt);
    const bool one = tau.IsOne(opts.tolerance);
    report.lines.push_back({tag + "(M) = 1",
                            "fused into colored Jones of K, cables with at most " +
                                std::to_string(r - 2) + " strands, width " + std::to_string(width) +
                                ": value " + tau.ToString(),
                            one ? Status::kPass : Status::kFail});
    report.lines.push_back({tag + "(S^3) = 1",
                            "same presentation on the unknot, value " + ref.ToString(),
                            ref.IsOne(opts.tolerance) ? Status::kPass : Status::kFail});
    if (opts.direct_surgery) {
      const RTValue direct = RtInvariant(m, r, opts.rt);
      const bool agree =
          direct.IsOne(opts.tolerance) && RTValue::Equal(direct, tau, opts.tolerance);
      report.lines.push_back({tag + "(M) direct",
                              "sum over cables of the presentation, value " + direct.ToString(),
                              agree ? Status::kPass : Status::kFail});
    }
  }
  if (std::labs(q) > 12) {
    char buf[128];
    std::snprintf(buf, sizeof(buf), "cusped bound %.6g, filling bound %.6g", CuspedLowerBound(n),
                  FillingLowerBound(n, q));
    report.lines.push_back({"volume bounds", buf, Status::kPass});
    const bool half = FillingLowerBound(n, q) > n / 2.0;
    report.lines.push_back({"vol(M) > n/2",
                            half ? "filling bound exceeds n/2"
                                 : "filling bound below n/2 (needs |q| >= " +
                                       std::to_string(HalfVolumeThreshold()) + ")",
                            half ? Status::kPass : Status::kUnchecked});
  }
  report.lines.push_back({"M hyperbolic", "not checked", Status::kUnchecked});
  Finalize(report);
  return report;
}

std::string ScenarioReport::ToJson() const {
  internal::Json j = internal::Json::object();
  j["scenario"] = scenario;
  j["n"] = n;
  j["levels"] = levels;
  if (q != 0) j["q"] = q;
  internal::Json lines_json = internal::Json::array();
  for (const auto& line : lines) {
    internal::Json o = internal::Json::object();
    o["check"] = line.check;
    o["status"] = StatusName(line.status);
    o["detail"] = line.detail;
    lines_json.push_back(std::move(o));
  }
  j["lines"] = std::move(lines_json);
  j["verdict"] = pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string ScenarioReport::ToTable() const {
  std::size_t width = 5;
  for (const auto& line : lines) width = std::max(width, line.check.size());
  std::ostringstream out;
  out << scenario << " n=" << n << " levels=" << JoinInts(levels);
  if (q != 0) out << " q=" << q;
  out << "\n";
  for (const auto& line : lines) {
    out << line.check << std::string(width - line.check.size() + 2, ' ');
    std::string status = StatusName(line.status);
    out << status << std::string(11 - status.size(), ' ') << line.detail << "\n";
  }
  out << "verdict: " << (pass ? "pass" : "fail") << "\n";
  return out.str();
}

std::string CongruenceToJson(const CongruenceReport& r) {
  internal::Json j = internal::Json::object();
  j["level"] = r.level;
  internal::Json entries = internal::Json::array();
  for (const auto& e : r.entries) {
    internal::Json o = internal::Json::object();
    o["kind"] = e.kind;
    o["index"] = e.index;
    o["first"] = e.first;
    o["second"] = e.second;
    o["equal"] = e.equal;
    entries.push_back(std::move(o));
  }
  j["entries"] = std::move(entries);
  j["verdict"] = r.pass ? "pass" : "fail";
  return j.dump(2) + "\n";
}

std::string CongruenceToTable(const CongruenceReport& r) {
  std::ostringstream out;
  out << "congruence at r=" << r.level << "\n";
  for (const auto& e : r.entries) {
    out << e.kind << " " << e.index << "  " << (e.equal ? "equal  " : "differ ") << e.first
        << "  |  " << e.second << "\n";
  }
  out << "verdict: " << (r.pass ? "pass" : "fail") << "\n";
  return out.str();
}

}  // namespace jonesrt
