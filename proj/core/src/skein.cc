#include "jonesrt/skein.h"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <unordered_map>

#include "jonesrt/errors.h"
#include "jonesrt/quantum.h"
#include "plan_internal.h"
#include "skein_engine.h"
#include "skein_rings.h"

namespace jonesrt {
namespace internal {
namespace {

template <class Ring>
Node<Ring> Relabeled(Node<Ring> node, std::vector<int> edges) {
  node.edges = std::move(edges);
  return node;
}

template <class Ring>
Node<Ring> Compose(const Ring& ring, const Node<Ring>& lower, const Node<Ring>& upper, int w) {
  std::vector<int> lower_edges, upper_edges, open;
  for (int i = 0; i < w; ++i) lower_edges.push_back(i);
  for (int i = 0; i < w; ++i) lower_edges.push_back(2 * w + i);
  for (int i = 0; i < w; ++i) upper_edges.push_back(2 * w + i);
  for (int i = 0; i < w; ++i) upper_edges.push_back(w + i);
  for (int i = 0; i < 2 * w; ++i) open.push_back(i);
  Contractor<Ring> c(ring, kMaxSupportedWidth);
  c.Absorb(Relabeled(lower, lower_edges));
  c.Absorb(Relabeled(upper, upper_edges));
  return c.ToNode(open);
}

template <class Ring>
Node<Ring> RegionNode(const Ring& ring, const LinkDiagram& d, const TwistRegion& reg) {
  const int w = static_cast<int>(reg.upward.size());
  Contractor<Ring> c(ring, kMaxSupportedWidth);
  for (int x : reg.blocks[0]) c.Absorb(CrossingNode<Ring>(d.crossings[x]));
  std::vector<int> open = reg.levels[0];
  open.insert(open.end(), reg.levels[1].begin(), reg.levels[1].end());
  std::vector<int> positional;
  for (int i = 0; i < 2 * w; ++i) positional.push_back(i);
  Node<Ring> base = Relabeled(c.ToNode(open), positional);

  Node<Ring> result;
  bool have = false;
  for (std::size_t e = reg.blocks.size(); e > 0; e >>= 1) {
    if (e & 1) {
      result = have ? Compose(ring, result, base, w) : base;
      have = true;
    }
    if (e > 1) base = Compose(ring, base, base, w);
  }
  std::vector<int> edges = reg.levels.front();
  edges.insert(edges.end(), reg.levels.back().begin(), reg.levels.back().end());
  return Relabeled(std::move(result), std::move(edges));
}

ContractionPlan ChooseUnitPlan(const std::vector<Unit>& units, PlanKind kind) {
  switch (kind) {
    case PlanKind::kSweep:
      return SweepUnits(units);
    case PlanKind::kGreedy:
      return GreedyUnits(units);
    case PlanKind::kAuto:
      break;
  }
  return BestUnits(units);
}

// Contraction units and their order. unit_source holds a crossing index, or
// -(region + 1) for a twist region absorbed as one node.
struct Schedule {
  std::vector<int> unit_source;
  std::vector<int> order;
  int width = 0;
};

Schedule MakeSchedule(const LinkDiagram& d, const EngineOptions& opts) {
  std::vector<int> region_of(d.crossings.size(), -1);
  std::vector<char> region_used(d.twist_regions.size(), 0);
  if (opts.use_twist_regions) {
    for (std::size_t i = 0; i < d.twist_regions.size(); ++i) {
      const TwistRegion& reg = d.twist_regions[i];
      const int w = static_cast<int>(reg.upward.size());
      if (reg.blocks.size() < 2 || w > opts.max_power_strands) continue;
      region_used[i] = 1;
      for (const auto& block : reg.blocks) {
        for (int x : block) region_of[x] = static_cast<int>(i);
      }
    }
  }

  // One unit per crossing outside the used regions, one per used region.
  std::vector<Unit> units;
  std::vector<int> unit_source;
  for (std::size_t x = 0; x < d.crossings.size(); ++x) {
    if (region_of[x] >= 0) continue;
    units.emplace_back(d.crossings[x].edges.begin(), d.crossings[x].edges.end());
    unit_source.push_back(static_cast<int>(x));
  }
  for (std::size_t i = 0; i < d.twist_regions.size(); ++i) {
    if (!region_used[i]) continue;
    Unit u = d.twist_regions[i].levels.front();
    u.insert(u.end(), d.twist_regions[i].levels.back().begin(),
             d.twist_regions[i].levels.back().end());
    units.push_back(std::move(u));
    unit_source.push_back(-static_cast<int>(i) - 1);
  }

  Schedule schedule;
  if (opts.plan != nullptr) {
    if (opts.plan->order.size() != d.crossings.size()) {
      throw InputError("contraction plan does not cover the diagram's crossings");
    }
    std::vector<int> index_of_crossing(d.crossings.size(), -1);
    std::vector<int> index_of_region(d.twist_regions.size(), -1);
    for (std::size_t u = 0; u < unit_source.size(); ++u) {
      if (unit_source[u] >= 0) {
        index_of_crossing[unit_source[u]] = static_cast<int>(u);
      } else {
        index_of_region[-unit_source[u] - 1] = static_cast<int>(u);
      }
    }
    std::vector<char> seen(units.size(), 0);
    for (int x : opts.plan->order) {
      const int u = region_of[x] >= 0 ? index_of_region[region_of[x]] : index_of_crossing[x];
      if (seen[u]) continue;
      seen[u] = 1;
      schedule.order.push_back(u);
    }
    schedule.width = UnitsFromOrder(units, "custom", schedule.order).max_width;
  } else {
    ContractionPlan plan = ChooseUnitPlan(units, opts.plan_kind);
    schedule.order = std::move(plan.order);
    schedule.width = plan.max_width;
  }
  schedule.unit_source = std::move(unit_source);
  return schedule;
}

}  // namespace

template <class Ring>
typename Ring::Value Evaluate(const Ring& ring, const LinkDiagram& d, const EngineOptions& opts) {
  int free_loops = 0;
  {
    std::unordered_map<int, int> count;
    for (const auto& c : d.crossings) {
      for (int e : c.edges) ++count[e];
    }
    for (const auto& comp : d.components) {
      bool touches = false;
      for (int e : comp) touches = touches || count.count(e);
      if (!touches) ++free_loops;
    }
  }
  const Schedule schedule = MakeSchedule(d, opts);
  const std::vector<int>& unit_source = schedule.unit_source;
  const std::vector<int>& order = schedule.order;
  const int needed = schedule.width;
  const int cap = std::min(opts.max_width, kMaxSupportedWidth);
  if (needed > cap) {
    throw BudgetError("contraction plan needs frontier width " + std::to_string(needed) +
                          ", limit is " + std::to_string(cap),
                      needed);
  }

  Contractor<Ring> c(ring, cap);
  for (int u : order) {
    const int src = unit_source[u];
    if (src >= 0) {
      c.Absorb(CrossingNode<Ring>(d.crossings[src]));
    } else {
      c.Absorb(RegionNode(ring, d, d.twist_regions[-src - 1]));
    }
  }
  typename Ring::Value v = c.Result();
  typename Ring::Value out = ring.Zero();
  ring.AddMonomial(out, v, 0, 1, free_loops);
  return out;
}

template LaurentPolynomial Evaluate(const LaurentRing&, const LinkDiagram&, const EngineOptions&);
template CyclotomicValue Evaluate(const CyclotomicRing&, const LinkDiagram&, const EngineOptions&);
template SmallCyclotomicRing::Value Evaluate(const SmallCyclotomicRing&, const LinkDiagram&,
                                             const EngineOptions&);
template std::complex<double> Evaluate(const ComplexRing&, const LinkDiagram&,
                                       const EngineOptions&);

}  // namespace internal

int ContractionWidth(const LinkDiagram& d, const EngineOptions& opts) {
  return internal::MakeSchedule(d, opts).width;
}

int EngineOptions::DefaultMaxWidth() {
  if (const char* env = std::getenv("JONESRT_MAX_WIDTH")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<int>(v);
  }
  return 32;
}

LaurentPolynomial BracketFast(const LinkDiagram& d, BracketNormalization norm,
                              const EngineOptions& opts) {
  LaurentPolynomial result = internal::Evaluate(internal::LaurentRing(), d, opts);
  if (norm.zero_framed) {
    const int w = Writhe(d);
    result = result.Shifted(-3 * w);
    if (w % 2 != 0) result = -result;
  }
  if (norm.reduced) {
    if (d.components.empty()) throw InputError("reduced bracket needs a nonempty link");
    auto q = result.DivideExact(LoopValue());
    if (!q) throw DomainError("bracket not divisible by the loop value");
    result = *q;
  }
  return result;
}

CyclotomicValue BracketAtRoot(const LinkDiagram& d, int r, const EngineOptions& opts) {
  if (internal::SmallCyclotomicRing::Supports(r)) {
    try {
      const internal::SmallCyclotomicRing small(r);
      return small.ToCyclotomic(internal::Evaluate(small, d, opts));
    } catch (const internal::SmallRingOverflow&) {
    }
  }
  return internal::Evaluate(internal::CyclotomicRing(r), d, opts);
}

std::complex<double> BracketAtRootFloat(const LinkDiagram& d, int r, const EngineOptions& opts) {
  return internal::Evaluate(internal::ComplexRing(r), d, opts);
}

int FramingCorrectionExponent(const LinkDiagram& d, bool framed) {
  const auto self = SelfWrithes(d);
  int m = 0;
  for (std::size_t i = 0; i < self.size(); ++i) m += (framed ? d.framings[i] : 0) - self[i];
  return m;
}

LaurentPolynomial UnreducedJones(const LinkDiagram& d, bool framed, const EngineOptions& opts) {
  const int m = FramingCorrectionExponent(d, framed);
  LaurentPolynomial raw = BracketFast(d, {}, opts).Shifted(3 * m);
  return (m % 2 != 0) ? -raw : raw;
}

CyclotomicValue UnreducedJonesAtRoot(const LinkDiagram& d, bool framed, int r,
                                     const EngineOptions& opts) {
  const int m = FramingCorrectionExponent(d, framed);
  CyclotomicValue raw = BracketAtRoot(d, r, opts);
  CyclotomicValue out = CyclotomicValue::Zero(r);
  out.AddRootPower(raw, 3L * m * RootExponent(r, Variable::kA), (m % 2 != 0) ? -1 : 1);
  return out;
}

std::complex<double> UnreducedJonesAtRootFloat(const LinkDiagram& d, bool framed, int r,
                                               const EngineOptions& opts) {
  const int m = FramingCorrectionExponent(d, framed);
  const std::complex<double> raw = BracketAtRootFloat(d, r, opts);
  const double angle = 2.0 * std::numbers::pi * 3.0 * m * RootExponent(r, Variable::kA) / (4.0 * r);
  const std::complex<double> factor = std::polar(1.0, angle) * ((m % 2 != 0) ? -1.0 : 1.0);
  return raw * factor;
}

}  // namespace jonesrt
