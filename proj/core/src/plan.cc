#include <algorithm>
#include <string>
#include <unordered_map>

#include "jonesrt/errors.h"
#include "jonesrt/skein.h"
#include "json_internal.h"
#include "plan_internal.h"

namespace jonesrt {
namespace internal {
namespace {

// Tracks how many endpoints of each edge have been absorbed.
class FrontierCounter {
 public:
  explicit FrontierCounter(const std::vector<Unit>& units) : units_(units) {
    for (const auto& u : units) {
      for (int e : u) ++total_[e];
    }
  }

  // Width change if unit x were absorbed next.
  int Delta(int x) const {
    int delta = 0;
    const Unit& edges = units_[x];
    const int n = static_cast<int>(edges.size());
    for (int s = 0; s < n; ++s) {
      const int e = edges[s];
      bool dup_earlier = false;
      for (int t = 0; t < s; ++t) dup_earlier = dup_earlier || edges[t] == e;
      if (dup_earlier) continue;
      int here = 0;
      for (int t = 0; t < n; ++t) here += edges[t] == e ? 1 : 0;
      auto it = seen_.find(e);
      const int before = it == seen_.end() ? 0 : it->second;
      const int after = before + here;
      const int total = total_.at(e);
      delta += (after > 0 && after < total ? 1 : 0) - (before > 0 && before < total ? 1 : 0);
    }
    return delta;
  }

  int Consumed(int x) const {
    int n = 0;
    for (int e : units_[x]) {
      auto it = seen_.find(e);
      if (it != seen_.end() && it->second > 0) ++n;
    }
    return n;
  }

  void Absorb(int x) {
    width_ += Delta(x);
    for (int e : units_[x]) ++seen_[e];
  }
  int width() const { return width_; }

 private:
  const std::vector<Unit>& units_;
  std::unordered_map<int, int> total_;
  std::unordered_map<int, int> seen_;
  int width_ = 0;
};

std::vector<Unit> CrossingUnits(const LinkDiagram& d) {
  std::vector<Unit> units;
  for (const auto& c : d.crossings) units.emplace_back(c.edges.begin(), c.edges.end());
  return units;
}

}  // namespace

ContractionPlan UnitsFromOrder(const std::vector<Unit>& units, std::string strategy,
                               std::vector<int> order) {
  ContractionPlan plan;
  plan.strategy = std::move(strategy);
  FrontierCounter counter(units);
  for (int x : order) {
    counter.Absorb(x);
    plan.widths.push_back(counter.width());
    plan.max_width = std::max(plan.max_width, counter.width());
  }
  plan.order = std::move(order);
  return plan;
}

ContractionPlan SweepUnits(const std::vector<Unit>& units) {
  std::vector<int> order(units.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  return UnitsFromOrder(units, "sweep", std::move(order));
}

ContractionPlan GreedyUnits(const std::vector<Unit>& units) {
  const int n = static_cast<int>(units.size());
  FrontierCounter counter(units);
  std::vector<char> done(n, 0);
  std::vector<int> order;
  for (int step = 0; step < n; ++step) {
    int best = -1, best_delta = 0, best_consumed = 0;
    for (int x = 0; x < n; ++x) {
      if (done[x]) continue;
      const int delta = counter.Delta(x);
      const int consumed = counter.Consumed(x);
      if (best < 0 || delta < best_delta || (delta == best_delta && consumed > best_consumed)) {
        best = x;
        best_delta = delta;
        best_consumed = consumed;
      }
    }
    done[best] = 1;
    counter.Absorb(best);
    order.push_back(best);
  }
  return UnitsFromOrder(units, "greedy", std::move(order));
}

ContractionPlan BestUnits(const std::vector<Unit>& units) {
  ContractionPlan sweep = SweepUnits(units);
  ContractionPlan greedy = GreedyUnits(units);
  return greedy.max_width < sweep.max_width ? greedy : sweep;
}

}  // namespace internal

ContractionPlan SweepPlan(const LinkDiagram& d) {
  return internal::SweepUnits(internal::CrossingUnits(d));
}

ContractionPlan GreedyPlan(const LinkDiagram& d) {
  return internal::GreedyUnits(internal::CrossingUnits(d));
}

ContractionPlan BestPlan(const LinkDiagram& d) {
  return internal::BestUnits(internal::CrossingUnits(d));
}

std::string PlanToJson(const ContractionPlan& plan) {
  internal::Json j;
  j["strategy"] = plan.strategy;
  j["order"] = plan.order;
  j["widths"] = plan.widths;
  j["max_width"] = plan.max_width;
  return j.dump() + "\n";
}

ContractionPlan PlanFromJson(std::string_view text, const LinkDiagram& d) {
  internal::Json j = internal::ParseJsonText(text);
  if (!j.is_object() || !j.contains("order") || !j["order"].is_array()) {
    throw InputError("plan: expected an object with an \"order\" array");
  }
  std::vector<int> order;
  std::vector<char> used(d.crossings.size(), 0);
  for (const auto& v : j["order"]) {
    if (!v.is_number_integer()) throw InputError("plan: order entries must be integers");
    const long x = v.get<long>();
    if (x < 0 || x >= static_cast<long>(d.crossings.size()) || used[x]) {
      throw InputError("plan: order is not a permutation of the crossings");
    }
    used[x] = 1;
    order.push_back(static_cast<int>(x));
  }
  if (order.size() != d.crossings.size()) {
    throw InputError("plan: order is not a permutation of the crossings");
  }
  std::string strategy = j.contains("strategy") && j["strategy"].is_string()
                             ? j["strategy"].get<std::string>()
                             : std::string("custom");
  return internal::UnitsFromOrder(internal::CrossingUnits(d), std::move(strategy),
                                  std::move(order));
}

}  // namespace jonesrt
