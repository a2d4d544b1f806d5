#ifndef JONESRT_SRC_PLAN_INTERNAL_H_
#define JONESRT_SRC_PLAN_INTERNAL_H_

#include <vector>

#include "jonesrt/skein.h"

namespace jonesrt::internal {

// A contraction unit: the edge ids incident to one node, with repeats.
using Unit = std::vector<int>;

// Orders over units instead of crossings. `order` indexes `units`.
ContractionPlan SweepUnits(const std::vector<Unit>& units);
ContractionPlan GreedyUnits(const std::vector<Unit>& units);
ContractionPlan BestUnits(const std::vector<Unit>& units);
// Widths along a fixed unit order.
ContractionPlan UnitsFromOrder(const std::vector<Unit>& units, std::string strategy,
                               std::vector<int> order);

}  // namespace jonesrt::internal

#endif  // JONESRT_SRC_PLAN_INTERNAL_H_
