#pragma once

#include <optional>
#include <vector>

#include "arcdiag/frame_drawing.hpp"

namespace arcdiag::drawer {

struct PlaceVertex {
    int v;
    std::vector<int> nbrs;  // contour neighbors at insertion time, frame order
};

// Standard placement of one vertex over its contour neighbors: into the
// rightmost covered pocket if there is one, otherwise right after the left
// end of the leftmost (degree < 4) or rightmost (degree >= 4) covered
// mountain, which is pushed down.
Planned plan_default(const FrameDrawing& d, const PlaceVertex& pv);

// Recomputes p.delta from the current drawing.
void evaluate(const FrameDrawing& d, Planned& p);

struct SearchStats {
    long long skeletons = 0, nodes = 0;
};

// Cheapest crossing-free joint placement of the vertices in S (insertion
// order) over the current contour, or nothing if none was found within the
// node budget.
std::optional<Planned> plan_search(const FrameDrawing& d, const std::vector<PlaceVertex>& S,
                                   SearchStats* stats = nullptr, long long node_budget = 400000);

// Consistency check of a plan against the current drawing; empty when the
// plan is crossing-free and keeps the contour envelope.
std::string check_plan(const FrameDrawing& d, const Planned& p);

}  // namespace arcdiag::drawer
