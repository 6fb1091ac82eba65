#pragma once

#include <string>
#include <utility>
#include <vector>

#include "arcdiag/triangulation.hpp"

namespace arcdiag {

// order[0..n-1] = v_1..v_n.  contour_nbrs[i] (1-based i, entries for i >= 3)
// lists the neighbors of v_i in G_{i-1} along the contour from the v_1 side
// to the v_2 side.
struct CanonicalOrder {
    std::vector<int> order;
    std::vector<std::vector<int>> contour_nbrs;

    int size() const { return static_cast<int>(order.size()); }
    int vertex(int i) const { return order[i - 1]; }  // 1-based
    const std::vector<int>& nbrs(int i) const { return contour_nbrs[i]; }
};

// Peeling from v_n downward; among eligible vertices the lowest id goes first.
CanonicalOrder compute_canonical(const Triangulation& t);

// Independent forward simulation.  Returns an empty string when valid,
// otherwise a description of the first violation.  When contour_nbrs is
// non-empty it must agree with the simulation.
std::string check_canonical(const Triangulation& t, const CanonicalOrder& o);
inline bool verify_canonical(const Triangulation& t, const CanonicalOrder& o) {
    return check_canonical(t, o).empty();
}

// Rebuilds contour_nbrs for a bare vertex order (throws on invalid order).
CanonicalOrder complete_order(const Triangulation& t, const std::vector<int>& order);

struct Cover {
    std::vector<std::pair<int, int>> edges;  // consecutive contour pairs, left to right
    std::vector<int> vertices;               // interior of the covered path
};
// Valid for 4 <= i <= n.
Cover covers(const CanonicalOrder& o, int i);

std::string serialize_order(const CanonicalOrder& o);
std::vector<int> parse_order(const std::string& text);

}  // namespace arcdiag
