#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "arcdiag/canonical.hpp"
#include "arcdiag/triangulation.hpp"

namespace arcdiag {

enum class GenKind { Growth, KleetopeOfGrowth };

struct Generated {
    Triangulation graph;
    CanonicalOrder order;  // certificate; valid for graph
};

// Random triangulation grown along a canonical ordering.  Each new vertex
// covers a contour path starting at a uniformly random position with
// 2 + Geometric(1/2) vertices (truncated at v_2); the last vertex covers the
// whole contour.  Vertices are numbered in insertion order.  For
// KleetopeOfGrowth the base graph has n vertices and the result 3n-4.
Generated generate(int n, std::uint64_t seed, GenKind kind = GenKind::Growth);

// Deterministic growth: chains[i] = (start index on the contour, number of
// contour vertices covered) for v_4 .. v_{n-1}; v_n covers everything.
Generated grow(int n, const std::vector<std::pair<int, int>>& chains);

// Family with one spanning vertex over the base triangle, k degree-2
// vertices stacked along the left mountain chain and one degree-2 vertex on
// the right; n = k + 6.  The forward drawing needs k biarcs, the reverse one.
Generated stacked_degree2(int k);

}  // namespace arcdiag
