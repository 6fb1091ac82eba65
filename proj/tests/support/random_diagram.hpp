#pragma once
// Random, well-formed (not necessarily plane) arc diagrams with arbitrary
// shapes and crossing positions.

#include <algorithm>
#include <random>
#include <utility>
#include <vector>

#include "arcdiag/diagram.hpp"

namespace support {

using namespace arcdiag;

inline arcdiag::ArcDiagram random_diagram(std::mt19937& rng, int max_vertices) {
    std::uniform_int_distribution<int> nv(2, max_vertices);
    const int n = nv(rng);
    std::vector<int> ids(n);
    for (int i = 0; i < n; ++i) ids[i] = i + 1;
    std::shuffle(ids.begin(), ids.end(), rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (rng() % 2) pairs.push_back({i, j});
    // spine as a list of labels: vertex ids > 0, crossing of arc a as -(a + 1)
    std::vector<int> spine(ids.begin(), ids.end());
    std::vector<Shape> shapes;
    for (size_t a = 0; a < pairs.size(); ++a) {
        Shape s = static_cast<Shape>(rng() % 4);
        shapes.push_back(s);
        if (is_biarc(s)) {
            std::uniform_int_distribution<size_t> at(0, spine.size());
            spine.insert(spine.begin() + at(rng), -static_cast<int>(a) - 1);
        }
    }
    ArcDiagram d;
    std::vector<int> pos(n + 1);
    for (size_t k = 0; k < spine.size(); ++k) {
        if (spine[k] > 0) {
            d.spine.push_back({SpineItem::Vertex, spine[k]});
            pos[spine[k]] = static_cast<int>(k);
        } else {
            d.spine.push_back({SpineItem::Crossing, -spine[k] - 1});
        }
    }
    for (size_t a = 0; a < pairs.size(); ++a) {
        auto [u, v] = pairs[a];
        if (pos[u] > pos[v]) std::swap(u, v);
        int cross = -1;
        for (size_t k = 0; k < spine.size(); ++k)
            if (spine[k] == -static_cast<int>(a) - 1) cross = static_cast<int>(k);
        d.arcs.push_back({u, v, shapes[a], cross});
    }
    return d;
}

}  // namespace support
