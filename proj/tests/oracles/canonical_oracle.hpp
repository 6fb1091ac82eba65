#pragma once
// Literal check of the canonical ordering definition: every prefix graph,
// embedded with the restricted rotations, is 2-connected, has v1 v2 on its
// outer boundary and every other face is a face of the full triangulation.

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "arcdiag/triangulation.hpp"

namespace oracle {

inline bool two_connected(int n, const std::vector<std::vector<int>>& adj, const std::vector<char>& in) {
    std::vector<int> verts;
    for (int v = 1; v <= n; ++v)
        if (in[v]) verts.push_back(v);
    for (int cut = 0; cut <= static_cast<int>(verts.size()); ++cut) {
        int skip = cut < static_cast<int>(verts.size()) ? verts[cut] : 0;
        int start = verts[0] == skip ? verts[1] : verts[0];
        std::vector<char> seen(n + 1, 0);
        std::vector<int> st{start};
        seen[start] = 1;
        int cnt = 1;
        while (!st.empty()) {
            int x = st.back();
            st.pop_back();
            for (int y : adj[x])
                if (in[y] && y != skip && !seen[y]) seen[y] = 1, ++cnt, st.push_back(y);
        }
        if (cnt != static_cast<int>(verts.size()) - (skip ? 1 : 0)) return false;
    }
    return true;
}

inline bool canonical_by_definition(const arcdiag::Triangulation& t, const std::vector<int>& order) {
    const int n = t.vertex_count();
    if (static_cast<int>(order.size()) != n) return false;
    std::vector<int> seen(n + 1, 0);
    for (int v : order) {
        if (v < 1 || v > n || seen[v]) return false;
        seen[v] = 1;
    }
    const int v1 = order[0], v2 = order[1];
    {
        std::array<int, 3> a{v1, v2, order[n - 1]}, b = t.outer();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return false;
    }
    std::vector<std::vector<int>> adj(n + 1);
    for (int v = 1; v <= n; ++v) adj[v] = t.neighbors(v);
    std::vector<char> in(n + 1, 0);
    in[v1] = in[v2] = 1;
    // outer side of v1 v2: the full outer face is traced through one of the
    // two darts; that dart stays on the outer face of every prefix
    auto preceding = [&](int v, int u) {
        const auto& r = adj[v];
        int i = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
        return r[(i + r.size() - 1) % r.size()];
    };
    const int od_from = preceding(v2, v1) == order[n - 1] ? v1 : v2, od_to = od_from == v1 ? v2 : v1;
    for (int k = 3; k <= n; ++k) {
        in[order[k - 1]] = 1;
        if (!two_connected(n, adj, in)) return false;
        auto next_dart = [&](int u, int v) {
            // w precedes u in the restricted rotation of v
            const auto& r = adj[v];
            int i = static_cast<int>(std::find(r.begin(), r.end(), u) - r.begin());
            const int d = static_cast<int>(r.size());
            for (int s = 1; s <= d; ++s) {
                int w = r[(i - s + d) % d];
                if (in[w]) return w;
            }
            return -1;
        };
        std::set<std::pair<int, int>> used;
        bool found_outer = false;
        for (int u = 1; u <= n; ++u) {
            if (!in[u]) continue;
            for (int v : adj[u]) {
                if (!in[v] || used.count({u, v})) continue;
                std::vector<int> face;
                int a = u, b = v;
                bool outer = false;
                while (!used.count({a, b})) {
                    used.insert({a, b});
                    if (a == od_from && b == od_to) outer = true;
                    face.push_back(a);
                    int c = next_dart(a, b);
                    a = b, b = c;
                }
                if (outer) {
                    found_outer = true;
                    std::vector<int> f = face;
                    std::sort(f.begin(), f.end());
                    if (std::adjacent_find(f.begin(), f.end()) != f.end()) return false;  // boundary not a cycle
                } else if (face.size() != 3 || !t.is_face(face[0], face[1], face[2])) {
                    return false;
                }
            }
        }
        if (!found_outer) return false;
    }
    return true;
}

}  // namespace oracle
