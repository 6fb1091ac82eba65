#include "arcdiag/canonical.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "arcdiag/error.hpp"

namespace arcdiag {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw Error("canonical: " + msg); }
}  // namespace

CanonicalOrder compute_canonical(const Triangulation& t) {
    const int n = t.vertex_count();
    auto [v1, v2, vn] = t.outer();
    CanonicalOrder o;
    o.order.assign(n, 0);
    o.contour_nbrs.assign(n + 1, {});

    // Contour of G_k as a path v1 .. v2, closed by the edge v1-v2.
    std::vector<int> prev(n + 1, 0), next(n + 1, 0), chords(n + 1, 0);
    std::vector<char> on(n + 1, 0), removed(n + 1, 0), fresh(n + 1, 0);
    prev[vn] = v1; next[v1] = vn; next[vn] = v2; prev[v2] = vn;
    on[v1] = on[v2] = on[vn] = 1;

    auto cyc_adjacent = [&](int a, int b) {
        if (next[a] == b || prev[a] == b) return true;
        return (a == v1 && b == v2) || (a == v2 && b == v1);
    };

    std::priority_queue<int, std::vector<int>, std::greater<>> eligible;
    eligible.push(vn);

    for (int k = n; k >= 3; --k) {
        int v = -1;
        while (!eligible.empty()) {
            int c = eligible.top();
            eligible.pop();
            if (on[c] && !removed[c] && chords[c] == 0 && c != v1 && c != v2) { v = c; break; }
        }
        if (v < 0) fail("no removable contour vertex at step " + std::to_string(k));
        o.order[k - 1] = v;
        int p = prev[v], s = next[v];

        // Split the rotation of v into the two sides between p and s.
        const auto& r = t.neighbors(v);
        const int d = static_cast<int>(r.size());
        int ip = static_cast<int>(std::find(r.begin(), r.end(), p) - r.begin());
        std::vector<int> side_fwd, side_bwd;
        for (int x = 1; x < d; ++x) {
            int w = r[(ip + x) % d];
            if (w == s) break;
            side_fwd.push_back(w);
        }
        for (int x = 1; x < d; ++x) {
            int w = r[(ip - x + d) % d];
            if (w == s) break;
            side_bwd.push_back(w);
        }
        auto has_removed = [&](const std::vector<int>& side) {
            return std::any_of(side.begin(), side.end(), [&](int w) { return removed[w] != 0; });
        };
        std::vector<int> inner;
        if (has_removed(side_fwd)) inner = side_bwd;
        else if (has_removed(side_bwd)) inner = side_fwd;
        else inner = side_fwd.empty() ? side_bwd : side_fwd;

        std::vector<int>& cn = o.contour_nbrs[k];
        cn.push_back(p);
        cn.insert(cn.end(), inner.begin(), inner.end());
        cn.push_back(s);

        removed[v] = 1;
        on[v] = 0;
        if (k == 3) break;
        if (inner.empty()) {
            next[p] = s;
            prev[s] = p;
            // p-s was a chord and is now a contour edge
            if (t.has_edge(p, s)) { --chords[p]; --chords[s]; }
        } else {
            int last = p;
            for (int w : inner) {
                next[last] = w;
                prev[w] = last;
                on[w] = 1;
                last = w;
            }
            next[last] = s;
            prev[s] = last;
            for (int w : inner) fresh[w] = 1;
            for (int w : inner) {
                for (int x : t.neighbors(w)) {
                    if (!on[x] || cyc_adjacent(w, x)) continue;
                    ++chords[w];
                    if (!fresh[x]) ++chords[x];
                }
            }
            for (int w : inner) fresh[w] = 0;
        }
        for (int w : inner) eligible.push(w);
        eligible.push(p);
        eligible.push(s);
    }
    o.order[0] = v1;
    o.order[1] = v2;
    return o;
}

std::string check_canonical(const Triangulation& t, const CanonicalOrder& o) {
    const int n = t.vertex_count();
    if (o.size() != n) return "order has " + std::to_string(o.size()) + " entries, expected " + std::to_string(n);
    std::vector<int> rank(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        int v = o.vertex(i);
        if (v < 1 || v > n || rank[v]) return "order is not a permutation";
        rank[v] = i;
    }
    int v1 = o.vertex(1), v2 = o.vertex(2), vn = o.vertex(n);
    if (!t.is_face(v1, v2, vn)) return "v1, v2, vn do not form the outer face";
    {
        std::array<int, 3> a{v1, v2, vn}, b = t.outer();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        if (a != b) return "v1, v2, vn differ from the declared outer face";
    }
    if (!o.contour_nbrs.empty() && static_cast<int>(o.contour_nbrs.size()) != n + 1)
        return "contour neighbor table has wrong size";

    // Contour as a linked path v1 .. v2.
    std::vector<int> next(n + 1, 0), prev(n + 1, 0);
    std::vector<char> on(n + 1, 0);
    next[v1] = v2; prev[v2] = v1;
    on[v1] = on[v2] = 1;
    for (int i = 3; i <= n; ++i) {
        int v = o.vertex(i);
        int cnt = 0, start = 0;
        for (int w : t.neighbors(v)) {
            if (rank[w] >= i) continue;
            ++cnt;
            if (!on[w]) return "v_" + std::to_string(i) + " attaches to a covered vertex";
            if (w == v1 || rank[prev[w]] >= i || !t.has_edge(prev[w], v)) start = w;
        }
        if (cnt < 2) return "v_" + std::to_string(i) + " has fewer than two earlier neighbors";
        // the earlier neighbors must be consecutive on the contour
        std::vector<int> path;
        for (int x = start; x != 0 && t.has_edge(x, v) && rank[x] < i; x = (x == v2 ? 0 : next[x]))
            path.push_back(x);
        if (static_cast<int>(path.size()) != cnt)
            return "earlier neighbors of v_" + std::to_string(i) + " are not consecutive on the contour";
        for (size_t k = 0; k + 1 < path.size(); ++k) {
            if (next[path[k]] != path[k + 1])
                return "earlier neighbors of v_" + std::to_string(i) + " are not consecutive on the contour";
            if (!t.is_face(path[k], path[k + 1], v))
                return "v_" + std::to_string(i) + " does not close faces with the contour";
        }
        if (!o.contour_nbrs.empty() && o.contour_nbrs[i] != path)
            return "stored contour neighbors of v_" + std::to_string(i) + " disagree";
        for (size_t k = 1; k + 1 < path.size(); ++k) on[path[k]] = 0;
        next[path.front()] = v; prev[v] = path.front();
        next[v] = path.back(); prev[path.back()] = v;
        on[v] = 1;
    }
    return {};
}

CanonicalOrder complete_order(const Triangulation& t, const std::vector<int>& order) {
    const int n = t.vertex_count();
    CanonicalOrder o;
    o.order = order;
    if (static_cast<int>(order.size()) != n) fail("order has wrong length");
    std::vector<int> rank(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        if (order[i] < 1 || order[i] > n || rank[order[i]]) fail("order is not a permutation");
        rank[order[i]] = i + 1;
    }
    o.contour_nbrs.assign(n + 1, {});
    std::vector<int> next(n + 1, 0), prev(n + 1, 0);
    std::vector<char> on(n + 1, 0);
    int v1 = order[0], v2 = order[1];
    next[v1] = v2; prev[v2] = v1;
    on[v1] = on[v2] = 1;
    for (int i = 3; i <= n; ++i) {
        int v = order[i - 1];
        int start = 0;
        for (int w : t.neighbors(v))
            if (rank[w] < i && on[w] && (w == v1 || !on[prev[w]] || !t.has_edge(prev[w], v))) start = w;
        std::vector<int> path;
        for (int x = start; x != 0 && t.has_edge(x, v); x = (x == v2 ? 0 : next[x])) path.push_back(x);
        if (path.size() < 2) fail("v_" + std::to_string(i) + " does not attach to the contour");
        o.contour_nbrs[i] = path;
        for (size_t k = 1; k + 1 < path.size(); ++k) on[path[k]] = 0;
        next[path.front()] = v; prev[v] = path.front();
        next[v] = path.back(); prev[path.back()] = v;
        on[v] = 1;
    }
    std::string err = check_canonical(t, o);
    if (!err.empty()) fail(err);
    return o;
}

Cover covers(const CanonicalOrder& o, int i) {
    if (i < 4 || i > o.size()) fail("covers() needs 4 <= i <= n");
    Cover c;
    const auto& nb = o.nbrs(i);
    for (size_t k = 0; k + 1 < nb.size(); ++k) c.edges.push_back({nb[k], nb[k + 1]});
    for (size_t k = 1; k + 1 < nb.size(); ++k) c.vertices.push_back(nb[k]);
    return c;
}

std::string serialize_order(const CanonicalOrder& o) {
    std::ostringstream out;
    for (int i = 0; i < o.size(); ++i) out << (i ? " " : "") << o.order[i];
    out << "\n";
    return out.str();
}

std::vector<int> parse_order(const std::string& text) {
    std::istringstream in(text);
    std::vector<int> v;
    std::string tok;
    while (in >> tok) {
        try {
            size_t used = 0;
            v.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            fail("bad order token '" + tok + "'");
        }
    }
    return v;
}

}  // namespace arcdiag
