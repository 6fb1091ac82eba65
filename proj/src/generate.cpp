#include "arcdiag/generate.hpp"

#include <algorithm>
#include <random>

#include "arcdiag/error.hpp"

namespace arcdiag {

namespace {

// Unbiased draw in [0, bound) straight from the engine so results do not
// depend on the standard library's distribution implementation.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    while (true) {
        std::uint64_t x = rng();
        if (x < limit) return x % bound;
    }
}

struct Grower {
    int n;
    std::vector<std::vector<int>> rot;
    std::vector<int> contour;  // v1 .. v2
    CanonicalOrder order;

    explicit Grower(int n_) : n(n_), rot(n_ + 1) {
        // v1 bottom left, v2 bottom right, v3 on top
        rot[1] = {2, 3};
        rot[2] = {3, 1};
        rot[3] = {1, 2};
        contour = {1, 3, 2};
        order.order = {1, 2, 3};
        order.contour_nbrs.assign(n_ + 1, {});
        order.contour_nbrs[3] = {1, 2};
    }

    static void insert_after(std::vector<int>& r, int after, int x) {
        r.insert(std::find(r.begin(), r.end(), after) + 1, x);
    }
    static void insert_before(std::vector<int>& r, int before, int x) {
        r.insert(std::find(r.begin(), r.end(), before), x);
    }

    void add(int v, int start, int len) {
        std::vector<int> path(contour.begin() + start, contour.begin() + start + len);
        rot[v] = path;  // counterclockwise from the left end through the bottom
        insert_after(rot[path[0]], path[1], v);
        for (int k = 1; k < len; ++k) insert_before(rot[path[k]], path[k - 1], v);
        order.order.push_back(v);
        order.contour_nbrs[v] = path;
        contour.erase(contour.begin() + start + 1, contour.begin() + start + len - 1);
        contour.insert(contour.begin() + start + 1, v);
    }

    Generated finish() {
        Triangulation t = Triangulation::from_rotations(n, std::move(rot), {1, 2, n});
        return {std::move(t), std::move(order)};
    }
};

}  // namespace

Generated grow(int n, const std::vector<std::pair<int, int>>& chains) {
    if (n < 3) throw Error("graph: generate needs n >= 3");
    if (static_cast<int>(chains.size()) != std::max(0, n - 4))
        throw Error("graph: grow needs one chain per vertex v_4 .. v_{n-1}");
    Grower g(n);
    for (int v = 4; v < n; ++v) {
        auto [start, len] = chains[v - 4];
        int size = static_cast<int>(g.contour.size());
        if (start < 0 || len < 2 || start + len > size) throw Error("graph: chain out of range");
        g.add(v, start, len);
    }
    if (n >= 4) g.add(n, 0, static_cast<int>(g.contour.size()));
    return g.finish();
}

Generated generate(int n, std::uint64_t seed, GenKind kind) {
    if (n < 4) throw Error("graph: generate needs n >= 4");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<int, int>> chains;
    int size = 3;
    for (int v = 4; v < n; ++v) {
        int start = static_cast<int>(below(rng, size - 1));
        int len = 2;
        while (rng() & 1) ++len;
        len = std::min(len, size - start);
        chains.push_back({start, len});
        size += 3 - len;  // interior of the chain leaves, v joins
    }
    Generated base = grow(n, chains);
    if (kind == GenKind::Growth) return base;
    Triangulation k = kleetope(base.graph);
    CanonicalOrder o = compute_canonical(k);
    return {std::move(k), std::move(o)};
}

Generated stacked_degree2(int k) {
    if (k < 1) throw Error("graph: stacked family needs k >= 1");
    std::vector<std::pair<int, int>> chains{{0, 3}};
    for (int j = 0; j < k; ++j) chains.push_back({j, 2});
    chains.push_back({k + 1, 2});
    return grow(k + 6, chains);
}

Triangulation k4() { return grow(4, {}).graph; }

Triangulation triangular_bipyramid() { return grow(5, {{0, 2}}).graph; }

Triangulation octahedron() { return grow(6, {{1, 2}, {0, 3}}).graph; }

Triangulation goldner_harary() { return kleetope(triangular_bipyramid()); }

}  // namespace arcdiag
