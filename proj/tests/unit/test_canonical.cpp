#include <doctest.h>

#include <algorithm>
#include <random>

#include "../oracles/canonical_oracle.hpp"
#include "arcdiag/canonical.hpp"
#include "arcdiag/error.hpp"
#include "arcdiag/generate.hpp"

using namespace arcdiag;

TEST_CASE("computed orders satisfy the definition") {
    for (int n = 4; n <= 10; ++n)
        for (int seed = 0; seed < 30; ++seed) {
            Triangulation t = generate(n, seed).graph;
            CanonicalOrder o = compute_canonical(t);
            CHECK(check_canonical(t, o) == "");
            CHECK(oracle::canonical_by_definition(t, o.order));
        }
    for (const auto& t : {octahedron(), goldner_harary(), kleetope(octahedron())}) {
        CanonicalOrder o = compute_canonical(t);
        CHECK(oracle::canonical_by_definition(t, o.order));
    }
}

TEST_CASE("checker agrees with the definition on all permutations") {
    // every permutation of the inner vertices with each choice of v1 v2 vn
    for (int n = 4; n <= 7; ++n)
        for (int seed = 0; seed < 3; ++seed) {
            Triangulation t = generate(n, seed).graph;
            auto out = t.outer();
            std::array<int, 3> ext = out;
            std::sort(ext.begin(), ext.end());
            int valid = 0;
            do {
                std::vector<int> inner;
                for (int v = 1; v <= n; ++v)
                    if (v != ext[0] && v != ext[1] && v != ext[2]) inner.push_back(v);
                std::sort(inner.begin(), inner.end());
                do {
                    std::vector<int> order{ext[0], ext[1]};
                    order.insert(order.end(), inner.begin(), inner.end());
                    order.push_back(ext[2]);
                    CanonicalOrder o;
                    o.order = order;
                    bool lib = check_canonical(t, o).empty();
                    bool ref = oracle::canonical_by_definition(t, order);
                    CHECK(lib == ref);
                    valid += ref;
                } while (std::next_permutation(inner.begin(), inner.end()));
            } while (std::next_permutation(ext.begin(), ext.end()));
            CHECK(valid > 0);
        }
}

TEST_CASE("random orders agree with the definition at n = 10") {
    std::mt19937 rng(11);
    for (int seed = 0; seed < 10; ++seed) {
        Triangulation t = generate(10, seed).graph;
        CanonicalOrder base = compute_canonical(t);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> order = base.order;
            // swap two inner positions, sometimes producing a valid order
            std::uniform_int_distribution<int> pick(2, 8);
            std::swap(order[pick(rng)], order[pick(rng)]);
            CanonicalOrder o;
            o.order = order;
            CHECK(check_canonical(t, o).empty() == oracle::canonical_by_definition(t, order));
        }
    }
}

TEST_CASE("complete_order rebuilds contour neighbors") {
    Triangulation t = generate(30, 5).graph;
    CanonicalOrder o = compute_canonical(t);
    CanonicalOrder c = complete_order(t, o.order);
    CHECK(c.contour_nbrs == o.contour_nbrs);
    std::vector<int> bad = o.order;
    std::swap(bad[0], bad[5]);
    CHECK_THROWS_AS(complete_order(t, bad), Error);
}

TEST_CASE("covers list the interior of the covered path") {
    Triangulation t = octahedron();
    CanonicalOrder o = compute_canonical(t);
    for (int i = 4; i <= 6; ++i) {
        Cover c = covers(o, i);
        const auto& nb = o.nbrs(i);
        CHECK(c.vertices.size() + 2 == nb.size());
        CHECK(c.edges.size() + 1 == nb.size());
    }
}

TEST_CASE("order text round trip") {
    CanonicalOrder o = compute_canonical(goldner_harary());
    CHECK(parse_order(serialize_order(o)) == o.order);
}
