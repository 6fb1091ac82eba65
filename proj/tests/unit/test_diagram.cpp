#include <doctest.h>

#include <random>

#include "../oracles/semicircle_oracle.hpp"
#include "../support/random_diagram.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/error.hpp"

using namespace arcdiag;

namespace {
ArcDiagram parse(const char* s) { return parse_diagram(s); }
}  // namespace

TEST_CASE("nested mountains are plane, interleaved ones are not") {
    ArcDiagram ok = parse("spine: v1 v2 v3 v4\narc 1 4 mountain\narc 2 3 mountain\n");
    CHECK(verify_plane(ok).ok);
    ArcDiagram bad = parse("spine: v1 v2 v3 v4\narc 1 3 mountain\narc 2 4 mountain\n");
    auto rep = verify_plane(bad);
    CHECK_FALSE(rep.ok);
    REQUIRE(rep.crossing_arcs.size() == 1);
    CHECK(rep.crossing_arcs[0] == std::pair<int, int>{0, 1});
    // same pattern split across pages is fine
    ArcDiagram split = parse("spine: v1 v2 v3 v4\narc 1 3 mountain\narc 2 4 pocket\n");
    CHECK(verify_plane(split).ok);
}

TEST_CASE("shared endpoints never cross") {
    ArcDiagram d = parse("spine: v1 v2 v3\narc 1 2 mountain\narc 2 3 mountain\narc 1 3 mountain\n");
    CHECK(verify_plane(d).ok);
}

TEST_CASE("biarc halves use the down-up convention") {
    ArcDiagram d = parse("spine: v1 x0 v2\narc 1 2 down-up cross=1\n");
    auto hs = halfcircles(d);
    REQUIRE(hs.size() == 2);
    CHECK(hs[0].a == 0);
    CHECK(hs[0].b == 1);
    CHECK(hs[0].page == Page::Below);
    CHECK(hs[1].page == Page::Above);
    CHECK(verify_monotone(d));
    CHECK(count_biarcs(d) == 1);
    ArcDiagram m = mirror(d);
    CHECK(m.arcs[0].shape == Shape::UpDown);
    CHECK_FALSE(verify_monotone(m));
    CHECK(verify_monotone(m, {Shape::UpDown}));
}

TEST_CASE("crossing outside the endpoints is not monotone") {
    ArcDiagram d = parse("spine: x0 v1 v2\narc 1 2 down-up cross=0\n");
    CHECK(verify_plane(d).ok);
    CHECK_FALSE(verify_monotone(d));
}

TEST_CASE("well-formedness errors") {
    CHECK_THROWS_AS(parse("spine: v1 v1\n"), Error);
    CHECK_THROWS_AS(check_well_formed(parse("spine: v1 v2\narc 2 1 mountain\n")), Error);
    CHECK_THROWS_AS(check_well_formed(parse("spine: v1 v2 x0\narc 1 2 mountain\n")), Error);
    CHECK_THROWS_AS(check_well_formed(parse("spine: v1 v2\narc 1 2 down-up cross=1\n")), Error);
    CHECK_THROWS_AS(check_well_formed(parse("spine: v1 v2\narc 1 2 mountain\narc 1 2 pocket\n")), Error);
    CHECK_THROWS_AS(parse("spine: v1 v2\narc 1 2 sideways\n"), Error);
}

TEST_CASE("check_draws compares against the graph") {
    Triangulation t = k4();
    ArcDiagram d = parse(
        "spine: v1 v2 v3 v4\narc 1 2 pocket\narc 2 3 pocket\narc 3 4 pocket\n"
        "arc 1 3 mountain\narc 1 4 mountain\narc 2 4 pocket\n");
    CHECK_NOTHROW(check_draws(d, t));
    d.arcs.pop_back();
    CHECK_THROWS_AS(check_draws(d, t), Error);
}


TEST_CASE("verify_plane agrees with the semicircle oracle") {
    std::mt19937 rng(2024);
    int plane = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        ArcDiagram d = support::random_diagram(rng, 6);
        auto rep = verify_plane(d);
        auto ref = oracle::check(d);
        CHECK(rep.ok == ref.plane);
        if (!ref.plane) CHECK(std::set<std::pair<int, int>>(rep.crossing_arcs.begin(), rep.crossing_arcs.end()) == ref.pairs);
        plane += ref.plane;
    }
    CHECK(plane > 100);
}

TEST_CASE("oracle geometry sanity") {
    using oracle::Semi;
    CHECK(oracle::semis_intersect({0, 2, true, 0}, {1, 3, true, 1}));
    CHECK_FALSE(oracle::semis_intersect({0, 3, true, 0}, {1, 2, true, 1}));
    CHECK_FALSE(oracle::semis_intersect({0, 1, true, 0}, {1, 2, true, 1}));
    CHECK_FALSE(oracle::semis_intersect({0, 2, true, 0}, {1, 3, false, 1}));
    CHECK_FALSE(oracle::semis_intersect({0, 2, true, 0}, {0, 3, true, 1}));
}

TEST_CASE("mirror is an involution and preserves planarity") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 300; ++trial) {
        ArcDiagram d = support::random_diagram(rng, 7);
        ArcDiagram mm = mirror(mirror(d));
        CHECK(serialize_diagram(mm) == serialize_diagram(d));
        CHECK(verify_plane(mirror(d)).ok == verify_plane(d).ok);
    }
}

TEST_CASE("diagram text round trip") {
    std::mt19937 rng(9);
    for (int trial = 0; trial < 200; ++trial) {
        ArcDiagram d = support::random_diagram(rng, 7);
        std::string s = serialize_diagram(d);
        CHECK(serialize_diagram(parse_diagram(s)) == s);
    }
}
