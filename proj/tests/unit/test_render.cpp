#include <doctest.h>

#include <fstream>
#include <sstream>

#include "arcdiag/drawer.hpp"
#include "arcdiag/error.hpp"
#include "arcdiag/generate.hpp"
#include "arcdiag/render.hpp"

using namespace arcdiag;

TEST_CASE("single mountain is one upper semicircle of radius spacing") {
    ArcDiagram d = parse_diagram("spine: v1 v2 v3\narc 1 3 mountain\n");
    RenderStyle s;
    s.spacing = 10;
    s.labels = false;
    std::string svg = to_svg(d, s);
    // margin 10, spine at y = 10 + 10
    CHECK(svg.find("d=\"M 10 20 A 10 10 0 0 1 30 20\"") != std::string::npos);
}

TEST_CASE("down-up biarc is a lower then an upper semicircle") {
    ArcDiagram d = parse_diagram("spine: v1 x0 v2\narc 1 2 down-up cross=1\n");
    RenderStyle s;
    s.spacing = 10;
    std::string svg = to_svg(d, s);
    CHECK(svg.find("d=\"M 10 15 A 5 5 0 0 0 20 15 A 5 5 0 0 1 30 15\"") != std::string::npos);
    CHECK(svg.find("<line x1=\"20\"") != std::string::npos);  // crossing tick
}

TEST_CASE("odd spans keep exact half-unit radii") {
    ArcDiagram d = parse_diagram("spine: v1 v2\narc 1 2 pocket\n");
    RenderStyle s;
    s.spacing = 7;
    CHECK(to_svg(d, s).find("A 3.5 3.5 0 0 0 14 ") != std::string::npos);
}

TEST_CASE("empty diagram renders the spine only") {
    std::string svg = to_svg(ArcDiagram{});
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(svg.find("<path") == std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("style validation") {
    ArcDiagram d;
    RenderStyle s;
    s.spacing = 0;
    CHECK_THROWS_AS(to_svg(d, s), Error);
    s = {};
    s.biarc_color = "red";
    CHECK_THROWS_AS(to_svg(d, s), Error);
    s.biarc_color = "#abc";
    CHECK_NOTHROW(to_svg(d, s));
}

TEST_CASE("golden SVG of the stacked family drawing") {
    Generated g = stacked_degree2(3);
    std::string svg = to_svg(drawer::draw(g.graph, g.order).diagram);
    CHECK(svg == to_svg(drawer::draw(g.graph, g.order).diagram));
    std::ifstream in(ARCDIAG_SOURCE_DIR "/tests/golden/stacked3.svg");
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(svg == ss.str());
}
