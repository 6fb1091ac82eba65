#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/triangulation.hpp"

namespace arcdiag {

enum class Page { Above, Below };
enum class Shape { Pocket, Mountain, DownUp, UpDown };

// Page of the left halfcircle of a down-up biarc.  Flipping this constant
// swaps the meaning of the two biarc names everywhere.
inline constexpr Page kDownUpLeftPage = Page::Below;

inline constexpr Page other(Page p) { return p == Page::Above ? Page::Below : Page::Above; }
inline constexpr bool is_biarc(Shape s) { return s == Shape::DownUp || s == Shape::UpDown; }
inline constexpr Page left_page(Shape s) {
    switch (s) {
        case Shape::Pocket: return Page::Below;
        case Shape::Mountain: return Page::Above;
        case Shape::DownUp: return kDownUpLeftPage;
        case Shape::UpDown: return other(kDownUpLeftPage);
    }
    return Page::Above;
}
inline constexpr Shape biarc_with_left_page(Page p) {
    return p == kDownUpLeftPage ? Shape::DownUp : Shape::UpDown;
}
const char* shape_name(Shape s);
std::optional<Shape> parse_shape(const std::string& s);

struct SpineItem {
    enum Kind { Vertex, Crossing };
    Kind kind;
    int id;  // vertex id, or index of the arc whose crossing this is
    bool operator==(const SpineItem&) const = default;
};

struct Arc {
    int u, v;          // endpoints, u left of v on the spine
    Shape shape;
    int crossing = -1; // spine index of the crossing for biarcs
};

struct ArcDiagram {
    std::vector<SpineItem> spine;
    std::vector<Arc> arcs;
};

struct Halfcircle {
    int a, b;  // spine indices, a < b
    Page page;
    int arc;   // owning arc
};

// Same page, four distinct endpoints, strictly interleaved.
bool halfcircles_cross(const Halfcircle& h1, const Halfcircle& h2);

// Throws Error if spine/arcs are inconsistent (unknown vertices, crossing
// items not owned by exactly one biarc, endpoint order).
void check_well_formed(const ArcDiagram& d);
// Also requires the arcs to be exactly the edges of t.
void check_draws(const ArcDiagram& d, const Triangulation& t);

std::vector<Halfcircle> halfcircles(const ArcDiagram& d);

struct PlaneReport {
    bool ok = true;
    std::vector<std::pair<int, int>> crossing_arcs;  // pairs of arc indices
};
// O(H log H) sweep; the full pair list is only enumerated on failure.
PlaneReport verify_plane(const ArcDiagram& d);

bool verify_monotone(const ArcDiagram& d, const std::vector<Shape>& allowed_biarcs = {Shape::DownUp});
int count_biarcs(const ArcDiagram& d);

// Reverses the spine.  Down-up and up-down biarcs swap.
ArcDiagram mirror(const ArcDiagram& d);

std::string serialize_diagram(const ArcDiagram& d);
ArcDiagram parse_diagram(const std::string& text);

}  // namespace arcdiag
