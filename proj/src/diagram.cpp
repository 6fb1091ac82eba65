#include "arcdiag/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "arcdiag/error.hpp"

namespace arcdiag {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw Error("diagram: " + msg); }
}  // namespace

const char* shape_name(Shape s) {
    switch (s) {
        case Shape::Pocket: return "pocket";
        case Shape::Mountain: return "mountain";
        case Shape::DownUp: return "down-up";
        case Shape::UpDown: return "up-down";
    }
    return "?";
}

std::optional<Shape> parse_shape(const std::string& s) {
    if (s == "pocket") return Shape::Pocket;
    if (s == "mountain") return Shape::Mountain;
    if (s == "down-up") return Shape::DownUp;
    if (s == "up-down") return Shape::UpDown;
    return std::nullopt;
}

bool halfcircles_cross(const Halfcircle& h1, const Halfcircle& h2) {
    if (h1.page != h2.page) return false;
    if (h1.a == h2.a || h1.a == h2.b || h1.b == h2.a || h1.b == h2.b) return false;
    return (h1.a < h2.a && h2.a < h1.b && h1.b < h2.b) || (h2.a < h1.a && h1.a < h2.b && h2.b < h1.b);
}

void check_well_formed(const ArcDiagram& d) {
    const int K = static_cast<int>(d.spine.size());
    const int A = static_cast<int>(d.arcs.size());
    std::vector<std::pair<int, int>> vpos;  // (vertex id, spine index), sorted by id
    for (int k = 0; k < K; ++k) {
        const auto& it = d.spine[k];
        if (it.kind == SpineItem::Vertex) vpos.push_back({it.id, k});
        else if (it.id < 0 || it.id >= A)
            fail("crossing item at " + std::to_string(k) + " names unknown arc " + std::to_string(it.id));
    }
    std::sort(vpos.begin(), vpos.end());
    for (size_t k = 1; k < vpos.size(); ++k)
        if (vpos[k].first == vpos[k - 1].first)
            fail("vertex " + std::to_string(vpos[k].first) + " appears twice on the spine");
    auto find = [&](int v) {
        auto it = std::lower_bound(vpos.begin(), vpos.end(), std::pair<int, int>{v, -1});
        return it != vpos.end() && it->first == v ? it->second : -1;
    };
    std::vector<int> owner(K, -1);
    std::vector<std::pair<int, int>> edges;
    edges.reserve(A);
    for (int a = 0; a < A; ++a) {
        const Arc& arc = d.arcs[a];
        int pu = find(arc.u), pv = find(arc.v);
        if (pu < 0 || pv < 0) fail("arc " + std::to_string(a) + " has an endpoint missing from the spine");
        if (pu >= pv) fail("arc " + std::to_string(a) + " endpoints out of spine order");
        edges.push_back({std::min(arc.u, arc.v), std::max(arc.u, arc.v)});
        if (is_biarc(arc.shape)) {
            int x = arc.crossing;
            if (x < 0 || x >= K || d.spine[x].kind != SpineItem::Crossing || d.spine[x].id != a)
                fail("biarc " + std::to_string(a) + " has no matching crossing item");
            owner[x] = a;
        } else if (arc.crossing != -1) {
            fail("proper arc " + std::to_string(a) + " carries a crossing");
        }
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end()) fail("edge " + std::to_string(dup->first) + "-" + std::to_string(dup->second) + " drawn twice");
    for (int k = 0; k < K; ++k)
        if (d.spine[k].kind == SpineItem::Crossing && owner[k] < 0)
            fail("crossing item at " + std::to_string(k) + " belongs to no biarc");
}

void check_draws(const ArcDiagram& d, const Triangulation& t) {
    check_well_formed(d);
    int verts = 0;
    for (const auto& it : d.spine) {
        if (it.kind != SpineItem::Vertex) continue;
        if (it.id < 1 || it.id > t.vertex_count()) fail("unknown vertex " + std::to_string(it.id));
        ++verts;
    }
    if (verts != t.vertex_count()) fail("spine misses vertices");
    if (static_cast<int>(d.arcs.size()) != t.edge_count()) fail("arc count differs from edge count");
    for (const auto& a : d.arcs)
        if (!t.has_edge(a.u, a.v)) fail("arc " + std::to_string(a.u) + "-" + std::to_string(a.v) + " is not an edge");
}

std::vector<Halfcircle> halfcircles(const ArcDiagram& d) {
    std::vector<int> vpos;
    for (int k = 0; k < static_cast<int>(d.spine.size()); ++k) {
        const auto& it = d.spine[k];
        if (it.kind == SpineItem::Vertex) {
            if (it.id >= static_cast<int>(vpos.size())) vpos.resize(it.id + 1, -1);
            vpos[it.id] = k;
        }
    }
    std::vector<Halfcircle> hs;
    hs.reserve(d.arcs.size() * 2);
    for (int a = 0; a < static_cast<int>(d.arcs.size()); ++a) {
        const Arc& arc = d.arcs[a];
        int pu = vpos[arc.u], pv = vpos[arc.v];
        Page lp = left_page(arc.shape);
        if (!is_biarc(arc.shape)) {
            hs.push_back({pu, pv, lp, a});
        } else {
            int x = arc.crossing;
            hs.push_back({std::min(pu, x), std::max(pu, x), lp, a});
            hs.push_back({std::min(pv, x), std::max(pv, x), other(lp), a});
        }
    }
    return hs;
}

PlaneReport verify_plane(const ArcDiagram& d) {
    check_well_formed(d);
    auto hs = halfcircles(d);
    PlaneReport rep;
    std::vector<std::pair<int, int>> cur;  // (a, -b): left to right, outer first
    cur.reserve(hs.size());
    std::vector<int> stack;
    for (Page page : {Page::Above, Page::Below}) {
        cur.clear();
        for (const auto& h : hs)
            if (h.page == page) cur.push_back({h.a, -h.b});
        std::sort(cur.begin(), cur.end());
        stack.clear();
        for (auto [a, nb] : cur) {
            const int b = -nb;
            while (!stack.empty() && stack.back() <= a) stack.pop_back();
            if (!stack.empty() && stack.back() < b) { rep.ok = false; break; }
            stack.push_back(b);
        }
        if (!rep.ok) break;
    }
    if (!rep.ok) {
        std::set<std::pair<int, int>> pairs;
        for (size_t i = 0; i < hs.size(); ++i)
            for (size_t j = i + 1; j < hs.size(); ++j)
                if (hs[i].arc != hs[j].arc && halfcircles_cross(hs[i], hs[j]))
                    pairs.insert({std::min(hs[i].arc, hs[j].arc), std::max(hs[i].arc, hs[j].arc)});
        rep.crossing_arcs.assign(pairs.begin(), pairs.end());
    }
    return rep;
}

bool verify_monotone(const ArcDiagram& d, const std::vector<Shape>& allowed) {
    check_well_formed(d);
    std::map<int, int> vpos;
    for (int k = 0; k < static_cast<int>(d.spine.size()); ++k)
        if (d.spine[k].kind == SpineItem::Vertex) vpos[d.spine[k].id] = k;
    for (const auto& a : d.arcs) {
        if (!is_biarc(a.shape)) continue;
        if (std::find(allowed.begin(), allowed.end(), a.shape) == allowed.end()) return false;
        if (!(vpos[a.u] < a.crossing && a.crossing < vpos[a.v])) return false;
    }
    return true;
}

int count_biarcs(const ArcDiagram& d) {
    return static_cast<int>(std::count_if(d.arcs.begin(), d.arcs.end(), [](const Arc& a) { return is_biarc(a.shape); }));
}

ArcDiagram mirror(const ArcDiagram& d) {
    const int K = static_cast<int>(d.spine.size());
    ArcDiagram m;
    m.spine.assign(d.spine.rbegin(), d.spine.rend());
    m.arcs.reserve(d.arcs.size());
    for (const auto& a : d.arcs) {
        Arc b{a.v, a.u, a.shape, a.crossing < 0 ? -1 : K - 1 - a.crossing};
        if (a.shape == Shape::DownUp) b.shape = Shape::UpDown;
        else if (a.shape == Shape::UpDown) b.shape = Shape::DownUp;
        m.arcs.push_back(b);
    }
    return m;
}

std::string serialize_diagram(const ArcDiagram& d) {
    std::ostringstream out;
    out << "spine:";
    for (const auto& it : d.spine) out << " " << (it.kind == SpineItem::Vertex ? "v" : "x") << it.id;
    out << "\n";
    for (const auto& a : d.arcs) {
        out << "arc " << a.u << " " << a.v << " " << shape_name(a.shape);
        if (is_biarc(a.shape)) out << " cross=" << a.crossing;
        out << "\n";
    }
    return out.str();
}

ArcDiagram parse_diagram(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    ArcDiagram d;
    bool have_spine = false;
    int lineno = 0;
    auto to_int = [&](const std::string& s) {
        try {
            size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size()) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            fail("line " + std::to_string(lineno) + ": bad integer '" + s + "'");
        }
    };
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::istringstream line(hash == std::string::npos ? raw : raw.substr(0, hash));
        std::string head;
        if (!(line >> head)) continue;
        if (head == "spine:") {
            if (have_spine) fail("line " + std::to_string(lineno) + ": second spine line");
            have_spine = true;
            std::string tok;
            while (line >> tok) {
                if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'x'))
                    fail("line " + std::to_string(lineno) + ": bad spine token '" + tok + "'");
                d.spine.push_back({tok[0] == 'v' ? SpineItem::Vertex : SpineItem::Crossing, to_int(tok.substr(1))});
            }
        } else if (head == "arc") {
            std::string su, sv, ss, extra;
            if (!(line >> su >> sv >> ss)) fail("line " + std::to_string(lineno) + ": arc needs u v shape");
            auto sh = parse_shape(ss);
            if (!sh) fail("line " + std::to_string(lineno) + ": unknown shape '" + ss + "'");
            Arc a{to_int(su), to_int(sv), *sh, -1};
            if (line >> extra) {
                if (extra.rfind("cross=", 0) != 0) fail("line " + std::to_string(lineno) + ": unexpected '" + extra + "'");
                a.crossing = to_int(extra.substr(6));
            }
            d.arcs.push_back(a);
        } else {
            fail("line " + std::to_string(lineno) + ": unknown record '" + head + "'");
        }
    }
    if (!have_spine) fail("missing spine line");
    check_well_formed(d);
    return d;
}

}  // namespace arcdiag
