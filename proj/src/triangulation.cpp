#include "arcdiag/triangulation.hpp"

#include <algorithm>
#include <sstream>

#include "arcdiag/error.hpp"

namespace arcdiag {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("graph: " + msg); }

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, int line) {
    try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        fail("line " + std::to_string(line) + ": expected integer, got '" + tok + "'");
    }
}

}  // namespace

Triangulation Triangulation::from_rotations(int n, std::vector<std::vector<int>> rotation,
                                            std::array<int, 3> outer) {
    if (n < 3) fail("need at least 3 vertices, got " + std::to_string(n));
    if (static_cast<int>(rotation.size()) != n + 1) fail("rotation table has wrong size");
    Triangulation t;
    t.n_ = n;
    t.rot_ = std::move(rotation);
    t.adj_.assign(n + 1, {});
    t.rot_pos_.assign(n + 1, {});

    for (int v = 1; v <= n; ++v) {
        const auto& r = t.rot_[v];
        if (r.empty()) fail("vertex " + std::to_string(v) + " has no neighbors");
        for (int w : r) {
            if (w < 1 || w > n) fail("vertex " + std::to_string(v) + " lists unknown neighbor " + std::to_string(w));
            if (w == v) fail("self-loop at vertex " + std::to_string(v));
        }
        std::vector<int> sorted = r;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail("vertex " + std::to_string(v) + " lists a neighbor twice");
    }
    for (int v = 1; v <= n; ++v)
        for (int w : t.rot_[v])
            if (v < w) t.edges_.push_back({v, w});
    std::sort(t.edges_.begin(), t.edges_.end(),
              [](const Edge& a, const Edge& b) { return a.u != b.u ? a.u < b.u : a.v < b.v; });
    for (int id = 0; id < static_cast<int>(t.edges_.size()); ++id) {
        auto [u, v] = t.edges_[id];
        t.adj_[u].push_back({v, id});
        t.adj_[v].push_back({u, id});
    }
    for (int v = 1; v <= n; ++v) {
        std::sort(t.adj_[v].begin(), t.adj_[v].end());
        if (t.adj_[v].size() != t.rot_[v].size())
            fail("edge at vertex " + std::to_string(v) + " appears in only one rotation");
        t.rot_pos_[v].assign(t.rot_[v].size(), 0);
    }
    for (int v = 1; v <= n; ++v)
        for (int w : t.rot_[v])
            if (t.edge_id(v, w) < 0 || t.edge_id(w, v) < 0)
                fail("edge " + std::to_string(v) + "-" + std::to_string(w) + " appears in only one rotation");
    for (int v = 1; v <= n; ++v) {
        const auto& r = t.rot_[v];
        for (int k = 0; k < static_cast<int>(r.size()); ++k) {
            auto it = std::lower_bound(t.adj_[v].begin(), t.adj_[v].end(), std::pair{r[k], -1});
            t.rot_pos_[v][it - t.adj_[v].begin()] = k;
        }
    }

    const long long m = t.edge_count();
    if (m != 3LL * n - 6)
        fail("not maximal planar: " + std::to_string(m) + " edges, expected " + std::to_string(3 * n - 6));

    // Every dart must lie on a triangular face.
    std::vector<std::vector<char>> seen(n + 1);
    for (int v = 1; v <= n; ++v) seen[v].assign(t.rot_[v].size(), 0);
    long long faces = 0;
    for (int u = 1; u <= n; ++u) {
        for (int k = 0; k < static_cast<int>(t.rot_[u].size()); ++k) {
            if (seen[u][k]) continue;
            int a = u, b = t.rot_[u][k];
            int len = 0;
            while (true) {
                int idx = t.rot_index(a, b);
                if (seen[a][idx]) break;
                seen[a][idx] = 1;
                ++len;
                int c = t.rot_prev(b, a);
                a = b;
                b = c;
                if (len > 3) break;
            }
            if (len != 3 || a != u) fail("non-triangular face at dart " + std::to_string(u) + "->" + std::to_string(t.rot_[u][k]));
            ++faces;
        }
    }
    if (faces != 2LL * n - 4) fail("embedding is not planar (face count " + std::to_string(faces) + ")");

    auto [a, b, c] = outer;
    for (int x : outer)
        if (x < 1 || x > n) fail("outer vertex out of range");
    if (a == b || b == c || a == c) fail("outer face must name three distinct vertices");
    if (!t.is_face(a, b, c)) fail("outer triple is not a face");
    t.outer_ = outer;
    return t;
}

int Triangulation::edge_id(int u, int v) const {
    if (u < 1 || u > n_ || v < 1 || v > n_) return -1;
    const auto& a = adj_[u];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair{v, -1});
    return (it != a.end() && it->first == v) ? it->second : -1;
}

int Triangulation::rot_index(int v, int w) const {
    const auto& a = adj_[v];
    auto it = std::lower_bound(a.begin(), a.end(), std::pair{w, -1});
    if (it == a.end() || it->first != w) fail("vertex " + std::to_string(w) + " is not adjacent to " + std::to_string(v));
    return rot_pos_[v][it - a.begin()];
}

int Triangulation::rot_next(int v, int w) const {
    const auto& r = rot_[v];
    return r[(rot_index(v, w) + 1) % r.size()];
}

int Triangulation::rot_prev(int v, int w) const {
    const auto& r = rot_[v];
    return r[(rot_index(v, w) + r.size() - 1) % r.size()];
}

std::vector<std::array<int, 3>> Triangulation::faces() const {
    std::vector<std::array<int, 3>> out;
    for (int u = 1; u <= n_; ++u)
        for (int w : rot_[u]) {
            int x = rot_prev(w, u);
            // report each face once, from its smallest vertex
            if (u < w && u < x) out.push_back({u, w, x});
        }
    return out;
}

bool Triangulation::is_face(int a, int b, int c) const {
    if (!has_edge(a, b) || !has_edge(b, c) || !has_edge(a, c)) return false;
    return rot_prev(b, a) == c || rot_prev(a, b) == c;
}

Triangulation parse_triangulation(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    int n = -1;
    bool have_outer = false;
    std::array<int, 3> outer{};
    std::vector<std::vector<int>> rot;
    std::vector<char> defined;
    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) continue;
        if (n < 0) {
            n = parse_int(line, lineno);
            if (n < 3) fail("line " + std::to_string(lineno) + ": need n >= 3");
            rot.assign(n + 1, {});
            defined.assign(n + 1, 0);
            continue;
        }
        auto colon = line.find(':');
        if (colon == std::string::npos) fail("line " + std::to_string(lineno) + ": missing ':'");
        std::string head = trim(line.substr(0, colon));
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> vals;
        std::string tok;
        while (rest >> tok) vals.push_back(parse_int(tok, lineno));
        if (head == "outer") {
            if (vals.size() != 3) fail("line " + std::to_string(lineno) + ": outer needs three vertices");
            outer = {vals[0], vals[1], vals[2]};
            have_outer = true;
            continue;
        }
        int v = parse_int(head, lineno);
        if (v < 1 || v > n) fail("line " + std::to_string(lineno) + ": vertex id out of range");
        if (defined[v]) fail("line " + std::to_string(lineno) + ": vertex " + std::to_string(v) + " defined twice");
        defined[v] = 1;
        rot[v] = std::move(vals);
    }
    if (n < 0) fail("empty input");
    for (int v = 1; v <= n; ++v)
        if (!defined[v]) fail("vertex " + std::to_string(v) + " has no rotation line");
    if (!have_outer) {
        // default: left face of the dart between the two lowest-numbered adjacent vertices
        int u = 1;
        if (rot[1].empty()) fail("vertex 1 has no neighbors");
        int w = *std::min_element(rot[1].begin(), rot[1].end());
        // rot_prev(w, u) needs a built graph; compute directly
        const auto& rw = rot[w];
        auto it = std::find(rw.begin(), rw.end(), u);
        if (it == rw.end()) fail("edge 1-" + std::to_string(w) + " appears in only one rotation");
        int x = (it == rw.begin()) ? rw.back() : *(it - 1);
        outer = {u, w, x};
    }
    return Triangulation::from_rotations(n, std::move(rot), outer);
}

std::string serialize_triangulation(const Triangulation& t) {
    std::ostringstream out;
    out << t.vertex_count() << "\n";
    out << "outer: " << t.outer()[0] << " " << t.outer()[1] << " " << t.outer()[2] << "\n";
    for (int v = 1; v <= t.vertex_count(); ++v) {
        const auto& r = t.neighbors(v);
        auto start = std::min_element(r.begin(), r.end()) - r.begin();
        out << v << ":";
        for (size_t k = 0; k < r.size(); ++k) out << " " << r[(start + k) % r.size()];
        out << "\n";
    }
    return out.str();
}

Triangulation kleetope(const Triangulation& t) {
    const int n = t.vertex_count();
    auto faces = t.faces();
    std::sort(faces.begin(), faces.end());
    std::vector<std::vector<int>> rot(n + faces.size() + 1);
    for (int v = 1; v <= n; ++v) rot[v] = t.neighbors(v);
    auto [o0, o1, o2] = t.outer();
    int outer_face_vertex = -1;
    for (size_t k = 0; k < faces.size(); ++k) {
        int f = n + 1 + static_cast<int>(k);
        auto [a, b, c] = faces[k];
        rot[f] = {a, b, c};
        // at a the face wedge runs from b to c counterclockwise; same cyclically
        auto insert_after = [&](int at, int after) {
            auto& r = rot[at];
            auto it = std::find(r.begin(), r.end(), after);
            r.insert(it + 1, f);
        };
        insert_after(a, b);
        insert_after(b, c);
        insert_after(c, a);
        std::array<int, 3> s1{a, b, c}, s2{o0, o1, o2};
        std::sort(s1.begin(), s1.end());
        std::sort(s2.begin(), s2.end());
        if (s1 == s2) outer_face_vertex = f;
    }
    return Triangulation::from_rotations(n + static_cast<int>(faces.size()), std::move(rot),
                                         {o0, o1, outer_face_vertex});
}

}  // namespace arcdiag
