#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace arcdiag {

// Combinatorially embedded maximal planar graph.  Vertices are 1..n, the
// rotation of each vertex lists its neighbors counterclockwise.  A face is
// traced by walking a dart u->v and continuing with v->w where w precedes u
// in the rotation of v; with counterclockwise rotations inner faces come out
// counterclockwise and the outer face clockwise.
class Triangulation {
public:
    struct Edge {
        int u, v;  // u < v
    };

    Triangulation() = default;

    // Validates and builds.  Throws Error on any violation.
    static Triangulation from_rotations(int n, std::vector<std::vector<int>> rotation,
                                        std::array<int, 3> outer);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<int>& neighbors(int v) const { return rot_[v]; }
    int degree(int v) const { return static_cast<int>(rot_[v].size()); }
    const std::array<int, 3>& outer() const { return outer_; }
    const std::vector<Edge>& edges() const { return edges_; }

    // Edges are numbered in lexicographic (u, v) order.
    int edge_id(int u, int v) const;  // -1 if absent
    bool has_edge(int u, int v) const { return edge_id(u, v) >= 0; }

    // All faces as traced dart triples.
    std::vector<std::array<int, 3>> faces() const;
    bool is_face(int a, int b, int c) const;

    // Successor of w in the counterclockwise rotation around v.
    int rot_next(int v, int w) const;
    int rot_prev(int v, int w) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> rot_;
    std::array<int, 3> outer_{};
    std::vector<Edge> edges_;
    // Per vertex: (neighbor, edge id) sorted by neighbor, and position of
    // each neighbor within the rotation.
    std::vector<std::vector<std::pair<int, int>>> adj_;
    std::vector<std::vector<int>> rot_pos_;

    int rot_index(int v, int w) const;
};

Triangulation parse_triangulation(const std::string& text);
std::string serialize_triangulation(const Triangulation& t);

// Adds a vertex inside every face (including the outer one).  New vertices
// are numbered n+1.. in face order.  The new outer face is
// (outer[0], outer[1], vertex of the old outer face).
Triangulation kleetope(const Triangulation& t);

// Fixed instances used by tests and the CLI.
Triangulation k4();
Triangulation octahedron();
Triangulation triangular_bipyramid();
Triangulation goldner_harary();  // kleetope of the bipyramid

}  // namespace arcdiag
