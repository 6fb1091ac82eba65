#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcdiag/credit.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/triangulation.hpp"

namespace arcdiag::drawer {

// Shape of an edge inside one frame.  Frames are always drawn so that every
// biarc is down-up in frame coordinates; the reverse drawing lives in a
// mirrored frame.
enum class FShape : std::uint8_t { None, Pocket, Mountain, Biarc };

// A placement of a set S of vertices into a contour region q_0..q_t, ready to
// be applied.  Produced by the layout planner.
struct Planned {
    struct Token {
        bool is_vertex;
        int id;  // vertex id, or edge id whose crossing this is
    };
    struct PArc {
        int edge, left, right;
        FShape shape;
    };
    std::vector<int> q;                      // base region
    std::vector<int> S;                      // placed vertices in insertion order
    std::vector<std::vector<Token>> groups;  // per slot j < t, left to right
    std::vector<char> pushed;                // per slot: convert the mountains of q_j
    std::vector<PArc> arcs;                  // new edges; mountains grouped by left end, inner first
    std::vector<int> F;                      // resulting contour segment q_0 .. q_t
    Credit delta;                            // change of the frame potential
};

// One frame of the drawing of G_i together with its contour and the credit
// potential  biarcs + (mountains whose left end is on the contour) + pi * (contour pockets).
class FrameDrawing {
public:
    FrameDrawing(const Triangulation& t, int left_root, int right_root, int top);

    const Triangulation& graph() const { return *t_; }
    int left_root() const { return left_; }
    int right_root() const { return right_; }

    // Potential and its parts.
    Credit phi() const { return Credit::whole(biarcs_ + mtn_credit_) + kPi * pockets_; }
    std::int64_t biarcs() const { return biarcs_; }
    std::int64_t contour_mountain_credit() const { return mtn_credit_; }
    std::int64_t contour_pockets() const { return pockets_; }
    std::int64_t mutations() const { return mutations_; }

    FShape shape(int edge) const { return arcs_[edge].shape; }
    FShape shape(int u, int v) const { return arcs_[t_->edge_id(u, v)].shape; }
    bool placed(int v) const { return item_of_[v] >= 0; }
    bool on_contour(int v) const { return on_[v] != 0; }
    int contour_next(int v) const { return cnext_[v]; }
    int contour_prev(int v) const { return cprev_[v]; }
    int mountains_left(int v) const { return static_cast<int>(mstack_[v].size()); }
    std::vector<int> contour() const;

    // Low-level operation: turn the mountain `edge` and every mountain nested
    // under it with the same left end into down-up biarcs whose crossings
    // follow the left end, outermost first.  Returns the number converted.
    int push_down(int edge);

    // Applies a plan and returns its record id.
    int apply(const Planned& p);
    // A record can be undone while every contour arc it created is untouched.
    bool retractable(int record) const;
    void retract(int record);
    int record_of(int v) const { return record_of_[v]; }
    const std::vector<int>& record_vertices(int record) const { return records_[record].plan.S; }
    const Planned& record_plan(int record) const { return records_[record].plan; }

    // Complete from-scratch check of planarity, monotonicity, the contour
    // envelope and the potential counters.  Empty string when consistent.
    std::string audit() const;
    // Cheap check restricted to the contour between a and b.
    std::string audit_local(int a, int b) const;

    ArcDiagram to_diagram() const;

private:
    struct Item {
        int prev = -1, next = -1;
        bool is_vertex = true;
        int id = 0;
    };
    struct DArc {
        int left = 0, right = 0;
        FShape shape = FShape::None;
        int cross = -1;  // item index
    };
    struct Pushed {
        int q;
        std::vector<int> stack;
    };
    struct Record {
        Planned plan;
        std::vector<int> S, q;
        std::vector<int> base_owner;  // owner of base arc (q_j, q_j+1) before
        std::vector<Pushed> pushed;
        std::vector<Planned::PArc> arcs;
        std::vector<int> F;
        std::vector<int> owned;  // contour edges created by this record
        bool alive = true;
        bool permanent = false;
    };

    const Triangulation* t_;
    int left_, right_;
    std::vector<Item> items_;
    std::vector<int> free_items_;
    int head_ = -1, tail_ = -1;
    std::vector<int> item_of_;
    std::vector<DArc> arcs_;
    std::vector<std::vector<int>> mstack_;
    std::vector<int> cprev_, cnext_;
    std::vector<char> on_;
    std::vector<int> owner_;
    std::vector<Record> records_;
    std::vector<int> record_of_;
    std::int64_t biarcs_ = 0, mtn_credit_ = 0, pockets_ = 0, mutations_ = 0;

    int new_item(bool is_vertex, int id);
    void insert_after(int at, int item);
    void remove_item(int item);
    void set_shape(int e, FShape s);
    void set_on(int v, bool on);
    void link(int u, int w);
    void unlink(int u);
    void stack_push(int v, int e);
    void stack_pop(int v);
    int edge(int u, int v) const;
    std::vector<int> positions() const;
};

}  // namespace arcdiag::drawer
