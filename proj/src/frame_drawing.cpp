#include "arcdiag/frame_drawing.hpp"

#include <algorithm>
#include <cassert>

#include "arcdiag/error.hpp"

namespace arcdiag::drawer {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw Error("drawer: " + msg); }
}  // namespace

FrameDrawing::FrameDrawing(const Triangulation& t, int left_root, int right_root, int top)
    : t_(&t), left_(left_root), right_(right_root) {
    const int n = t.vertex_count();
    item_of_.assign(n + 1, -1);
    arcs_.assign(t.edge_count(), {});
    mstack_.assign(n + 1, {});
    cprev_.assign(n + 1, 0);
    cnext_.assign(n + 1, 0);
    on_.assign(n + 1, 0);
    owner_.assign(t.edge_count(), -1);
    record_of_.assign(n + 1, -1);

    int a = new_item(true, left_root), b = new_item(true, top), c = new_item(true, right_root);
    head_ = a;
    items_[a].next = b; items_[b].prev = a;
    items_[b].next = c; items_[c].prev = b;
    tail_ = c;
    item_of_[left_root] = a; item_of_[top] = b; item_of_[right_root] = c;

    auto draw = [&](int u, int v) {
        int e = edge(u, v);
        arcs_[e].left = u;
        arcs_[e].right = v;
        set_shape(e, FShape::Pocket);
        return e;
    };
    int e1 = draw(left_root, top), e2 = draw(top, right_root);
    draw(left_root, right_root);
    for (int v : {left_root, top, right_root}) set_on(v, true);
    link(left_root, top);
    link(top, right_root);

    Record r;
    r.S = {left_root, right_root, top};
    r.plan.S = r.S;
    r.F = {left_root, top, right_root};
    r.owned = {e1, e2};
    r.permanent = true;
    records_.push_back(r);
    owner_[e1] = owner_[e2] = 0;
    for (int v : r.S) record_of_[v] = 0;
    mutations_ = 0;
}

int FrameDrawing::edge(int u, int v) const {
    int e = t_->edge_id(u, v);
    if (e < 0) fail("no edge " + std::to_string(u) + "-" + std::to_string(v));
    return e;
}

int FrameDrawing::new_item(bool is_vertex, int id) {
    int k;
    if (!free_items_.empty()) {
        k = free_items_.back();
        free_items_.pop_back();
    } else {
        k = static_cast<int>(items_.size());
        items_.push_back({});
    }
    items_[k] = Item{-1, -1, is_vertex, id};
    return k;
}

void FrameDrawing::insert_after(int at, int item) {
    int nx = items_[at].next;
    items_[item].prev = at;
    items_[item].next = nx;
    items_[at].next = item;
    if (nx >= 0) items_[nx].prev = item;
    else tail_ = item;
    ++mutations_;
}

void FrameDrawing::remove_item(int item) {
    int p = items_[item].prev, nx = items_[item].next;
    if (p >= 0) items_[p].next = nx;
    else head_ = nx;
    if (nx >= 0) items_[nx].prev = p;
    else tail_ = p;
    free_items_.push_back(item);
    ++mutations_;
}

void FrameDrawing::set_shape(int e, FShape s) {
    if (arcs_[e].shape == FShape::Biarc) --biarcs_;
    if (s == FShape::Biarc) ++biarcs_;
    arcs_[e].shape = s;
    ++mutations_;
}

void FrameDrawing::set_on(int v, bool on) {
    if (static_cast<bool>(on_[v]) == on) return;
    on_[v] = on;
    mtn_credit_ += (on ? 1 : -1) * static_cast<std::int64_t>(mstack_[v].size());
}

void FrameDrawing::link(int u, int w) {
    cnext_[u] = w;
    cprev_[w] = u;
    if (arcs_[edge(u, w)].shape == FShape::Pocket) ++pockets_;
    ++mutations_;
}

void FrameDrawing::unlink(int u) {
    int w = cnext_[u];
    if (arcs_[edge(u, w)].shape == FShape::Pocket) --pockets_;
    cnext_[u] = 0;
    cprev_[w] = 0;
    ++mutations_;
}

void FrameDrawing::stack_push(int v, int e) {
    mstack_[v].push_back(e);
    if (on_[v]) ++mtn_credit_;
    ++mutations_;
}

void FrameDrawing::stack_pop(int v) {
    mstack_[v].pop_back();
    if (on_[v]) --mtn_credit_;
    ++mutations_;
}

std::vector<int> FrameDrawing::contour() const {
    std::vector<int> c;
    for (int v = left_; v != 0; v = (v == right_ ? 0 : cnext_[v])) c.push_back(v);
    return c;
}

int FrameDrawing::push_down(int e) {
    if (arcs_[e].shape != FShape::Mountain) fail("push_down needs a proper mountain");
    int q = arcs_[e].left;
    auto& st = mstack_[q];
    auto it = std::find(st.begin(), st.end(), e);
    if (it == st.end()) fail("mountain missing from its left end's stack");
    int idx = static_cast<int>(it - st.begin());
    int cursor = item_of_[q];
    for (int k = idx; k >= 0; --k) {
        int x = new_item(false, st[k]);
        insert_after(cursor, x);
        cursor = x;
        arcs_[st[k]].cross = x;
        set_shape(st[k], FShape::Biarc);
    }
    std::vector<int> rest(st.begin() + idx + 1, st.end());
    if (on_[q]) mtn_credit_ -= idx + 1;
    st = std::move(rest);
    ++mutations_;
    return idx + 1;
}

int FrameDrawing::apply(const Planned& p) {
    const int rid = static_cast<int>(records_.size());
    const int t = static_cast<int>(p.q.size()) - 1;
    Record rec;
    rec.plan = p;
    rec.S = p.S;
    rec.q = p.q;
    rec.arcs = p.arcs;
    rec.F = p.F;

    for (int j = 0; j < t; ++j) {
        if (cnext_[p.q[j]] != p.q[j + 1]) fail("plan region is not a contour path");
        rec.base_owner.push_back(owner_[edge(p.q[j], p.q[j + 1])]);
    }
    for (int j = 0; j < t; ++j) unlink(p.q[j]);
    for (int j = 1; j < t; ++j) set_on(p.q[j], false);

    std::vector<std::pair<int, int>> cross_item;  // (edge, item) for new biarcs
    for (int j = 0; j < t; ++j) {
        const auto& g = p.groups[j];
        int cursor = item_of_[p.q[j]];
        if (!g.empty() && !p.pushed[j] && items_[cursor].next != item_of_[p.q[j + 1]])
            fail("vertex placed into a pocket that is not spine-adjacent");
        for (const auto& tok : g) {
            int it = new_item(tok.is_vertex, tok.id);
            insert_after(cursor, it);
            cursor = it;
            if (tok.is_vertex) item_of_[tok.id] = it;
            else cross_item.push_back({tok.id, it});
        }
        if (p.pushed[j]) {
            int q = p.q[j];
            Pushed ps{q, mstack_[q]};
            for (int k = static_cast<int>(ps.stack.size()) - 1; k >= 0; --k) {
                int e = ps.stack[k];
                int x = new_item(false, e);
                insert_after(cursor, x);
                cursor = x;
                arcs_[e].cross = x;
                set_shape(e, FShape::Biarc);
            }
            while (!mstack_[q].empty()) stack_pop(q);
            rec.pushed.push_back(std::move(ps));
        }
    }
    for (const auto& a : p.arcs) {
        arcs_[a.edge].left = a.left;
        arcs_[a.edge].right = a.right;
        set_shape(a.edge, a.shape);
        if (a.shape == FShape::Biarc) {
            auto it = std::find_if(cross_item.begin(), cross_item.end(), [&](auto& pr) { return pr.first == a.edge; });
            if (it == cross_item.end()) fail("biarc without crossing token");
            arcs_[a.edge].cross = it->second;
        } else if (a.shape == FShape::Mountain) {
            stack_push(a.left, a.edge);
        }
    }
    for (size_t k = 1; k + 1 < p.F.size(); ++k) set_on(p.F[k], true);
    for (int v : p.S) record_of_[v] = rid;
    for (size_t k = 0; k + 1 < p.F.size(); ++k) link(p.F[k], p.F[k + 1]);

    // Contour arcs that survive untouched keep their owner.
    size_t j = 0;
    for (size_t k = 0; k + 1 < p.F.size(); ++k) {
        int a = p.F[k], b = p.F[k + 1];
        size_t jj = j;
        while (jj < p.q.size() && p.q[jj] != a) ++jj;
        if (jj < p.q.size()) j = jj;
        bool kept = jj + 1 < p.q.size() && p.q[jj + 1] == b && p.groups[jj].empty() && !p.pushed[jj];
        int e = edge(a, b);
        if (!kept) {
            owner_[e] = rid;
            rec.owned.push_back(e);
        }
    }
    records_.push_back(std::move(rec));
    return rid;
}

bool FrameDrawing::retractable(int rid) const {
    const Record& r = records_[rid];
    if (!r.alive || r.permanent) return false;
    for (int e : r.owned) {
        if (owner_[e] != rid) return false;
        const DArc& a = arcs_[e];
        if (!on_[a.left] || !on_[a.right] || cnext_[a.left] != a.right) return false;
    }
    return true;
}

void FrameDrawing::retract(int rid) {
    if (!retractable(rid)) fail("record " + std::to_string(rid) + " cannot be retracted");
    Record& r = records_[rid];
    const int t = static_cast<int>(r.q.size()) - 1;
    for (size_t k = 0; k + 1 < r.F.size(); ++k) unlink(r.F[k]);
    for (size_t k = 1; k + 1 < r.F.size(); ++k) set_on(r.F[k], false);
    for (auto it = r.arcs.rbegin(); it != r.arcs.rend(); ++it) {
        if (it->shape == FShape::Mountain) {
            if (mstack_[it->left].empty() || mstack_[it->left].back() != it->edge) fail("mountain stack out of order on retract");
            stack_pop(it->left);
        } else if (it->shape == FShape::Biarc) {
            remove_item(arcs_[it->edge].cross);
            arcs_[it->edge].cross = -1;
        }
        set_shape(it->edge, FShape::None);
    }
    for (int v : r.S) {
        remove_item(item_of_[v]);
        item_of_[v] = -1;
        record_of_[v] = -1;
    }
    for (auto it = r.pushed.rbegin(); it != r.pushed.rend(); ++it) {
        for (int e : it->stack) {
            remove_item(arcs_[e].cross);
            arcs_[e].cross = -1;
            set_shape(e, FShape::Mountain);
        }
        for (int e : it->stack) stack_push(it->q, e);
    }
    for (int j = 1; j < t; ++j) set_on(r.q[j], true);
    for (int j = 0; j < t; ++j) {
        link(r.q[j], r.q[j + 1]);
        owner_[edge(r.q[j], r.q[j + 1])] = r.base_owner[j];
    }
    r.alive = false;
}

std::vector<int> FrameDrawing::positions() const {
    std::vector<int> pos(items_.size(), -1);
    int k = 0;
    for (int it = head_; it >= 0; it = items_[it].next) pos[it] = k++;
    return pos;
}

ArcDiagram FrameDrawing::to_diagram() const {
    auto pos = positions();
    ArcDiagram d;
    std::vector<int> arc_index(arcs_.size(), -1);
    for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
        const DArc& a = arcs_[e];
        if (a.shape == FShape::None) continue;
        arc_index[e] = static_cast<int>(d.arcs.size());
        Shape s = a.shape == FShape::Pocket ? Shape::Pocket
                  : a.shape == FShape::Mountain ? Shape::Mountain
                                                : Shape::DownUp;
        d.arcs.push_back({a.left, a.right, s, a.shape == FShape::Biarc ? pos[a.cross] : -1});
    }
    for (int it = head_; it >= 0; it = items_[it].next) {
        const Item& x = items_[it];
        d.spine.push_back({x.is_vertex ? SpineItem::Vertex : SpineItem::Crossing, x.is_vertex ? x.id : arc_index[x.id]});
    }
    return d;
}

std::string FrameDrawing::audit() const {
    auto pos = positions();
    auto vp = [&](int v) { return pos[item_of_[v]]; };
    if (head_ != item_of_[left_] || tail_ != item_of_[right_]) return "roots are not the spine ends";

    // Arcs: orientation, crossing placement, stacks.
    std::int64_t biarcs = 0;
    std::vector<int> mcount(on_.size(), 0);
    std::vector<std::pair<int, int>> up, down;  // halfcircles as (a, -b)
    for (int e = 0; e < static_cast<int>(arcs_.size()); ++e) {
        const DArc& a = arcs_[e];
        if (a.shape == FShape::None) continue;
        if (!placed(a.left) || !placed(a.right)) return "arc with unplaced endpoint";
        const int pl = vp(a.left), pr = vp(a.right);
        if (pl >= pr) return "arc endpoints out of order";
        if (a.shape == FShape::Biarc) {
            ++biarcs;
            if (a.cross < 0 || pos[a.cross] < 0) return "biarc without crossing";
            const int px = pos[a.cross];
            if (!(pl < px && px < pr)) return "biarc is not monotone";
            if (items_[a.cross].is_vertex || items_[a.cross].id != e) return "crossing item owned by another arc";
            down.push_back({pl, -px});
            up.push_back({px, -pr});
        } else {
            if (a.cross != -1) return "proper arc carries a crossing";
            (a.shape == FShape::Mountain ? up : down).push_back({pl, -pr});
            if (a.shape == FShape::Mountain) ++mcount[a.left];
        }
    }
    for (size_t v = 1; v < on_.size(); ++v) {
        if (static_cast<size_t>(mcount[v]) != mstack_[v].size()) return "mountain stack of " + std::to_string(v) + " is stale";
        int last = -1;
        for (int e : mstack_[v]) {
            const DArc& a = arcs_[e];
            if (a.shape != FShape::Mountain || a.left != static_cast<int>(v))
                return "mountain stack of " + std::to_string(v) + " is stale";
            if (vp(a.right) <= last) return "mountain stack of " + std::to_string(v) + " out of order";
            last = vp(a.right);
        }
    }

    // Planarity: nested or disjoint on each page.
    for (auto* page : {&up, &down}) {
        std::sort(page->begin(), page->end());
        std::vector<int> stack;
        for (auto [l, nr] : *page) {
            while (!stack.empty() && stack.back() <= l) stack.pop_back();
            if (!stack.empty() && stack.back() < -nr) return "drawing is not plane";
            stack.push_back(-nr);
        }
    }

    // Contour envelope.
    auto c = contour();
    std::int64_t pockets = 0, credit = 0;
    std::vector<int> cpos;
    for (size_t k = 0; k < c.size(); ++k) {
        if (!on_[c[k]]) return "contour vertex without flag";
        cpos.push_back(vp(c[k]));
        if (k && cpos[k] <= cpos[k - 1]) return "contour not left to right";
        if (k + 1 < c.size()) credit += mcount[c[k]];
        if (k + 1 < c.size()) {
            const DArc& a = arcs_[edge(c[k], c[k + 1])];
            if (a.shape == FShape::Pocket) {
                ++pockets;
                if (items_[item_of_[c[k]]].next != item_of_[c[k + 1]]) return "contour pocket is not spine-adjacent";
            } else if (a.shape != FShape::Mountain) {
                return "contour edge is not proper";
            }
        }
    }
    std::int64_t flagged = std::count(on_.begin(), on_.end(), 1);
    if (flagged != static_cast<std::int64_t>(c.size())) return "stray contour flags";
    for (auto [l, nr] : up) {
        const int r = -nr;
        auto it = std::upper_bound(cpos.begin(), cpos.end(), l);
        if (it == cpos.begin() || it == cpos.end()) return "upper arc outside the contour span";
        size_t j = static_cast<size_t>(it - cpos.begin()) - 1;
        if (r > cpos[j + 1]) return "upper arc crosses above the contour";
        if (l == cpos[j] && r == cpos[j + 1]) continue;
        if (arcs_[edge(c[j], c[j + 1])].shape != FShape::Mountain) return "arc drawn above a contour pocket";
    }
    if (biarcs != biarcs_) return "biarc counter drifted";
    if (pockets != pockets_) return "pocket counter drifted";
    if (credit != mtn_credit_) return "mountain credit counter drifted";
    return {};
}

std::string FrameDrawing::audit_local(int a, int b) const {
    for (int v = a; v != b; v = cnext_[v]) {
        if (!on_[v] || v == 0) return "contour broken";
        int w = cnext_[v];
        if (w == 0 || cprev_[w] != v) return "contour links inconsistent";
        const DArc& arc = arcs_[edge(v, w)];
        if (arc.left != v || arc.right != w) return "contour arc orientation";
        if (arc.shape == FShape::Pocket) {
            if (items_[item_of_[v]].next != item_of_[w]) return "contour pocket is not spine-adjacent";
        } else if (arc.shape != FShape::Mountain) {
            return "contour edge is not proper";
        } else if (mstack_[v].empty() || mstack_[v].back() != edge(v, w)) {
            return "contour mountain is not outermost";
        }
    }
    return {};
}

}  // namespace arcdiag::drawer
