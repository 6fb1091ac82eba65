#include "layout.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <unordered_map>

#include "arcdiag/error.hpp"

namespace arcdiag::drawer {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("drawer: " + msg); }

using Key = std::int64_t;
inline Key vkey(int major) { return static_cast<Key>(major) << 32; }

struct HC {
    Key a, b;
    bool upper;
};

inline bool hc_cross(const HC& x, const HC& y) {
    if (x.upper != y.upper) return false;
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
    return (x.a < y.a && y.a < x.b && x.b < y.b) || (y.a < x.a && x.a < y.b && y.b < x.b);
}

// Base contour path between the extreme base neighbors of S.  The spans of
// S overlap, so the extremes lie within `total` steps of any base neighbor.
std::vector<int> region_of(const FrameDrawing& d, const std::vector<PlaceVertex>& S) {
    std::unordered_map<int, char> inS, base;
    for (const auto& s : S) inS[s.v] = 1;
    int total = 0, any = 0;
    for (const auto& s : S)
        for (int w : s.nbrs) {
            ++total;
            if (inS.count(w)) continue;
            if (!d.on_contour(w)) fail("placement neighbor " + std::to_string(w) + " is not on the contour");
            base[w] = 1;
            any = w;
        }
    if (!any) fail("placement without base neighbors");
    int lo = any;
    for (int x = any, k = 0; k <= total && x != 0; ++k) {
        if (base.count(x)) lo = x;
        if (x == d.left_root()) break;
        x = d.contour_prev(x);
    }
    std::vector<int> path;
    size_t seen = 0;
    for (int x = lo; x != 0; x = (x == d.right_root() ? 0 : d.contour_next(x))) {
        path.push_back(x);
        if (base.count(x) && ++seen == base.size()) break;
    }
    if (seen != base.size()) fail("placement neighbors do not form a contour region");
    return path;
}

struct Model {
    const FrameDrawing& d;
    std::vector<int> q;
    int t = 0;
    std::vector<char> base_pocket;
    std::vector<int> mtnL;
    std::vector<PlaceVertex> S;
    std::vector<int> F;
    std::unordered_map<int, int> qidx;   // base vertex -> j
    std::unordered_map<int, int> sidx;   // S vertex -> index
    std::unordered_map<int, char> inF;

    struct SEdge {
        int a, b, edge;
        bool f_edge;
    };
    std::vector<SEdge> edges;
    Key base_phi = 0;

    // skeleton state
    enum TokKind { TBase, TS, TPX, TB };
    struct Tok {
        TokKind kind;
        int id;  // vertex, or slot for PX/B
    };
    std::vector<Tok> toks;
    std::vector<int> slot;                 // per S index
    std::vector<std::vector<int>> groups;  // per slot: S indices in order
    std::vector<char> pushed;
    std::unordered_map<int, int> major;    // vertex -> token index
    std::vector<HC> reps;
    Key fixed_cost = 0;
    std::vector<Key> fkeys;

    Model(const FrameDrawing& dd, std::vector<int> region, std::vector<PlaceVertex> s)
        : d(dd), q(std::move(region)), S(std::move(s)) {
        t = static_cast<int>(q.size()) - 1;
        for (int j = 0; j <= t; ++j) qidx[q[j]] = j;
        for (int j = 0; j < t; ++j) {
            FShape sh = d.shape(q[j], q[j + 1]);
            base_pocket.push_back(sh == FShape::Pocket);
            mtnL.push_back(d.mountains_left(q[j]));
            base_phi += 8 * mtnL[j] + (sh == FShape::Pocket ? 1 : 0);
        }
        for (int k = 0; k < static_cast<int>(S.size()); ++k) sidx[S[k].v] = k;
        // final contour by simulation
        std::vector<int> cur = q;
        for (const auto& s : S) {
            auto it = std::find(cur.begin(), cur.end(), s.nbrs.front());
            if (it == cur.end()) fail("placement neighbor missing from region");
            size_t a = static_cast<size_t>(it - cur.begin());
            size_t len = s.nbrs.size();
            if (a + len > cur.size()) fail("placement neighbors are not a contour path");
            for (size_t k = 0; k < len; ++k)
                if (cur[a + k] != s.nbrs[k]) fail("placement neighbors are not a contour path");
            cur.erase(cur.begin() + a + 1, cur.begin() + a + len - 1);
            cur.insert(cur.begin() + a + 1, s.v);
        }
        F = cur;
        for (int f : F) inF[f] = 1;
        auto is_f_edge = [&](int x, int y) {
            for (size_t k = 0; k + 1 < F.size(); ++k)
                if ((F[k] == x && F[k + 1] == y) || (F[k] == y && F[k + 1] == x)) return true;
            return false;
        };
        for (const auto& s : S)
            for (int w : s.nbrs) edges.push_back({s.v, w, d.graph().edge_id(s.v, w), is_f_edge(s.v, w)});
    }

    bool is_base(int v) const { return qidx.count(v) > 0; }

    // Builds tokens, keys and representative arcs.  False if F is out of order.
    bool build_skeleton() {
        toks.clear();
        major.clear();
        reps.clear();
        pushed.assign(t, 0);
        for (int j = 0; j < t; ++j)
            if (!groups[j].empty() && !base_pocket[j]) pushed[j] = 1;
        std::vector<int> px(t, -1), bl(t, -1);
        for (int j = 0; j < t; ++j) {
            major[q[j]] = static_cast<int>(toks.size());
            toks.push_back({TBase, q[j]});
            for (int k : groups[j]) {
                major[S[k].v] = static_cast<int>(toks.size());
                toks.push_back({TS, S[k].v});
            }
            if (pushed[j]) {
                px[j] = static_cast<int>(toks.size());
                toks.push_back({TPX, j});
            }
            if (!base_pocket[j]) {
                bl[j] = static_cast<int>(toks.size());
                toks.push_back({TB, j});
            }
        }
        major[q[t]] = static_cast<int>(toks.size());
        toks.push_back({TBase, q[t]});

        fkeys.clear();
        for (int f : F) {
            Key k = vkey(major[f]);
            if (!fkeys.empty() && k <= fkeys.back()) return false;
            fkeys.push_back(k);
        }
        for (int j = 0; j < t; ++j) {
            Key a = vkey(major[q[j]]), b = vkey(major[q[j + 1]]);
            if (base_pocket[j]) {
                reps.push_back({a, b, false});
            } else if (!pushed[j]) {
                Key B = vkey(bl[j]);
                reps.push_back({a, b, true});
                reps.push_back({a, B, true});
                reps.push_back({B, b, true});
                reps.push_back({a, B, false});
                reps.push_back({B, b, false});
            } else {
                Key X = vkey(px[j]), B = vkey(bl[j]);
                reps.push_back({a, X, false});
                reps.push_back({X, b, true});
                reps.push_back({X, B, true});
                reps.push_back({a, B, false});
                reps.push_back({B, b, true});
            }
        }
        // base arcs that stay on the final contour must be untouched
        for (size_t k = 0; k + 1 < F.size(); ++k) {
            auto ia = qidx.find(F[k]), ib = qidx.find(F[k + 1]);
            if (ia != qidx.end() && ib != qidx.end()) {
                int j = ia->second;
                if (ib->second != j + 1 || !groups[j].empty() || pushed[j]) return false;
            }
        }
        fixed_cost = -base_phi;
        for (int j = 0; j < t; ++j)
            if (pushed[j]) fixed_cost += 8 * mtnL[j];
        for (size_t k = 0; k + 1 < F.size(); ++k) {
            auto it = qidx.find(F[k]);
            if (it != qidx.end() && !pushed[it->second]) fixed_cost += 8 * mtnL[it->second];
            auto ib = qidx.find(F[k + 1]);
            if (it != qidx.end() && ib != qidx.end() && base_pocket[it->second]) fixed_cost += 1;
        }
        return true;
    }

    struct Option {
        FShape shape;
        int gap;  // for biarcs: token index after which the crossing sits
        Key cost;
    };

    Key crossing_key(int gap, int pa, int pb) const {
        Key M = static_cast<Key>(toks.size()) + 1;
        return (static_cast<Key>(gap) << 32) | (1 + (M - pa) * M + (M - pb));
    }

    void options(const SEdge& e, std::vector<Option>& out) const {
        out.clear();
        int ma = major.at(e.a), mb = major.at(e.b);
        int pa = std::min(ma, mb), pb = std::max(ma, mb);
        int left = ma < mb ? e.a : e.b;
        bool only_s_between = true;
        for (int k = pa + 1; k < pb; ++k)
            if (toks[k].kind != TS) { only_s_between = false; break; }
        if (only_s_between && (!e.f_edge || pb == pa + 1)) out.push_back({FShape::Pocket, -1, e.f_edge ? 1 : 0});
        out.push_back({FShape::Mountain, -1, inF.count(left) ? 8 : 0});
        if (!e.f_edge) {
            for (int g = pa; g < pb; ++g) {
                if (g > pa && toks[g].kind != TS) break;
                out.push_back({FShape::Biarc, g, 8});
            }
        }
    }

    // Envelope and contour checks on the complete set of halfcircles.
    bool envelope_ok(const std::vector<HC>& hcs, const std::vector<int>& gaps_used,
                     const std::vector<FShape>& fshape) const {
        for (const HC& h : hcs) {
            if (!h.upper) continue;
            auto it = std::upper_bound(fkeys.begin(), fkeys.end(), h.a);
            if (it == fkeys.begin() || it == fkeys.end()) return false;
            size_t k = static_cast<size_t>(it - fkeys.begin()) - 1;
            if (h.b > fkeys[k + 1]) return false;
            if (h.a == fkeys[k] && h.b == fkeys[k + 1]) continue;
            if (fshape[k] != FShape::Mountain) return false;
        }
        for (size_t k = 0; k + 1 < F.size(); ++k) {
            if (fshape[k] != FShape::Pocket) continue;
            int ma = major.at(F[k]), mb = major.at(F[k + 1]);
            if (mb != ma + 1) return false;
            if (std::find(gaps_used.begin(), gaps_used.end(), ma) != gaps_used.end()) return false;
        }
        return true;
    }
};

struct Assignment {
    std::vector<FShape> shape;
    std::vector<int> gap;
};

struct Searcher {
    Model& m;
    long long budget;
    long long nodes = 0;
    Key best;
    bool found = false;
    Assignment best_asg;
    std::vector<int> best_slot;
    std::vector<std::vector<int>> best_groups;

    std::vector<int> order;
    std::vector<HC> placed;
    std::vector<int> gaps_used;
    Assignment cur;
    std::vector<std::vector<Model::Option>> opt_buf;
    std::vector<int> fpos;  // per edge: index in F edges, or -1

    Searcher(Model& mm, long long b, Key initial_best) : m(mm), budget(b), best(initial_best) {}

    void run_skeleton() {
        const int E = static_cast<int>(m.edges.size());
        order.resize(E);
        for (int k = 0; k < E; ++k) order[k] = k;
        std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
            if (m.edges[x].f_edge != m.edges[y].f_edge) return m.edges[x].f_edge;
            auto span = [&](int k) { return std::abs(m.major.at(m.edges[k].a) - m.major.at(m.edges[k].b)); };
            return span(x) < span(y);
        });
        fpos.assign(E, -1);
        for (int k = 0; k < E; ++k)
            if (m.edges[k].f_edge)
                for (size_t f = 0; f + 1 < m.F.size(); ++f)
                    if ((m.F[f] == m.edges[k].a && m.F[f + 1] == m.edges[k].b) ||
                        (m.F[f] == m.edges[k].b && m.F[f + 1] == m.edges[k].a))
                        fpos[k] = static_cast<int>(f);
        placed = m.reps;
        gaps_used.clear();
        cur.shape.assign(E, FShape::None);
        cur.gap.assign(E, -1);
        opt_buf.assign(E, {});
        dfs(0, m.fixed_cost);
    }

    bool fits(const HC& h) const {
        for (const HC& p : placed)
            if (hc_cross(h, p)) return false;
        return true;
    }

    void dfs(int k, Key cost) {
        if (++nodes > budget) return;
        if (cost >= best) return;
        const int E = static_cast<int>(order.size());
        if (k == E) {
            std::vector<FShape> fshape(m.F.size() - 1, FShape::None);
            for (size_t f = 0; f + 1 < m.F.size(); ++f) {
                auto ia = m.qidx.find(m.F[f]), ib = m.qidx.find(m.F[f + 1]);
                if (ia != m.qidx.end() && ib != m.qidx.end())
                    fshape[f] = m.base_pocket[ia->second] ? FShape::Pocket : FShape::Mountain;
            }
            for (int e = 0; e < E; ++e)
                if (fpos[e] >= 0) fshape[fpos[e]] = cur.shape[e];
            if (!m.envelope_ok(placed, gaps_used, fshape)) return;
            best = cost;
            found = true;
            best_asg = cur;
            best_slot = m.slot;
            best_groups = m.groups;
            return;
        }
        int ei = order[k];
        const auto& e = m.edges[ei];
        auto& opts = opt_buf[ei];
        m.options(e, opts);
        int ma = m.major.at(e.a), mb = m.major.at(e.b);
        int pa = std::min(ma, mb), pb = std::max(ma, mb);
        Key ka = vkey(pa), kb = vkey(pb);
        for (const auto& o : opts) {
            if (cost + o.cost >= best) continue;
            cur.shape[ei] = o.shape;
            cur.gap[ei] = o.gap;
            if (o.shape == FShape::Biarc) {
                Key x = m.crossing_key(o.gap, pa, pb);
                HC lo{ka, x, false}, hi{x, kb, true};
                if (!fits(lo) || !fits(hi)) continue;
                placed.push_back(lo);
                placed.push_back(hi);
                gaps_used.push_back(o.gap);
                dfs(k + 1, cost + o.cost);
                gaps_used.pop_back();
                placed.pop_back();
                placed.pop_back();
            } else {
                HC h{ka, kb, o.shape == FShape::Mountain};
                if (!fits(h)) continue;
                placed.push_back(h);
                dfs(k + 1, cost + o.cost);
                placed.pop_back();
            }
            if (nodes > budget) return;
        }
        cur.shape[ei] = FShape::None;
    }
};

Planned to_planned(Model& m, const std::vector<int>& slot, const std::vector<std::vector<int>>& groups,
                   const Assignment& asg, Key delta) {
    m.slot = slot;
    m.groups = groups;
    m.build_skeleton();
    Planned p;
    p.q = m.q;
    for (const auto& s : m.S) p.S.push_back(s.v);
    p.F = m.F;
    p.pushed = m.pushed;
    p.groups.assign(m.t, {});
    p.delta = Credit::eighths(delta);
    // group tokens: S vertices and crossings, sorted by key
    std::vector<std::vector<std::pair<Key, Planned::Token>>> g(m.t);
    for (int j = 0; j < m.t; ++j)
        for (int k : groups[j]) g[j].push_back({vkey(m.major.at(m.S[k].v)), {true, m.S[k].v}});
    auto slot_of_major = [&](int mj) {
        // slot whose range contains token mj
        int j = -1;
        for (int k = 0; k <= mj; ++k)
            if (m.toks[k].kind == Model::TBase) j = m.qidx.at(m.toks[k].id);
        return j;
    };
    std::vector<std::pair<Key, Planned::PArc>> arcs;
    for (size_t e = 0; e < m.edges.size(); ++e) {
        const auto& se = m.edges[e];
        int ma = m.major.at(se.a), mb = m.major.at(se.b);
        int left = ma < mb ? se.a : se.b, right = ma < mb ? se.b : se.a;
        int pa = std::min(ma, mb), pb = std::max(ma, mb);
        FShape sh = asg.shape[e];
        if (sh == FShape::Biarc) {
            Key x = m.crossing_key(asg.gap[e], pa, pb);
            g[slot_of_major(asg.gap[e])].push_back({x, {false, se.edge}});
        }
        arcs.push_back({(static_cast<Key>(pa) << 32) | pb, {se.edge, left, right, sh}});
    }
    for (int j = 0; j < m.t; ++j) {
        std::sort(g[j].begin(), g[j].end(), [](auto& x, auto& y) { return x.first < y.first; });
        for (auto& [k, tok] : g[j]) p.groups[j].push_back(tok);
    }
    // mountains sharing a left end must be pushed inner first
    std::sort(arcs.begin(), arcs.end(), [](auto& x, auto& y) { return x.first < y.first; });
    for (auto& [k, a] : arcs) p.arcs.push_back(a);
    return p;
}

void enumerate_perms(Model& m, int j, const std::function<void()>& leaf) {
    if (j == m.t) { leaf(); return; }
    auto& gj = m.groups[j];
    std::sort(gj.begin(), gj.end());
    do {
        enumerate_perms(m, j + 1, leaf);
    } while (std::next_permutation(gj.begin(), gj.end()));
}

}  // namespace

Planned plan_default(const FrameDrawing& d, const PlaceVertex& pv) {
    const auto& q = pv.nbrs;
    const int t = static_cast<int>(q.size()) - 1;
    int slot = -1;
    bool pocket = false;
    for (int j = t - 1; j >= 0; --j)
        if (d.shape(q[j], q[j + 1]) == FShape::Pocket) { slot = j; pocket = true; break; }
    if (slot < 0) slot = (q.size() < 4) ? 0 : t - 1;
    Planned p;
    p.q = q;
    p.S = {pv.v};
    p.groups.assign(t, {});
    p.pushed.assign(t, 0);
    p.groups[slot].push_back({true, pv.v});
    if (!pocket) p.pushed[slot] = 1;
    const auto& g = d.graph();
    for (int x = 0; x <= t; ++x) {
        bool left_of_v = x <= slot;
        FShape sh = FShape::Mountain;
        if (x == slot || (pocket && x == slot + 1)) sh = FShape::Pocket;
        int e = g.edge_id(q[x], pv.v);
        if (left_of_v) p.arcs.push_back({e, q[x], pv.v, sh});
        else p.arcs.push_back({e, pv.v, q[x], sh});
    }
    p.F = {q.front(), pv.v, q.back()};
    evaluate(d, p);
    return p;
}

void evaluate(const FrameDrawing& d, Planned& p) {
    const int t = static_cast<int>(p.q.size()) - 1;
    std::unordered_map<int, int> qidx;
    for (int j = 0; j <= t; ++j) qidx[p.q[j]] = j;
    std::int64_t base = 0, fin = 0;
    for (int j = 0; j < t; ++j) {
        base += 8 * d.mountains_left(p.q[j]);
        if (d.shape(p.q[j], p.q[j + 1]) == FShape::Pocket) base += 1;
        if (p.pushed[j]) fin += 8 * d.mountains_left(p.q[j]);
    }
    std::unordered_map<int, int> smtn;
    std::unordered_map<long long, FShape> sshape;
    for (const auto& a : p.arcs) {
        if (a.shape == FShape::Biarc) fin += 8;
        if (a.shape == FShape::Mountain) ++smtn[a.left];
        sshape[static_cast<long long>(std::min(a.left, a.right)) * (1LL << 32) + std::max(a.left, a.right)] = a.shape;
    }
    for (size_t k = 0; k + 1 < p.F.size(); ++k) {
        int f = p.F[k], g = p.F[k + 1];
        auto it = qidx.find(f);
        std::int64_t cnt = smtn.count(f) ? smtn[f] : 0;
        if (it != qidx.end() && it->second < t && !p.pushed[it->second]) cnt += d.mountains_left(f);
        fin += 8 * cnt;
        auto ss = sshape.find(static_cast<long long>(std::min(f, g)) * (1LL << 32) + std::max(f, g));
        FShape sh = ss != sshape.end() ? ss->second : d.shape(f, g);
        if (sh == FShape::Pocket) fin += 1;
    }
    p.delta = Credit::eighths(fin - base);
}

std::optional<Planned> plan_search(const FrameDrawing& d, const std::vector<PlaceVertex>& S, SearchStats* stats,
                                   long long node_budget) {
    Model m(d, region_of(d, S), S);
    const int k = static_cast<int>(S.size());
    // candidate slots per S vertex: its base span widened by one slot
    std::vector<std::vector<int>> cand(k);
    std::vector<std::pair<int, int>> span(k);
    for (int s = 0; s < k; ++s) {
        int lo = m.t, hi = 0;
        for (int w : S[s].nbrs) {
            int a, b;
            if (m.is_base(w)) a = b = m.qidx.at(w);
            else { a = span[m.sidx.at(w)].first; b = span[m.sidx.at(w)].second; }
            lo = std::min(lo, a);
            hi = std::max(hi, b);
        }
        span[s] = {lo, hi};
        for (int j = std::max(0, lo - 1); j <= std::min(m.t - 1, hi); ++j) cand[s].push_back(j);
    }
    Searcher sr(m, node_budget, std::numeric_limits<Key>::max());
    long long skeletons = 0;
    std::vector<int> slot(k, 0);
    std::function<void(int)> rec = [&](int s) {
        if (sr.nodes > node_budget) return;
        if (s == k) {
            m.slot = slot;
            m.groups.assign(m.t, {});
            for (int x = 0; x < k; ++x) m.groups[slot[x]].push_back(x);
            enumerate_perms(m, 0, [&] {
                if (sr.nodes > node_budget) return;
                if (!m.build_skeleton()) return;
                ++skeletons;
                sr.run_skeleton();
            });
            return;
        }
        for (int j : cand[s]) {
            slot[s] = j;
            rec(s + 1);
        }
    };
    rec(0);
    if (stats) {
        stats->skeletons += skeletons;
        stats->nodes += sr.nodes;
    }
    if (!sr.found) return std::nullopt;
    return to_planned(m, sr.best_slot, sr.best_groups, sr.best_asg, sr.best);
}

std::string check_plan(const FrameDrawing& d, const Planned& p) {
    std::vector<PlaceVertex> S;
    // neighbors of each placed vertex among region and earlier S vertices
    const auto& g = d.graph();
    for (size_t k = 0; k < p.S.size(); ++k) {
        PlaceVertex pv{p.S[k], {}};
        S.push_back(pv);
    }
    (void)g;
    // Rebuild the halfcircles of the plan in the token model and verify.
    const int t = static_cast<int>(p.q.size()) - 1;
    std::unordered_map<int, int> qidx;
    for (int j = 0; j <= t; ++j) qidx[p.q[j]] = j;
    std::vector<Key> tokkey;
    std::unordered_map<int, Key> vk;
    std::unordered_map<int, Key> xk;
    int major = 0;
    std::vector<HC> hcs;
    std::vector<Key> px(t, -1), bl(t, -1);
    std::vector<std::vector<Key>> group_keys(t);
    for (int j = 0; j < t; ++j) {
        vk[p.q[j]] = vkey(major++);
        for (const auto& tok : p.groups[j]) {
            Key k = vkey(major++);
            if (tok.is_vertex) vk[tok.id] = k;
            else xk[tok.id] = k;
            group_keys[j].push_back(k);
        }
        if (p.pushed[j]) px[j] = vkey(major++);
        if (d.shape(p.q[j], p.q[j + 1]) != FShape::Pocket) bl[j] = vkey(major++);
    }
    vk[p.q[t]] = vkey(major++);
    for (int j = 0; j < t; ++j) {
        Key a = vk[p.q[j]], b = vk[p.q[j + 1]];
        if (d.shape(p.q[j], p.q[j + 1]) == FShape::Pocket) {
            if (p.pushed[j]) return "pocket slot marked for push-down";
            hcs.push_back({a, b, false});
        } else if (!p.pushed[j]) {
            if (!p.groups[j].empty()) return "vertex placed under an unpushed mountain";
            hcs.push_back({a, b, true});
            hcs.push_back({a, bl[j], true});
            hcs.push_back({bl[j], b, true});
            hcs.push_back({a, bl[j], false});
            hcs.push_back({bl[j], b, false});
        } else {
            hcs.push_back({a, px[j], false});
            hcs.push_back({px[j], b, true});
            hcs.push_back({px[j], bl[j], true});
            hcs.push_back({a, bl[j], false});
            hcs.push_back({bl[j], b, true});
        }
    }
    const size_t nreps = hcs.size();
    std::vector<int> pocket_gap_block;
    for (const auto& a : p.arcs) {
        if (!vk.count(a.left) || !vk.count(a.right)) return "arc endpoint outside the plan";
        Key ka = vk[a.left], kb = vk[a.right];
        if (ka >= kb) return "arc endpoints out of order";
        if (a.shape == FShape::Biarc) {
            if (!xk.count(a.edge)) return "biarc without crossing token";
            Key x = xk[a.edge];
            if (!(ka < x && x < kb)) return "biarc is not monotone";
            hcs.push_back({ka, x, false});
            hcs.push_back({x, kb, true});
        } else {
            hcs.push_back({ka, kb, a.shape == FShape::Mountain});
        }
    }
    for (size_t x = 0; x < hcs.size(); ++x)
        for (size_t y = std::max(x + 1, nreps); y < hcs.size(); ++y)
            if (hc_cross(hcs[x], hcs[y])) return "plan has crossing halfcircles";
    // envelope
    std::vector<Key> fk;
    for (int f : p.F) {
        if (!vk.count(f)) return "contour vertex outside the plan";
        fk.push_back(vk[f]);
        if (fk.size() > 1 && fk.back() <= fk[fk.size() - 2]) return "final contour out of order";
    }
    std::unordered_map<long long, FShape> sshape;
    for (const auto& a : p.arcs) sshape[static_cast<long long>(a.left) * (1LL << 32) + a.right] = a.shape;
    std::vector<FShape> fshape;
    for (size_t k = 0; k + 1 < p.F.size(); ++k) {
        auto it = sshape.find(static_cast<long long>(p.F[k]) * (1LL << 32) + p.F[k + 1]);
        if (it != sshape.end()) fshape.push_back(it->second);
        else {
            auto ia = qidx.find(p.F[k]);
            if (ia == qidx.end() || ia->second == t || p.q[ia->second + 1] != p.F[k + 1]) return "final contour edge not drawn";
            int j = ia->second;
            if (!p.groups[j].empty() || p.pushed[j]) return "modified base arc kept on the contour";
            fshape.push_back(d.shape(p.F[k], p.F[k + 1]));
        }
        if (fshape.back() != FShape::Pocket && fshape.back() != FShape::Mountain) return "final contour edge is a biarc";
    }
    std::vector<Key> all_keys;
    for (auto& [v, k] : vk) all_keys.push_back(k);
    for (auto& [e, k] : xk) all_keys.push_back(k);
    for (Key k : px) if (k >= 0) all_keys.push_back(k);
    for (Key k : bl) if (k >= 0) all_keys.push_back(k);
    for (const HC& h : hcs) {
        if (!h.upper) continue;
        auto it = std::upper_bound(fk.begin(), fk.end(), h.a);
        if (it == fk.begin() || it == fk.end()) return "upper arc outside the final contour";
        size_t k = static_cast<size_t>(it - fk.begin()) - 1;
        if (h.b > fk[k + 1]) return "upper arc above the final contour";
        if (h.a == fk[k] && h.b == fk[k + 1]) continue;
        if (fshape[k] != FShape::Mountain) return "arc above a final contour pocket";
    }
    for (size_t k = 0; k + 1 < p.F.size(); ++k) {
        if (fshape[k] != FShape::Pocket) continue;
        for (Key x : all_keys)
            if (fk[k] < x && x < fk[k + 1]) return "final contour pocket is not spine-adjacent";
    }
    return {};
}

}  // namespace arcdiag::drawer
