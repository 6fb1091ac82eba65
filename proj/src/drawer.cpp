#include "arcdiag/drawer.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "arcdiag/error.hpp"
#include "layout.hpp"

namespace arcdiag::drawer {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw Error("drawer: " + msg); }

bool is_pow2(int x) { return x > 0 && (x & (x - 1)) == 0; }

}  // namespace

const char* config_name(ConfigType c) {
    switch (c) {
        case ConfigType::A: return "a";
        case ConfigType::B: return "b";
        case ConfigType::C: return "c";
        case ConfigType::D: return "d";
        case ConfigType::E: return "e";
        case ConfigType::F: return "f";
        case ConfigType::G: return "g";
        case ConfigType::H: return "h";
        case ConfigType::Iota: return "iota";
        case ConfigType::J: return "j";
        case ConfigType::K: return "k";
    }
    return "?";
}

Credit config_debt(ConfigType c) {
    switch (c) {
        case ConfigType::A:
        case ConfigType::B:
        case ConfigType::C: return kPi * 3;
        case ConfigType::D:
        case ConfigType::E:
        case ConfigType::F: return kPi;
        case ConfigType::G:
        case ConfigType::H: return kPi * 2;
        case ConfigType::Iota: return kPi * 4;
        case ConfigType::J:
        case ConfigType::K: return kPi * 5;
    }
    return {};
}

int biarc_bound(int n) {
    // floor((15 n - 40) / 16) with floor semantics for small n
    long long num = 15LL * n - 40;
    return static_cast<int>(num >= 0 ? num / 16 : -((-num + 15) / 16));
}

// Per-step worker.  Holds the bookkeeping of one insertion.
struct StepRunner {
    DualDrawing& s;
    int v = 0;
    std::vector<int> nbrs;  // forward order

    struct Option {
        Credit delta;
        std::vector<int> joint;  // earlier vertices placed again together with v
        Planned plan;
        bool is_default = false;
    };

    explicit StepRunner(DualDrawing& st) : s(st) {}

    FrameDrawing& frame(int f) { return f == 0 ? *s.fwd_ : *s.rev_; }

    std::vector<int> frame_nbrs(int f, const std::vector<int>& orig) const {
        if (f == 0) return orig;
        return {orig.rbegin(), orig.rend()};
    }

    // Placed neighbors of x, in forward contour order.
    std::vector<int> contour_neighbors(int x) {
        const FrameDrawing& d = *s.fwd_;
        const auto& rot = s.t_.neighbors(x);
        std::unordered_set<int> placed;
        for (int w : rot)
            if (d.placed(w)) placed.insert(w);
        if (placed.size() < 2) fail("vertex " + std::to_string(x) + " has fewer than two placed neighbors");
        int start = 0;
        for (int w : placed) {
            if (!d.on_contour(w)) fail("placed neighbor " + std::to_string(w) + " of " + std::to_string(x) + " is not on the contour");
            if (w == d.left_root() || !placed.count(d.contour_prev(w))) {
                if (start) fail("neighbors of " + std::to_string(x) + " are not consecutive on the contour");
                start = w;
            }
        }
        std::vector<int> out;
        for (int w = start; w != 0 && placed.count(w); w = (w == d.right_root() ? 0 : d.contour_next(w)))
            out.push_back(w);
        if (out.size() != placed.size()) fail("neighbors of " + std::to_string(x) + " are not consecutive on the contour");
        return out;
    }

    FShape shape(int f, int a, int b) { return frame(f).shape(a, b); }

    bool all_mountains(int f) {
        for (size_t k = 0; k + 1 < nbrs.size(); ++k)
            if (shape(f, nbrs[k], nbrs[k + 1]) != FShape::Mountain) return false;
        return true;
    }

    std::string pattern(int f) {
        std::string p;
        for (size_t k = 0; k + 1 < nbrs.size(); ++k)
            p += shape(f, nbrs[k], nbrs[k + 1]) == FShape::Pocket ? 'P' : 'M';
        return p;
    }

    // Configuration opened by the default insertion of an untouched vertex.
    std::optional<ConfigType> table() {
        const size_t deg = nbrs.size();
        if (deg == 4 && all_mountains(0) && all_mountains(1)) return ConfigType::A;
        if (deg == 2 && all_mountains(0) && all_mountains(1)) return ConfigType::C;
        if (deg != 3) return std::nullopt;
        std::string key = pattern(0) + "|" + pattern(1);
        if (key == "MM|MM") return ConfigType::B;
        if (key == "MM|PM") return ConfigType::G;
        if (key == "MP|MM") return ConfigType::H;
        if (key == "MM|PP") return ConfigType::D;
        if (key == "PP|MM") return ConfigType::E;
        if (key == "MP|PM") return ConfigType::F;
        return std::nullopt;
    }

    std::vector<int> touched() {
        std::vector<int> ids;
        for (int x : nbrs) {
            int c = s.config_of_[x];
            if (c >= 0 && std::find(ids.begin(), ids.end(), c) == ids.end()) ids.push_back(c);
        }
        return ids;
    }

    int position(int x) const {
        for (size_t k = 0; k < nbrs.size(); ++k)
            if (nbrs[k] == x) return static_cast<int>(k);
        return -1;
    }
    bool interior(int x) const {
        int p = position(x);
        return p > 0 && p + 1 < static_cast<int>(nbrs.size());
    }

    // Leftmost and rightmost touched configurations.
    std::pair<int, int> extremes(const std::vector<int>& ids) {
        int cl = -1, cr = -1;
        for (int x : nbrs) {
            int c = s.config_of_[x];
            if (c < 0) continue;
            if (cl < 0) cl = c;
            cr = c;
        }
        (void)ids;
        return {cl, cr};
    }

    std::string case_label(const std::vector<int>& ids) {
        if (ids.empty()) return "default";
        const size_t deg = nbrs.size();
        if (deg == 2) return "1";
        auto [cl, cr] = extremes(ids);
        bool fully = false;
        for (int c : ids)
            for (int m : s.configs_[c].members)
                if (interior(m)) fully = true;
        if (deg >= 5) {
            if (!fully) return "2a";
            return shape(0, nbrs[deg - 2], nbrs[deg - 1]) == FShape::Pocket ? "2b" : "2c";
        }
        const OpenConfig& r = s.configs_[cr];
        ConfigType rt = r.type;
        bool big = rt == ConfigType::Iota || rt == ConfigType::J || rt == ConfigType::K;
        if (interior(r.members.front())) {
            if (deg == 4 && big) return "3a.3";
            if (big) return "3a.2";
            return "3a.1";
        }
        switch (rt) {
            case ConfigType::K: return "3b.1";
            case ConfigType::J: return "3b.2";
            case ConfigType::Iota: return "3b.3";
            case ConfigType::F:
            case ConfigType::H: return "3b.5";
            case ConfigType::E: return "3b.6";
            default: return "3b.4";
        }
        (void)cl;
    }

    void close_config(int c) {
        for (int m : s.configs_[c].members) s.config_of_[m] = -1;
        s.configs_[c].members.clear();
        s.configs_[c].debt = {};
    }

    int open_config(ConfigType type, std::vector<int> members) {
        int id = static_cast<int>(s.configs_.size());
        for (int m : members) s.config_of_[m] = id;
        s.configs_.push_back({type, std::move(members), config_debt(type)});
        return id;
    }

    // Every open configuration needs a mountain and a pocket among the arcs
    // at its members, in both drawings.
    bool has_mountain_and_pocket(const std::vector<int>& members) {
        for (int f = 0; f < 2; ++f) {
            bool m = false, p = false;
            for (int x : members)
                for (int w : s.t_.neighbors(x)) {
                    FShape sh = frame(f).shape(x, w);
                    m |= sh == FShape::Mountain;
                    p |= sh == FShape::Pocket;
                }
            if (!m || !p) return false;
        }
        return true;
    }

    // --- options ------------------------------------------------------

    std::vector<PlaceVertex> placements(int f, const std::vector<int>& joint) {
        std::vector<PlaceVertex> S;
        for (int x : joint) S.push_back({x, frame_nbrs(f, s.nbrs_of_[x])});
        S.push_back({v, frame_nbrs(f, nbrs)});
        return S;
    }

    // Records that hold the vertices of `joint` in frame f, ascending.
    std::vector<int> records_of(int f, const std::vector<int>& joint) {
        std::vector<int> r;
        for (int x : joint) r.push_back(frame(f).record_of(x));
        std::sort(r.begin(), r.end());
        r.erase(std::unique(r.begin(), r.end()), r.end());
        return r;
    }

    // Expands `joint` to every vertex of the involved records, sorted by
    // insertion position.  Empty optional when some record cannot move.
    std::optional<std::vector<int>> closure(int f, std::vector<int> joint) {
        FrameDrawing& d = frame(f);
        for (int rid : records_of(f, joint)) {
            if (rid < 0 || !d.retractable(rid)) return std::nullopt;
            for (int x : d.record_vertices(rid))
                if (std::find(joint.begin(), joint.end(), x) == joint.end()) joint.push_back(x);
        }
        std::sort(joint.begin(), joint.end(), [&](int a, int b) { return s.pos_[a] < s.pos_[b]; });
        return joint;
    }

    // Retracts the records of `joint` and returns their plans for restoring.
    std::optional<std::vector<Planned>> lift(int f, const std::vector<int>& joint) {
        FrameDrawing& d = frame(f);
        auto rids = records_of(f, joint);
        std::vector<Planned> plans;
        for (int rid : rids) plans.push_back(d.record_plan(rid));
        for (int k = static_cast<int>(rids.size()) - 1; k >= 0; --k) {
            if (!d.retractable(rids[k])) {
                for (size_t j = k + 1; j < rids.size(); ++j) d.apply(plans[j]);
                return std::nullopt;
            }
            d.retract(rids[k]);
        }
        return plans;
    }

    void restore(int f, const std::vector<Planned>& plans) {
        for (const auto& p : plans) frame(f).apply(p);
    }

    std::optional<Option> searched(int f, const std::vector<int>& joint_in) {
        FrameDrawing& d = frame(f);
        std::vector<int> joint;
        if (!joint_in.empty()) {
            auto c = closure(f, joint_in);
            if (!c) return std::nullopt;
            joint = *c;
        }
        Credit before = d.phi();
        std::vector<Planned> saved;
        if (!joint.empty()) {
            auto l = lift(f, joint);
            if (!l) return std::nullopt;
            saved = std::move(*l);
        }
        Credit mid = d.phi();
        std::optional<Planned> p;
        try {
            SearchStats st;
            p = plan_search(d, placements(f, joint), &st, s.opt_.search_budget);
            ++s.stats_.searches;
            s.stats_.search_nodes += st.nodes;
            if (p && !check_plan(d, *p).empty()) p.reset();
        } catch (const Error&) {
            p.reset();
        }
        restore(f, saved);
        if (!p) return std::nullopt;
        Option o;
        o.delta = (mid - before) + p->delta;
        o.joint = joint;
        o.plan = std::move(*p);
        return o;
    }

    void commit(int f, const Option& o) {
        FrameDrawing& d = frame(f);
        if (!o.joint.empty()) {
            auto l = lift(f, o.joint);
            if (!l) fail("joint placement became unavailable");
            if (!o.is_default && !check_plan(d, o.plan).empty()) fail("joint placement is inconsistent");
        }
        d.apply(o.plan);
    }

    Option default_option(int f) {
        Option o;
        o.plan = plan_default(frame(f), {v, frame_nbrs(f, nbrs)});
        o.delta = o.plan.delta;
        o.is_default = true;
        return o;
    }

    // --- reordering -------------------------------------------------

    bool try_reorder(const std::vector<int>& ids) {
        if (s.in_reorder_ || ids.empty()) return false;
        const size_t deg = nbrs.size();
        if (deg != 3 && deg != 4) return false;
        auto [cl, cr] = extremes(ids);
        int cid = -1;
        ConfigType back{};
        const OpenConfig& R = s.configs_[cr];
        const OpenConfig& L = s.configs_[cl];
        if (R.type == ConfigType::J) { cid = cr; back = ConfigType::G; }
        else if (L.type == ConfigType::K) { cid = cl; back = ConfigType::H; }
        else if (deg == 4 && R.type == ConfigType::Iota) { cid = cr; back = ConfigType::B; }
        else if (deg == 4 && L.type == ConfigType::Iota) { cid = cl; back = ConfigType::B; }
        if (cid < 0) return false;
        const OpenConfig& C = s.configs_[cid];
        if (C.members.size() != 2) return false;
        int c2 = C.members.back();
        if (position(c2) >= 0 || s.order_.back() != c2) return false;
        // c2's neighbors must stay on the contour once v is in.
        for (int a : {s.nbrs_of_[c2].front(), s.nbrs_of_[c2].back()})
            if (interior(a)) return false;
        for (int f = 0; f < 2; ++f) {
            int rid = frame(f).record_of(c2);
            if (rid < 0 || !frame(f).retractable(rid) || frame(f).record_vertices(rid).size() != 1) return false;
        }
        for (int f = 0; f < 2; ++f) frame(f).retract(frame(f).record_of(c2));
        s.debt_ -= C.debt - config_debt(back);
        int c1 = C.members.front();
        close_config(cid);
        open_config(back, {c1});
        s.order_.pop_back();
        s.pos_[c2] = -1;
        s.ledger_.pop_back();
        --s.inserted_;
        s.pending_.push_front(c2);
        s.pending_.push_front(v);
        ++s.stats_.reorders;
        s.stats_.max_backtrack = std::max(s.stats_.max_backtrack, 1);
        return true;
    }

    // --- main step ------------------------------------------------------

    LedgerEntry run() {
        v = s.pending_.front();
        s.pending_.pop_front();
        nbrs = contour_neighbors(v);
        auto ids = touched();
        if (try_reorder(ids)) {
            s.in_reorder_ = true;
            StepRunner again(s);
            LedgerEntry e;
            try {
                e = again.run();
            } catch (...) {
                s.in_reorder_ = false;
                throw;
            }
            s.in_reorder_ = false;
            e.case_label = (e.case_label.rfind("3b", 0) == 0 ? std::string("3b.2/") : std::string("reorder/")) + e.case_label;
            return e;
        }

        const Credit phi0 = s.potential(), debt0 = s.debt_;
        const Credit slack0 = s.slack();
        LedgerEntry entry;
        entry.vertex = v;
        entry.case_label = case_label(ids);

        Option opt[2] = {default_option(0), default_option(1)};
        Credit dD;
        std::optional<ConfigType> opens;
        std::vector<int> open_members{v};

        if (ids.empty()) {
            opens = table();
            if (opens) dD = config_debt(*opens);
        } else {
            // transfers into a bigger configuration
            const size_t deg = nbrs.size();
            if (ids.size() == 1) {
                const OpenConfig& C = s.configs_[ids[0]];
                if (deg == 2 && (C.type == ConfigType::G || C.type == ConfigType::H) && all_mountains(0) &&
                    all_mountains(1)) {
                    opens = C.type == ConfigType::G ? ConfigType::J : ConfigType::K;
                    entry.case_label = "1";
                } else if (deg == 3 && C.type == ConfigType::C) {
                    int c = C.members.front();
                    int p = position(c);
                    if (p == 0 || p == 2) {
                        int a = p == 2 ? nbrs[0] : nbrs[1], b = p == 2 ? nbrs[1] : nbrs[2];
                        if (shape(0, a, b) == FShape::Mountain && shape(1, a, b) == FShape::Mountain) {
                            opens = ConfigType::Iota;
                            entry.case_label = "3b.4";
                        }
                    }
                }
                if (opens) {
                    open_members = C.members;
                    open_members.push_back(v);
                    dD = config_debt(*opens) - C.debt;
                }
            }
            if (!opens)
                for (int c : ids) dD -= s.configs_[c].debt;
        }

        auto slack_after = [&](Credit c) { return slack0 + kAlpha - c + dD; };
        const Option defaults[2] = {opt[0], opt[1]};
        const auto saved_opens = opens;
        Credit cost = opt[0].delta + opt[1].delta;
        if (slack_after(cost) < Credit::whole(5)) {
            // Search for cheaper layouts, possibly moving configuration members.
            std::vector<std::vector<int>> joints{{}};
            if (!opens)
                for (int c : ids) {
                    joints.push_back(s.configs_[c].members);
                }
            if (!opens && ids.size() > 1) {
                std::vector<int> all;
                for (int c : ids)
                    for (int m : s.configs_[c].members) all.push_back(m);
                joints.push_back(all);
            }
            for (int f = 0; f < 2; ++f)
                for (const auto& j : joints) {
                    auto o = searched(f, j);
                    if (o && o->delta < opt[f].delta) opt[f] = std::move(*o);
                }
            cost = opt[0].delta + opt[1].delta;
        }

        // Transfers and table openings assume the standard geometry.
        auto cancel_open = [&] {
            dD = {};
            for (int c : ids) dD -= s.configs_[c].debt;
            opens.reset();
        };
        if (opens && (!opt[0].is_default || !opt[1].is_default)) {
            Credit with_open = slack_after(defaults[0].delta + defaults[1].delta);
            Credit keep = dD;
            cancel_open();
            if (slack_after(cost) < with_open) {
                opt[0] = defaults[0];
                opt[1] = defaults[1];
                dD = keep;
                opens = saved_opens;
            }
        }

        for (int f = 0; f < 2; ++f) commit(f, opt[f]);
        s.nbrs_of_[v] = nbrs;
        s.pos_[v] = static_cast<int>(s.order_.size());
        s.order_.push_back(v);
        ++s.inserted_;

        for (int c : ids) close_config(c);
        if (opens) {
            if (has_mountain_and_pocket(open_members)) {
                open_config(*opens, open_members);
                entry.opened = config_name(*opens);
            } else {
                cancel_open();
            }
        }
        s.debt_ = debt0 + dD;

        entry.i = s.inserted_;
        entry.cost = s.potential() - phi0;
        entry.debt_change = s.debt_ - debt0;
        entry.slack = s.slack();
        if (!opt[0].is_default || !opt[1].is_default) entry.case_label += "*";

        s.check_step(entry, opt[0].plan.F, opt[1].plan.F);
        return entry;
    }
};

DualDrawing::DualDrawing(const Triangulation& t, const CanonicalOrder& o, DrawOptions opt)
    : t_(t), o_(o), opt_(opt) {
    const int n = t.vertex_count();
    if (o.size() != n || n < 3) fail("canonical order does not match the graph");
    const int v1 = o.vertex(1), v2 = o.vertex(2), v3 = o.vertex(3);
    fwd_ = std::make_unique<FrameDrawing>(t, v1, v2, v3);
    rev_ = std::make_unique<FrameDrawing>(t, v2, v1, v3);
    for (int i = 4; i <= n; ++i) pending_.push_back(o.vertex(i));
    order_ = {v1, v2, v3};
    pos_.assign(n + 1, -1);
    pos_[v1] = 0; pos_[v2] = 1; pos_[v3] = 2;
    nbrs_of_.assign(n + 1, {});
    nbrs_of_[v3] = {v1, v2};
    config_of_.assign(n + 1, -1);
    inserted_ = 3;
    full_audit_ = opt_.audit == AuditLevel::Full || (opt_.audit == AuditLevel::Auto && n <= 400);
    LedgerEntry base;
    base.i = 3;
    base.vertex = v3;
    base.case_label = "base";
    base.cost = potential();
    base.slack = slack();
    ledger_.push_back(base);
    if (opt_.audit != AuditLevel::Off) {
        std::string err = audit(true);
        if (!err.empty()) fail("base state: " + err);
    }
}

DualDrawing::~DualDrawing() = default;

const LedgerEntry& DualDrawing::step() {
    if (done()) fail("no vertex left to insert");
    StepRunner r(*this);
    LedgerEntry e = r.run();
    ledger_.push_back(std::move(e));
    return ledger_.back();
}

void DualDrawing::run() {
    while (!done()) step();
    finish();
}

void DualDrawing::violation(const std::string& msg) {
    if (opt_.strict) fail(msg);
    violations_.push_back(msg);
}

void DualDrawing::check_step(const LedgerEntry& e, const std::vector<int>& ff, const std::vector<int>& fr) {
    if (e.slack < Credit::whole(5))
        violation("ledger violated at i=" + std::to_string(e.i) + " (vertex " + std::to_string(e.vertex) + ", case " +
                  e.case_label + "): slack " + e.slack.str() + " < 5");
    if (opt_.audit == AuditLevel::Off) return;
    std::string err;
    if (full_audit_ || is_pow2(inserted_) || done()) {
        err = audit(true);
    } else {
        err = fwd_->audit_local(ff.front(), ff.back());
        if (err.empty()) err = rev_->audit_local(fr.front(), fr.back());
        if (err.empty()) err = audit(false);
    }
    if (!err.empty())
        violation("invariant violated at i=" + std::to_string(e.i) + " (vertex " + std::to_string(e.vertex) + ", case " +
                  e.case_label + "): " + err);
}

void DualDrawing::finish() {
    // Remaining debts are paid from the credits left on the final contours.
    Credit contour = Credit::whole(fwd_->contour_mountain_credit() + rev_->contour_mountain_credit()) +
                     kPi * (fwd_->contour_pockets() + rev_->contour_pockets());
    if (debt_ > contour)
        violation("open debt " + debt_.str() + " exceeds the final contour credit " + contour.str());
    int bf = static_cast<int>(fwd_->biarcs()), br = static_cast<int>(rev_->biarcs());
    if (std::min(bf, br) > biarc_bound(t_.vertex_count()))
        violation("biarc bound exceeded: " + std::to_string(std::min(bf, br)) + " > " +
                  std::to_string(biarc_bound(t_.vertex_count())));
}

std::vector<OpenConfig> DualDrawing::open_configs() const {
    std::vector<OpenConfig> out;
    for (const auto& c : configs_)
        if (!c.members.empty()) out.push_back(c);
    return out;
}

std::string DualDrawing::audit(bool full) const {
    if (full) {
        std::string e = fwd_->audit();
        if (!e.empty()) return "forward: " + e;
        e = rev_->audit();
        if (!e.empty()) return "reverse: " + e;
    }
    Credit d;
    int open = 0;
    for (size_t id = 0; id < configs_.size(); ++id) {
        const auto& c = configs_[id];
        if (c.members.empty()) continue;
        if (!full && id + 2 < configs_.size()) continue;
        ++open;
        if (c.debt != config_debt(c.type) || c.debt > kMaxDebt) return "configuration with a wrong debt";
        if (c.members.size() > 2) return "configuration with more than two vertices";
        for (int m : c.members) {
            if (config_of_[m] != static_cast<int>(id)) return "configuration tag mismatch";
            if (!fwd_->on_contour(m) || !rev_->on_contour(m)) return "configuration vertex left the contour";
            for (int w : {fwd_->contour_prev(m), fwd_->contour_next(m)})
                if (w > 0 && config_of_[w] >= 0 && config_of_[w] != static_cast<int>(id))
                    return "configurations share a contour arc";
        }
        for (const FrameDrawing* f : {fwd_.get(), rev_.get()}) {
            bool mt = false, pk = false;
            for (int m : c.members)
                for (int w : t_.neighbors(m)) {
                    mt |= f->shape(m, w) == FShape::Mountain;
                    pk |= f->shape(m, w) == FShape::Pocket;
                }
            if (!mt || !pk) return "configuration without both a mountain and a pocket";
        }
    }
    if (full) {
        for (const auto& c : configs_) d += c.members.empty() ? Credit{} : c.debt;
        if (d != debt_) return "debt total drifted";
        for (size_t v = 1; v < config_of_.size(); ++v) {
            int c = config_of_[v];
            if (c < 0) continue;
            const auto& mem = configs_[c].members;
            if (std::find(mem.begin(), mem.end(), static_cast<int>(v)) == mem.end()) return "stale configuration tag";
        }
    }
    (void)open;
    if (slack() < Credit::whole(5)) return "ledger slack below 5";
    return {};
}

DrawResult DualDrawing::select_final() const {
    DrawResult r;
    r.forward_biarcs = static_cast<int>(fwd_->biarcs());
    r.reverse_biarcs = static_cast<int>(rev_->biarcs());
    r.chose_reverse = r.reverse_biarcs < r.forward_biarcs;
    r.diagram = r.chose_reverse ? rev_->to_diagram() : fwd_->to_diagram();
    r.bound = biarc_bound(t_.vertex_count());
    r.ledger = ledger_;
    if (done()) r.effective_order = complete_order(t_, order_);
    r.stats = stats_;
    r.stats.mutations = fwd_->mutations() + rev_->mutations();
    r.violations = violations_;
    return r;
}

DrawResult draw(const Triangulation& t, const CanonicalOrder& o, const DrawOptions& opt) {
    if (t.vertex_count() == 3) {
        DualDrawing dd(t, o, opt);
        return dd.select_final();
    }
    std::string err = check_canonical(t, o);
    if (!err.empty()) fail("invalid canonical order: " + err);
    DualDrawing dd(t, o, opt);
    dd.run();
    return dd.select_final();
}

std::string ledger_report(const DrawResult& r) {
    std::ostringstream os;
    for (const auto& e : r.ledger) {
        os << "i=" << e.i << " v=" << e.vertex << " case=" << e.case_label << " cost=" << e.cost.str()
           << " debt=" << e.debt_change.str() << " slack=" << e.slack.str();
        if (!e.opened.empty()) os << " open=" << e.opened;
        os << '\n';
    }
    os << "forward=" << r.forward_biarcs << " reverse=" << r.reverse_biarcs
       << " chosen=" << (r.chose_reverse ? "reverse" : "forward") << " bound=" << r.bound << '\n';
    return os.str();
}

}  // namespace arcdiag::drawer
