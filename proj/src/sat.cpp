#include "arcdiag/sat.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <sys/wait.h>
#include <unistd.h>

#include "arcdiag/error.hpp"

namespace arcdiag::sat {

namespace {
[[noreturn]] void fail(const std::string& msg) { throw Error("sat: " + msg); }
}  // namespace

Graph graph_of(const Triangulation& t) {
    Graph g;
    g.n = t.vertex_count();
    for (const auto& e : t.edges()) g.edges.push_back({e.u, e.v});
    return g;
}

SatVars::SatVars(const Graph& g, int kappa) : n_(g.n), m_(static_cast<int>(g.edges.size())), kappa_(kappa) {
    items_ = n_ + m_;
    for (auto [u, v] : g.edges) ends_.push_back({std::min(u, v), std::max(u, v)});
    chi_index_.assign(static_cast<std::size_t>(m_) * m_ * 9, 0);
    int next = sigma_count() + beta_count() + phi_count() + 1;
    for (int k = 1; k <= m_; ++k)
        for (int k2 = k + 1; k2 <= m_; ++k2)
            for (int h = 0; h < 3; ++h)
                for (int h2 = 0; h2 < 3; ++h2) {
                    auto [a, b] = half_edge(k, h);
                    auto [c, d] = half_edge(k2, h2);
                    if (a == c || a == d || b == c || b == d) continue;
                    chi_.push_back({k, k2, h, h2, next});
                    chi_index_[((static_cast<std::size_t>(k - 1) * m_ + (k2 - 1)) * 3 + h) * 3 + h2] = next;
                    ++next;
                }
}

int SatVars::sigma(int i, int j) const {
    if (i == j || i < 1 || j < 1 || i > items_ || j > items_) fail("sigma index out of range");
    return (i - 1) * (items_ - 1) + (j < i ? j : j - 1);
}

int SatVars::beta(int k, int j) const { return sigma_count() + (k - 1) * kappa_ + j; }

int SatVars::phi(int k, int half, int page) const {
    return sigma_count() + beta_count() + (k - 1) * 6 + half * 2 + page;
}

int SatVars::chi(int k, int k2, int half, int half2) const {
    return chi_index_[((static_cast<std::size_t>(k - 1) * m_ + (k2 - 1)) * 3 + half) * 3 + half2];
}

std::pair<int, int> SatVars::half_edge(int k, int half) const {
    auto [u, v] = ends_[k - 1];
    if (half == 0) return {u, v};
    return {half == 1 ? u : v, n_ + k};
}

CnfInstance encode(const Graph& g, int kappa, const EncodeOptions& opts) {
    const int n = g.n, m = static_cast<int>(g.edges.size());
    if (kappa < 0) fail("negative biarc budget");
    if (kappa > m) fail("biarc budget " + std::to_string(kappa) + " exceeds the edge count " + std::to_string(m));
    std::map<std::pair<int, int>, int> eid;
    for (int k = 1; k <= m; ++k) {
        auto [u, v] = g.edges[k - 1];
        if (u == v || u < 1 || v < 1 || u > n || v > n) fail("bad edge " + std::to_string(u) + "-" + std::to_string(v));
        if (!eid.emplace(std::minmax(u, v), k).second) fail("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    CnfInstance c;
    c.vars = SatVars(g, kappa);
    const SatVars& V = c.vars;
    c.num_vars = V.total();
    const int N = V.items();
    auto group = [&](const std::string& text) { c.comments.push_back({c.clauses.size(), text}); };
    auto add = [&](std::vector<int> cl) { c.clauses.push_back(std::move(cl)); };
    auto s = [&](int i, int j) { return V.sigma(i, j); };
    auto ends = [&](int k) { return std::minmax(g.edges[k - 1].first, g.edges[k - 1].second); };

    group("order: each pair of spine items is ordered one way");
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j) {
            add({s(i, j), s(j, i)});
            add({-s(i, j), -s(j, i)});
        }
    group("order: transitivity");
    for (int i = 1; i <= N; ++i)
        for (int j = i + 1; j <= N; ++j)
            for (int k = j + 1; k <= N; ++k) {
                add({-s(i, j), -s(j, k), s(i, k)});
                add({s(i, j), s(j, k), -s(i, k)});
            }
    if (opts.monotone) {
        group("monotone: dummy between the endpoints");
        for (int k = 1; k <= m; ++k) {
            auto [i, j] = ends(k);
            add({s(i, n + k), s(j, n + k)});
            add({-s(i, n + k), -s(j, n + k)});
        }
    }
    group("budget: at most one edge per biarc slot");
    for (int j = 1; j <= kappa; ++j)
        for (int i = 1; i <= m; ++i)
            for (int k = i + 1; k <= m; ++k) add({-V.beta(i, j), -V.beta(k, j)});
    group("pages: edge or first half edge on a page");
    for (int k = 1; k <= m; ++k) add({V.phi(k, 0, 1), V.phi(k, 0, 2), V.phi(k, 1, 1), V.phi(k, 1, 2)});
    group("pages: edge or second half edge on a page");
    for (int k = 1; k <= m; ++k) add({V.phi(k, 0, 1), V.phi(k, 0, 2), V.phi(k, 2, 1), V.phi(k, 2, 2)});
    group("pages: proper edge on a page unless it is a biarc");
    for (int k = 1; k <= m; ++k) {
        std::vector<int> cl{V.phi(k, 0, 1), V.phi(k, 0, 2)};
        for (int j = 1; j <= kappa; ++j) cl.push_back(V.beta(k, j));
        add(cl);
    }
    const char* split[4] = {"biarc: halves not both on page 1", "biarc: halves not both on page 2",
                            "biarc: not drawn whole on page 1", "biarc: not drawn whole on page 2"};
    for (int r = 0; r < 4; ++r) {
        group(split[r]);
        for (int k = 1; k <= m; ++k)
            for (int j = 1; j <= kappa; ++j) {
                int b = -V.beta(k, j);
                if (r == 0) add({b, -V.phi(k, 1, 1), -V.phi(k, 2, 1)});
                if (r == 1) add({b, -V.phi(k, 1, 2), -V.phi(k, 2, 2)});
                if (r == 2) add({b, -V.phi(k, 0, 1)});
                if (r == 3) add({b, -V.phi(k, 0, 2)});
            }
    }
    group("sharing: half edges on a common page");
    for (const auto& x : V.chis())
        for (int l = 1; l <= 2; ++l) add({-V.phi(x.k, x.half, l), -V.phi(x.k2, x.half2, l), x.var});
    for (int r = 0; r < 8; ++r) {
        group("no interleaving: pattern " + std::to_string(r / 2 + 1) + (r % 2 ? "-" : "+"));
        for (const auto& x : V.chis()) {
            auto [a, b] = V.half_edge(x.k, x.half);
            auto [cc, d] = V.half_edge(x.k2, x.half2);
            const int chi = -x.var;
            switch (r) {
                case 0: add({chi, s(a, cc), s(cc, b), s(b, d)}); break;
                case 1: add({chi, -s(a, cc), -s(cc, b), -s(b, d)}); break;
                case 2: add({chi, s(b, cc), s(cc, a), s(a, d)}); break;
                case 3: add({chi, -s(b, cc), -s(cc, a), -s(a, d)}); break;
                case 4: add({chi, s(a, d), s(d, b), s(b, cc)}); break;
                case 5: add({chi, -s(a, d), -s(d, b), -s(b, cc)}); break;
                case 6: add({chi, s(b, d), s(d, a), s(a, cc)}); break;
                case 7: add({chi, -s(b, d), -s(d, a), -s(a, cc)}); break;
            }
        }
    }
    if (!opts.kleetope_faces.empty()) {
        group("kleetope: every face lets its inner vertex reach the spine");
        for (const auto& f : opts.kleetope_faces) {
            for (int k : f)
                if (k < 1 || k > m) fail("face names unknown edge " + std::to_string(k));
            for (int l = 1; l <= 2; ++l) {
                std::vector<int> cl{-V.phi(f[0], 0, l), -V.phi(f[1], 0, l), -V.phi(f[2], 0, l)};
                for (int j = 1; j <= kappa; ++j)
                    for (int k : f) cl.push_back(V.beta(k, j));
                add(cl);
            }
        }
    }
    if (opts.up_down_only) {
        group("up-down: left half of every biarc on page 1");
        for (int k = 1; k <= m; ++k) {
            auto [i, j] = ends(k);
            for (int l = 1; l <= kappa; ++l) {
                add({-V.beta(k, l), -s(i, j), V.phi(k, 1, 1)});
                add({-V.beta(k, l), s(i, j), V.phi(k, 2, 1)});
            }
        }
    }
    if (opts.outer_face) {
        auto [i, j, k] = *opts.outer_face;
        auto edge = [&](int a, int b) {
            auto it = eid.find(std::minmax(a, b));
            if (it == eid.end()) fail("outer face is not a triangle of the graph");
            return it->second;
        };
        if (i == j || j == k || i == k) fail("outer face is not a triangle of the graph");
        const int eij = edge(i, j), eik = edge(i, k), ejk = edge(j, k);
        const int tri[3] = {i, j, k};
        for (int r = 0; r < 3; ++r) {
            group("outer face: vertex " + std::to_string(r + 1) + " is extreme");
            int x = tri[r], y = tri[(r + 1) % 3], z = tri[(r + 2) % 3];
            if (r == 1) std::swap(y, z);  // (j; i, k) as written
            for (int l = 1; l <= n; ++l) {
                if (l == i || l == j || l == k) continue;
                add({-s(x, y), -s(x, z), s(x, l)});
                add({-s(y, x), -s(z, x), s(l, x)});
            }
        }
        // the six spine orders of the outer triangle
        struct Row {
            int p1a, p1b, p2a, p2b;  // literals -s(p1a,p1b), -s(p2a,p2b)
            int top, low1, low2;     // edge on page 1, edges on page 2
        };
        const Row rows[6] = {
            {i, j, j, k, eik, eij, ejk}, {j, i, k, j, eik, eij, ejk}, {j, k, k, i, eij, ejk, eik},
            {k, j, i, k, eij, ejk, eik}, {k, i, i, j, ejk, eik, eij}, {i, k, j, i, ejk, eik, eij},
        };
        for (int r = 0; r < 6; ++r) {
            group("outer face: spine order " + std::to_string(r + 1) + " closes the drawing");
            const Row& w = rows[r];
            add({-s(w.p1a, w.p1b), -s(w.p2a, w.p2b), V.phi(w.top, 0, 1)});
            add({-s(w.p1a, w.p1b), -s(w.p2a, w.p2b), V.phi(w.low1, 0, 2)});
            add({-s(w.p1a, w.p1b), -s(w.p2a, w.p2b), V.phi(w.low2, 0, 2)});
        }
    }
    return c;
}

CnfInstance encode_kleetope(const Triangulation& t, int kappa, EncodeOptions opts) {
    opts.kleetope_faces.clear();
    for (auto [a, b, c] : t.faces())
        opts.kleetope_faces.push_back({t.edge_id(a, b) + 1, t.edge_id(b, c) + 1, t.edge_id(a, c) + 1});
    return encode(graph_of(t), kappa, opts);
}

std::string to_dimacs(const CnfInstance& c) {
    std::ostringstream os;
    const SatVars& V = c.vars;
    os << "c arcdiag biarc layout encoding\n";
    os << "c items " << V.items() << " edges " << V.edges() << " kappa " << V.kappa() << "\n";
    os << "c variables sigma " << V.sigma_count() << " beta " << V.beta_count() << " phi " << V.phi_count() << " chi "
       << V.chi_count() << "\n";
    os << "p cnf " << c.num_vars << " " << c.clauses.size() << "\n";
    std::size_t next = 0;
    for (std::size_t k = 0; k <= c.clauses.size(); ++k) {
        while (next < c.comments.size() && c.comments[next].first == k) os << "c " << c.comments[next++].second << "\n";
        if (k == c.clauses.size()) break;
        for (int lit : c.clauses[k]) os << lit << ' ';
        os << "0\n";
    }
    return os.str();
}

SolveResult parse_solver_output(const std::string& text, int num_vars) {
    SolveResult r;
    r.model.assign(num_vars + 1, 0);
    std::istringstream in(text);
    std::string line;
    bool have_status = false;
    while (std::getline(in, line)) {
        if (line.rfind("s ", 0) == 0) {
            std::string st = line.substr(2);
            while (!st.empty() && (st.back() == '\r' || st.back() == ' ')) st.pop_back();
            if (st == "SATISFIABLE") r.status = SolveResult::Sat;
            else if (st == "UNSATISFIABLE") r.status = SolveResult::Unsat;
            else r.status = SolveResult::Unknown;
            have_status = true;
        } else if (line.rfind("v ", 0) == 0 || line == "v") {
            std::istringstream ls(line.substr(1));
            long long lit;
            while (ls >> lit) {
                if (lit == 0) continue;
                long long var = lit < 0 ? -lit : lit;
                if (var > num_vars) fail("solver reported variable " + std::to_string(var) + " beyond " + std::to_string(num_vars));
                r.model[var] = lit > 0;
            }
        }
    }
    if (!have_status) fail("unparsable solver output (no status line)");
    return r;
}

SolveResult solve_dpll(const CnfInstance& c) {
    if (c.num_vars > 60) fail("built-in solver is limited to 60 variables");
    const int n = c.num_vars;
    std::vector<signed char> val(n + 1, 0);  // 0 unset, 1 true, -1 false
    auto lit_val = [&](int lit) {
        signed char v = val[lit < 0 ? -lit : lit];
        return lit < 0 ? static_cast<signed char>(-v) : v;
    };
    std::function<bool()> rec = [&]() -> bool {
        std::vector<int> trail;
        // unit propagation
        for (bool changed = true; changed;) {
            changed = false;
            for (const auto& cl : c.clauses) {
                int unset = 0, last = 0;
                bool sat = false;
                for (int lit : cl) {
                    signed char v = lit_val(lit);
                    if (v > 0) { sat = true; break; }
                    if (v == 0) { ++unset; last = lit; }
                }
                if (sat) continue;
                if (unset == 0) {
                    for (int x : trail) val[x] = 0;
                    return false;
                }
                if (unset == 1) {
                    int var = last < 0 ? -last : last;
                    val[var] = last > 0 ? 1 : -1;
                    trail.push_back(var);
                    changed = true;
                }
            }
        }
        int pick = 0;
        for (int v = 1; v <= n && !pick; ++v)
            if (!val[v]) pick = v;
        if (!pick) return true;
        for (signed char choice : {1, -1}) {
            val[pick] = choice;
            if (rec()) return true;
        }
        val[pick] = 0;
        for (int x : trail) val[x] = 0;
        return false;
    };
    SolveResult r;
    r.model.assign(n + 1, 0);
    if (rec()) {
        r.status = SolveResult::Sat;
        for (int v = 1; v <= n; ++v) r.model[v] = val[v] > 0;
    } else {
        r.status = SolveResult::Unsat;
    }
    return r;
}

SolveResult solve(const CnfInstance& c, const std::string& solver_in, int timeout_s) {
    std::string solver = solver_in;
    if (solver.empty())
        if (const char* env = std::getenv("ARCDIAG_SOLVER")) solver = env;
    if (solver.empty()) {
        if (c.num_vars <= 60) return solve_dpll(c);
        fail("no solver configured (use --solver or ARCDIAG_SOLVER)");
    }
    static std::atomic<int> counter{0};
    auto path = std::filesystem::temp_directory_path() /
                ("arcdiag-" + std::to_string(::getpid()) + "-" + std::to_string(counter++) + ".cnf");
    {
        std::ofstream out(path);
        if (!out) fail("cannot write " + path.string());
        out << to_dimacs(c);
    }
    std::string cmd = solver + " '" + path.string() + "' 2>/dev/null";
    if (timeout_s > 0) cmd = "timeout " + std::to_string(timeout_s) + " " + cmd;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        std::filesystem::remove(path);
        fail("cannot start solver: " + solver);
    }
    std::string output;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    int status = ::pclose(pipe);
    std::filesystem::remove(path);
    int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (timeout_s > 0 && code == 124) return {};
    if (output.find("\ns ") == std::string::npos && output.rfind("s ", 0) != 0) {
        if (code == 127) fail("solver not found: " + solver);
        fail("unparsable solver output from: " + solver);
    }
    return parse_solver_output(output, c.num_vars);
}

ArcDiagram decode(const SolveResult& r, const Graph& g, const CnfInstance& c) {
    if (r.status != SolveResult::Sat) fail("decode needs a satisfying model");
    const SatVars& V = c.vars;
    const int N = V.items(), m = V.edges(), n = g.n;
    auto t = [&](int var) { return r.model.at(var) != 0; };
    std::vector<int> rank(N + 1, 0);
    for (int i = 1; i <= N; ++i)
        for (int j = 1; j <= N; ++j)
            if (i != j && t(V.sigma(j, i))) ++rank[i];
    std::vector<int> at(N, 0);
    for (int i = 1; i <= N; ++i) {
        if (at[rank[i]]) fail("model ordering is not a linear order");
        at[rank[i]] = i;
    }
    std::vector<char> biarc(m + 1, 0);
    for (int k = 1; k <= m; ++k)
        for (int j = 1; j <= V.kappa(); ++j)
            if (t(V.beta(k, j))) biarc[k] = 1;
    ArcDiagram d;
    std::vector<int> spine_index(N + 1, -1);
    for (int p = 0; p < N; ++p) {
        int item = at[p];
        if (item <= n) {
            spine_index[item] = static_cast<int>(d.spine.size());
            d.spine.push_back({SpineItem::Vertex, item});
        } else if (biarc[item - n]) {
            spine_index[item] = static_cast<int>(d.spine.size());
            d.spine.push_back({SpineItem::Crossing, item - n - 1});
        }
    }
    for (int k = 1; k <= m; ++k) {
        auto [u, v] = std::minmax(g.edges[k - 1].first, g.edges[k - 1].second);
        int L = rank[u] < rank[v] ? u : v, R = L == u ? v : u;
        Arc a{L, R, Shape::Mountain, -1};
        if (biarc[k]) {
            int half = L == u ? 1 : 2;
            bool on1 = t(V.phi(k, half, 1));
            a.shape = biarc_with_left_page(on1 ? Page::Above : Page::Below);
            a.crossing = spine_index[n + k];
        } else if (t(V.phi(k, 0, 1))) {
            a.shape = Shape::Mountain;
        } else if (t(V.phi(k, 0, 2))) {
            a.shape = Shape::Pocket;
        } else {
            fail("model leaves edge " + std::to_string(k) + " unassigned");
        }
        d.arcs.push_back(a);
    }
    return d;
}

MinimizeResult minimize_biarcs(const Graph& g, const EncodeOptions& opts, std::optional<int> upper,
                               const std::string& solver, int timeout_s) {
    const int m = static_cast<int>(g.edges.size());
    int k = std::min(upper.value_or(m), m);
    MinimizeResult res;
    while (k >= 0) {
        CnfInstance c = encode(g, k, opts);
        SolveResult r = solve(c, solver, timeout_s);
        res.probes.push_back({k, r.status});
        if (r.status == SolveResult::Sat) {
            res.kappa = k;
            res.witness = decode(r, g, c);
            if (k == 0) res.lower_certified = true;
            // the witness may already use fewer biarcs
            int used = count_biarcs(res.witness);
            k = std::min(k, used) - 1;
            if (used < res.kappa) {
                res.kappa = used;
                if (used == 0) res.lower_certified = true;
            }
        } else {
            if (r.status == SolveResult::Unsat && res.kappa >= 0) res.lower_certified = true;
            break;
        }
    }
    if (res.kappa < 0) fail("no layout within " + std::to_string(upper.value_or(m)) + " biarcs");
    return res;
}

}  // namespace arcdiag::sat
