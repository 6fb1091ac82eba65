// Acceptance checks.  Prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.  Criteria can be selected by number on the
// command line (default: all).

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "arcdiag/canonical.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/drawer.hpp"
#include "arcdiag/error.hpp"
#include "arcdiag/generate.hpp"
#include "arcdiag/sat.hpp"
#include "oracles/semicircle_oracle.hpp"
#include "support/iso.hpp"
#include "support/random_diagram.hpp"

using namespace arcdiag;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& why) {
        if (!ok && pass) detail << "first failure: " << why << "; ";
        pass = pass && ok;
    }
};

std::string solver_command() {
    if (const char* env = std::getenv("ARCDIAG_SOLVER"); env && *env) return env;
    return ARCDIAG_DEFAULT_SOLVER;
}

constexpr int kPerSize = 500;

// Shared corpus sweep for criteria 1 and 2.
struct CorpusStats {
    long long instances = 0, fully_audited = 0, locally_audited = 0;
    bool plane_ok = true, mono_ok = true, bound_ok = true, draws_ok = true;
    bool ledger_ok = true, base_ok = true, audit_ok = true;
    double max_seconds_1e4 = 0;
    int worst_margin = 1 << 30;  // bound - biarcs
    std::string first_problem;
    bool ran = false;
};

CorpusStats& corpus() {
    static CorpusStats s;
    if (s.ran) return s;
    s.ran = true;
    auto note = [&](const std::string& msg) {
        if (s.first_problem.empty()) s.first_problem = msg;
    };
    std::vector<int> sizes;
    for (int n = 4; n <= 200; ++n) sizes.push_back(n);
    sizes.push_back(1000);
    sizes.push_back(10000);
    for (int n : sizes) {
        for (int seed = 0; seed < kPerSize; ++seed) {
            Generated g = generate(n, static_cast<std::uint64_t>(seed));
            drawer::DrawOptions opt;
            opt.strict = false;
            // full per-step audits everywhere except the largest tier, where
            // three instances get them and the rest get local audits
            bool full = n <= 1000 || seed < 3;
            opt.audit = full ? drawer::AuditLevel::Full : drawer::AuditLevel::Incremental;
            auto t0 = Clock::now();
            drawer::DrawResult r;
            try {
                r = drawer::draw(g.graph, g.order, opt);
            } catch (const Error& e) {
                note("n=" + std::to_string(n) + " seed=" + std::to_string(seed) + ": " + e.what());
                s.draws_ok = false;
                continue;
            }
            if (n == 10000 && !full) s.max_seconds_1e4 = std::max(s.max_seconds_1e4, seconds_since(t0));
            ++s.instances;
            (full ? s.fully_audited : s.locally_audited)++;
            const std::string tag = "n=" + std::to_string(n) + " seed=" + std::to_string(seed);
            try {
                check_draws(r.diagram, g.graph);
            } catch (const Error& e) {
                s.draws_ok = false;
                note(tag + ": " + e.what());
            }
            if (!verify_plane(r.diagram).ok) s.plane_ok = false, note(tag + " not plane");
            if (!verify_monotone(r.diagram)) s.mono_ok = false, note(tag + " not monotone down-up");
            const int b = count_biarcs(r.diagram);
            s.worst_margin = std::min(s.worst_margin, r.bound - b);
            if (b > r.bound) s.bound_ok = false, note(tag + " over the bound");
            if (!r.violations.empty()) s.audit_ok = false, note(tag + " audit: " + r.violations.front());
            if (r.ledger.empty() || r.ledger.front().i != 3 || r.ledger.front().slack != Credit::eighths(41))
                s.base_ok = false, note(tag + " base slack differs from 41/8");
            if (static_cast<int>(r.ledger.size()) != n - 2) s.ledger_ok = false, note(tag + " ledger has a gap");
            for (const auto& e : r.ledger)
                if (e.slack < Credit::whole(5)) s.ledger_ok = false, note(tag + " slack below 5");
        }
        if (n == 10000) {
            // production timing: no audits
            for (int seed = 0; seed < 5; ++seed) {
                Generated g = generate(n, static_cast<std::uint64_t>(seed));
                drawer::DrawOptions opt;
                opt.audit = drawer::AuditLevel::Off;
                auto t0 = Clock::now();
                drawer::draw(g.graph, g.order, opt);
                s.max_seconds_1e4 = std::max(s.max_seconds_1e4, seconds_since(t0));
            }
        }
    }
    return s;
}

Outcome criterion1() {
    Outcome o;
    CorpusStats& s = corpus();
    o.require(s.draws_ok, "drawing does not realize the input");
    o.require(s.plane_ok, "non-plane output");
    o.require(s.mono_ok, "output not monotone down-up");
    o.require(s.bound_ok, "biarc count above floor(15n/16 - 5/2)");
    o.require(s.max_seconds_1e4 < 1.0, "n = 10^4 slower than 1 s");
    if (!o.pass) o.detail << s.first_problem << "; ";
    o.detail << s.instances << " instances (n = 4..200, 10^3, 10^4; " << kPerSize << " each), min bound - biarcs = "
             << s.worst_margin << ", slowest n = 10^4 run " << s.max_seconds_1e4 << " s";
    return o;
}

Outcome criterion2() {
    Outcome o;
    CorpusStats& s = corpus();
    o.require(s.audit_ok, "invariant audit failed");
    o.require(s.ledger_ok, "ledger slack below 5");
    o.require(s.base_ok, "base slack not 41/8");
    if (!o.pass) o.detail << s.first_problem << "; ";
    o.detail << "slack >= 5 after every insertion of " << s.instances << " instances; full invariant audits after every insertion on "
             << s.fully_audited << ", local audits plus full audits at powers of two on " << s.locally_audited
             << " (n = 10^4); base slack 41/8";
    return o;
}

Outcome criterion3() {
    Outcome o;
    Generated g = stacked_degree2(3);
    drawer::DrawResult r = drawer::draw(g.graph, g.order);
    o.require(r.forward_biarcs == 3, "forward count " + std::to_string(r.forward_biarcs));
    o.require(r.reverse_biarcs == 1, "reverse count " + std::to_string(r.reverse_biarcs));
    o.require(r.chose_reverse, "forward drawing selected");
    o.require(count_biarcs(r.diagram) == 1 && verify_plane(r.diagram).ok && verify_monotone(r.diagram),
              "selected diagram is not the one-biarc drawing");
    o.detail << "n = " << g.graph.vertex_count() << ", forward " << r.forward_biarcs << ", reverse "
             << r.reverse_biarcs << ", selected " << (r.chose_reverse ? "reverse" : "forward");
    return o;
}

Outcome criterion4() {
    Outcome o;
    std::mt19937 rng(4);
    int plane = 0, total = 0;
    while (total < 1000) {
        ArcDiagram d = support::random_diagram(rng, 7);
        ++total;
        auto lib = verify_plane(d);
        auto ref = oracle::check(d);
        plane += ref.plane;
        std::set<std::pair<int, int>> got(lib.crossing_arcs.begin(), lib.crossing_arcs.end());
        o.require(lib.ok == ref.plane, "verdict differs on diagram " + std::to_string(total));
        if (!ref.plane) o.require(got == ref.pairs, "crossing pairs differ on diagram " + std::to_string(total));
    }
    o.detail << total << " diagrams (" << plane << " plane), verdicts and crossing pairs identical";
    return o;
}

Outcome criterion5() {
    Outcome o;
    const std::string solver = solver_command();
    auto run = [&](const std::string& name, const sat::Graph& g, const sat::EncodeOptions& eo, int expect) {
        auto t0 = Clock::now();
        try {
            sat::MinimizeResult r = sat::minimize_biarcs(g, eo, std::nullopt, solver, 600);
            double secs = seconds_since(t0);
            o.require(r.kappa == expect && r.lower_certified,
                      name + " gave k* = " + std::to_string(r.kappa) + (r.lower_certified ? "" : " uncertified"));
            o.require(verify_plane(r.witness).ok, name + " witness not plane");
            o.require(secs < 600, name + " took over 10 minutes");
            o.detail << name << " k*=" << r.kappa << " (" << static_cast<int>(secs * 1000) << " ms); ";
        } catch (const Error& e) {
            o.require(false, name + ": " + e.what());
        }
    };
    run("K4", sat::graph_of(k4()), {}, 0);
    run("octahedron", sat::graph_of(octahedron()), {}, 0);
    {
        auto t0 = Clock::now();
        try {
            sat::CnfInstance c = sat::encode(sat::graph_of(goldner_harary()), 0);
            sat::SolveResult r = sat::solve(c, solver, 600);
            o.require(r.status == sat::SolveResult::Unsat, "Goldner-Harary satisfiable without biarcs");
            o.detail << "Goldner-Harary kappa=0 " << (r.status == sat::SolveResult::Unsat ? "UNSAT" : "not UNSAT") << " ("
                     << static_cast<int>(seconds_since(t0) * 1000) << " ms); ";
        } catch (const Error& e) {
            o.require(false, std::string("Goldner-Harary: ") + e.what());
        }
    }
    // Kleetope bases: the face vertices are implied by the access clauses
    for (auto [t, expect] : {std::pair{k4(), 0}, std::pair{triangular_bipyramid(), 1}}) {
        sat::EncodeOptions eo;
        for (auto [a, b, c] : t.faces())
            eo.kleetope_faces.push_back({t.edge_id(a, b) + 1, t.edge_id(b, c) + 1, t.edge_id(a, c) + 1});
        const int np = 3 * t.vertex_count() - 4;
        o.require(expect == std::max(0, (np - 8) / 3), "expected value disagrees with floor((n'-8)/3)");
        run("Kleetope base n=" + std::to_string(t.vertex_count()), sat::graph_of(t), eo, expect);
        // and the materialized Kleetope agrees
        run("Kleetope n'=" + std::to_string(np), sat::graph_of(kleetope(t)), {}, expect);
    }
    o.detail << "solver: " << solver;
    return o;
}

// All triangulations on n vertices reachable by growth, up to isomorphism.
std::vector<Generated> all_triangulations(int n) {
    std::map<std::vector<int>, Generated> seen;
    std::vector<std::pair<int, int>> chains;
    std::function<void(int, int)> rec = [&](int v, int size) {
        if (v == n) {
            Generated g = grow(n, chains);
            seen.emplace(support::planar_code(g.graph), std::move(g));
            return;
        }
        for (int len = 2; len <= size; ++len)
            for (int start = 0; start + len <= size; ++start) {
                chains.push_back({start, len});
                rec(v + 1, size + 3 - len);
                chains.pop_back();
            }
    };
    rec(4, 3);
    std::vector<Generated> out;
    for (auto& [code, g] : seen) out.push_back(std::move(g));
    return out;
}

Outcome criterion6() {
    Outcome o;
    const std::string solver = solver_command();
    const int expected[] = {0, 0, 0, 0, 1, 1, 2, 5, 14};
    int graphs = 0;
    for (int n = 4; n <= 8; ++n) {
        auto all = all_triangulations(n);
        o.require(static_cast<int>(all.size()) == expected[n],
                  "n=" + std::to_string(n) + " has " + std::to_string(all.size()) + " classes");
        int worst_gap = 0;
        for (const auto& g : all) {
            ++graphs;
            try {
                drawer::DrawResult r = drawer::draw(g.graph, g.order, {drawer::AuditLevel::Full, true});
                const int mine = count_biarcs(r.diagram);
                sat::MinimizeResult m =
                    sat::minimize_biarcs(sat::graph_of(g.graph), {}, mine, solver, 600);
                o.require(m.lower_certified, "uncertified optimum");
                o.require(mine >= m.kappa, "drawer beats the exact optimum");
                worst_gap = std::max(worst_gap, mine - m.kappa);
                for (const ArcDiagram* d : {&r.diagram, &m.witness}) {
                    check_draws(*d, g.graph);
                    o.require(verify_plane(*d).ok, "witness not plane");
                }
                o.require(verify_monotone(r.diagram), "drawer witness not monotone down-up");
                o.require(verify_monotone(m.witness, {Shape::DownUp, Shape::UpDown}), "SAT witness not monotone");
            } catch (const Error& e) {
                o.require(false, std::string("n=") + std::to_string(n) + ": " + e.what());
            }
        }
        o.detail << "n=" << n << ": " << all.size() << " graphs, max gap " << worst_gap << "; ";
    }
    o.detail << graphs << " triangulations";
    return o;
}

Outcome criterion7() {
    Outcome o;
    sat::CnfInstance c = sat::encode(sat::graph_of(k4()), 1);
    std::ifstream in(ARCDIAG_SOURCE_DIR "/tests/golden/k4_k1_monotone.cnf", std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    o.require(in.good() || in.eof(), "golden file missing");
    o.require(sat::to_dimacs(c) == ss.str(), "DIMACS differs from the golden file");
    o.require(c.vars.sigma_count() == 90, "sigma count " + std::to_string(c.vars.sigma_count()));
    o.require(c.vars.beta_count() == 6, "beta count " + std::to_string(c.vars.beta_count()));
    o.require(c.vars.phi_count() == 36, "phi count " + std::to_string(c.vars.phi_count()));
    o.detail << "sigma=" << c.vars.sigma_count() << " beta=" << c.vars.beta_count() << " phi=" << c.vars.phi_count()
             << " chi=" << c.vars.chi_count() << ", " << c.clauses.size() << " clauses, golden bytes "
             << (sat::to_dimacs(c) == ss.str() ? "identical" : "differ");
    return o;
}

Outcome criterion8() {
    Outcome o;
    std::vector<double> means;
    double c_max = 0;
    for (int n : {100, 1000, 10000}) {
        double sum = 0;
        const int seeds = 20;
        for (int seed = 0; seed < seeds; ++seed) {
            Generated g = generate(n, 1000 + seed);
            drawer::DrawResult r = drawer::draw(g.graph, g.order, {drawer::AuditLevel::Off, true});
            double ratio = static_cast<double>(r.stats.mutations) / n;
            sum += ratio;
            c_max = std::max(c_max, ratio);
        }
        means.push_back(sum / seeds);
        o.detail << "n=" << n << " mutations/n=" << means.back() << "; ";
    }
    double lo = *std::min_element(means.begin(), means.end()), hi = *std::max_element(means.begin(), means.end());
    double drift = (hi - lo) / lo;
    o.require(drift < 0.10, "ratio drift " + std::to_string(drift));
    o.detail << "c = " << c_max << ", drift " << drift * 100 << "%";
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<const char*, Outcome (*)()>> criteria = {
        {"bound reproduction", criterion1},   {"ledger audit", criterion2},
        {"stacked family", criterion3},       {"crossing oracle", criterion4},
        {"exact SAT values", criterion5},     {"heuristic dominance", criterion6},
        {"encoder golden file", criterion7},  {"linear contour work", criterion8},
    };
    std::set<int> pick;
    for (int i = 1; i < argc; ++i) pick.insert(std::atoi(argv[i]));
    bool all = true;
    for (size_t k = 0; k < criteria.size(); ++k) {
        const int id = static_cast<int>(k) + 1;
        if (!pick.empty() && !pick.count(id)) continue;
        auto t0 = Clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        std::printf("criterion %d %-20s %s  (%.1f s) %s\n", id, criteria[k].first, o.pass ? "PASS" : "FAIL",
                    seconds_since(t0), o.detail.str().c_str());
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
