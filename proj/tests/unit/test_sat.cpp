#include <doctest.h>

#include <fstream>
#include <sstream>

#include "arcdiag/error.hpp"
#include "arcdiag/generate.hpp"
#include "arcdiag/sat.hpp"

using namespace arcdiag;
using namespace arcdiag::sat;

namespace {
Graph path_graph(int n) {
    Graph g;
    g.n = n;
    for (int v = 1; v < n; ++v) g.edges.push_back({v, v + 1});
    return g;
}
bool satisfies(const CnfInstance& c, const std::vector<char>& m) {
    for (const auto& cl : c.clauses) {
        bool ok = false;
        for (int lit : cl) ok |= (lit > 0) == (m[lit > 0 ? lit : -lit] != 0);
        if (!ok) return false;
    }
    return true;
}
}  // namespace

TEST_CASE("variable counts") {
    // K4 with one biarc: 10 items, 6 edges
    CnfInstance c = encode(graph_of(k4()), 1);
    CHECK(c.vars.sigma_count() == 90);
    CHECK(c.vars.beta_count() == 6);
    CHECK(c.vars.phi_count() == 36);
    CHECK(c.num_vars == 90 + 6 + 36 + c.vars.chi_count());
    // general formulas
    for (int kappa : {0, 2, 5}) {
        Graph g = graph_of(octahedron());
        SatVars v(g, kappa);
        const int N = 6 + 12;
        CHECK(v.sigma_count() == N * (N - 1));
        CHECK(v.beta_count() == 12 * kappa);
        CHECK(v.phi_count() == 72);
    }
}

TEST_CASE("variables are numbered densely in block order") {
    Graph g = graph_of(k4());
    SatVars v(g, 2);
    std::vector<int> all;
    for (int i = 1; i <= v.items(); ++i)
        for (int j = 1; j <= v.items(); ++j)
            if (i != j) all.push_back(v.sigma(i, j));
    for (int k = 1; k <= 6; ++k)
        for (int j = 1; j <= 2; ++j) all.push_back(v.beta(k, j));
    for (int k = 1; k <= 6; ++k)
        for (int h = 0; h < 3; ++h)
            for (int p = 1; p <= 2; ++p) all.push_back(v.phi(k, h, p));
    for (const auto& x : v.chis()) all.push_back(x.var);
    for (size_t i = 0; i < all.size(); ++i) CHECK(all[i] == static_cast<int>(i) + 1);
    CHECK(static_cast<int>(all.size()) == v.total());
}

TEST_CASE("chi only for endpoint-disjoint half edges") {
    Graph g = graph_of(k4());
    SatVars v(g, 0);
    for (const auto& x : v.chis()) {
        auto [a, b] = v.half_edge(x.k, x.half);
        auto [c, d] = v.half_edge(x.k2, x.half2);
        CHECK(a != c);
        CHECK(a != d);
        CHECK(b != c);
        CHECK(b != d);
        CHECK(x.k < x.k2);
    }
    // edges 1-2 and 3-4 (ids 1 and 6) are disjoint as whole edges
    CHECK(v.chi(1, 6, 0, 0) != 0);
    CHECK(v.chi(1, 2, 0, 0) == 0);  // 1-2 and 1-3 share vertex 1
}

TEST_CASE("encoder rejects bad input") {
    CHECK_THROWS_AS(encode(graph_of(k4()), -1), Error);
    CHECK_THROWS_AS(encode(graph_of(k4()), 7), Error);
    Graph g = path_graph(3);
    g.edges.push_back({1, 2});
    CHECK_THROWS_AS(encode(g, 0), Error);
    EncodeOptions o;
    o.outer_face = std::array<int, 3>{1, 2, 3};
    CHECK_THROWS_AS(encode(path_graph(4), 0, o), Error);
}

TEST_CASE("DIMACS header and group comments") {
    std::string s = to_dimacs(encode(graph_of(k4()), 1));
    CHECK(s.find("p cnf 219 1269\n") != std::string::npos);
    for (const char* g : {"c order: ", "c monotone: ", "c budget: ", "c pages: ", "c biarc: ", "c sharing: ",
                          "c no interleaving: pattern 4-"})
        CHECK(s.find(g) != std::string::npos);
    CHECK(s.find("c kleetope:") == std::string::npos);
    CHECK(s.find("c outer face:") == std::string::npos);
    EncodeOptions o;
    o.monotone = false;
    CHECK(to_dimacs(encode(graph_of(k4()), 1, o)).find("c monotone:") == std::string::npos);
}

TEST_CASE("built-in solver on tiny instances") {
    // path on 3 vertices: 3 + 2 items, 20 sigma vars, 12 phi vars, no chi
    CnfInstance c = encode(path_graph(3), 0);
    REQUIRE(c.num_vars <= 60);
    SolveResult r = solve_dpll(c);
    REQUIRE(r.status == SolveResult::Sat);
    CHECK(satisfies(c, r.model));
    ArcDiagram d = decode(r, path_graph(3), c);
    CHECK(verify_plane(d).ok);
    CHECK(count_biarcs(d) == 0);

    CnfInstance unsat;
    unsat.num_vars = 2;
    unsat.clauses = {{1, 2}, {-1, 2}, {1, -2}, {-1, -2}};
    CHECK(solve_dpll(unsat).status == SolveResult::Unsat);
    CHECK_THROWS_AS(solve_dpll(encode(graph_of(k4()), 0)), Error);
}

TEST_CASE("solver output parsing") {
    SolveResult r = parse_solver_output("c hello\ns SATISFIABLE\nv 1 -2\nv 3 0\n", 3);
    CHECK(r.status == SolveResult::Sat);
    CHECK(r.model[1] == 1);
    CHECK(r.model[2] == 0);
    CHECK(r.model[3] == 1);
    CHECK(parse_solver_output("s UNSATISFIABLE\n", 3).status == SolveResult::Unsat);
    CHECK(parse_solver_output("s UNKNOWN\n", 3).status == SolveResult::Unknown);
    CHECK_THROWS_AS(parse_solver_output("garbage\n", 3), Error);
    CHECK_THROWS_AS(parse_solver_output("s SATISFIABLE\nv 9 0\n", 3), Error);
}

TEST_CASE("missing solver is reported") {
    CHECK_THROWS_AS(solve(encode(graph_of(k4()), 0), "/nonexistent/solver"), Error);
}

#ifdef ARCDIAG_TEST_SOLVER
TEST_CASE("external solver: K4 and the octahedron need no biarcs") {
    for (const auto& t : {k4(), octahedron()}) {
        MinimizeResult r = minimize_biarcs(graph_of(t), {}, std::nullopt, ARCDIAG_TEST_SOLVER);
        CHECK(r.kappa == 0);
        CHECK(r.lower_certified);
        CHECK_NOTHROW(check_draws(r.witness, t));
        CHECK(verify_plane(r.witness).ok);
    }
}

TEST_CASE("external solver: up-down-only and outer face options stay satisfiable on K4") {
    EncodeOptions o;
    o.up_down_only = true;
    o.outer_face = std::array<int, 3>{1, 2, 4};
    CnfInstance c = encode(graph_of(k4()), 1, o);
    SolveResult r = solve(c, ARCDIAG_TEST_SOLVER);
    REQUIRE(r.status == SolveResult::Sat);
    CHECK(satisfies(c, r.model));
    ArcDiagram d = decode(r, graph_of(k4()), c);
    CHECK(verify_plane(d).ok);
    CHECK(verify_monotone(d, {Shape::UpDown}));
}
#endif
