#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "arcdiag/diagram.hpp"
#include "arcdiag/triangulation.hpp"

namespace arcdiag::sat {

// Simple graph on vertices 1..n.  Edge k (1-based) is edges[k-1], stored
// with u < v.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
};
Graph graph_of(const Triangulation& t);

struct EncodeOptions {
    bool monotone = true;
    bool up_down_only = false;
    std::optional<std::array<int, 3>> outer_face;
    // Faces given as edge triples (1-based edge ids); only for base graphs
    // of Kleetopes whose face vertices are not materialized.
    std::vector<std::array<int, 3>> kleetope_faces;
};

// Variable registry.  Spine items are vertices 1..n and dummies n+1..n+m.
class SatVars {
public:
    SatVars() = default;
    SatVars(const Graph& g, int kappa);

    int items() const { return items_; }
    int edges() const { return m_; }
    int kappa() const { return kappa_; }

    int sigma(int i, int j) const;            // i != j, 1-based items
    int beta(int k, int j) const;             // edge k, slot j (1-based)
    int phi(int k, int half, int page) const; // half 0..2, page 1..2
    int chi(int k, int k2, int half, int half2) const;  // 0 if absent
    // Endpoints (s, t) of half edge h_{k,half} as item ids.
    std::pair<int, int> half_edge(int k, int half) const;

    int sigma_count() const { return items_ * (items_ - 1); }
    int beta_count() const { return m_ * kappa_; }
    int phi_count() const { return m_ * 6; }
    int chi_count() const { return static_cast<int>(chi_.size()); }
    int total() const { return sigma_count() + beta_count() + phi_count() + chi_count(); }

    struct Chi {
        int k, k2, half, half2, var;
    };
    const std::vector<Chi>& chis() const { return chi_; }

private:
    int n_ = 0, m_ = 0, kappa_ = 0, items_ = 0;
    std::vector<std::pair<int, int>> ends_;
    std::vector<Chi> chi_;
    std::vector<int> chi_index_;  // dense (k, k2, half, half2) -> var or 0
};

struct CnfInstance {
    int num_vars = 0;
    std::vector<std::vector<int>> clauses;
    // (index of the first clause of the group, comment text)
    std::vector<std::pair<std::size_t, std::string>> comments;
    SatVars vars;
};

// Clause groups in a fixed order, each announced by a comment; the
// monotone group only when opts.monotone.
CnfInstance encode(const Graph& g, int kappa, const EncodeOptions& opts = {});
// Base triangulation plus one access clause pair per face.
CnfInstance encode_kleetope(const Triangulation& t, int kappa, EncodeOptions opts = {});

std::string to_dimacs(const CnfInstance& c);

struct SolveResult {
    enum Status { Sat, Unsat, Unknown } status = Unknown;
    std::vector<char> model;  // model[v] for 1..num_vars
};

// Runs `solver <file>` (empty: environment variable ARCDIAG_SOLVER; still
// empty: the built-in DPLL for at most 60 variables).  timeout_s > 0 wraps
// the command with timeout(1).
SolveResult solve(const CnfInstance& c, const std::string& solver = {}, int timeout_s = 0);
// Parses "s ..." and "v ..." lines.
SolveResult parse_solver_output(const std::string& text, int num_vars);
// Plain DPLL; throws for more than 60 variables.
SolveResult solve_dpll(const CnfInstance& c);

ArcDiagram decode(const SolveResult& r, const Graph& g, const CnfInstance& c);

struct MinimizeResult {
    int kappa = -1;
    ArcDiagram witness;
    bool lower_certified = false;  // unsat at kappa - 1 (or kappa == 0)
    std::vector<std::pair<int, SolveResult::Status>> probes;
};
// Descends from `upper` (default: number of edges) while satisfiable.
MinimizeResult minimize_biarcs(const Graph& g, const EncodeOptions& opts, std::optional<int> upper,
                               const std::string& solver = {}, int timeout_s = 0);

}  // namespace arcdiag::sat
