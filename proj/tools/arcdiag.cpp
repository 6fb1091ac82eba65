// Command-line front end: gen, draw, verify, encode, minimize, render.
#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "arcdiag/canonical.hpp"
#include "arcdiag/diagram.hpp"
#include "arcdiag/drawer.hpp"
#include "arcdiag/error.hpp"
#include "arcdiag/generate.hpp"
#include "arcdiag/render.hpp"
#include "arcdiag/sat.hpp"

using namespace arcdiag;

namespace {

constexpr int kOk = 0, kFailed = 1, kUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cli: cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_out(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out || !(out << text)) throw Error("cli: cannot write " + path);
}

struct EncodeFlags {
    bool no_monotone = false, up_down_only = false, kleetope_base = false;
    std::vector<int> outer;

    void attach(CLI::App* cmd) {
        cmd->add_flag("--no-monotone", no_monotone, "Allow biarcs whose crossing lies outside the endpoints");
        cmd->add_flag("--up-down-only", up_down_only, "Force the left half of every biarc above the spine");
        cmd->add_option("--outer", outer, "Outer face a,b,c")->delimiter(',')->expected(3);
        cmd->add_flag("--kleetope-base", kleetope_base,
                      "Treat the input as a Kleetope base and add one access clause pair per face");
    }
    sat::EncodeOptions options(const Triangulation& t) const {
        sat::EncodeOptions o;
        o.monotone = !no_monotone;
        o.up_down_only = up_down_only;
        if (!outer.empty()) o.outer_face = std::array<int, 3>{outer[0], outer[1], outer[2]};
        if (kleetope_base)
            for (auto [a, b, c] : t.faces())
                o.kleetope_faces.push_back({t.edge_id(a, b) + 1, t.edge_id(b, c) + 1, t.edge_id(a, c) + 1});
        return o;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Arc diagrams of planar triangulations with few biarcs"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "Write a random triangulation");
    int gen_n = 0;
    std::uint64_t gen_seed = 0;
    bool gen_kleetope = false;
    std::string gen_out, gen_order;
    gen->add_option("--n", gen_n, "Vertex count (base count with --kleetope)")->required()->check(CLI::Range(4, 10000000));
    gen->add_option("--seed", gen_seed, "Random seed")->required();
    gen->add_flag("--kleetope", gen_kleetope, "Output the Kleetope of the generated graph");
    gen->add_option("--output,-o", gen_out, "Triangulation file (default stdout)");
    gen->add_option("--order", gen_order, "Also write the canonical ordering certificate");

    // draw
    auto* draw = app.add_subcommand("draw", "Draw a triangulation with few biarcs");
    std::string draw_in, draw_order, draw_svg, draw_out;
    bool draw_audit = false, draw_ledger = false;
    draw->add_option("--input,-i", draw_in, "Triangulation file")->required()->check(CLI::ExistingFile);
    draw->add_option("--order", draw_order, "Canonical ordering (default: computed)")->check(CLI::ExistingFile);
    draw->add_option("--svg", draw_svg, "Write an SVG rendering");
    draw->add_option("--output,-o", draw_out, "Write the diagram file");
    draw->add_flag("--audit", draw_audit, "Check every invariant after every insertion");
    draw->add_flag("--ledger", draw_ledger, "Print the per-insertion ledger");

    // verify
    auto* verify = app.add_subcommand("verify", "Check a diagram for planarity and monotonicity");
    std::string ver_diag, ver_graph;
    verify->add_option("--diagram,-d", ver_diag, "Diagram file")->required()->check(CLI::ExistingFile);
    verify->add_option("--graph", ver_graph, "Also check that it draws this triangulation")->check(CLI::ExistingFile);

    // encode
    auto* encode = app.add_subcommand("encode", "Write the biarc layout CNF");
    std::string enc_in, enc_out;
    int enc_k = 0;
    EncodeFlags enc_flags;
    encode->add_option("--input,-i", enc_in, "Triangulation file")->required()->check(CLI::ExistingFile);
    encode->add_option("--k", enc_k, "Biarc budget")->required()->check(CLI::NonNegativeNumber);
    encode->add_option("--output,-o", enc_out, "DIMACS file (default stdout)");
    enc_flags.attach(encode);

    // minimize
    auto* minimize = app.add_subcommand("minimize", "Find the least number of biarcs with a SAT solver");
    std::string min_in, min_solver, min_out;
    int min_upper = -1, min_timeout = 0;
    EncodeFlags min_flags;
    minimize->add_option("--input,-i", min_in, "Triangulation file")->required()->check(CLI::ExistingFile);
    minimize->add_option("--solver", min_solver, "Solver command taking a DIMACS path (default $ARCDIAG_SOLVER)");
    minimize->add_option("--upper", min_upper, "Start budget (default: drawer count)")->check(CLI::NonNegativeNumber);
    minimize->add_option("--timeout", min_timeout, "Seconds per solver call")->check(CLI::NonNegativeNumber);
    minimize->add_option("--output,-o", min_out, "Write the witness diagram");
    min_flags.attach(minimize);

    // render
    auto* render = app.add_subcommand("render", "Render a diagram as SVG");
    std::string ren_diag, ren_svg;
    RenderStyle style;
    bool no_labels = false;
    render->add_option("--diagram,-d", ren_diag, "Diagram file")->required()->check(CLI::ExistingFile);
    render->add_option("--svg", ren_svg, "Output path (default stdout)");
    render->add_option("--spacing", style.spacing, "Units between spine items")->check(CLI::PositiveNumber);
    render->add_flag("--no-labels", no_labels, "Omit vertex labels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*gen) {
            Generated g = generate(gen_n, gen_seed, gen_kleetope ? GenKind::KleetopeOfGrowth : GenKind::Growth);
            write_out(gen_out, serialize_triangulation(g.graph));
            if (!gen_order.empty()) write_out(gen_order, serialize_order(g.order));
            return kOk;
        }
        if (*draw) {
            Triangulation t = parse_triangulation(read_file(draw_in));
            CanonicalOrder o = draw_order.empty() ? compute_canonical(t)
                                                  : complete_order(t, parse_order(read_file(draw_order)));
            drawer::DrawOptions opt;
            opt.audit = draw_audit ? drawer::AuditLevel::Full : drawer::AuditLevel::Off;
            opt.strict = false;
            drawer::DrawResult r = drawer::draw(t, o, opt);
            Credit min_slack = r.ledger.empty() ? Credit{} : r.ledger.front().slack;
            for (const auto& e : r.ledger) min_slack = std::min(min_slack, e.slack);
            if (draw_ledger) std::cout << drawer::ledger_report(r);
            std::cout << "biarcs=" << count_biarcs(r.diagram) << " bound=" << r.bound << " forward=" << r.forward_biarcs
                      << " reverse=" << r.reverse_biarcs << " min_slack=" << min_slack.str()
                      << " final_slack=" << (r.ledger.empty() ? std::string("0") : r.ledger.back().slack.str()) << "\n";
            if (!draw_out.empty()) write_out(draw_out, serialize_diagram(r.diagram));
            if (!draw_svg.empty()) write_out(draw_svg, to_svg(r.diagram));
            if (!r.violations.empty()) {
                for (const auto& v : r.violations) std::cerr << "violation: " << v << "\n";
                return kFailed;
            }
            return kOk;
        }
        if (*verify) {
            ArcDiagram d = parse_diagram(read_file(ver_diag));
            check_well_formed(d);
            if (!ver_graph.empty()) check_draws(d, parse_triangulation(read_file(ver_graph)));
            PlaneReport pr = verify_plane(d);
            bool mono = verify_monotone(d);
            std::cout << "plane=" << (pr.ok ? "yes" : "no") << " monotone=" << (mono ? "yes" : "no")
                      << " biarcs=" << count_biarcs(d) << "\n";
            for (auto [a, b] : pr.crossing_arcs) {
                const Arc &x = d.arcs[a], &y = d.arcs[b];
                std::cout << "crossing: " << x.u << "-" << x.v << " " << y.u << "-" << y.v << "\n";
            }
            return pr.ok && mono ? kOk : kFailed;
        }
        if (*encode) {
            Triangulation t = parse_triangulation(read_file(enc_in));
            sat::CnfInstance c = sat::encode(sat::graph_of(t), enc_k, enc_flags.options(t));
            write_out(enc_out, sat::to_dimacs(c));
            return kOk;
        }
        if (*minimize) {
            Triangulation t = parse_triangulation(read_file(min_in));
            sat::EncodeOptions eo = min_flags.options(t);
            std::optional<int> upper;
            if (min_upper >= 0) {
                upper = min_upper;
            } else if (!eo.outer_face && eo.monotone && !eo.up_down_only && eo.kleetope_faces.empty()) {
                upper = count_biarcs(drawer::draw(t, compute_canonical(t)).diagram);
            }
            sat::MinimizeResult r = sat::minimize_biarcs(sat::graph_of(t), eo, upper, min_solver, min_timeout);
            std::cout << "k*=" << r.kappa << (r.lower_certified ? "" : " (upper bound only)") << "\n";
            if (!min_out.empty()) write_out(min_out, serialize_diagram(r.witness));
            return kOk;
        }
        if (*render) {
            style.labels = !no_labels;
            write_out(ren_svg, to_svg(parse_diagram(read_file(ren_diag)), style));
            return kOk;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
