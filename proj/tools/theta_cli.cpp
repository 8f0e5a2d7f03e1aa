// theta-width command line: generators, verifiers, exact solvers, extraction.
//
// Exit codes: 0 success / 1 verification failure / 2 bad or malformed input /
// 3 size guard tripped / 4 search budget exhausted.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"

#include "tw/connectivity.hpp"
#include "tw/decomposition.hpp"
#include "tw/extraction.hpp"
#include "tw/graph.hpp"
#include "tw/json_io.hpp"
#include "tw/minor.hpp"
#include "tw/necklace.hpp"
#include "tw/wheel.hpp"

using nlohmann::json;
using namespace tw;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitSizeGuard = 3;
constexpr int kExitBudget = 4;

struct BadInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string slurp(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw BadInput("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Write via a temp file + rename so partial output never lands under `path`.
void spit(const std::string& path, const std::string& content) {
    if (path == "-") {
        std::cout << content;
        return;
    }
    std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw BadInput("cannot write '" + tmp + "'");
        out << content;
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        // Pipes and devices reject rename; write them directly.
        std::remove(tmp.c_str());
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw BadInput("cannot write '" + path + "'");
        out << content;
    }
}

Graph load_graph(const std::string& path) {
    try {
        return parse_graph_any(slurp(path));
    } catch (const std::invalid_argument& e) {
        throw BadInput(std::string("graph '") + path + "': " + e.what());
    }
}

json load_json(const std::string& path) {
    try {
        return json::parse(slurp(path));
    } catch (const json::parse_error& e) {
        throw BadInput(std::string("'") + path + "': " + e.what());
    }
}

// "1,2,3" inline, or a path to a file of whitespace/comma-separated ids.
VertexSet parse_vertex_set(const std::string& arg) {
    std::string text = arg;
    if (std::ifstream probe(arg); probe) text = slurp(arg);
    for (char& c : text)
        if (c == ',') c = ' ';
    VertexSet vs;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            vs.insert(v);
        } catch (const std::exception&) {
            throw BadInput("vertex set: '" + tok + "' is not an integer");
        }
    }
    if (vs.empty()) throw BadInput("vertex set '" + arg + "' is empty");
    return vs;
}

std::string render_graph(const Graph& g, const std::string& format) {
    if (format == "dot") return to_dot(g);
    if (format == "json") return graph_to_json(g).dump(2) + "\n";
    return format_graph(g);
}

void guard_size(const Graph& g) {
    if (g.num_vertices() > static_cast<std::size_t>(size_guard_limit()))
        throw SizeGuardError("instance has " + std::to_string(g.num_vertices()) +
                             " vertices; limit is " + std::to_string(size_guard_limit()) +
                             " (set THETA_WIDTH_MAX_VERTICES to raise)");
}

Graph random_tree(int n, std::mt19937_64& rng) {
    Graph t;
    t.add_vertex(1);
    for (int v = 2; v <= n; ++v) {
        std::uniform_int_distribution<int> pick(1, v - 1);
        t.add_edge(pick(rng), v);
    }
    return t;
}

WheelSpec random_wheel_spec(int t, int l, int n, std::uint64_t seed) {
    if (t < 1) throw BadInput("gen wheel: t must be >= 1");
    if (l < 0) throw BadInput("gen wheel: l must be >= 0");
    if (n < 3) throw BadInput("gen wheel: n must be >= 3");
    std::mt19937_64 rng(seed);
    WheelSpec spec;
    spec.rim_tree = random_tree(t, rng);
    spec.n = n;
    std::vector<int> perm(spec.rim_tree.vertices().begin(), spec.rim_tree.vertices().end());
    std::shuffle(perm.begin(), perm.end(), rng);
    int k = 0;
    for (int v : spec.rim_tree.vertices()) spec.pi[v] = perm[k++];
    std::uniform_int_distribution<int> pick(1, t);
    for (int z = t + 1; z <= t + l; ++z) {
        spec.hubs.insert(z);
        spec.psi[z] = pick(rng);
    }
    return spec;
}

int run_gen(const std::string& kind, const json& params, const Graph& g,
            const std::string& out, const std::string& format, const json& structure,
            const std::string& structure_out) {
    spit(out, render_graph(g, format));
    if (!structure_out.empty()) spit(structure_out, structure.dump(2) + "\n");
    std::cout << kind << ": " << g.num_vertices() << " vertices, " << g.num_edges()
              << " edges " << params.dump() << "\n";
    return kExitOk;
}

json condition_report(const NecklaceReport& rep) {
    json out = json::array();
    for (int k = 1; k <= 7; ++k)
        out.push_back(json{{"condition", "N" + std::to_string(k)},
                           {"pass", rep.n(k).pass},
                           {"witness", rep.n(k).witness}});
    return out;
}

// Shared by `verify necklace` and every extract re-verification.
int report_necklace(const Graph& g, const Necklace& nk, const std::string& report_out) {
    NecklaceReport rep = validate_necklace(g, nk);
    for (int k = 1; k <= 7; ++k) {
        std::cout << "N" << k << ": " << (rep.n(k).pass ? "pass" : "FAIL");
        if (!rep.n(k).pass) std::cout << " (" << rep.n(k).witness << ")";
        std::cout << "\n";
    }
    if (!report_out.empty())
        spit(report_out,
             json{{"conditions", condition_report(rep)}, {"pass", rep.all_pass()}}.dump(2) + "\n");
    return rep.all_pass() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"theta-tree-width toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 1;
    app.add_option("--seed", seed, "seed for all randomness")->capture_default_str();

    std::string format = "text";
    std::string out = "-";
    std::string graph_path, structure_path, set_arg, report_out, witness_out;
    std::string spec_path, model_out, mode_arg = "auto";
    int p_t = 1, p_s = 0, p_l = 0, p_n = 3, p_theta = 2, p_a = 2, p_b = 2, p_p = 2;
    double p_prob = 0.5;
    long budget = 100000;
    bool connected = false;

    // gen -----------------------------------------------------------------
    auto* gen = app.add_subcommand("gen", "generate graphs and structures");
    gen->require_subcommand(1);
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", out, "graph output file (- for stdout)")->capture_default_str();
        c->add_option("--format", format, "graph format: text|dot|json")
            ->check(CLI::IsMember({"text", "dot", "json"}))
            ->capture_default_str();
    };
    auto* gw = gen->add_subcommand("wheel", "wheel from a random rim tree");
    gw->add_option("--t", p_t, "rim tree size")->required();
    gw->add_option("--l", p_l, "hub count")->required();
    gw->add_option("--n", p_n, "number of copies")->required();
    gw->add_option("--spec-out", structure_path, "wheel spec JSON output");
    add_out(gw);
    auto* gn = gen->add_subcommand("necklace", "synthetic valid necklace");
    gn->add_option("--t", p_t)->required();
    gn->add_option("--s", p_s)->required();
    gn->add_option("--l", p_l)->required();
    gn->add_option("--n", p_n)->required();
    gn->add_option("--necklace-out", structure_path, "necklace JSON output");
    add_out(gn);
    auto* gt = gen->add_subcommand("tight-example", "theta-connected tightness construction");
    gt->add_option("--n", p_n)->required();
    gt->add_option("--theta", p_theta)->required();
    gt->add_option("--sets-out", structure_path, "JSON with the A and B sets");
    add_out(gt);
    auto* gg = gen->add_subcommand("grid", "n-by-n grid");
    gg->add_option("--n", p_n)->required();
    add_out(gg);
    auto* gb = gen->add_subcommand("biclique", "complete bipartite graph");
    gb->add_option("--a", p_a)->required();
    gb->add_option("--b", p_b)->required();
    add_out(gb);
    auto* gr = gen->add_subcommand("random", "random graph");
    gr->add_option("--n", p_n)->required();
    gr->add_option("--p", p_prob, "edge probability")->capture_default_str();
    gr->add_flag("--connected", connected, "resample until connected");
    add_out(gr);

    // verify ---------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "check structures against a graph");
    verify->require_subcommand(1);
    auto* vn = verify->add_subcommand("necklace", "conditions N1-N7");
    vn->add_option("--graph", graph_path)->required();
    vn->add_option("--necklace", structure_path)->required();
    vn->add_option("--report", report_out, "JSON report output");
    auto* vs = verify->add_subcommand("theta-set", "theta-connectedness of a vertex set");
    vs->add_option("--graph", graph_path)->required();
    vs->add_option("--theta", p_theta)->required();
    vs->add_option("--set", set_arg, "comma list or file of vertex ids")->required();
    auto* vd = verify->add_subcommand("decomposition", "edge-leaf tree-decomposition");
    vd->add_option("--graph", graph_path)->required();
    vd->add_option("--decomposition", structure_path)->required();
    vd->add_option("--theta", p_theta, "also require adhesion < theta");
    auto* vw = verify->add_subcommand("wheel-transversal", "rim transversal of a wheel");
    vw->add_option("--spec", spec_path)->required();
    vw->add_option("--set", set_arg)->required();
    auto* vm = verify->add_subcommand("minor-model", "branch sets + edge witnesses");
    vm->add_option("--graph", graph_path)->required();
    vm->add_option("--minor", structure_path, "graph file for the minor H")->required();
    vm->add_option("--model", model_out, "minor model JSON")->required();

    // compute ----------------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "exact desk-scale solvers");
    compute->require_subcommand(1);
    auto* cw = compute->add_subcommand("theta-tree-width", "exact tw_theta");
    cw->add_option("--graph", graph_path)->required();
    cw->add_option("--theta", p_theta)->required();
    cw->add_option("--witness", witness_out, "decomposition JSON output");
    auto* cm = compute->add_subcommand("max-theta-set", "maximum theta-connected set");
    cm->add_option("--graph", graph_path)->required();
    cm->add_option("--theta", p_theta)->required();
    cm->add_option("--witness", witness_out, "set JSON output");
    auto* ci = compute->add_subcommand("improve-decomposition", "theta-connected bags");
    ci->add_option("--graph", graph_path)->required();
    ci->add_option("--decomposition", structure_path)->required();
    ci->add_option("--theta", p_theta)->required();
    ci->add_option("--witness", witness_out, "improved decomposition JSON output");
    auto* cj = compute->add_subcommand("jumps", "jumps on a necklace");
    cj->add_option("--graph", graph_path)->required();
    cj->add_option("--necklace", structure_path)->required();

    // extract ----------------------------------------------------------------
    auto* extract = app.add_subcommand("extract", "constructive necklace/wheel algorithms");
    extract->require_subcommand(1);
    auto* ei = extract->add_subcommand("init-necklace", "seed necklace around a set U");
    ei->add_option("--graph", graph_path)->required();
    ei->add_option("--set", set_arg)->required();
    ei->add_option("--theta", p_theta)->required();
    ei->add_option("--n", p_n)->required();
    ei->add_option("--p", p_p, "bead budget per block")->required();
    ei->add_option("--out", out, "necklace JSON output")->capture_default_str();
    auto* es = extract->add_subcommand("search-necklace", "raise t+s+l toward theta");
    es->add_option("--graph", graph_path)->required();
    es->add_option("--set", set_arg)->required();
    es->add_option("--theta", p_theta)->required();
    es->add_option("--n", p_n)->required();
    es->add_option("--budget", budget)->capture_default_str();
    es->add_option("--out", out, "necklace JSON output")->capture_default_str();
    auto* ew = extract->add_subcommand("necklace-to-wheel", "pigeonhole wheel inside a necklace");
    ew->add_option("--graph", graph_path)->required();
    ew->add_option("--necklace", structure_path)->required();
    ew->add_option("--n", p_n)->required();
    ew->add_option("--spec-out", spec_path, "wheel spec JSON output")->required();
    ew->add_option("--model-out", model_out, "minor model JSON output");
    auto* eg = extract->add_subcommand("grid-or-biclique", "grid subgraph or biclique minor");
    eg->add_option("--spec", spec_path)->required();
    eg->add_option("--n", p_n)->required();
    eg->add_option("--mode", mode_arg, "auto|grid|biclique")
        ->check(CLI::IsMember({"auto", "grid", "biclique"}))
        ->capture_default_str();
    eg->add_option("--out", out, "outcome JSON output")->capture_default_str();

    // Let --seed / shared flags appear after the subcommand name.
    auto enable_fallthrough = [](CLI::App* a, auto&& self) -> void {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) self(sub, self);
    };
    enable_fallthrough(&app, enable_fallthrough);

    CLI11_PARSE(app, argc, argv);

    try {
        // gen ----------------------------------------------------------------
        if (gw->parsed()) {
            WheelSpec spec = random_wheel_spec(p_t, p_l, p_n, seed);
            BuiltWheel bw = build_wheel(spec);
            return run_gen("wheel", json{{"t", p_t}, {"l", p_l}, {"n", p_n}}, bw.graph, out,
                           format, wheel_spec_to_json(spec), structure_path);
        }
        if (gn->parsed()) {
            SyntheticNecklace sn = synthetic_necklace(p_t, p_s, p_l, p_n, seed);
            if (!validate_necklace(sn.graph, sn.necklace).all_pass())
                throw std::logic_error("generated necklace failed self-verification");
            return run_gen("necklace", json{{"t", p_t}, {"s", p_s}, {"l", p_l}, {"n", p_n}},
                           sn.graph, out, format, necklace_to_json(sn.necklace), structure_path);
        }
        if (gt->parsed()) {
            TightExample te = tight_example(p_n, p_theta);
            json sets = json::object();
            sets["a"] = json(te.a);
            sets["b"] = json(te.b);
            return run_gen("tight-example", json{{"n", p_n}, {"theta", p_theta}}, te.graph, out,
                           format, sets, structure_path);
        }
        if (gg->parsed())
            return run_gen("grid", json{{"n", p_n}}, grid(p_n), out, format, {}, "");
        if (gb->parsed())
            return run_gen("biclique", json{{"a", p_a}, {"b", p_b}}, complete_bipartite(p_a, p_b),
                           out, format, {}, "");
        if (gr->parsed()) {
            Graph g = connected ? random_connected_graph(p_n, p_prob, seed)
                                : random_graph(p_n, p_prob, seed);
            return run_gen("random", json{{"n", p_n}, {"p", p_prob}}, g, out, format, {}, "");
        }

        // verify -------------------------------------------------------------
        if (vn->parsed()) {
            Graph g = load_graph(graph_path);
            Necklace nk = necklace_from_json(load_json(structure_path));
            return report_necklace(g, nk, report_out);
        }
        if (vs->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet z = parse_vertex_set(set_arg);
            for (int v : z)
                if (!g.has_vertex(v)) throw BadInput("set vertex " + std::to_string(v) + " not in graph");
            bool ok = is_theta_connected_paths(g, z, p_theta);
            std::cout << "theta-set (theta=" << p_theta << ", |Z|=" << z.size() << "): "
                      << (ok ? "pass" : "FAIL") << "\n";
            if (!ok) {
                auto sep = violating_separation(g, z, p_theta);
                if (sep)
                    std::cout << "violating separation of order " << sep->order() << "\n";
            }
            return ok ? kExitOk : kExitVerification;
        }
        if (vd->parsed()) {
            Graph g = load_graph(graph_path);
            TreeDecomposition td = decomposition_from_json(load_json(structure_path));
            try {
                validate_decomposition(g, td);
            } catch (const std::invalid_argument& e) {
                std::cout << "decomposition: FAIL (" << e.what() << ")\n";
                return kExitVerification;
            }
            int w = width(g, td);
            int adh = adhesion(g, td);
            std::cout << "decomposition: pass (width " << w << ", adhesion " << adh << ")\n";
            if (vd->count("--theta") && adh >= p_theta) {
                std::cout << "adhesion " << adh << " not below theta " << p_theta << "\n";
                return kExitVerification;
            }
            return kExitOk;
        }
        if (vw->parsed()) {
            WheelSpec spec = wheel_spec_from_json(load_json(spec_path));
            BuiltWheel bw = build_wheel(spec);
            VertexSet tr = parse_vertex_set(set_arg);
            bool ok = verify_rim_transversal(spec, bw, tr);
            std::cout << "wheel-transversal: " << (ok ? "pass" : "FAIL") << "\n";
            return ok ? kExitOk : kExitVerification;
        }
        if (vm->parsed()) {
            Graph g = load_graph(graph_path);
            Graph h = load_graph(structure_path);
            MinorModel m = minor_model_from_json(load_json(model_out));
            bool ok = validate_minor_model(g, h, m);
            std::cout << "minor-model: " << (ok ? "pass" : "FAIL") << "\n";
            return ok ? kExitOk : kExitVerification;
        }

        // compute ------------------------------------------------------------
        if (cw->parsed()) {
            Graph g = load_graph(graph_path);
            // Strip isolated vertices: the edge-leaf format cannot hold them.
            for (int v : VertexSet(g.vertices()))
                if (g.degree(v) == 0) {
                    std::cerr << "warning: dropping isolated vertex " << v << "\n";
                    g.remove_vertex(v);
                }
            auto res = theta_tree_width_exact(g, p_theta);
            std::cout << "tw_" << p_theta << " = " << res.value << "\n";
            if (!witness_out.empty()) {
                validate_decomposition(g, res.witness);
                spit(witness_out, decomposition_to_json(res.witness).dump(2) + "\n");
            }
            return kExitOk;
        }
        if (cm->parsed()) {
            Graph g = load_graph(graph_path);
            guard_size(g);
            VertexSet best = max_theta_connected_set(g, p_theta);
            std::cout << "max theta-connected set (theta=" << p_theta << "): size "
                      << best.size() << "\n";
            if (!witness_out.empty()) spit(witness_out, json(best).dump() + "\n");
            return kExitOk;
        }
        if (ci->parsed()) {
            Graph g = load_graph(graph_path);
            TreeDecomposition td = decomposition_from_json(load_json(structure_path));
            int round = 0;
            auto improved = improve_to_connected_bags(
                g, td, p_theta, [&](const std::map<int, int, std::greater<>>& sig) {
                    std::cout << "signature[" << round++ << "]:";
                    for (const auto& [size, count] : sig)
                        std::cout << " " << size << "x" << count;
                    std::cout << "\n";
                });
            std::cout << "width " << width(g, improved) << ", adhesion "
                      << adhesion(g, improved) << ", " << (round - 1) << " improvement rounds\n";
            if (!witness_out.empty()) {
                validate_decomposition(g, improved);
                spit(witness_out, decomposition_to_json(improved).dump(2) + "\n");
            }
            return kExitOk;
        }
        if (cj->parsed()) {
            Graph g = load_graph(graph_path);
            Necklace nk = necklace_from_json(load_json(structure_path));
            auto jumps = find_jumps(g, nk);
            for (const Jump& jp : jumps) {
                std::cout << "jump (" << jp.i << "," << jp.j << ")"
                          << (is_long_jump(jp, nk.n) ? " long" : "") << " path";
                for (int v : jp.path) std::cout << " " << v;
                std::cout << "\n";
            }
            std::cout << jumps.size() << " jumps, long-jump-free: "
                      << (is_long_jump_free(g, nk) ? "yes" : "no") << "\n";
            return kExitOk;
        }

        // extract ------------------------------------------------------------
        if (ei->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = parse_vertex_set(set_arg);
            Necklace nk;
            try {
                nk = init_necklace(g, u, p_theta, p_n, p_p);
            } catch (const std::runtime_error& e) {
                std::cerr << "init-necklace: " << e.what() << "\n";
                return kExitBadInput;
            }
            int rc = report_necklace(g, nk, "");
            if (rc != kExitOk) return rc;
            spit(out, necklace_to_json(nk).dump(2) + "\n");
            std::cout << "init-necklace: (" << nk.t << "," << nk.s << "," << nk.l << ","
                      << nk.n << ")-necklace\n";
            return kExitOk;
        }
        if (es->parsed()) {
            Graph g = load_graph(graph_path);
            VertexSet u = parse_vertex_set(set_arg);
            auto res = search_necklace(g, u, p_theta, p_n, budget);
            if (res.status == SearchStatus::BudgetExhausted) {
                std::cerr << "search-necklace: budget exhausted\n";
                return kExitBudget;
            }
            if (res.status == SearchStatus::Exhausted) {
                std::cerr << "search-necklace: no necklace found at these parameters\n";
                return kExitVerification;
            }
            const Necklace& nk = *res.necklace;
            int rc = report_necklace(g, nk, "");
            if (rc != kExitOk) return rc;
            spit(out, necklace_to_json(nk).dump(2) + "\n");
            std::cout << "search-necklace: (" << nk.t << "," << nk.s << "," << nk.l << ","
                      << nk.n << ")-necklace\n";
            return kExitOk;
        }
        if (ew->parsed()) {
            Graph g = load_graph(graph_path);
            Necklace nk = necklace_from_json(load_json(structure_path));
            auto [spec, model] = necklace_to_wheel(g, nk, p_n);
            BuiltWheel bw = build_wheel(spec);
            if (!validate_minor_model(g, bw.graph, model))
                throw std::logic_error("necklace-to-wheel model failed self-verification");
            spit(spec_path, wheel_spec_to_json(spec).dump(2) + "\n");
            if (!model_out.empty()) spit(model_out, minor_model_to_json(model).dump(2) + "\n");
            std::cout << "necklace-to-wheel: (" << spec.t() << "," << spec.l() << "," << spec.n
                      << ")-wheel, minor model verified\n";
            return kExitOk;
        }
        if (eg->parsed()) {
            WheelSpec spec = wheel_spec_from_json(load_json(spec_path));
            WheelOutcomeMode mode = mode_arg == "grid"       ? WheelOutcomeMode::Grid
                                    : mode_arg == "biclique" ? WheelOutcomeMode::Biclique
                                                             : WheelOutcomeMode::Auto;
            WheelOutcome res = wheel_to_grid_or_biclique(spec, p_n, mode);
            json payload;
            payload["target"] = graph_to_json(res.target);
            if (res.kind == WheelOutcomeKind::GridSubgraph) {
                // Re-verify: every grid edge must map to a wheel edge.
                for (const Edge& e : res.target.edges())
                    if (!res.wheel.graph.has_edge(res.grid_embedding.at(e.u),
                                                  res.grid_embedding.at(e.v)))
                        throw std::logic_error("grid embedding failed self-verification");
                payload["kind"] = "grid";
                json emb = json::object();
                for (const auto& [a, b] : res.grid_embedding) emb[std::to_string(a)] = b;
                payload["embedding"] = emb;
                std::cout << "grid-or-biclique: grid(" << p_n << ") subgraph embedding\n";
            } else {
                if (!validate_minor_model(res.wheel.graph, res.target, res.biclique_model))
                    throw std::logic_error("biclique model failed self-verification");
                payload["kind"] = "biclique";
                payload["model"] = minor_model_to_json(res.biclique_model);
                std::cout << "grid-or-biclique: K_{" << p_n * p_n << "," << p_n * p_n
                          << "} minor model\n";
            }
            spit(out, payload.dump(2) + "\n");
            return kExitOk;
        }
    } catch (const SizeGuardError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitSizeGuard;
    } catch (const BadInput& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitBadInput;
}
