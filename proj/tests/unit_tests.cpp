#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "oracles.hpp"
#include "tw/connectivity.hpp"
#include "tw/decomposition.hpp"
#include "tw/extraction.hpp"
#include "tw/graph.hpp"
#include "tw/json_io.hpp"
#include "tw/minor.hpp"
#include "tw/necklace.hpp"
#include "tw/separation.hpp"
#include "tw/wheel.hpp"

using namespace tw;

TEST_CASE("graph generators and format") {
    CHECK(grid(3).num_vertices() == 9);
    CHECK(grid(3).num_edges() == 12);
    CHECK(grid(3).has_edge(1, 2));   // row-major: 1 2 3 / 4 5 6 / 7 8 9
    CHECK(grid(3).has_edge(2, 5));
    CHECK(!grid(3).has_edge(3, 4));
    CHECK(complete_bipartite(2, 3).num_edges() == 6);
    CHECK(complete_bipartite(2, 3).has_edge(1, 3));
    CHECK(!complete_bipartite(2, 3).has_edge(1, 2));
    CHECK(complete(5).num_edges() == 10);
    CHECK(cycle(6).num_edges() == 6);
    CHECK(path(4).num_edges() == 3);
    CHECK(path(10).is_tree());
    CHECK(!cycle(4).is_tree());
    CHECK_THROWS_AS(grid(0), std::invalid_argument);

    Graph g = grid(3);
    std::istringstream in(format_graph(g));
    CHECK(parse_graph(in).edges() == g.edges());
    std::istringstream cmt("# c\np 3 2\n1 2\n# mid\n2 3\n");
    CHECK(parse_graph(cmt).num_edges() == 2);
    CHECK(to_dot(g).find("--") != std::string::npos);

    CHECK(random_connected_graph(8, 0.3, 5).is_connected());
    CHECK(random_graph(6, 0.5, 1).edges() == random_graph(6, 0.5, 1).edges());
}

TEST_CASE("separations") {
    Graph g = cycle(6);
    Separation s = make_separation(g, {1, 2, 3, 4}, {{Edge(1, 2)}, {Edge(2, 3)}, {Edge(3, 4)}});
    CHECK(is_valid_separation(g, s));
    CHECK(s.order() == 2);
    CHECK(s.shared() == VertexSet{1, 4});

    // Submodularity over random separation pairs.
    Graph h = random_connected_graph(7, 0.4, 11);
    std::vector<Separation> seps;
    for_each_edge_bipartition_separation(h, [&](const Separation& sp) {
        if (seps.size() < 40) seps.push_back(sp);
    });
    for (std::size_t i = 0; i + 1 < seps.size(); i += 2) {
        auto [c1, c2] = submodular_combine(h, seps[i], seps[i + 1]);
        CHECK(is_valid_separation(h, c1));
        CHECK(is_valid_separation(h, c2));
        CHECK(c1.order() + c2.order() <= seps[i].order() + seps[i + 1].order());
    }
}

TEST_CASE("disjoint paths match the brute-force cut oracle") {
    for (int seed = 0; seed < 60; ++seed) {
        Graph g = random_graph(7, 0.35, seed);
        VertexSet x = {1, 2, 3};
        VertexSet y = {4 + seed % 2, 6, 7};
        auto dp = max_disjoint_paths(g, x, y);
        CHECK(dp.count == oracle::min_vertex_cut(g, x, y));
        // Returned paths are pairwise vertex-disjoint X-Y paths.
        VertexSet used;
        for (const Path& p : dp.paths) {
            CHECK(x.count(p.front()));
            CHECK(y.count(p.back()));
            for (std::size_t i = 0; i < p.size(); ++i) {
                CHECK(used.insert(p[i]).second);
                if (i > 0) CHECK(g.has_edge(p[i - 1], p[i]));
            }
        }
    }
}

TEST_CASE("theta-connectedness definitions agree on small catalogs") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracle::connected_catalog(n)) {
            VertexSet z1 = g.vertices();
            VertexSet z2;
            for (int v : g.vertices())
                if (v % 2 == 1) z2.insert(v);
            for (int theta = 1; theta <= 3; ++theta)
                for (const VertexSet& z : {z1, z2}) {
                    if (z.empty()) continue;
                    CHECK(is_theta_connected_paths(g, z, theta) ==
                          is_theta_connected_separations(g, z, theta));
                }
        }
}

TEST_CASE("max theta-connected sets") {
    // A star's leaves are pairwise linked through the centre: any three leaves
    // form a 2-connected set, while centre + two leaves does not.
    Graph star = complete_bipartite(1, 4);
    CHECK(max_theta_connected_set(star, 2).size() == 3);
    CHECK(is_theta_connected_paths(star, {2, 3, 4}, 2));
    CHECK(!is_theta_connected_paths(star, {1, 2, 3}, 2));
    CHECK(max_theta_connected_set(cycle(6), 2).size() == 6);
    CHECK(max_theta_connected_set(cycle(6), 3).size() == 3);
    CHECK(max_theta_connected_set(complete(5), 4).size() == 5);

    auto sep = violating_separation(star, {1, 2, 3}, 2);
    REQUIRE(sep.has_value());
    CHECK(sep->order() == 1);

    LinkageTable table(cycle(6), 2);
    CHECK(table.is_theta_connected(VertexSet{1, 3, 5}));
}

TEST_CASE("clique sums") {
    Graph k4a = complete(4);
    Graph k4b;
    for (int v : {2, 3, 4, 5}) k4b.add_vertex(v);
    for (int u : {2, 3, 4, 5})
        for (int v : {2, 3, 4, 5})
            if (u < v) k4b.add_edge(u, v);
    Graph sum = clique_sum(k4a, k4b, {2, 3, 4});
    CHECK(sum.num_vertices() == 5);
    CHECK(sum.num_edges() == 6);
    CHECK(!sum.has_edge(2, 3));
    CHECK_THROWS_AS(clique_sum(k4a, k4b, {2, 3}), std::invalid_argument);
}

TEST_CASE("exact theta-tree-width") {
    CHECK(theta_tree_width_exact(cycle(6), 3).value == 2);
    CHECK(theta_tree_width_exact(cycle(6), 2).value == 5);
    CHECK(theta_tree_width_exact(complete(6), 3).value == 5);
    CHECK(theta_tree_width_exact(path(8), 2).value == 1);
    CHECK(theta_tree_width_exact(complete_bipartite(1, 4), 2).value == 1);
    CHECK(theta_tree_width_exact(grid(3), 3).value == 4);  // oracle-confirmed

    auto res = theta_tree_width_exact(cycle(6), 3);
    validate_decomposition(cycle(6), res.witness);
    CHECK(width(cycle(6), res.witness) == 2);
    CHECK(adhesion(cycle(6), res.witness) < 3);

    CHECK_THROWS_AS(theta_tree_width_exact(complete(13), 3), SizeGuardError);
}

TEST_CASE("solver agrees with the decomposition-search oracle, theta = 3") {
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : oracle::connected_catalog(n)) {
            if (g.num_edges() == 0) continue;
            auto o = oracle::tree_width_by_decompositions(g, 3);
            REQUIRE(o.has_value());
            CHECK(*o == theta_tree_width_exact(g, 3).value);
        }
    // theta = 2: the adhesion-based oracle finds no decomposition for a
    // cycle (every edge has two degree-2 endpoints), while the clique-sum
    // recursion still assigns a value. The definitions genuinely split here.
    CHECK(!oracle::tree_width_by_decompositions(cycle(6), 2).has_value());
    CHECK(!oracle::tree_width_by_decompositions(path(5), 2).has_value());
    CHECK(oracle::tree_width_by_decompositions(complete_bipartite(1, 4), 2) == 1);
    CHECK(theta_tree_width_exact(path(5), 2).value == 1);
    CHECK(theta_tree_width_exact(complete_bipartite(1, 4), 2).value == 1);
}

TEST_CASE("improvement to theta-connected bags") {
    for (int seed = 0; seed < 10; ++seed) {
        Graph g = random_connected_graph(7, 0.4, 100 + seed);
        auto res = theta_tree_width_exact(g, 3);
        int rounds = 0;
        auto improved = improve_to_connected_bags(
            g, res.witness, 3, [&](const auto&) { ++rounds; });
        CHECK(rounds >= 1);
        validate_decomposition(g, improved);
        CHECK(width(g, improved) <= width(g, res.witness));
        CHECK(adhesion(g, improved) < 3);
        for (const auto& [t, bag] : all_bags(g, improved))
            CHECK(is_theta_connected_paths(g, bag, 3));
    }
}

TEST_CASE("minor models") {
    auto found = is_minor(complete(5), complete(4));
    REQUIRE(found.status == MinorSearchStatus::Found);
    CHECK(validate_minor_model(complete(5), complete(4), *found.model));
    CHECK(is_minor(path(5), cycle(3)).status == MinorSearchStatus::No);
    CHECK(is_minor(grid(3), cycle(4)).status == MinorSearchStatus::Found);

    Graph r = retract_edge(complete(4), Edge(3, 4), 3);
    CHECK(r.num_vertices() == 3);
    CHECK(r.num_edges() == 3);
    CHECK(!r.has_vertex(4));
}

TEST_CASE("necklace validation and attachment sizes") {
    auto sn = synthetic_necklace(4, 2, 1, 6, 42);
    auto rep = validate_necklace(sn.graph, sn.necklace);
    CHECK(rep.all_pass());
    auto seq = attachment_sequences(sn.necklace);
    CHECK(seq.left[0].size() == 2);   // X_1 meets the closing matching: s
    CHECK(seq.right[0].size() == 4);  // Y_1 meets M_1: t
    for (int i = 1; i < 5; ++i) CHECK(seq.left[i].size() == 4);

    CHECK_THROWS_AS(synthetic_necklace(1, 2, 0, 4, 1), std::invalid_argument);  // s > t
}

TEST_CASE("necklace algebra") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto sn = synthetic_necklace(2 + seed % 2, 1, seed % 3 == 0 ? 1 : 0, 5 + seed % 3, seed);
        const Necklace& nk = sn.necklace;
        CHECK(reverse(reverse(nk)) == nk);
        CHECK(validate_necklace(sn.graph, reverse(nk)).all_pass());

        std::vector<int> all_cuts;
        for (int i = 1; i < nk.n; ++i) all_cuts.push_back(i);
        CHECK(contract(nk, all_cuts) == nk);

        Necklace c = contract(nk, {2, 4});
        CHECK(c.n == 3);
        CHECK(validate_necklace(sn.graph, c).all_pass());
        CHECK(is_supported_by(c, necklace_vertices(nk)));
        CHECK(supports(nk, c));
    }
    auto sn = synthetic_necklace(2, 2, 0, 6, 9);
    CHECK_THROWS_AS(contract(sn.necklace, {3, 3}), std::invalid_argument);
}

TEST_CASE("tightness construction") {
    TightExample te = tight_example(4, 3);
    CHECK(te.graph.num_vertices() == 16);
    CHECK(te.graph.num_edges() == 24);
    CHECK(te.a.size() == 4);
    CHECK(te.b.size() == 12);  // C(4,2) groups of 2
    CHECK_THROWS_AS(tight_example(2, 3), std::invalid_argument);
}

TEST_CASE("jumps") {
    // A (1,0,0,3)-necklace on three edges of a 10-cycle: the rest of the
    // cycle is one outside component attaching to beads 1 and 3.
    Graph g = cycle(10);
    Necklace nk;
    nk.t = 1;
    nk.s = 0;
    nk.l = 0;
    nk.n = 3;
    nk.beads = {Bead{{1, 2}, {Edge(1, 2)}}, Bead{{3, 4}, {Edge(3, 4)}},
                Bead{{5, 6}, {Edge(5, 6)}}};
    nk.matchings = {{Edge(2, 3)}, {Edge(4, 5)}, {}};
    REQUIRE(validate_necklace(g, nk).all_pass());

    auto jumps = find_jumps(g, nk);
    REQUIRE(jumps.size() == 1);
    CHECK(jumps[0].i == 1);
    CHECK(jumps[0].j == 3);
    CHECK(!is_long_jump(jumps[0], nk.n));  // (1,n) is exempt
    CHECK(is_long_jump_free(g, nk));
    CHECK(is_long_jump(Jump{1, 3, {}}, 5));
    CHECK(!is_long_jump(Jump{2, 3, {}}, 5));
}

TEST_CASE("wheel construction") {
    WheelSpec spec;
    spec.rim_tree = path(2);
    spec.hubs = {10};
    spec.psi[10] = 1;
    spec.pi = {{1, 2}, {2, 1}};
    spec.n = 4;
    CHECK(spec.t() == 2);
    CHECK(spec.l() == 1);
    CHECK(spec.theta() == 5);

    BuiltWheel bw = build_wheel(spec);
    CHECK(bw.graph.num_vertices() == 9);  // 4 copies of 2 + hub
    // W1 rim edges 4, W2 consecutive matchings 3*2, W3 wrap 2, W4 hub 4.
    CHECK(bw.graph.num_edges() == 4 + 6 + 2 + 4);
    CHECK(verify_rim_transversal(spec, bw, {bw.copies.at({1, 1}), bw.copies.at({2, 2}),
                                            bw.copies.at({1, 3}), bw.copies.at({2, 4})}));
    CHECK(!verify_rim_transversal(spec, bw, {bw.copies.at({1, 1}), bw.copies.at({2, 1}),
                                             bw.copies.at({1, 3}), bw.copies.at({2, 4})}));

    Necklace nk = necklace_from_wheel(spec, bw);
    CHECK(nk.t == 2);
    CHECK(nk.s == 2);
    CHECK(nk.l == 1);
    CHECK(nk.n == 4);
    CHECK(validate_necklace(bw.graph, nk).all_pass());

    WheelSpec bad = spec;
    bad.n = 2;
    CHECK_THROWS_AS(build_wheel(bad), std::invalid_argument);
}

TEST_CASE("necklace to wheel round trip") {
    auto sn = synthetic_necklace(2, 2, 1, 9, 13);
    auto [spec, model] = necklace_to_wheel(sn.graph, sn.necklace, 3);
    CHECK(spec.n == 3);
    BuiltWheel bw = build_wheel(spec);
    CHECK(validate_minor_model(sn.graph, bw.graph, model));

    auto un = synthetic_necklace(2, 1, 0, 9, 13);  // not balanced
    CHECK_THROWS_AS(necklace_to_wheel(un.graph, un.necklace, 3), std::invalid_argument);
}

TEST_CASE("wheel to grid or biclique") {
    WheelSpec pspec;  // path rim tree: the grid branch
    pspec.rim_tree = path(3);
    pspec.n = 4;
    for (int v : pspec.rim_tree.vertices()) pspec.pi[v] = v;
    WheelOutcome gout = wheel_to_grid_or_biclique(pspec, 2, WheelOutcomeMode::Grid);
    CHECK(gout.kind == WheelOutcomeKind::GridSubgraph);
    for (const Edge& e : gout.target.edges())
        CHECK(gout.wheel.graph.has_edge(gout.grid_embedding.at(e.u), gout.grid_embedding.at(e.v)));

    WheelSpec sspec;  // star rim tree K_{1,4}: the biclique branch
    sspec.rim_tree = complete_bipartite(1, 4);
    sspec.n = 5;
    for (int v : sspec.rim_tree.vertices()) sspec.pi[v] = v;
    WheelOutcome bout = wheel_to_grid_or_biclique(sspec, 2, WheelOutcomeMode::Biclique);
    CHECK(bout.kind == WheelOutcomeKind::BicliqueMinor);
    CHECK(bout.target.num_vertices() == 8);  // K_{4,4}
    CHECK(validate_minor_model(bout.wheel.graph, bout.target, bout.biclique_model));
}

TEST_CASE("long path or high degree") {
    auto singletons = [](const Graph& g) {
        Necklace nk;
        nk.n = static_cast<int>(g.num_vertices());
        for (int v : g.vertices()) {
            nk.beads.push_back(Bead{{v}, {}});
            nk.matchings.push_back({});
        }
        return nk;
    };
    Graph star = complete_bipartite(1, 8);
    Necklace hub = long_path_or_high_degree(star, singletons(star), 3, 2);
    CHECK(hub.l == 1);
    CHECK(hub.n == 3);
    CHECK(hub.hubs == VertexSet{1});
    CHECK(validate_necklace(star, hub).all_pass());

    Graph p8 = path(8);
    Necklace p1 = long_path_or_high_degree(p8, singletons(p8), 3, 2);
    CHECK(p1.t == 1);
    CHECK(p1.n == 2);
    CHECK(validate_necklace(p8, p1).all_pass());
    Necklace p2 = long_path_or_high_degree(p8, singletons(p8), 2, 3);
    CHECK(p2.t == 1);
    CHECK(p2.n == 3);
    CHECK(validate_necklace(p8, p2).all_pass());

    CHECK_THROWS_AS(long_path_or_high_degree(path(2), singletons(path(2)), 2, 3),
                    std::invalid_argument);
}

TEST_CASE("init necklace") {
    Graph k29 = complete_bipartite(2, 9);
    VertexSet u;
    for (int v = 3; v <= 11; ++v) u.insert(v);
    Necklace nk = init_necklace(k29, u, 2, 3, 3);
    CHECK(nk.l == 2);
    CHECK(nk.hubs == VertexSet{1, 2});
    CHECK(validate_necklace(k29, nk).all_pass());
    CHECK_THROWS_AS(init_necklace(cycle(6), {1, 2}, 3, 3, 3), std::invalid_argument);
}

TEST_CASE("jump surgery") {
    Graph g = cycle(14);
    g.add_edge(1, 8);  // chord: a long jump once beads sit on the cycle
    Necklace nk;
    nk.t = 1;
    nk.s = 0;
    nk.l = 0;
    nk.n = 7;
    for (int i = 0; i < 7; ++i) {
        nk.beads.push_back(Bead{{2 * i + 1, 2 * i + 2}, {Edge(2 * i + 1, 2 * i + 2)}});
        nk.matchings.push_back(i < 6 ? EdgeSet{Edge(2 * i + 2, 2 * i + 3)} : EdgeSet{});
    }
    REQUIRE(validate_necklace(g, nk).all_pass());
    auto jumps = find_jumps(g, nk);
    auto it = std::find_if(jumps.begin(), jumps.end(),
                           [&](const Jump& jp) { return is_long_jump(jp, nk.n); });
    REQUIRE(it != jumps.end());
    Necklace up = jump_increase_s(g, nk, *it);
    CHECK(up.s == 1);
    CHECK(validate_necklace(g, up).all_pass());
}

TEST_CASE("removable path extraction") {
    auto sn = synthetic_necklace(2, 1, 0, 9, 3);
    VertexSet u = necklace_vertices(sn.necklace);
    ExtractedPath ex = extract_path(sn.graph, sn.necklace, u, 3);
    CHECK(ex.necklace.t == 1);
    CHECK(ex.necklace.s == 1);
    CHECK(ex.necklace.n == 3);
    CHECK(validate_necklace(sn.graph, ex.necklace).all_pass());
    CHECK(!ex.path.empty());
    // The path avoids the surviving necklace but touches every bead.
    VertexSet nv = necklace_vertices(ex.necklace);
    for (int v : ex.path) CHECK(!nv.count(v));
    for (const Bead& b : ex.necklace.beads) {
        bool adj = false;
        for (int v : ex.path)
            for (int w : sn.graph.neighbors(v))
                if (b.vertices.count(w)) adj = true;
        CHECK(adj);
    }
}

TEST_CASE("necklace search") {
    Graph c10 = cycle(10);
    auto r1 = search_necklace(c10, c10.vertices(), 2, 3);
    REQUIRE(r1.status == SearchStatus::Found);
    CHECK(r1.necklace->t + r1.necklace->s + r1.necklace->l >= 2);
    CHECK(r1.necklace->n == 3);
    CHECK(validate_necklace(c10, *r1.necklace).all_pass());

    Graph k29 = complete_bipartite(2, 9);
    VertexSet u;
    for (int v = 3; v <= 11; ++v) u.insert(v);
    auto r2 = search_necklace(k29, u, 2, 3);
    REQUIRE(r2.status == SearchStatus::Found);
    CHECK(validate_necklace(k29, *r2.necklace).all_pass());

    auto r3 = search_necklace(path(4), {1, 2, 3, 4}, 2, 3);
    CHECK(r3.status == SearchStatus::Exhausted);
    auto r4 = search_necklace(c10, c10.vertices(), 2, 3, /*budget=*/1);
    CHECK(r4.status == SearchStatus::BudgetExhausted);
}

TEST_CASE("json round trips") {
    auto sn = synthetic_necklace(2, 1, 1, 5, 7);
    auto nj = necklace_to_json(sn.necklace);
    CHECK(necklace_from_json(nj) == sn.necklace);

    Graph g = grid(3);
    CHECK(graph_from_json(graph_to_json(g)).edges() == g.edges());
    CHECK(parse_graph_any(format_graph(g)).edges() == g.edges());
    CHECK(parse_graph_any(graph_to_json(g).dump()).edges() == g.edges());

    auto res = theta_tree_width_exact(cycle(6), 3);
    auto dj = decomposition_to_json(res.witness);
    TreeDecomposition td = decomposition_from_json(dj);
    CHECK(decomposition_to_json(td) == dj);
    CHECK(width(cycle(6), td) == 2);

    WheelSpec spec;
    spec.rim_tree = path(3);
    spec.hubs = {9};
    spec.psi[9] = 2;
    for (int v : spec.rim_tree.vertices()) spec.pi[v] = v;
    spec.n = 4;
    auto wj = wheel_spec_to_json(spec);
    CHECK(wheel_spec_to_json(wheel_spec_from_json(wj)) == wj);

    MinorModel m;
    m.branch_sets[1] = {1, 2};
    m.branch_sets[2] = {3};
    m.edge_witnesses.insert({Edge(1, 2), Edge(2, 3)});
    CHECK(minor_model_to_json(minor_model_from_json(minor_model_to_json(m))) ==
          minor_model_to_json(m));

    CHECK_THROWS_AS(necklace_from_json(nlohmann::json{{"params", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(graph_from_json(nlohmann::json::object()), std::invalid_argument);
}
