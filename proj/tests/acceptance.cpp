// Acceptance suite: one criterion per run ("acceptance 3") or all ("acceptance").
// Prints one "criterion N: PASS/FAIL" line per criterion; exit 0 iff all
// requested criteria pass.
//
// Criteria 4 and 6 contain documented divergences at theta = 2 (see README,
// "Known divergences"); they report FAIL with the counterexample rather than
// being weakened.

#include <cstdlib>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "tw/connectivity.hpp"
#include "tw/decomposition.hpp"
#include "tw/extraction.hpp"
#include "tw/graph.hpp"
#include "tw/minor.hpp"
#include "tw/necklace.hpp"
#include "tw/separation.hpp"
#include "tw/wheel.hpp"

using namespace tw;

namespace {

struct Criterion {
    bool pass = true;
    std::ostringstream detail;

    void fail(const std::string& why) {
        if (pass) detail << why;
        pass = false;
    }
};

Graph random_tree(int n, std::mt19937_64& rng) {
    Graph t;
    t.add_vertex(1);
    for (int v = 2; v <= n; ++v)
        t.add_edge(std::uniform_int_distribution<int>(1, v - 1)(rng), v);
    return t;
}

WheelSpec make_spec(const Graph& rim, int l, int n, std::mt19937_64& rng) {
    WheelSpec spec;
    spec.rim_tree = rim;
    spec.n = n;
    std::vector<int> perm(rim.vertices().begin(), rim.vertices().end());
    std::shuffle(perm.begin(), perm.end(), rng);
    int k = 0;
    for (int v : rim.vertices()) spec.pi[v] = perm[k++];
    int t = static_cast<int>(rim.num_vertices());
    for (int z = t + 1; z <= t + l; ++z) {
        spec.hubs.insert(z);
        spec.psi[z] = std::uniform_int_distribution<int>(1, t)(rng);
    }
    return spec;
}

// 1. Wheel rim-transversals are (2t+l)-connected (capped at 4).
void criterion1(Criterion& c) {
    std::mt19937_64 rng(7);
    for (int t : {1, 2})
        for (int l : {0, 1})
            for (int n = 3; n <= 6; ++n) {
                WheelSpec spec = make_spec(t == 1 ? path(1) : path(2), l, n, rng);
                BuiltWheel bw = build_wheel(spec);
                int theta = std::min(2 * t + l, 4);
                std::vector<VertexSet> transversals;
                for (int rv : spec.rim_tree.vertices()) {  // constant transversals
                    VertexSet tr;
                    for (int i = 1; i <= n; ++i) tr.insert(bw.copies.at({rv, i}));
                    transversals.push_back(tr);
                }
                std::vector<int> rim(spec.rim_tree.vertices().begin(),
                                     spec.rim_tree.vertices().end());
                for (int r = 0; r < 10; ++r) {  // random transversals
                    VertexSet tr;
                    for (int i = 1; i <= n; ++i)
                        tr.insert(bw.copies.at(
                            {rim[std::uniform_int_distribution<std::size_t>(
                                 0, rim.size() - 1)(rng)],
                             i}));
                    transversals.push_back(tr);
                }
                for (const VertexSet& tr : transversals) {
                    if (!verify_rim_transversal(spec, bw, tr))
                        c.fail("bad transversal generated");
                    else if (!is_theta_connected_paths(bw.graph, tr, theta))
                        c.fail("transversal not " + std::to_string(theta) +
                               "-connected at t=" + std::to_string(t) +
                               " l=" + std::to_string(l) + " n=" + std::to_string(n));
                }
            }
}

// 2. Duality bound: tw_3 < |max 3-connected set| <= C(tw_3+1,2)*2.
// The upper bound is only backed by the counting argument when tw_3 >= 2
// (it instantiates a lemma needing n >= theta at n = tw_3 + 1); at tw_3 = 1
// it is false — in K_{1,3} the three leaves are a 3-connected set of size 3,
// above the stated cap of 2. See README, "Known divergences".
void criterion2(Criterion& c) {
    int violations = 0, low_width = 0;
    int done = 0;
    for (std::uint64_t seed = 0; done < 300; ++seed) {
        int n = 5 + static_cast<int>(seed % 4);
        Graph g = random_connected_graph(n, 0.45, seed);
        ++done;
        int w = theta_tree_width_exact(g, 3).value;
        int u = static_cast<int>(max_theta_connected_set(g, 3).size());
        if (!(w < u && u <= (w + 1) * w)) {
            if (violations == 0)
                c.fail("seed " + std::to_string(seed) + ": tw=" + std::to_string(w) +
                       " |U|=" + std::to_string(u));
            ++violations;
            if (w < 2) ++low_width;
        }
    }
    if (violations)
        c.detail << " (" << violations << " of 300 violate the upper bound; " << low_width
                 << " of those have tw < 2, the regime the counting argument does not cover)";
}

// 3. Tightness construction at n=4, theta=3.
void criterion3(Criterion& c) {
    TightExample te = tight_example(4, 3);
    if (te.b.size() != 12) c.fail("|B| = " + std::to_string(te.b.size()));
    if (!is_theta_connected_paths(te.graph, te.b, 3)) c.fail("B not 3-connected");
    setenv("THETA_WIDTH_MAX_VERTICES", "16", 1);
    int w = theta_tree_width_exact(te.graph, 3).value;
    unsetenv("THETA_WIDTH_MAX_VERTICES");
    if (w > 3) c.fail("tw_3 = " + std::to_string(w));
}

// 4. |max theta-connected set| = tw_theta + 1 on connected graphs <= 6
//    vertices, theta in {1,2}.
// The identity holds at theta = 1 but fails at theta = 2: in K_{1,3} the
// three leaves form a 2-connected set (any required linkage uses the centre
// for at most one of its two paths), yet tw_2 = 1. See README, "Known
// divergences".
void criterion4(Criterion& c) {
    int theta1_bad = 0, theta2_bad = 0;
    for (int theta : {1, 2})
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : oracle::connected_catalog(n)) {
                int w = theta_tree_width_exact(g, theta).value;
                int u = static_cast<int>(max_theta_connected_set(g, theta).size());
                if (u != w + 1) {
                    if (theta1_bad + theta2_bad == 0)
                        c.fail("theta=" + std::to_string(theta) + ", " + std::to_string(n) +
                               "-vertex counterexample with " + std::to_string(g.num_edges()) +
                               " edges: max set " + std::to_string(u) + ", tw+1 " +
                               std::to_string(w + 1));
                    ++(theta == 1 ? theta1_bad : theta2_bad);
                }
            }
    if (theta1_bad + theta2_bad)
        c.detail << " (theta=1 half: " << theta1_bad << " counterexamples; theta=2 half: "
                 << theta2_bad << ")";
}

// 5. Improvement procedure: terminates, signature strictly decreases, bags
//    theta-connected, width never increases.
void criterion5(Criterion& c) {
    using Sig = std::map<int, int, std::greater<>>;
    auto sig_less = [](const Sig& a, const Sig& b) {
        auto ia = a.begin();
        auto ib = b.begin();
        for (; ia != a.end() && ib != b.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return ia->first < ib->first;
            if (ia->second != ib->second) return ia->second < ib->second;
        }
        return ia == a.end() && ib != b.end();
    };
    int done = 0;
    for (std::uint64_t seed = 1000; done < 100; ++seed) {
        int n = 5 + static_cast<int>(seed % 4);
        Graph g = random_connected_graph(n, 0.4, seed);
        ++done;
        auto res = theta_tree_width_exact(g, 3);
        std::vector<Sig> sigs;
        TreeDecomposition improved =
            improve_to_connected_bags(g, res.witness, 3, [&](const Sig& s) { sigs.push_back(s); });
        for (std::size_t i = 1; i < sigs.size(); ++i)
            if (!sig_less(sigs[i], sigs[i - 1])) c.fail("signature did not decrease");
        if (width(g, improved) > width(g, res.witness)) c.fail("width increased");
        if (adhesion(g, improved) >= 3) c.fail("adhesion reached theta");
        for (const auto& [t, bag] : all_bags(g, improved))
            if (!is_theta_connected_paths(g, bag, 3)) c.fail("bag not 3-connected");
    }
}

// 6. Definition equivalences: path vs separation theta-connectedness
//    (graphs <= 7 vertices); clique-sum vs adhesion tree-width (<= 6).
void criterion6(Criterion& c) {
    for (int n = 2; n <= 7; ++n) {
        std::mt19937_64 rng(n);
        for (const Graph& g : oracle::connected_catalog(n)) {
            std::vector<VertexSet> zs{g.vertices()};
            VertexSet odd;
            for (int v : g.vertices())
                if (v % 2) odd.insert(v);
            zs.push_back(odd);
            VertexSet rnd;
            for (int v : g.vertices())
                if (rng() % 2) rnd.insert(v);
            if (!rnd.empty()) zs.push_back(rnd);
            for (int theta = 1; theta <= 3; ++theta)
                for (const VertexSet& z : zs)
                    if (is_theta_connected_paths(g, z, theta) !=
                        is_theta_connected_separations(g, z, theta)) {
                        c.fail("path/separation split on a " + std::to_string(n) +
                               "-vertex graph, theta=" + std::to_string(theta));
                        return;
                    }
        }
    }
    // The two tree-width formulations agree at theta = 3 but split at
    // theta = 2: any edge whose endpoints both have degree >= 2 forces an
    // edge-bag of size 2 in every edge-leaf decomposition, so only stars
    // admit adhesion < 2 while the clique-sum value is always finite. See
    // README, "Known divergences".
    int splits = 0, theta2_infeasible = 0, other = 0;
    for (int theta : {2, 3})
        for (int n = 2; n <= 6; ++n)
            for (const Graph& g : oracle::connected_catalog(n)) {
                auto o = oracle::tree_width_by_decompositions(g, theta);
                int solver = theta_tree_width_exact(g, theta).value;
                if (!o || *o != solver) {
                    if (splits == 0)
                        c.fail("clique-sum/adhesion split at theta=" + std::to_string(theta) +
                               " on a " + std::to_string(n) + "-vertex graph (" +
                               std::to_string(g.num_edges()) + " edges): clique-sum " +
                               std::to_string(solver) + ", adhesion " +
                               (o ? std::to_string(*o) : std::string("none")));
                    ++splits;
                    if (theta == 2 && !o)
                        ++theta2_infeasible;
                    else
                        ++other;
                }
            }
    if (splits)
        c.detail << " (path/separation half agrees everywhere; " << theta2_infeasible
                 << " splits, every one a theta=2 graph with no adhesion-<2 decomposition"
                 << (other ? "; plus " + std::to_string(other) + " other disagreements" : "")
                 << ")";
}

// 7. Submodularity of separation order on 500 random pairs.
void criterion7(Criterion& c) {
    std::mt19937_64 rng(23);
    int done = 0;
    for (std::uint64_t seed = 0; done < 500; ++seed) {
        Graph g = random_connected_graph(6 + static_cast<int>(seed % 2), 0.4, seed);
        std::vector<Separation> seps;
        for_each_edge_bipartition_separation(g, [&](const Separation& s) {
            if (seps.size() < 600 && rng() % 3 == 0) seps.push_back(s);
        });
        for (std::size_t i = 0; i + 1 < seps.size() && done < 500; i += 2, ++done) {
            auto [c1, c2] = submodular_combine(g, seps[i], seps[i + 1]);
            if (!is_valid_separation(g, c1) || !is_valid_separation(g, c2))
                c.fail("combination invalid");
            else if (c1.order() + c2.order() > seps[i].order() + seps[i + 1].order())
                c.fail("submodular inequality violated");
        }
    }
}

// 8. Long-path-or-high-degree over all trees <= 10 vertices, d=2, n=3.
void criterion8(Criterion& c) {
    for (int sz = 2; sz <= 10; ++sz)
        for (const Graph& g : oracle::tree_catalog(sz)) {
            Necklace nk;
            nk.n = sz;
            for (int v : g.vertices()) {
                nk.beads.push_back(Bead{{v}, {}});
                nk.matchings.push_back({});
            }
            bool required = sz >= 8;  // m >= d^n
            try {
                Necklace out = long_path_or_high_degree(g, nk, 2, 3);
                bool hub_type = out.t == 0 && out.s == 0 && out.l == 1 && out.n == 2;
                bool path_type = out.t == 1 && out.s == 0 && out.l == 0 && out.n == 3;
                if (!hub_type && !path_type) c.fail("unexpected output type");
                if (!validate_necklace(g, out).all_pass()) c.fail("output fails validation");
            } catch (const std::invalid_argument&) {
                if (required) c.fail("threw on a tree with " + std::to_string(sz) + " vertices");
            }
        }
}

// 9. Grid mechanics: grid(n) sits in K_{n^2,n^2}; wheel dichotomy on 20
//    random rim trees at n = 2.
void criterion9(Criterion& c) {
    for (int n : {2, 3}) {
        Graph g = grid(n);
        Graph k = complete_bipartite(n * n, n * n);
        // Parity classes of the grid map injectively into the two sides.
        std::map<int, int> embed;
        int left = 1, right = n * n + 1;
        for (int v : g.vertices()) {
            int row = (v - 1) / n, col = (v - 1) % n;
            embed[v] = ((row + col) % 2 == 0) ? left++ : right++;
        }
        for (const Edge& e : g.edges())
            if (!k.has_edge(embed[e.u], embed[e.v])) c.fail("grid embedding broken");
    }
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        int t = 2 + static_cast<int>(rng() % 5);
        Graph rim = random_tree(t, rng);
        WheelSpec spec = make_spec(rim, static_cast<int>(rng() % 2), 4 + static_cast<int>(rng() % 3), rng);
        WheelOutcome out = wheel_to_grid_or_biclique(spec, 2);
        if (out.kind == WheelOutcomeKind::GridSubgraph) {
            for (const Edge& e : out.target.edges())
                if (!out.wheel.graph.has_edge(out.grid_embedding.at(e.u),
                                              out.grid_embedding.at(e.v)))
                    c.fail("grid outcome not a subgraph embedding");
        } else if (!validate_minor_model(out.wheel.graph, out.target, out.biclique_model)) {
            c.fail("biclique outcome model invalid");
        }
    }
}

// 10. Necklace algebra and validator mutation-soundness, 200 seeds.
void criterion10(Criterion& c) {
    auto flips_exactly = [&](const Graph& g, const Necklace& nk, int cond,
                             const std::string& label) {
        NecklaceReport rep = validate_necklace(g, nk);
        for (int k = 1; k <= 7; ++k)
            if (rep.n(k).pass == (k == cond)) {
                c.fail(label + ": N" + std::to_string(k) + " " +
                       (rep.n(k).pass ? "passed" : "failed") + " unexpectedly");
                return;
            }
    };

    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        int t = 2 + static_cast<int>(seed % 2);
        int s = t - 1;
        int n = 4 + static_cast<int>(seed % 3);
        auto sn = synthetic_necklace(t, s, 1, n, seed);
        const Graph& g = sn.graph;
        const Necklace& nk = sn.necklace;
        if (!validate_necklace(g, nk).all_pass()) {
            c.fail("synthetic instance invalid at seed " + std::to_string(seed));
            return;
        }

        // Algebra: reversal involution, contraction identity and composition.
        if (reverse(reverse(nk)) != nk) c.fail("reversal not an involution");
        std::vector<int> all;
        for (int i = 1; i < nk.n; ++i) all.push_back(i);
        if (contract(nk, all) != nk) c.fail("full contraction not the identity");
        if (contract(contract(nk, {1, 2, 3}), {1, 2}) != contract(nk, {1, 2}))
            c.fail("contractions do not compose");

        // N1: duplicate a bead-1 vertex into the non-adjacent bead 3.
        {
            Graph g2 = g;
            Necklace m = nk;
            int u = *m.beads[0].vertices.begin();
            int x = *m.beads[2].vertices.begin();
            g2.add_edge(u, x);
            m.beads[2].vertices.insert(u);
            m.beads[2].edges.insert(Edge(u, x));
            flips_exactly(g2, m, 1, "N1 mutation");
        }
        // N2: drop an internal edge of bead 2 (t >= 2, beads are trees).
        {
            Necklace m = nk;
            m.beads[1].edges.erase(m.beads[1].edges.begin());
            flips_exactly(g, m, 2, "N2 mutation");
        }
        // N3: redirect an M_1 edge onto another matched bead-1 vertex; the
        // forged edge is not in G and collides with an existing endpoint.
        {
            Necklace m = nk;
            std::vector<Edge> m1(m.matchings[0].begin(), m.matchings[0].end());
            Edge victim = m1.back();
            Edge donor = m1.front();
            int u_prime = m.beads[0].vertices.count(donor.u) ? donor.u : donor.v;
            int w = m.beads[1].vertices.count(victim.u) ? victim.u : victim.v;
            m.matchings[0].erase(victim);
            m.matchings[0].insert(Edge(u_prime, w));
            flips_exactly(g, m, 3, "N3 mutation");
        }
        // N4: grow the closing matching beyond s along a fresh G edge.
        {
            Graph g2 = g;
            Necklace m = nk;
            VertexSet used;
            for (const Edge& e : m.matchings[n - 1]) {
                used.insert(e.u);
                used.insert(e.v);
            }
            int a = -1, b = -1;
            for (int v : m.beads[n - 1].vertices)
                if (!used.count(v)) a = v;
            for (int v : m.beads[0].vertices)
                if (!used.count(v)) b = v;
            g2.add_edge(a, b);
            m.matchings[n - 1].insert(Edge(a, b));
            flips_exactly(g2, m, 4, "N4 mutation");
        }
        // N7: remove a hub's only edge into bead 1.
        {
            Graph g2 = g;
            int z = *nk.hubs.begin();
            for (int w : g.neighbors(z))
                if (nk.beads[0].vertices.count(w)) g2.remove_edge(z, w);
            flips_exactly(g2, nk, 7, "N7 mutation");
        }

        // N5/N6: bottleneck beads need disjoint attachment sides; build a
        // dedicated (2,2,0,n) instance of path beads x1-y1-x2-y2.
        {
            Graph bg;
            Necklace bn;
            bn.t = 2;
            bn.s = 2;
            bn.l = 0;
            bn.n = n;
            auto id = [&](int bead, int slot) { return 4 * bead + slot + 1; };
            for (int i = 0; i < n; ++i) {
                int x1 = id(i, 0), y1 = id(i, 1), x2 = id(i, 2), y2 = id(i, 3);
                bg.add_edge(x1, y1);
                bg.add_edge(y1, x2);
                bg.add_edge(x2, y2);
                bn.beads.push_back(
                    Bead{{x1, y1, x2, y2}, {Edge(x1, y1), Edge(y1, x2), Edge(x2, y2)}});
            }
            for (int i = 0; i < n; ++i) {
                int j = (i + 1) % n;
                bg.add_edge(id(i, 1), id(j, 0));
                bg.add_edge(id(i, 3), id(j, 2));
                bn.matchings.push_back({Edge(id(i, 1), id(j, 0)), Edge(id(i, 3), id(j, 2))});
            }
            if (!validate_necklace(bg, bn).all_pass()) {
                c.fail("bottleneck base instance invalid");
                return;
            }
            for (int cond : {5, 6}) {
                int bead = (cond == 5) ? 1 : 0;  // interior vs end bead
                Graph g2 = bg;
                Necklace m = bn;
                int cv = 4 * n + 1;
                int x1 = id(bead, 0), y1 = id(bead, 1), x2 = id(bead, 2), y2 = id(bead, 3);
                for (int v : {x1, x2, y1, y2}) g2.add_edge(v, cv);
                m.beads[bead].vertices.insert(cv);
                m.beads[bead].edges = {Edge(x1, cv), Edge(x2, cv), Edge(cv, y1), Edge(cv, y2)};
                flips_exactly(g2, m, cond, "N" + std::to_string(cond) + " mutation");
            }
        }
        if (!c.pass) return;
    }
}

// 11. Round trip: wheel -> necklace -> wheel spec with a validated minor
//     model in the source graph.
void criterion11(Criterion& c) {
    std::mt19937_64 rng(41);
    for (int t : {1, 2})
        for (int l : {0, 1})
            for (int copies : {3, 4}) {
                WheelSpec spec = make_spec(t == 1 ? path(1) : path(2), l, copies, rng);
                BuiltWheel bw = build_wheel(spec);
                Necklace nk = necklace_from_wheel(spec, bw);
                if (!validate_necklace(bw.graph, nk).all_pass()) {
                    c.fail("wheel-derived necklace invalid");
                    continue;
                }
                auto [spec2, model] = necklace_to_wheel(bw.graph, nk, 3);
                BuiltWheel bw2 = build_wheel(spec2);
                if (!validate_minor_model(bw.graph, bw2.graph, model))
                    c.fail("round-trip model invalid at t=" + std::to_string(t) +
                           " l=" + std::to_string(l) + " n=" + std::to_string(copies));
            }
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::function<void(Criterion&)>> criteria{
        criterion1, criterion2, criterion3, criterion4,  criterion5,  criterion6,
        criterion7, criterion8, criterion9, criterion10, criterion11};
    int lo = 1, hi = static_cast<int>(criteria.size());
    if (argc > 1) {
        lo = hi = std::atoi(argv[1]);
        if (lo < 1 || lo > static_cast<int>(criteria.size())) {
            std::cerr << "usage: acceptance [1-" << criteria.size() << "]\n";
            return 2;
        }
    }
    int failed = 0;
    for (int i = lo; i <= hi; ++i) {
        Criterion c;
        try {
            criteria[i - 1](c);
        } catch (const std::exception& e) {
            c.fail(std::string("threw: ") + e.what());
        }
        std::cout << "criterion " << i << ": " << (c.pass ? "PASS" : "FAIL");
        if (!c.pass) {
            std::cout << " — " << c.detail.str();
            ++failed;
        }
        std::cout << "\n";
    }
    return failed == 0 ? 0 : 1;
}
