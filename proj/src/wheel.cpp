#include "tw/wheel.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace tw {

namespace {

std::vector<int> sorted_rim(const WheelSpec& spec) {
    return {spec.rim_tree.vertices().begin(), spec.rim_tree.vertices().end()};
}

void check_spec(const WheelSpec& spec) {
    if (spec.n < 3) throw std::invalid_argument("wheel needs n >= 3");
    if (spec.rim_tree.num_vertices() == 0 || !spec.rim_tree.is_tree())
        throw std::invalid_argument("rim is not a nonempty tree");
    VertexSet image;
    for (int v : spec.rim_tree.vertices()) {
        auto it = spec.pi.find(v);
        if (it == spec.pi.end() || !spec.rim_tree.has_vertex(it->second) ||
            !image.insert(it->second).second)
            throw std::invalid_argument("pi is not a permutation of the rim vertices");
    }
    for (int z : spec.hubs) {
        if (spec.rim_tree.has_vertex(z))
            throw std::invalid_argument("hub label collides with a rim vertex");
        auto it = spec.psi.find(z);
        if (it == spec.psi.end() || !spec.rim_tree.has_vertex(it->second))
            throw std::invalid_argument("psi must map every hub to a rim vertex");
    }
}

bool bead_is_tree(const Bead& b) {
    Graph g;
    for (int v : b.vertices) g.add_vertex(v);
    for (const Edge& e : b.edges) g.add_edge(e.u, e.v);
    return g.is_tree();
}

}  // namespace

BuiltWheel build_wheel(const WheelSpec& spec) {
    check_spec(spec);
    BuiltWheel w;
    auto rim = sorted_rim(spec);
    int t = spec.t();
    for (int i = 1; i <= spec.n; ++i)
        for (int k = 0; k < t; ++k) {
            int id = (i - 1) * t + k + 1;
            w.copies[{rim[k], i}] = id;
            w.graph.add_vertex(id);
        }
    for (int i = 1; i <= spec.n; ++i)
        for (const Edge& e : spec.rim_tree.edges())
            w.graph.add_edge(w.copies[{e.u, i}], w.copies[{e.v, i}]);
    for (int v : rim) {
        for (int i = 1; i < spec.n; ++i)
            w.graph.add_edge(w.copies[{v, i}], w.copies[{v, i + 1}]);
        w.graph.add_edge(w.copies[{v, spec.n}], w.copies[{spec.pi.at(v), 1}]);
    }
    int next = spec.n * t + 1;
    for (int z : spec.hubs) {
        w.hub_ids[z] = next;
        w.graph.add_vertex(next);
        for (int i = 1; i <= spec.n; ++i)
            w.graph.add_edge(next, w.copies[{spec.psi.at(z), i}]);
        ++next;
    }
    return w;
}

bool verify_rim_transversal(const WheelSpec& spec, const BuiltWheel& w, const VertexSet& u) {
    for (auto [z, id] : w.hub_ids)
        if (u.count(id)) return false;
    int t = spec.t();
    for (int i = 1; i <= spec.n; ++i) {
        int hits = 0;
        for (int k = 0; k < t; ++k) hits += u.count((i - 1) * t + k + 1);
        if (hits != 1) return false;
    }
    for (int v : u)
        if (v < 1 || v > spec.n * t) return false;
    return true;
}

Necklace necklace_from_wheel(const WheelSpec& spec, const BuiltWheel& w) {
    Necklace nk;
    nk.t = spec.t();
    nk.s = spec.t();
    nk.l = spec.l();
    nk.n = spec.n;
    auto rim = sorted_rim(spec);
    for (int i = 1; i <= spec.n; ++i) {
        Bead b;
        for (int v : rim) b.vertices.insert(w.copies.at({v, i}));
        for (const Edge& e : spec.rim_tree.edges())
            b.edges.insert(Edge(w.copies.at({e.u, i}), w.copies.at({e.v, i})));
        nk.beads.push_back(std::move(b));
    }
    for (int i = 1; i < spec.n; ++i) {
        EdgeSet m;
        for (int v : rim) m.insert(Edge(w.copies.at({v, i}), w.copies.at({v, i + 1})));
        nk.matchings.push_back(std::move(m));
    }
    EdgeSet close;
    for (int v : rim) close.insert(Edge(w.copies.at({v, spec.n}), w.copies.at({spec.pi.at(v), 1})));
    nk.matchings.push_back(std::move(close));
    for (auto [z, id] : w.hub_ids) nk.hubs.insert(id);
    return nk;
}

std::pair<WheelSpec, MinorModel> necklace_to_wheel(const Graph& g, const Necklace& nk, int n) {
    int t = nk.t, m = nk.n;
    if (t < 1) throw std::invalid_argument("t = 0 necklaces carry no wheel; use the biclique route");
    if (nk.s != t) throw std::invalid_argument("necklace is not balanced");
    if (n < 3) throw std::invalid_argument("wheel needs n >= 3");
    for (const Bead& b : nk.beads)
        if (static_cast<int>(b.vertices.size()) != t || !bead_is_tree(b))
            throw std::invalid_argument("necklace is not refined: beads must be t-vertex trees");

    // Rails: rail j of bead 1 is its j-th smallest vertex; matchings propagate
    // the labels around the cycle. rail_of[i] is a bijection onto {1..t}.
    std::vector<std::map<int, int>> rail_of(m);
    std::vector<std::vector<int>> vertex_of(m, std::vector<int>(t + 1, 0));
    {
        int j = 1;
        for (int v : nk.beads[0].vertices) {
            rail_of[0][v] = j;
            vertex_of[0][j] = v;
            ++j;
        }
    }
    auto partner = [&](int i, int v) {  // across matchings[i], or -1
        for (const Edge& e : nk.matchings[i]) {
            if (e.u == v) return e.v;
            if (e.v == v) return e.u;
        }
        return -1;
    };
    for (int i = 0; i + 1 < m; ++i)
        for (int j = 1; j <= t; ++j) {
            int p = partner(i, vertex_of[i][j]);
            if (p < 0 || !nk.beads[i + 1].vertices.count(p))
                throw std::invalid_argument("matchings are not perfect along the beads");
            rail_of[i + 1][p] = j;
            vertex_of[i + 1][j] = p;
        }
    std::vector<int> pi0(t + 1, 0);  // closing matching as a rail permutation
    for (int j = 1; j <= t; ++j) {
        int p = partner(m - 1, vertex_of[m - 1][j]);
        if (p < 0 || !rail_of[0].count(p))
            throw std::invalid_argument("closing matching is not perfect along the beads");
        pi0[j] = rail_of[0][p];
    }

    // Pigeonhole classes: (rail-renamed bead tree, adjacent-rail set per hub).
    std::vector<int> hubs(nk.hubs.begin(), nk.hubs.end());
    using ClassKey = std::pair<std::set<std::pair<int, int>>, std::vector<std::set<int>>>;
    std::map<ClassKey, std::vector<int>> classes;
    for (int i = 0; i < m; ++i) {
        ClassKey key;
        for (const Edge& e : nk.beads[i].edges) {
            int a = rail_of[i][e.u], b = rail_of[i][e.v];
            key.first.insert({std::min(a, b), std::max(a, b)});
        }
        for (int z : hubs) {
            std::set<int> prof;
            for (int j = 1; j <= t; ++j)
                if (g.has_edge(z, vertex_of[i][j])) prof.insert(j);
            if (prof.empty())
                throw std::invalid_argument("hub has no neighbour in some bead");
            key.second.push_back(std::move(prof));
        }
        classes[key].push_back(i);
    }
    const ClassKey* chosen = nullptr;
    for (const auto& [key, members] : classes)
        if (static_cast<int>(members.size()) >= n && !chosen) chosen = &key;
    if (!chosen) throw std::runtime_error("pigeonhole precondition unmet: no tree class has n beads");
    std::vector<int> c(classes[*chosen].begin(), classes[*chosen].begin() + n);

    WheelSpec spec;
    spec.n = n;
    for (int j = 1; j <= t; ++j) spec.rim_tree.add_vertex(j);
    for (auto [a, b] : chosen->first) spec.rim_tree.add_edge(a, b);
    for (int j = 1; j <= t; ++j) spec.pi[j] = pi0[j];
    for (std::size_t h = 0; h < hubs.size(); ++h) {
        spec.hubs.insert(hubs[h]);
        spec.psi[hubs[h]] = *chosen->second[h].begin();
    }

    // Branch sets: copy k+1 of rail j collapses the beads of segment k; the
    // last segment wraps through the closing matching, switching to rail
    // pi0(j) for the beads before c[0].
    BuiltWheel w = build_wheel(spec);
    MinorModel model;
    for (int k = 0; k < n; ++k) {
        int lo = c[k], hi = (k + 1 < n) ? c[k + 1] : m;
        for (int j = 1; j <= t; ++j) {
            VertexSet& bs = model.branch_sets[w.copies.at({j, k + 1})];
            for (int b = lo; b < hi; ++b) bs.insert(vertex_of[b][j]);
            if (k == n - 1)
                for (int b = 0; b < c[0]; ++b) bs.insert(vertex_of[b][pi0[j]]);
        }
    }
    for (std::size_t h = 0; h < hubs.size(); ++h)
        model.branch_sets[w.hub_ids.at(hubs[h])] = {hubs[h]};

    for (int k = 0; k < n; ++k) {
        for (auto [a, b] : chosen->first)  // rim-tree edges, witnessed at c[k]
            model.edge_witnesses.emplace(Edge(w.copies.at({a, k + 1}), w.copies.at({b, k + 1})),
                                         Edge(vertex_of[c[k]][a], vertex_of[c[k]][b]));
        for (std::size_t h = 0; h < hubs.size(); ++h)  // hub spokes
            model.edge_witnesses.emplace(
                Edge(w.hub_ids.at(hubs[h]), w.copies.at({spec.psi[hubs[h]], k + 1})),
                Edge(hubs[h], vertex_of[c[k]][spec.psi[hubs[h]]]));
    }
    for (int k = 0; k + 1 < n; ++k)  // consecutive matchings at segment borders
        for (int j = 1; j <= t; ++j)
            model.edge_witnesses.emplace(Edge(w.copies.at({j, k + 1}), w.copies.at({j, k + 2})),
                                         Edge(vertex_of[c[k + 1] - 1][j], vertex_of[c[k + 1]][j]));
    for (int j = 1; j <= t; ++j) {  // wrap edges, through the closing matching
        Edge wit = c[0] > 0 ? Edge(vertex_of[c[0] - 1][pi0[j]], vertex_of[c[0]][pi0[j]])
                            : Edge(vertex_of[m - 1][j], vertex_of[0][pi0[j]]);
        model.edge_witnesses.emplace(Edge(w.copies.at({j, n}), w.copies.at({pi0[j], 1})), wit);
    }
    return {std::move(spec), std::move(model)};
}

WheelOutcome wheel_to_grid_or_biclique(const WheelSpec& spec, int n, WheelOutcomeMode mode) {
    check_spec(spec);
    if (n < 1) throw std::invalid_argument("n >= 1 required");
    // Longest-path probe: in a tree the (u,v)-path is unique, so BFS suffices.
    std::vector<int> path;
    for (int src : spec.rim_tree.vertices()) {
        std::map<int, int> pred;
        std::queue<int> q;
        pred[src] = src;
        q.push(src);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w2 : spec.rim_tree.neighbors(v))
                if (!pred.count(w2)) {
                    pred[w2] = v;
                    q.push(w2);
                }
        }
        for (auto [v, p] : pred) {
            std::vector<int> trail{v};
            while (trail.back() != src) trail.push_back(pred[trail.back()]);
            if (static_cast<int>(trail.size()) >= n) {
                trail.resize(n);
                path = trail;
                break;
            }
        }
        if (!path.empty()) break;
    }
    bool grid_ok = !path.empty() && spec.n >= n;
    int hub_rim = -1;  // high-degree rim vertex for the biclique branch
    for (int v : spec.rim_tree.vertices())
        if (static_cast<int>(spec.rim_tree.neighbors(v).size()) >= n * n) {
            hub_rim = v;
            break;
        }
    bool biclique_ok = hub_rim >= 0 && spec.n >= n * n;

    bool take_grid;
    switch (mode) {
        case WheelOutcomeMode::Grid: take_grid = true; break;
        case WheelOutcomeMode::Biclique: take_grid = false; break;
        default: take_grid = grid_ok; break;
    }
    if (take_grid && !grid_ok)
        throw std::runtime_error("grid branch infeasible: no n-vertex rim path or too few copies");
    if (!take_grid && !biclique_ok)
        throw std::runtime_error("biclique branch infeasible: no rim vertex of degree n^2 or too few copies");

    WheelOutcome out{take_grid ? WheelOutcomeKind::GridSubgraph : WheelOutcomeKind::BicliqueMinor,
                     build_wheel(spec), Graph{}, {}, {}};
    if (take_grid) {
        out.target = grid(n);
        for (int r = 1; r <= n; ++r)
            for (int col = 1; col <= n; ++col)
                out.grid_embedding[(r - 1) * n + col] = out.wheel.copies.at({path[r - 1], col});
        for (const Edge& e : out.target.edges())
            if (!out.wheel.graph.has_edge(out.grid_embedding[e.u], out.grid_embedding[e.v]))
                throw std::logic_error("grid embedding is not a subgraph");
    } else {
        int nn = n * n;
        out.target = complete_bipartite(nn, nn);
        std::vector<int> nb;
        for (int u : spec.rim_tree.neighbors(hub_rim)) nb.push_back(u);
        nb.resize(nn);
        for (int i = 1; i <= nn; ++i)
            out.biclique_model.branch_sets[i] = {out.wheel.copies.at({hub_rim, i})};
        for (int k = 1; k <= nn; ++k) {
            VertexSet& bs = out.biclique_model.branch_sets[nn + k];
            for (int i = 1; i <= nn; ++i) bs.insert(out.wheel.copies.at({nb[k - 1], i}));
        }
        for (int i = 1; i <= nn; ++i)
            for (int k = 1; k <= nn; ++k)
                out.biclique_model.edge_witnesses.emplace(
                    Edge(i, nn + k),
                    Edge(out.wheel.copies.at({hub_rim, i}), out.wheel.copies.at({nb[k - 1], i})));
    }
    return out;
}

}  // namespace tw
