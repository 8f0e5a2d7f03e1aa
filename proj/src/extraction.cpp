#include "tw/extraction.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "tw/connectivity.hpp"

namespace tw {

namespace {

long sat_pow(long base, int exp) {
    long r = 1;
    for (int i = 0; i < exp; ++i) {
        if (r > 2'000'000'000L / base) return 2'000'000'000L;
        r *= base;
    }
    return r;
}

Bead induced_bead(const Graph& g, const VertexSet& vs) {
    Bead b;
    b.vertices = vs;
    Graph sub = g.induced(vs);
    for (const Edge& e : sub.edges()) b.edges.insert(e);
    return b;
}

// Spanning tree of a connected graph, seeded with a spanning forest of each
// bead so every bead is a subtree.
Graph bead_spanning_tree(const Graph& g, const Necklace& n0) {
    Graph t;
    for (int v : g.vertices()) t.add_vertex(v);
    std::map<int, int> comp;  // vertex -> forest component id
    int nc = 0;
    auto find_comp = [&](int v) { return comp.count(v) ? comp[v] : -1; };
    auto merge = [&](int a, int b) {
        int ca = comp[a], cb = comp[b];
        if (ca == cb) return false;
        for (auto& [v, c] : comp)
            if (c == cb) c = ca;
        return true;
    };
    for (int v : g.vertices()) comp[v] = nc++;
    for (const Bead& b : n0.beads) {
        Graph sub;
        for (int v : b.vertices) sub.add_vertex(v);
        for (const Edge& e : b.edges) sub.add_edge(e.u, e.v);
        // BFS spanning forest inside the bead
        VertexSet seen;
        for (int r : sub.vertices()) {
            if (seen.count(r)) continue;
            seen.insert(r);
            std::queue<int> q;
            q.push(r);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : sub.neighbors(v))
                    if (!seen.count(w)) {
                        seen.insert(w);
                        t.add_edge(v, w);
                        merge(v, w);
                        q.push(w);
                    }
            }
        }
    }
    for (const Edge& e : g.edges())
        if (find_comp(e.u) != find_comp(e.v) && merge(e.u, e.v)) t.add_edge(e.u, e.v);
    if (!t.is_tree()) throw std::invalid_argument("graph is not connected");
    return t;
}

// Quotient tree used by the path case: supernodes are merged vertex sets, all
// inside one grown bead; contraction runs until every bead-internal edge has
// both endpoints of degree >= 3, so every leaf is a whole grown bead.
struct NodeTree {
    std::vector<VertexSet> nodes;            // node id -> vertices (empty = dead)
    std::vector<int> bead;                   // node id -> grown-bead index
    std::map<int, std::map<int, Edge>> adj;  // node -> node -> witnessing tree edge
};

int diameter_endpoint(const NodeTree& nt, int start, std::map<int, int>* pred_out) {
    std::map<int, int> pred;
    pred[start] = start;
    std::queue<int> q;
    q.push(start);
    int last = start;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        last = v;
        for (auto& [w, e] : nt.adj.at(v))
            if (!pred.count(w)) {
                pred[w] = v;
                q.push(w);
            }
    }
    if (pred_out) *pred_out = pred;
    return last;
}

}  // namespace

Necklace long_path_or_high_degree(const Graph& g, const Necklace& n0, int d, int n) {
    if (d < 2 || n < 2) throw std::invalid_argument("need d >= 2 and n >= 2");
    if (n0.t != 0 || n0.s != 0 || n0.l != 0)
        throw std::invalid_argument("n0 must be a (0,0,0,m)-necklace");
    int m = n0.n;
    Graph t = bead_spanning_tree(g, n0);

    auto bead_inside = [&](const VertexSet& comp) {
        for (const Bead& b : n0.beads)
            if (std::includes(comp.begin(), comp.end(), b.vertices.begin(), b.vertices.end()))
                return true;
        return false;
    };

    // High-degree case: a vertex z with >= d bead-holding components of T - z.
    // For d = 2 every cut vertex qualifies, so the path outcome is tried first
    // there (it is the informative one); for d >= 3 the proof's order stands.
    auto high_degree = [&]() -> std::optional<Necklace> {
    for (int z : g.vertices()) {
        VertexSet rest;
        for (int v : t.vertices())
            if (v != z) rest.insert(v);
        std::vector<VertexSet> good;
        for (const VertexSet& comp : t.induced(rest).components())
            if (bead_inside(comp)) good.push_back(comp);
        if (static_cast<int>(good.size()) < d) continue;
        Necklace out;
        out.t = 0;
        out.s = 0;
        out.l = 1;
        out.n = d;
        out.hubs = {z};
        for (int i = 0; i < d; ++i) {
            out.beads.push_back(induced_bead(g, good[i]));
            out.matchings.push_back({});
        }
        return out;
    }
    return std::nullopt;
    };

    if (d >= 3)
        if (auto hd = high_degree()) return *hd;

    // Path case. Grow the beads along T to a partition of V(G).
    std::map<int, int> owner;  // vertex -> grown-bead index
    std::queue<int> q;
    for (int i = 0; i < m; ++i)
        for (int v : n0.beads[i].vertices) {
            owner[v] = i;
            q.push(v);
        }
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : t.neighbors(v))
            if (!owner.count(w)) {
                owner[w] = owner[v];
                q.push(w);
            }
    }

    // Compress: merge bead-internal tree edges at degree-<=2 endpoints.
    NodeTree nt;
    std::map<int, int> node_of;
    for (int v : t.vertices()) {
        node_of[v] = static_cast<int>(nt.nodes.size());
        nt.nodes.push_back({v});
        nt.bead.push_back(owner[v]);
    }
    for (const Edge& e : t.edges()) {
        nt.adj[node_of[e.u]].insert_or_assign(node_of[e.v], e);
        nt.adj[node_of[e.v]].insert_or_assign(node_of[e.u], e);
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (auto& [a, nbrs] : nt.adj) {
            if (nt.nodes[a].empty() || nbrs.size() > 2) continue;
            int b = -1;
            for (auto& [w, e] : nbrs)
                if (nt.bead[w] == nt.bead[a]) b = w;
            if (b < 0) continue;
            // merge a into b
            nt.nodes[b].insert(nt.nodes[a].begin(), nt.nodes[a].end());
            nt.nodes[a].clear();
            for (auto [w, e] : nt.adj[a]) {
                nt.adj[w].erase(a);
                if (w != b) {
                    nt.adj[b].insert_or_assign(w, e);
                    nt.adj[w].insert_or_assign(b, e);
                }
            }
            nt.adj.erase(a);
            changed = true;
            break;
        }
    }

    // An n-node path exists iff the diameter path is long enough.
    int live = 0;
    while (nt.nodes[live].empty()) ++live;
    std::vector<int> diam;
    if (nt.adj.empty()) {
        diam = {live};
    } else {
        int a = diameter_endpoint(nt, live, nullptr);
        std::map<int, int> pred;
        int b = diameter_endpoint(nt, a, &pred);
        for (int v = b; v != a; v = pred[v]) diam.push_back(v);
        diam.push_back(a);
    }
    if (static_cast<int>(diam.size()) >= n) {
        diam.resize(n);
        // Components of the node tree minus the path edges, one per path node.
        std::set<std::pair<int, int>> cut;
        for (int i = 0; i + 1 < n; ++i) {
            cut.insert({diam[i], diam[i + 1]});
            cut.insert({diam[i + 1], diam[i]});
        }
        Necklace out;
        out.t = 1;
        out.s = 0;
        out.l = 0;
        out.n = n;
        for (int i = 0; i < n; ++i) {
            VertexSet verts;
            std::set<int> seen{diam[i]};
            std::queue<int> bfs;
            bfs.push(diam[i]);
            while (!bfs.empty()) {
                int v = bfs.front();
                bfs.pop();
                verts.insert(nt.nodes[v].begin(), nt.nodes[v].end());
                for (auto& [w, e] : nt.adj[v])
                    if (!cut.count({v, w}) && !seen.count(w)) {
                        seen.insert(w);
                        bfs.push(w);
                    }
            }
            if (!bead_inside(verts))
                throw std::logic_error("path component misses a bead");
            out.beads.push_back(induced_bead(g, verts));
            out.matchings.push_back(
                i + 1 < n ? EdgeSet{nt.adj[diam[i]].at(diam[i + 1])} : EdgeSet{});
        }
        return out;
    }

    if (d == 2)
        if (auto hd = high_degree()) return *hd;

    if (m < sat_pow(d, n)) {
        std::ostringstream msg;
        msg << "hypothesis m >= d^n violated (m=" << m << ", d=" << d << ", n=" << n << ")";
        throw std::invalid_argument(msg.str());
    }
    throw std::logic_error("no outcome found despite m >= d^n");
}

Necklace init_necklace(const Graph& g, const VertexSet& u, int theta, int n, int p) {
    if (theta < 0 || n < 2 || p < 2) throw std::invalid_argument("need theta >= 0, n >= 2, p >= 2");
    auto singletons = [&](int count) {
        Necklace nk;
        nk.t = nk.s = nk.l = 0;
        nk.n = count;
        auto it = u.begin();
        for (int i = 0; i < count; ++i, ++it) {
            nk.beads.push_back({{*it}, {}});
            nk.matchings.push_back({});
        }
        return nk;
    };
    if (theta == 0) {
        if (static_cast<int>(u.size()) < n) throw std::invalid_argument("u smaller than n");
        return singletons(n);
    }
    if (static_cast<int>(u.size()) < 2) throw std::invalid_argument("u too small");

    Necklace cur = singletons(static_cast<int>(u.size()));
    int k = 0;
    while (k < theta) {
        // The component of G - Z holding all but at most k vertices of u.
        VertexSet rest;
        for (int v : g.vertices())
            if (!cur.hubs.count(v)) rest.insert(v);
        VertexSet best;
        std::size_t best_u = 0;
        for (const VertexSet& comp : g.induced(rest).components()) {
            std::size_t cnt = std::count_if(u.begin(), u.end(),
                                            [&](int v) { return comp.count(v) != 0; });
            if (cnt > best_u) {
                best_u = cnt;
                best = comp;
            }
        }
        if (u.size() - best_u > static_cast<std::size_t>(k))
            throw std::runtime_error(
                "hypothesis violated: u is not theta-connected enough to concentrate in one "
                "component");
        Graph sub = g.induced(best);
        Necklace seed;
        seed.t = seed.s = seed.l = 0;
        for (const Bead& b : cur.beads) {
            if (!std::includes(best.begin(), best.end(), b.vertices.begin(), b.vertices.end()))
                continue;
            seed.beads.push_back(b);
            seed.matchings.push_back({});
        }
        seed.n = static_cast<int>(seed.beads.size());
        if (seed.n < 2) throw std::runtime_error("hypothesis violated: too few beads survive");

        int d = n + 2 * theta * (theta - k - 1);
        Necklace found = long_path_or_high_degree(sub, seed, std::max(2, d), p * std::max(1, theta));
        if (found.l == 1) {  // gained a hub; old hubs stay adjacent to the fuller beads
            found.hubs.insert(cur.hubs.begin(), cur.hubs.end());
            found.l += k;
            cur = std::move(found);
            ++k;
        } else {  // path outcome: contract into blocks of theta
            std::vector<int> cuts;
            for (int i = 1; i < p; ++i) cuts.push_back(i * theta);
            return contract(found, cuts);
        }
    }
    // (0,0,theta,m)-necklace with m >= n beads; keep the first n.
    if (cur.n < n) throw std::runtime_error("hypothesis violated: fewer than n beads at the end");
    cur.beads.resize(n);
    cur.matchings.assign(n, {});
    cur.n = n;
    return cur;
}

std::vector<Path> reroute_disjoint_paths(const Graph& g, const std::vector<Path>& p_family,
                                         const std::vector<Path>& q_family,
                                         const std::vector<VertexSet>& b_family,
                                         const VertexSet& x, const VertexSet& y) {
    std::size_t k = p_family.size();
    if (q_family.size() != k || b_family.size() != k)
        throw std::invalid_argument("the three families must have equal size");
    Graph h;
    auto add_path = [&](const Path& p) {
        for (int v : p) h.add_vertex(v);
        for (std::size_t i = 0; i + 1 < p.size(); ++i) {
            if (!g.has_edge(p[i], p[i + 1]))
                throw std::invalid_argument("path edge not in the graph");
            h.add_edge(p[i], p[i + 1]);
        }
    };
    for (const Path& p : p_family) add_path(p);
    for (const Path& p : q_family) add_path(p);
    for (const VertexSet& b : b_family) {
        for (int v : b) h.add_vertex(v);
        Graph sub = g.induced(b);
        for (const Edge& e : sub.edges()) h.add_edge(e.u, e.v);
    }
    VertexSet hx, hy;
    for (int v : x)
        if (h.has_vertex(v)) hx.insert(v);
    for (int v : y)
        if (h.has_vertex(v)) hy.insert(v);
    auto dp = max_disjoint_paths(h, hx, hy);
    if (dp.count < static_cast<int>(k)) {
        std::ostringstream msg;
        msg << "hypothesis violated: only " << dp.count << " of " << k
            << " disjoint paths exist in the union";
        throw std::runtime_error(msg.str());
    }
    dp.paths.resize(k);
    return dp.paths;
}

Necklace jump_increase_s(const Graph& g, const Necklace& nk, const Jump& jump) {
    int t = nk.t, s = nk.s, m = nk.n;
    int n = jump.j - s;
    if (t <= s) throw std::invalid_argument("need t > s");
    if (jump.i != s + 1) throw std::invalid_argument("jump must start at bead s+1");
    if (n < 2 || m < n + 2 * s)
        throw std::invalid_argument("jump endpoints violate the index window");
    if (jump.path.size() < 2) throw std::invalid_argument("degenerate jump path");
    if (!nk.beads[s].vertices.count(jump.path.front()) ||
        !nk.beads[jump.j - 1].vertices.count(jump.path.back()))
        throw std::invalid_argument("jump path ends are not in beads s+1 and s+n");
    VertexSet vn = necklace_vertices(nk);
    for (std::size_t i = 0; i + 1 < jump.path.size(); ++i) {
        if (!g.has_edge(jump.path[i], jump.path[i + 1]))
            throw std::invalid_argument("jump path edge not in the graph");
        if (i > 0 && vn.count(jump.path[i]))
            throw std::invalid_argument("jump path interior touches the necklace");
    }

    // Absorb the jump interior into bead s+1, leaving a one-edge jump.
    Necklace work = nk;
    Path p = jump.path;
    for (std::size_t i = 0; i + 2 < p.size(); ++i) {
        work.beads[s].vertices.insert(p[i + 1]);
        work.beads[s].edges.insert(Edge(p[i], p[i + 1]));
    }
    Edge e(p[p.size() - 2], p.back());

    std::vector<int> cuts;
    for (int c = s + 1; c <= s + n - 1; ++c) cuts.push_back(c);
    Necklace out = contract(work, cuts);
    out.matchings.back().insert(e);
    out.s = s + 1;

    auto rep = validate_necklace(g, out);
    if (!rep.all_pass()) {
        for (int c = 1; c <= 7; ++c)
            if (!rep.n(c).pass)
                throw std::runtime_error("hypothesis violated: surgery broke N" +
                                         std::to_string(c) + " (" + rep.n(c).witness + ")");
    }
    return out;
}

ExtractedPath extract_path(const Graph& g, const Necklace& nk, const VertexSet& u, int n) {
    int t = nk.t, s = nk.s, m = nk.n;
    if (t <= s || t + s < 2 || nk.l != 0 || n < 2)
        throw std::invalid_argument("need t > s, t+s >= 2, l = 0, n >= 2");
    if (m < t * (n - 1) + 1)
        throw std::invalid_argument("hypothesis m >= t(n-1)+1 violated");
    if (!is_supported_by(nk, u)) throw std::invalid_argument("necklace not supported by u");
    auto rep = validate_necklace(g, nk);
    if (!rep.all_pass()) throw std::invalid_argument("input necklace invalid");

    // Thread t disjoint systems through the beads: singleton starts on Y_1,
    // the N5 witness family of each interior bead, singleton ends on X_m.
    auto seq = attachment_sequences(nk);
    std::vector<std::vector<Path>> seg(t, std::vector<Path>(m));  // k, bead -> piece
    std::vector<std::vector<Edge>> cross(t);                      // k -> edge at M_1..M_{m-1}
    {
        std::vector<int> y1(seq.right[0].begin(), seq.right[0].end());
        if (static_cast<int>(y1.size()) != t) throw std::invalid_argument("|Y_1| != t");
        auto partner = [&](int bead, int v) {
            for (const Edge& e : nk.matchings[bead]) {
                if (e.u == v) return e.v;
                if (e.v == v) return e.u;
            }
            throw std::logic_error("matching endpoint without partner");
        };
        for (int k = 0; k < t; ++k) {
            int at = y1[k];
            seg[k][0] = {at};
            for (int b = 1; b < m; ++b) {
                int nx = partner(b - 1, at);
                cross[k].push_back(Edge(at, nx));
                if (b == m - 1) {
                    seg[k][b] = {nx};
                    break;
                }
                const Path* piece = nullptr;
                for (const Path& q : rep.bead_paths[b])
                    if (q.front() == nx) piece = &q;
                if (!piece) throw std::logic_error("bead path family misses an entry point");
                seg[k][b] = *piece;
                at = piece->back();
            }
        }
    }

    // Removability of system k at bead i: one component of B_i - V(P_k) holds
    // every other system's piece and a vertex of u.
    auto removable = [&](int k, int i) {
        VertexSet rest = nk.beads[i].vertices;
        for (int v : seg[k][i]) rest.erase(v);
        Graph sub;
        for (int v : rest) sub.add_vertex(v);
        for (const Edge& e : nk.beads[i].edges)
            if (rest.count(e.u) && rest.count(e.v)) sub.add_edge(e.u, e.v);
        for (const VertexSet& comp : sub.components()) {
            bool all = true;
            for (int j = 0; j < t && all; ++j) {
                if (j == k) continue;
                for (int v : seg[j][i])
                    if (!comp.count(v)) {
                        all = false;
                        break;
                    }
            }
            if (!all) continue;
            if (std::any_of(comp.begin(), comp.end(), [&](int v) { return u.count(v) != 0; }))
                return true;
        }
        return false;
    };

    int best_k = -1;
    std::vector<int> best_idx;
    for (int k = 0; k < t; ++k) {
        std::vector<int> idx;
        for (int i = 1; i < m - 1; ++i)  // cut points live strictly inside
            if (removable(k, i)) idx.push_back(i + 1);  // 1-based bead index
        if (static_cast<int>(idx.size()) > static_cast<int>(best_idx.size())) {
            best_k = k;
            best_idx = std::move(idx);
        }
    }
    if (best_k < 0 || static_cast<int>(best_idx.size()) < n - 1)
        throw std::runtime_error("hypothesis violated: no system is removable at n-1 indices");
    std::vector<int> a(best_idx.begin(), best_idx.begin() + (n - 1));  // 1-based cut beads

    // The removed path spans beads a_1+1 .. a_{n-1} of the threading.
    Path p;
    for (int b = a[0] + 1; b <= a[n - 2]; ++b)  // 1-based beads a_1+1 .. a_{n-1}
        for (int v : seg[best_k][b - 1]) p.push_back(v);

    Necklace merged = contract(nk, a);
    Necklace out;
    out.t = t - 1;
    out.s = s;
    out.l = 0;
    out.n = n;
    out.beads.push_back(merged.beads.front());
    for (int i = 1; i + 1 < n; ++i) {  // carve interior merged beads around p
        VertexSet rest = merged.beads[i].vertices;
        for (int v : p) rest.erase(v);
        Graph sub;
        for (int v : rest) sub.add_vertex(v);
        for (const Edge& e : merged.beads[i].edges)
            if (rest.count(e.u) && rest.count(e.v)) sub.add_edge(e.u, e.v);
        bool carved = false;
        for (const VertexSet& comp : sub.components()) {
            bool all = true;
            for (int j = 0; j < t && all; ++j) {
                if (j == best_k) continue;
                for (int b = a[i - 1] + 1; b <= a[i] && all; ++b)
                    for (int v : seg[j][b - 1])
                        if (!comp.count(v)) {
                            all = false;
                            break;
                        }
            }
            if (!all || !std::any_of(comp.begin(), comp.end(),
                                     [&](int v) { return u.count(v) != 0; }))
                continue;
            Bead nb;
            nb.vertices = comp;
            for (const Edge& e : merged.beads[i].edges)
                if (comp.count(e.u) && comp.count(e.v)) nb.edges.insert(e);
            out.beads.push_back(std::move(nb));
            carved = true;
            break;
        }
        if (!carved) throw std::runtime_error("hypothesis violated: interior bead not carvable");
    }
    out.beads.push_back(merged.beads.back());
    for (int i = 0; i + 1 < n; ++i) {
        EdgeSet mm = merged.matchings[i];
        mm.erase(cross[best_k][a[i] - 1]);  // the removed system's edge at M_{a_i}
        out.matchings.push_back(std::move(mm));
    }
    out.matchings.push_back(merged.matchings.back());

    auto rep2 = validate_necklace(g, out);
    if (!rep2.all_pass()) {
        for (int c = 1; c <= 7; ++c)
            if (!rep2.n(c).pass)
                throw std::runtime_error("hypothesis violated: extraction broke N" +
                                         std::to_string(c) + " (" + rep2.n(c).witness + ")");
    }
    for (int v : p)
        if (necklace_vertices(out).count(v))
            throw std::logic_error("extracted path touches the necklace");
    return {std::move(out), std::move(p)};
}

namespace {

// Pre-contract so a (i,j)-jump becomes an (s+1, s+n)-jump of the result.
Necklace align_for_jump(const Necklace& nk, int i, int j, int n) {
    int s = nk.s, m = nk.n;
    std::vector<int> cuts;
    if (s >= 1) {
        for (int c = 1; c <= s - 1; ++c) cuts.push_back(c);
        cuts.push_back(i - 1);
    }
    cuts.push_back(i);
    if (n >= 3) {
        for (int q = 1; q <= n - 3; ++q) cuts.push_back(i + q);
        cuts.push_back(j - 1);
    }
    if (s >= 1) {
        cuts.push_back(j);
        for (int c = 1; c <= s - 1; ++c) cuts.push_back(j + c);
    }
    (void)m;
    return contract(nk, cuts);
}

}  // namespace

NecklaceSearchResult search_necklace(const Graph& g, const VertexSet& u, int theta, int n,
                                     long budget) {
    auto spend = [&budget](long c) {
        budget -= c;
        return budget >= 0;
    };
    try {
        if (theta == 0) {
            Necklace nk = init_necklace(g, u, 0, n, 2);
            return {SearchStatus::Found, nk};
        }
        if (!spend(1)) return {SearchStatus::BudgetExhausted, std::nullopt};
        Necklace cur = init_necklace(g, u, theta, n, std::max(2, n));
        while (cur.t + cur.s + cur.l < theta) {
            if (!spend(10)) return {SearchStatus::BudgetExhausted, std::nullopt};
            int remaining = theta - (cur.t + cur.s + cur.l);
            int target = n + 2 * theta * (remaining - 1);
            bool advanced = false;
            if (cur.l >= 1 && cur.t > cur.s && cur.n >= target + 2 * cur.s) {
                // hub -> jump: drop the hub, route through it
                int z = *cur.hubs.begin();
                Necklace dropped = cur;
                dropped.hubs.erase(z);
                dropped.l -= 1;
                auto nb = g.neighbors(z);
                int x = -1, y = -1;
                for (int w : nb) {
                    if (dropped.beads[dropped.s].vertices.count(w) && x < 0) x = w;
                    if (dropped.beads[dropped.s + target - 1].vertices.count(w) && y < 0) y = w;
                }
                if (x >= 0 && y >= 0) {
                    Jump jp{dropped.s + 1, dropped.s + target, {x, z, y}};
                    cur = jump_increase_s(g, dropped, jp);
                    advanced = true;
                }
            }
            if (!advanced && cur.t > cur.s) {
                if (!spend(cur.n)) return {SearchStatus::BudgetExhausted, std::nullopt};
                for (const Jump& jp : find_jumps(g, cur)) {
                    int i = jp.i, j = jp.j, s = cur.s, m = cur.n;
                    if (i < s + 1 || m - j < s || j - i < target - 1) continue;
                    if (m < target + 2 * s) continue;
                    Necklace aligned = align_for_jump(cur, i, j, target);
                    Jump moved{s + 1, s + target, jp.path};
                    cur = jump_increase_s(g, aligned, moved);
                    advanced = true;
                    break;
                }
            }
            if (!advanced) return {SearchStatus::Exhausted, std::nullopt};
        }
        if (cur.n > n) {
            std::vector<int> cuts;
            for (int c = 1; c < n; ++c) cuts.push_back(c);
            cur = contract(cur, cuts);
        }
        if (cur.n != n || !validate_necklace(g, cur).all_pass())
            return {SearchStatus::Exhausted, std::nullopt};
        return {SearchStatus::Found, cur};
    } catch (const std::runtime_error&) {
        return {SearchStatus::Exhausted, std::nullopt};
    } catch (const std::invalid_argument&) {
        return {SearchStatus::Exhausted, std::nullopt};
    }
}

}  // namespace tw
