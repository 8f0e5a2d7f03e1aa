#include "tw/necklace.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tw {

namespace {

Graph bead_graph(const Bead& b) {
    Graph g;
    for (int v : b.vertices) g.add_vertex(v);
    for (const Edge& e : b.edges) g.add_edge(e.u, e.v);
    return g;
}

void check_shape(const Graph& g, const Necklace& nk) {
    if (nk.n < 2 || nk.t < 0 || nk.s < 0 || nk.l < 0 || nk.t < nk.s)
        throw std::invalid_argument("necklace parameters out of range");
    if (static_cast<int>(nk.beads.size()) != nk.n ||
        static_cast<int>(nk.matchings.size()) != nk.n)
        throw std::invalid_argument("necklace sequence lengths disagree with n");
    for (const Bead& b : nk.beads) {
        for (int v : b.vertices)
            if (!g.has_vertex(v)) throw std::invalid_argument("bead vertex not in G");
        for (const Edge& e : b.edges) {
            if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("bead edge not in G");
            if (!b.vertices.count(e.u) || !b.vertices.count(e.v))
                throw std::invalid_argument("bead edge endpoint outside the bead");
        }
    }
    for (int z : nk.hubs)
        if (!g.has_vertex(z)) throw std::invalid_argument("hub not in G");
}

}  // namespace

AttachmentSequences attachment_sequences(const Necklace& nk) {
    int n = nk.n;
    AttachmentSequences seq;
    seq.left.resize(n);
    seq.right.resize(n);
    for (int i = 0; i < n; ++i) {
        for (const Edge& e : nk.matchings[(i + n - 1) % n]) {
            if (nk.beads[i].vertices.count(e.u)) seq.left[i].insert(e.u);
            if (nk.beads[i].vertices.count(e.v)) seq.left[i].insert(e.v);
        }
        for (const Edge& e : nk.matchings[i]) {
            if (nk.beads[i].vertices.count(e.u)) seq.right[i].insert(e.u);
            if (nk.beads[i].vertices.count(e.v)) seq.right[i].insert(e.v);
        }
    }
    return seq;
}

NecklaceReport validate_necklace(const Graph& g, const Necklace& nk) {
    check_shape(g, nk);
    NecklaceReport rep;
    rep.bead_paths.resize(nk.n);
    auto fail = [&rep](int cond, const std::string& why) {
        auto& c = rep.conditions[cond - 1];
        if (c.pass) {
            c.pass = false;
            c.witness = why;
        }
    };

    // N1: beads pairwise disjoint and disjoint from the hubs.
    for (int i = 0; i < nk.n; ++i) {
        for (int j = i + 1; j < nk.n; ++j)
            for (int v : nk.beads[i].vertices)
                if (nk.beads[j].vertices.count(v))
                    fail(1, "beads " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                " share vertex " + std::to_string(v));
        for (int v : nk.beads[i].vertices)
            if (nk.hubs.count(v))
                fail(1, "bead " + std::to_string(i + 1) + " contains hub " + std::to_string(v));
    }

    // N2: beads connected and nonempty.
    for (int i = 0; i < nk.n; ++i) {
        if (nk.beads[i].vertices.empty())
            fail(2, "bead " + std::to_string(i + 1) + " is empty");
        else if (!bead_graph(nk.beads[i]).is_connected())
            fail(2, "bead " + std::to_string(i + 1) + " is disconnected");
    }

    // N3: each M_i is a matching with one end in B_i and one in B_{i+1}.
    for (int i = 0; i < nk.n; ++i) {
        VertexSet used;
        for (const Edge& e : nk.matchings[i]) {
            if (!g.has_edge(e.u, e.v)) fail(3, "matching edge not in G");
            const auto& a = nk.beads[i].vertices;
            const auto& b = nk.beads[(i + 1) % nk.n].vertices;
            bool ok = (a.count(e.u) && b.count(e.v)) || (a.count(e.v) && b.count(e.u));
            if (!ok)
                fail(3, "edge of M_" + std::to_string(i + 1) + " does not join B_" +
                            std::to_string(i + 1) + " to B_" + std::to_string((i + 1) % nk.n + 1));
            if (!used.insert(e.u).second || !used.insert(e.v).second)
                fail(3, "M_" + std::to_string(i + 1) + " is not a matching");
        }
    }

    // N4: |M_1| = ... = |M_{n-1}| = t and |M_n| = s.
    for (int i = 0; i < nk.n - 1; ++i)
        if (static_cast<int>(nk.matchings[i].size()) != nk.t)
            fail(4, "|M_" + std::to_string(i + 1) + "| = " +
                        std::to_string(nk.matchings[i].size()) + ", expected t = " +
                        std::to_string(nk.t));
    if (static_cast<int>(nk.matchings[nk.n - 1].size()) != nk.s)
        fail(4, "|M_n| = " + std::to_string(nk.matchings[nk.n - 1].size()) + ", expected s = " +
                    std::to_string(nk.s));

    // N5/N6: disjoint (X_i,Y_i)-path systems inside the beads.
    auto seq = attachment_sequences(nk);
    for (int i = 0; i < nk.n; ++i) {
        int need = (i == 0 || i == nk.n - 1) ? nk.s : nk.t;
        int cond = (i == 0 || i == nk.n - 1) ? 6 : 5;
        auto dp = max_disjoint_paths(bead_graph(nk.beads[i]), seq.left[i], seq.right[i]);
        rep.bead_paths[i] = dp.paths;
        if (dp.count < need)
            fail(cond, "bead " + std::to_string(i + 1) + " carries only " +
                           std::to_string(dp.count) + " of " + std::to_string(need) +
                           " disjoint attachment paths");
    }

    // N7: exactly l hubs, each with a neighbour in every bead.
    if (static_cast<int>(nk.hubs.size()) != nk.l)
        fail(7, "|Z| = " + std::to_string(nk.hubs.size()) + ", expected l = " +
                    std::to_string(nk.l));
    for (int z : nk.hubs) {
        auto nb = g.neighbors(z);
        for (int i = 0; i < nk.n; ++i) {
            bool hit = std::any_of(nb.begin(), nb.end(),
                                   [&](int w) { return nk.beads[i].vertices.count(w) != 0; });
            if (!hit)
                fail(7, "hub " + std::to_string(z) + " has no neighbour in bead " +
                            std::to_string(i + 1));
        }
    }
    return rep;
}

Necklace reverse(const Necklace& nk) {
    Necklace out = nk;
    for (int i = 0; i < nk.n; ++i) out.beads[i] = nk.beads[nk.n - 1 - i];
    for (int i = 0; i < nk.n - 1; ++i) out.matchings[i] = nk.matchings[nk.n - 2 - i];
    out.matchings[nk.n - 1] = nk.matchings[nk.n - 1];
    return out;
}

Necklace contract(const Necklace& nk, const std::vector<int>& cut_points) {
    int m = nk.n;
    std::vector<int> a{0};
    for (int c : cut_points) {
        if (c <= a.back() || c >= m)
            throw std::invalid_argument("cut points must be strictly increasing in (0, n)");
        a.push_back(c);
    }
    a.push_back(m);
    Necklace out;
    out.t = nk.t;
    out.s = nk.s;
    out.l = nk.l;
    out.n = static_cast<int>(a.size()) - 1;
    out.hubs = nk.hubs;
    for (int i = 1; i < static_cast<int>(a.size()); ++i) {
        Bead merged;
        for (int b = a[i - 1]; b < a[i]; ++b) {
            merged.vertices.insert(nk.beads[b].vertices.begin(), nk.beads[b].vertices.end());
            merged.edges.insert(nk.beads[b].edges.begin(), nk.beads[b].edges.end());
            if (b > a[i - 1])
                merged.edges.insert(nk.matchings[b - 1].begin(), nk.matchings[b - 1].end());
        }
        out.beads.push_back(std::move(merged));
        out.matchings.push_back(nk.matchings[a[i] - 1]);
    }
    return out;
}

bool is_supported_by(const Necklace& nk, const VertexSet& u) {
    for (const Bead& b : nk.beads) {
        bool hit = std::any_of(b.vertices.begin(), b.vertices.end(),
                               [&](int v) { return u.count(v) != 0; });
        if (!hit) return false;
    }
    return true;
}

bool supports(const Necklace& outer, const Necklace& inner) {
    for (const Bead& big : inner.beads) {
        bool found = std::any_of(outer.beads.begin(), outer.beads.end(), [&](const Bead& small) {
            return std::includes(big.vertices.begin(), big.vertices.end(),
                                 small.vertices.begin(), small.vertices.end()) &&
                   std::includes(big.edges.begin(), big.edges.end(), small.edges.begin(),
                                 small.edges.end());
        });
        if (!found) return false;
    }
    return true;
}

VertexSet necklace_vertices(const Necklace& nk) {
    VertexSet out = nk.hubs;
    for (const Bead& b : nk.beads) out.insert(b.vertices.begin(), b.vertices.end());
    return out;
}

Graph necklace_graph(const Graph& g, const Necklace& nk) {
    Graph out;
    VertexSet beadverts;
    for (const Bead& b : nk.beads) {
        for (int v : b.vertices) {
            out.add_vertex(v);
            beadverts.insert(v);
        }
        for (const Edge& e : b.edges) out.add_edge(e.u, e.v);
    }
    for (const EdgeSet& m : nk.matchings)
        for (const Edge& e : m) out.add_edge(e.u, e.v);
    for (int z : nk.hubs) {
        out.add_vertex(z);
        for (int w : g.neighbors(z))
            if (beadverts.count(w)) out.add_edge(z, w);
    }
    return out;
}

std::vector<Jump> find_jumps(const Graph& g, const Necklace& nk) {
    std::map<int, int> bead_of;  // vertex -> 1-based bead index
    for (int i = 0; i < nk.n; ++i)
        for (int v : nk.beads[i].vertices) bead_of[v] = i + 1;
    VertexSet vn = necklace_vertices(nk);
    Graph gn = necklace_graph(g, nk);

    std::vector<Jump> jumps;
    std::set<std::pair<int, int>> seen;
    auto add = [&](int i, int j, Path p) {
        if (i > j) {
            std::swap(i, j);
            std::reverse(p.begin(), p.end());
        }
        if (seen.emplace(i, j).second) jumps.push_back({i, j, std::move(p)});
    };

    // Single-edge jumps: G-edges between bead vertices that G[N] does not have.
    for (const Edge& e : g.edges()) {
        auto bu = bead_of.find(e.u), bv = bead_of.find(e.v);
        if (bu == bead_of.end() || bv == bead_of.end()) continue;
        if (gn.has_edge(e.u, e.v)) continue;
        add(bu->second, bv->second, {e.u, e.v});
    }

    // Jumps through the outside: walk each component of G - V(N).
    VertexSet outside;
    for (int v : g.vertices())
        if (!vn.count(v)) outside.insert(v);
    for (const VertexSet& comp : g.induced(outside).components()) {
        // attachments: bead vertex -> a neighbouring component vertex
        std::vector<std::pair<int, int>> attach;  // (bead vertex, comp vertex)
        for (int c : comp)
            for (int w : g.neighbors(c))
                if (bead_of.count(w)) attach.push_back({w, c});
        std::sort(attach.begin(), attach.end());
        for (std::size_t x = 0; x < attach.size(); ++x) {
            for (std::size_t y = x + 1; y < attach.size(); ++y) {
                auto [u, cu] = attach[x];
                auto [v, cv] = attach[y];
                if (u == v) continue;
                int i = bead_of[u], j = bead_of[v];
                if (seen.count({std::min(i, j), std::max(i, j)})) continue;
                // BFS inside the component from cu to cv.
                std::map<int, int> pred;
                pred[cu] = cu;
                std::queue<int> q;
                q.push(cu);
                while (!q.empty() && !pred.count(cv)) {
                    int w = q.front();
                    q.pop();
                    for (int x2 : g.neighbors(w))
                        if (comp.count(x2) && !pred.count(x2)) {
                            pred[x2] = w;
                            q.push(x2);
                        }
                }
                if (!pred.count(cv)) continue;  // different pieces cannot happen
                Path p{v};
                for (int w = cv;; w = pred[w]) {
                    p.push_back(w);
                    if (w == cu) break;
                }
                p.push_back(u);
                std::reverse(p.begin(), p.end());
                add(i, j, std::move(p));
            }
        }
    }
    return jumps;
}

bool is_long_jump(const Jump& jp, int n) {
    int d = ((jp.j - jp.i) % n + n) % n;
    return d != 0 && d != 1 && d != n - 1;
}

bool is_long_jump_free(const Graph& g, const Necklace& nk) {
    for (const Jump& jp : find_jumps(g, nk))
        if (is_long_jump(jp, nk.n)) return false;
    return true;
}

SyntheticNecklace synthetic_necklace(int t, int s, int l, int n, std::uint64_t seed) {
    if (n < 2 || t < 0 || s < 0 || l < 0 || t < s)
        throw std::invalid_argument("necklace parameters out of range");
    std::mt19937_64 rng(seed);
    int tp = std::max(1, t);
    SyntheticNecklace out;
    Necklace& nk = out.necklace;
    nk.t = t;
    nk.s = s;
    nk.l = l;
    nk.n = n;
    auto rail = [&](int bead, int j) { return (bead - 1) * tp + j; };  // 1-based
    for (int i = 1; i <= n; ++i) {
        Bead b;
        for (int j = 1; j <= tp; ++j) {
            b.vertices.insert(rail(i, j));
            out.graph.add_vertex(rail(i, j));
        }
        for (int j = 2; j <= tp; ++j) {  // random labelled tree, grown a leaf at a time
            int parent = static_cast<int>(rng() % (j - 1)) + 1;
            b.edges.insert(Edge(rail(i, j), rail(i, parent)));
            out.graph.add_edge(rail(i, j), rail(i, parent));
        }
        nk.beads.push_back(std::move(b));
    }
    for (int i = 1; i <= n; ++i) {
        EdgeSet m;
        int size = i == n ? s : t;
        for (int j = 1; j <= size; ++j) {
            Edge e(rail(i, j), rail(i % n + 1, j));
            m.insert(e);
            out.graph.add_edge(e.u, e.v);
        }
        nk.matchings.push_back(std::move(m));
    }
    for (int z = 0; z < l; ++z) {
        int hub = n * tp + 1 + z;
        out.graph.add_vertex(hub);
        nk.hubs.insert(hub);
        for (int i = 1; i <= n; ++i)
            out.graph.add_edge(hub, rail(i, static_cast<int>(rng() % tp) + 1));
    }
    return out;
}

TightExample tight_example(int n, int theta) {
    if (theta < 3 || n < theta) throw std::invalid_argument("need n >= theta >= 3");
    TightExample out;
    for (int a = 1; a <= n; ++a) out.graph.add_vertex(a);
    int next = n + 1;
    std::vector<int> comb(theta - 1);
    for (int i = 0; i < theta - 1; ++i) comb[i] = i + 1;
    while (true) {
        for (int j = 0; j < theta - 1; ++j) {
            out.b.insert(next);
            for (int a : comb) out.graph.add_edge(a, next);
            ++next;
        }
        int i = theta - 2;
        while (i >= 0 && comb[i] == n - (theta - 2 - i)) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < theta - 1; ++j) comb[j] = comb[j - 1] + 1;
    }
    for (int a = 1; a <= n; ++a) out.a.insert(a);
    return out;
}

}  // namespace tw
