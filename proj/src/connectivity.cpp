#include "tw/connectivity.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <queue>
#include <stdexcept>

namespace tw {

namespace {

// Unit-capacity max flow on a vertex-split network (Edmonds-Karp).
struct FlowNet {
    struct Arc {
        int to;
        int cap;
        int rev;       // index of reverse arc in adj[to]
        bool forward;  // false for residual arcs
    };
    std::vector<std::vector<Arc>> adj;

    explicit FlowNet(int n) : adj(n) {}

    void add_arc(int from, int to, int cap) {
        adj[from].push_back({to, cap, static_cast<int>(adj[to].size()), true});
        adj[to].push_back({from, 0, static_cast<int>(adj[from].size()) - 1, false});
    }

    bool augment(int s, int t) {
        std::vector<std::pair<int, int>> pred(adj.size(), {-1, -1});
        std::queue<int> q;
        q.push(s);
        pred[s] = {s, 0};
        while (!q.empty() && pred[t].first < 0) {
            int v = q.front();
            q.pop();
            for (std::size_t i = 0; i < adj[v].size(); ++i) {
                const Arc& a = adj[v][i];
                if (a.cap > 0 && pred[a.to].first < 0) {
                    pred[a.to] = {v, static_cast<int>(i)};
                    q.push(a.to);
                }
            }
        }
        if (pred[t].first < 0) return false;
        for (int v = t; v != s;) {
            auto [pv, pi] = pred[v];
            Arc& a = adj[pv][pi];
            a.cap -= 1;
            adj[a.to][a.rev].cap += 1;
            v = pv;
        }
        return true;
    }

    int max_flow(int s, int t) {
        int f = 0;
        while (augment(s, t)) ++f;
        return f;
    }
};

}  // namespace

DisjointPaths max_disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y) {
    for (int v : x)
        if (!g.has_vertex(v)) throw std::invalid_argument("X not a subset of V(G)");
    for (int v : y)
        if (!g.has_vertex(v)) throw std::invalid_argument("Y not a subset of V(G)");

    DisjointPaths out;
    VertexSet common;
    std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                          std::inserter(common, common.end()));
    for (int v : common) {
        out.paths.push_back({v});
        ++out.count;
    }

    // Vertices of X n Y serve as edgeless paths and are removed from the net.
    std::vector<int> verts;
    std::map<int, int> idx;
    for (int v : g.vertices())
        if (!common.count(v)) {
            idx[v] = static_cast<int>(verts.size());
            verts.push_back(v);
        }
    int n = static_cast<int>(verts.size());
    int source = 2 * n, sink = 2 * n + 1;
    FlowNet net(2 * n + 2);
    for (int i = 0; i < n; ++i) net.add_arc(2 * i, 2 * i + 1, 1);
    for (const Edge& e : g.edges()) {
        if (common.count(e.u) || common.count(e.v)) continue;
        int a = idx[e.u], b = idx[e.v];
        net.add_arc(2 * a + 1, 2 * b, 1);
        net.add_arc(2 * b + 1, 2 * a, 1);
    }
    for (int v : x)
        if (!common.count(v)) net.add_arc(source, 2 * idx[v], 1);
    for (int v : y)
        if (!common.count(v)) net.add_arc(2 * idx[v] + 1, sink, 1);

    int flow = net.max_flow(source, sink);
    out.count += flow;

    // Decompose the flow into paths by walking saturated arcs from the source.
    for (const FlowNet::Arc& sa : net.adj[source]) {
        if (sa.cap != 0) continue;  // unused source arc
        Path p;
        int node = sa.to;  // an x_in node
        while (node != sink) {
            if (node % 2 == 0) p.push_back(verts[node / 2]);
            FlowNet::Arc* next = nullptr;
            for (FlowNet::Arc& a : net.adj[node]) {
                // A used forward arc has cap 0 and positive reverse residual.
                if (a.forward && a.cap == 0 && net.adj[a.to][a.rev].cap > 0 && a.to != source) {
                    next = &a;
                    break;
                }
            }
            if (!next) throw std::logic_error("flow decomposition failed");
            // Consume the unit so another walk does not reuse it.
            next->cap = 1;
            net.adj[next->to][next->rev].cap -= 1;
            node = next->to;
        }
        // Trim so the path meets X u Y only at its ends.
        std::size_t i = 0;
        for (std::size_t k = 0; k < p.size(); ++k)
            if (x.count(p[k])) i = k;
        std::size_t j = i;
        while (j < p.size() && !y.count(p[j])) ++j;
        if (j == p.size()) throw std::logic_error("flow path misses Y");
        out.paths.emplace_back(p.begin() + i, p.begin() + j + 1);
    }
    return out;
}

bool is_theta_connected_paths(const Graph& g, const VertexSet& z, int theta) {
    std::vector<int> zv(z.begin(), z.end());
    int nz = static_cast<int>(zv.size());
    if (nz > 20) throw std::invalid_argument("is_theta_connected_paths: Z too large");
    int cap = std::min(theta, nz);
    for (int k = 1; k <= cap; ++k) {
        // Enumerate k-subsets of Z as index combinations.
        std::vector<int> xi(k), yi(k);
        for (int i = 0; i < k; ++i) xi[i] = i;
        while (true) {
            for (int i = 0; i < k; ++i) yi[i] = i;
            while (true) {
                VertexSet X, Y;
                for (int i : xi) X.insert(zv[i]);
                for (int i : yi) Y.insert(zv[i]);
                if (X <= Y) {  // unordered pairs suffice by symmetry
                    if (max_disjoint_paths(g, X, Y).count < k) return false;
                }
                int i = k - 1;
                while (i >= 0 && yi[i] == nz - k + i) --i;
                if (i < 0) break;
                ++yi[i];
                for (int j = i + 1; j < k; ++j) yi[j] = yi[j - 1] + 1;
            }
            int i = k - 1;
            while (i >= 0 && xi[i] == nz - k + i) --i;
            if (i < 0) break;
            ++xi[i];
            for (int j = i + 1; j < k; ++j) xi[j] = xi[j - 1] + 1;
        }
    }
    return true;
}

namespace {

// Fast separation scan over edge bipartitions with vertex bitmasks.
// Isolated vertices are placed greedily on the deficient side.
bool has_violating_edge_bipartition(const Graph& g, const VertexSet& z, int theta) {
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    std::map<int, int> idx;
    for (std::size_t i = 0; i < verts.size(); ++i) idx[verts[i]] = static_cast<int>(i);
    std::uint32_t zmask = 0;
    for (int v : z) zmask |= 1u << idx[v];
    std::vector<std::uint32_t> emask;
    for (const Edge& e : g.edges()) emask.push_back((1u << idx[e.u]) | (1u << idx[e.v]));
    int iso_z = 0;
    std::uint32_t covered = 0;
    for (std::uint32_t m : emask) covered |= m;
    for (int v : g.vertices())
        if (g.degree(v) == 0 && z.count(v)) ++iso_z;
    std::size_t ne = emask.size();
    for (std::uint64_t mask = 0; mask < (1ull << ne); ++mask) {
        std::uint32_t v1 = 0, v2 = 0;
        for (std::size_t i = 0; i < ne; ++i)
            ((mask >> i) & 1 ? v1 : v2) |= emask[i];
        int lambda = std::popcount(v1 & v2);
        if (lambda >= theta) continue;
        int a = std::popcount(v1 & zmask), b = std::popcount(v2 & zmask);
        // Spread isolated Z-vertices to maximize the smaller side.
        for (int i = 0; i < iso_z; ++i) (a <= b ? a : b) += 1;
        if (std::min(a, b) > lambda) return true;
    }
    (void)covered;
    return false;
}

struct Violation {
    int order;
    VertexSet separator;
    VertexSet left_verts;
    std::vector<VertexSet> left_comps, right_comps;
};

// Search for separations with private vertices on both sides: choose a
// separator W with |W| < theta and bipartition the components of G - W.
// Any violating separation projects onto one of these with no larger order.
std::vector<Violation> find_violations_by_cuts(const Graph& g, const VertexSet& z, int theta,
                                               bool all) {
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    int n = static_cast<int>(verts.size());
    std::vector<Violation> found;
    for (int wsize = 0; wsize < theta; ++wsize) {
        if (!found.empty()) break;  // smaller order wins outright
        std::vector<int> comb(wsize);
        for (int i = 0; i < wsize; ++i) comb[i] = i;
        bool more = wsize <= n;
        while (more) {
            VertexSet w;
            for (int i : comb) w.insert(verts[i]);
            VertexSet rest;
            std::set_difference(g.vertices().begin(), g.vertices().end(), w.begin(), w.end(),
                                std::inserter(rest, rest.end()));
            auto comps = g.induced(rest).components();
            int c = static_cast<int>(comps.size());
            if (c >= 1 && c <= 20) {
                int zw = 0;
                for (int v : w)
                    if (z.count(v)) ++zw;
                std::vector<int> zc(c);
                for (int i = 0; i < c; ++i)
                    for (int v : comps[i])
                        if (z.count(v)) ++zc[i];
                for (std::uint32_t bm = 0; bm < (1u << c); ++bm) {
                    int a = zw, b = zw;
                    for (int i = 0; i < c; ++i) ((bm >> i) & 1 ? a : b) += zc[i];
                    if (a > wsize && b > wsize) {
                        Violation cand;
                        cand.order = wsize;
                        cand.separator = w;
                        cand.left_verts = w;
                        for (int i = 0; i < c; ++i) {
                            auto& comp_list = (bm >> i) & 1 ? cand.left_comps : cand.right_comps;
                            comp_list.push_back(comps[i]);
                            if ((bm >> i) & 1)
                                cand.left_verts.insert(comps[i].begin(), comps[i].end());
                        }
                        if (all || found.empty() || cand.left_verts < found.front().left_verts)
                        {
                            if (all)
                                found.push_back(std::move(cand));
                            else if (found.empty())
                                found.push_back(std::move(cand));
                            else
                                found.front() = std::move(cand);
                        }
                    }
                }
            }
            int i = wsize - 1;
            while (i >= 0 && comb[i] == n - wsize + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < wsize; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return found;
}

Separation violation_to_separation(const Graph& g, const Violation& v) {
    // Edges inside W go left; other edges follow their component.
    EdgeSet left_edges;
    for (const Edge& e : g.edges()) {
        bool lu = v.left_verts.count(e.u), lv = v.left_verts.count(e.v);
        if (lu && lv) left_edges.insert(e);
    }
    return make_separation(g, v.left_verts, left_edges);
}

}  // namespace

bool is_theta_connected_separations(const Graph& g, const VertexSet& z, int theta) {
    if (theta <= 0) return true;
    if (g.num_edges() <= 16) return !has_violating_edge_bipartition(g, z, theta);
    return find_violations_by_cuts(g, z, theta, false).empty();
}

std::optional<Separation> violating_separation(const Graph& g, const VertexSet& z, int theta) {
    auto v = find_violations_by_cuts(g, z, theta, false);
    if (v.empty()) return std::nullopt;
    return violation_to_separation(g, v.front());
}

std::vector<Separation> minimum_violating_separations(const Graph& g, const VertexSet& z,
                                                      int theta) {
    std::vector<Separation> out;
    for (const Violation& v : find_violations_by_cuts(g, z, theta, true))
        out.push_back(violation_to_separation(g, v));
    return out;
}

LinkageTable::LinkageTable(const Graph& g, int theta) : theta_(theta) {
    verts_.assign(g.vertices().begin(), g.vertices().end());
    int n = static_cast<int>(verts_.size());
    if (n > 20) throw std::invalid_argument("LinkageTable: graph too large");
    std::vector<std::uint32_t> subsets;
    for (std::uint32_t m = 1; m < (1u << n); ++m)
        if (std::popcount(m) <= theta) subsets.push_back(m);
    for (std::uint32_t xm : subsets) {
        for (std::uint32_t ym : subsets) {
            if (std::popcount(xm) != std::popcount(ym) || ym < xm) continue;
            VertexSet X, Y;
            for (int i = 0; i < n; ++i) {
                if ((xm >> i) & 1) X.insert(verts_[i]);
                if ((ym >> i) & 1) Y.insert(verts_[i]);
            }
            if (max_disjoint_paths(g, X, Y).count < std::popcount(xm))
                broken_pairs_.emplace_back(xm, ym);
        }
    }
}

int LinkageTable::index_of(int v) const {
    auto it = std::lower_bound(verts_.begin(), verts_.end(), v);
    if (it == verts_.end() || *it != v) throw std::invalid_argument("vertex not in table");
    return static_cast<int>(it - verts_.begin());
}

bool LinkageTable::is_theta_connected(std::uint32_t z_mask) const {
    for (auto [xm, ym] : broken_pairs_)
        if ((xm & ~z_mask) == 0 && (ym & ~z_mask) == 0) return false;
    return true;
}

bool LinkageTable::is_theta_connected(const VertexSet& z) const {
    std::uint32_t m = 0;
    for (int v : z) m |= 1u << index_of(v);
    return is_theta_connected(m);
}

VertexSet max_theta_connected_set(const Graph& g, int theta) {
    if (g.num_vertices() > 16) throw std::invalid_argument("max_theta_connected_set: too large");
    LinkageTable table(g, theta);
    std::vector<int> verts(g.vertices().begin(), g.vertices().end());
    int n = static_cast<int>(verts.size());
    for (int size = n; size >= 1; --size) {
        // Lexicographic combination order makes the result deterministic.
        std::vector<int> comb(size);
        for (int i = 0; i < size; ++i) comb[i] = i;
        while (true) {
            std::uint32_t m = 0;
            for (int i : comb) m |= 1u << i;
            if (table.is_theta_connected(m)) {
                VertexSet out;
                for (int i : comb) out.insert(verts[i]);
                return out;
            }
            int i = size - 1;
            while (i >= 0 && comb[i] == n - size + i) --i;
            if (i < 0) break;
            ++comb[i];
            for (int j = i + 1; j < size; ++j) comb[j] = comb[j - 1] + 1;
        }
    }
    return {};
}

}  // namespace tw
