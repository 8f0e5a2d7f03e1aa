#include "tw/decomposition.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <stdexcept>

#include "tw/connectivity.hpp"

namespace tw {

namespace {

// Nodes of the minimal subtree of `tree` spanning `targets`: repeatedly strip
// leaves that are not targets.
VertexSet steiner_nodes(const Graph& tree, const VertexSet& targets) {
    if (targets.empty()) return {};
    Graph t = tree;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v : VertexSet(t.vertices())) {
            if (t.degree(v) <= 1 && !targets.count(v) && t.num_vertices() > 1) {
                t.remove_vertex(v);
                changed = true;
            }
        }
    }
    return t.vertices();
}

std::map<Edge, int> label_to_leaf(const TreeDecomposition& td) {
    std::map<Edge, int> out;
    for (const auto& [leaf, e] : td.leaf_labels) out.emplace(e, leaf);
    return out;
}

}  // namespace

void validate_decomposition(const Graph& g, const TreeDecomposition& td) {
    if (td.tree.num_vertices() == 0) throw std::invalid_argument("empty decomposition tree");
    if (!td.tree.is_tree()) throw std::invalid_argument("decomposition tree is not a tree");
    for (int v : g.vertices())
        if (g.degree(v) == 0)
            throw std::invalid_argument("graph has an isolated vertex; no bag can hold it");
    std::map<Edge, int> seen;
    for (const auto& [leaf, e] : td.leaf_labels) {
        if (!td.tree.has_vertex(leaf)) throw std::invalid_argument("label on unknown node");
        if (td.tree.num_vertices() > 1 && td.tree.degree(leaf) != 1)
            throw std::invalid_argument("label on a non-leaf node");
        if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("label is not an edge of G");
        if (!seen.emplace(e, leaf).second) throw std::invalid_argument("edge labels two leaves");
    }
    for (const Edge& e : g.edges())
        if (!seen.count(e)) throw std::invalid_argument("edge of G labels no leaf");
}

std::map<int, VertexSet> all_bags(const Graph& g, const TreeDecomposition& td) {
    validate_decomposition(g, td);
    auto leaf_of = label_to_leaf(td);
    std::map<int, VertexSet> bags;
    for (int t : td.tree.vertices()) bags[t];
    for (int v : g.vertices()) {
        VertexSet targets;
        for (const Edge& e : g.incident_edges(v)) targets.insert(leaf_of.at(e));
        for (int t : steiner_nodes(td.tree, targets)) bags[t].insert(v);
    }
    return bags;
}

VertexSet node_bag(const Graph& g, const TreeDecomposition& td, int t) {
    if (!td.tree.has_vertex(t)) throw std::invalid_argument("unknown node");
    return all_bags(g, td).at(t);
}

int width(const Graph& g, const TreeDecomposition& td) {
    if (g.num_edges() == 0) throw std::invalid_argument("width undefined for edgeless graph");
    int w = 0;
    for (const auto& [t, bag] : all_bags(g, td)) w = std::max(w, static_cast<int>(bag.size()) - 1);
    return w;
}

int adhesion(const Graph& g, const TreeDecomposition& td) {
    auto bags = all_bags(g, td);
    int a = 0;
    for (const Edge& e : td.tree.edges()) {
        VertexSet shared;
        std::set_intersection(bags[e.u].begin(), bags[e.u].end(), bags[e.v].begin(),
                              bags[e.v].end(), std::inserter(shared, shared.end()));
        a = std::max(a, static_cast<int>(shared.size()));
    }
    return a;
}

Separation separation_of_tree_edge(const Graph& g, const TreeDecomposition& td, const Edge& e) {
    validate_decomposition(g, td);
    if (!td.tree.has_edge(e.u, e.v)) throw std::invalid_argument("not a tree edge");
    Graph cut = td.tree;
    cut.remove_edge(e.u, e.v);
    Separation s;
    for (const auto& comp : cut.components()) {
        Side& side = comp.count(e.u) ? s.left : s.right;
        for (const auto& [leaf, ge] : td.leaf_labels) {
            if (!comp.count(leaf)) continue;
            side.edges.insert(ge);
            side.verts.insert(ge.u);
            side.verts.insert(ge.v);
        }
    }
    return s;
}

TreeDecomposition from_bags(const Graph& g, const Graph& bag_tree,
                            const std::map<int, VertexSet>& bags) {
    if (bag_tree.num_vertices() == 0 || !bag_tree.is_tree())
        throw std::invalid_argument("bag tree is not a tree");
    for (int t : bag_tree.vertices())
        if (!bags.count(t)) throw std::invalid_argument("node without a bag");
    for (int v : g.vertices()) {
        if (g.degree(v) == 0) throw std::invalid_argument("graph has an isolated vertex");
        VertexSet holders;
        for (const auto& [t, bag] : bags)
            if (bag.count(v) && bag_tree.has_vertex(t)) holders.insert(t);
        if (holders.empty()) throw std::invalid_argument("vertex in no bag");
        if (!bag_tree.induced(holders).is_connected())
            throw std::invalid_argument("bag subtree disconnected");
    }
    TreeDecomposition td;
    td.tree = bag_tree;
    int next = *bag_tree.vertices().rbegin() + 1;
    for (const Edge& e : g.edges()) {
        int host = -1;
        for (const auto& [t, bag] : bags) {
            if (bag_tree.has_vertex(t) && bag.count(e.u) && bag.count(e.v)) {
                host = t;
                break;
            }
        }
        if (host < 0) throw std::invalid_argument("edge inside no bag");
        td.tree.add_edge(host, next);
        td.leaf_labels.emplace(next, e);
        ++next;
    }
    validate_decomposition(g, td);
    return td;
}

TreeDecomposition normalize(const TreeDecomposition& td) {
    TreeDecomposition out = td;
    bool changed = true;
    while (changed && out.tree.num_vertices() > 1) {
        changed = false;
        for (int v : VertexSet(out.tree.vertices())) {
            if (out.tree.num_vertices() <= 2) break;
            if (out.tree.degree(v) == 1 && !out.leaf_labels.count(v)) {
                out.tree.remove_vertex(v);
                changed = true;
            } else if (out.tree.degree(v) == 2) {
                auto nb = out.tree.neighbors(v);
                auto it = nb.begin();
                int a = *it++, b = *it;
                out.tree.remove_vertex(v);
                out.tree.add_edge(a, b);
                changed = true;
            }
        }
    }
    return out;
}

Graph clique_sum(const Graph& g1, const Graph& g2, const VertexSet& h_vertices) {
    VertexSet shared;
    std::set_intersection(g1.vertices().begin(), g1.vertices().end(), g2.vertices().begin(),
                          g2.vertices().end(), std::inserter(shared, shared.end()));
    if (shared != h_vertices)
        throw std::invalid_argument("clique_sum: V(G1) n V(G2) differs from H");
    for (int u : h_vertices)
        for (int v : h_vertices) {
            if (u >= v) continue;
            if (!g1.has_edge(u, v))
                throw std::invalid_argument("clique_sum: H is not a clique in G1");
            if (!g2.has_edge(u, v))
                throw std::invalid_argument("clique_sum: H is not a clique in G2");
        }
    for (const Edge& e : g1.edges())
        if (g2.edges().count(e) && !(h_vertices.count(e.u) && h_vertices.count(e.v)))
            throw std::invalid_argument("clique_sum: shared edge outside the clique");
    Graph out;
    for (int v : g1.vertices()) out.add_vertex(v);
    for (int v : g2.vertices()) out.add_vertex(v);
    for (const Edge& e : g1.edges()) out.add_edge(e.u, e.v);
    for (const Edge& e : g2.edges()) out.add_edge(e.u, e.v);
    for (int u : h_vertices)
        for (int v : h_vertices)
            if (u < v) out.remove_edge(u, v);
    return out;
}

namespace {

struct Split {
    VertexSet separator;
    VertexSet left_component;  // one component of piece - separator
};

struct PieceInfo {
    int value = 0;
    std::optional<Split> split;  // nullopt: the piece is a single bag
};

struct ExactSolver {
    int theta;
    std::map<Graph, PieceInfo> memo;

    static Graph clique_filled(const Graph& base, const VertexSet& part, const VertexSet& w) {
        Graph piece;
        for (int v : part) piece.add_vertex(v);
        for (int v : w) piece.add_vertex(v);
        for (const Edge& e : base.edges())
            if (piece.has_vertex(e.u) && piece.has_vertex(e.v)) piece.add_edge(e.u, e.v);
        for (int u : w)
            for (int v : w)
                if (u < v) piece.add_edge(u, v);
        return piece;
    }

    int solve(const Graph& h) {
        if (auto it = memo.find(h); it != memo.end()) return it->second.value;
        PieceInfo info;
        info.value = static_cast<int>(h.num_vertices()) - 1;
        std::vector<int> verts(h.vertices().begin(), h.vertices().end());
        int n = static_cast<int>(verts.size());
        for (int wsize = 0; wsize < theta && wsize <= n - 2; ++wsize) {
            std::vector<int> comb(wsize);
            for (int i = 0; i < wsize; ++i) comb[i] = i;
            while (true) {
                VertexSet w;
                for (int i : comb) w.insert(verts[i]);
                VertexSet rest;
                std::set_difference(h.vertices().begin(), h.vertices().end(), w.begin(),
                                    w.end(), std::inserter(rest, rest.end()));
                auto comps = h.induced(rest).components();
                if (comps.size() >= 2) {
                    VertexSet other;
                    for (std::size_t i = 1; i < comps.size(); ++i)
                        other.insert(comps[i].begin(), comps[i].end());
                    Graph p1 = clique_filled(h, comps[0], w);
                    Graph p2 = clique_filled(h, other, w);
                    int val = std::max(solve(p1), solve(p2));
                    if (val < info.value) {
                        info.value = val;
                        info.split = Split{w, comps[0]};
                    }
                }
                int i = wsize - 1;
                while (i >= 0 && comb[i] == n - wsize + i) --i;
                if (i < 0) break;
                ++comb[i];
                for (int j = i + 1; j < wsize; ++j) comb[j] = comb[j - 1] + 1;
            }
        }
        memo.emplace(h, info);
        return info.value;
    }

    // Rebuild the witness as a standard bag tree by replaying memoized splits.
    void build(const Graph& h, Graph& bag_tree, std::map<int, VertexSet>& bags, int& next) {
        const PieceInfo& info = memo.at(h);
        if (!info.split) {
            bags[next] = h.vertices();
            bag_tree.add_vertex(next);
            ++next;
            return;
        }
        const VertexSet& w = info.split->separator;
        VertexSet other;
        std::set_difference(h.vertices().begin(), h.vertices().end(),
                            info.split->left_component.begin(), info.split->left_component.end(),
                            std::inserter(other, other.end()));
        for (int v : w) other.erase(v);
        Graph sub1, sub2;
        std::map<int, VertexSet> bags1, bags2;
        Graph p1 = clique_filled(h, info.split->left_component, w);
        Graph p2 = clique_filled(h, other, w);
        build(p1, sub1, bags1, next);
        build(p2, sub2, bags2, next);
        // The separator is a clique in each piece, so some bag contains it.
        auto host = [&](const Graph& t, const std::map<int, VertexSet>& bs) {
            for (int node : t.vertices()) {
                const VertexSet& b = bs.at(node);
                if (std::includes(b.begin(), b.end(), w.begin(), w.end())) return node;
            }
            throw std::logic_error("separator clique in no bag");
        };
        int h1 = host(sub1, bags1), h2 = host(sub2, bags2);
        for (int v : sub1.vertices()) bag_tree.add_vertex(v);
        for (int v : sub2.vertices()) bag_tree.add_vertex(v);
        for (const Edge& e : sub1.edges()) bag_tree.add_edge(e.u, e.v);
        for (const Edge& e : sub2.edges()) bag_tree.add_edge(e.u, e.v);
        bag_tree.add_edge(h1, h2);
        bags.insert(bags1.begin(), bags1.end());
        bags.insert(bags2.begin(), bags2.end());
    }
};

}  // namespace

int size_guard_limit() {
    if (const char* env = std::getenv("THETA_WIDTH_MAX_VERTICES")) {
        int lim = std::atoi(env);
        if (lim > 0) return lim;
    }
    return 12;
}

ThetaTreeWidthResult theta_tree_width_exact(const Graph& g, int theta) {
    if (theta < 1) throw std::invalid_argument("theta must be positive");
    if (g.num_vertices() > size_guard_limit())
        throw SizeGuardError("instance too large for exact solver (limit " +
                             std::to_string(size_guard_limit()) +
                             "; set THETA_WIDTH_MAX_VERTICES to raise)");
    if (g.num_edges() == 0) throw std::invalid_argument("exact solver needs at least one edge");
    for (int v : g.vertices())
        if (g.degree(v) == 0) throw std::invalid_argument("graph has an isolated vertex");

    ExactSolver solver{theta, {}};
    ThetaTreeWidthResult res;
    res.value = solver.solve(g);
    Graph bag_tree;
    std::map<int, VertexSet> bags;
    int next = 1;
    solver.build(g, bag_tree, bags, next);
    res.witness = normalize(from_bags(g, bag_tree, bags));
    if (width(g, res.witness) > res.value) throw std::logic_error("witness wider than value");
    if (theta >= 3 && adhesion(g, res.witness) >= theta)
        throw std::logic_error("witness adhesion too large");
    return res;
}

namespace {

// Bag-size signature (n_max, ..., n_0); lexicographically larger-first.
std::map<int, int, std::greater<>> signature(const std::map<int, VertexSet>& bags) {
    std::map<int, int, std::greater<>> sig;
    for (const auto& [t, bag] : bags) sig[static_cast<int>(bag.size())] += 1;
    return sig;
}

// true when a < b in the lexicographic order on (n_max, n_max-1, ..., n_0)
bool signature_less(const std::map<int, int, std::greater<>>& a,
                    const std::map<int, int, std::greater<>>& b) {
    auto ia = a.begin();
    auto ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        int ka = ia == a.end() ? -1 : ia->first;
        int kb = ib == b.end() ? -1 : ib->first;
        if (ka != kb) return ka < kb;  // the side missing this size has count 0
        if (ia->second != ib->second) return ia->second < ib->second;
        ++ia;
        ++ib;
    }
    return false;
}

// V(A_t) for every t != r: vertices touched by edges labelling the component
// of tree - e_t on t's side, where e_t is the first edge of the t-r path.
std::map<int, VertexSet> side_vertex_sets(const TreeDecomposition& td, int r) {
    std::map<int, VertexSet> out;
    // Post-order accumulate over the tree rooted at r.
    std::vector<std::pair<int, int>> stack{{r, -1}};
    std::vector<std::pair<int, int>> order;  // (node, parent)
    while (!stack.empty()) {
        auto [v, parent] = stack.back();
        stack.pop_back();
        order.push_back({v, parent});
        for (int w : td.tree.neighbors(v))
            if (w != parent) stack.push_back({w, v});
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        auto [v, parent] = *it;
        VertexSet& acc = out[v];
        if (auto lit = td.leaf_labels.find(v); lit != td.leaf_labels.end()) {
            acc.insert(lit->second.u);
            acc.insert(lit->second.v);
        }
        for (int w : td.tree.neighbors(v))
            if (w != parent) acc.insert(out[w].begin(), out[w].end());
    }
    out.erase(r);
    return out;
}

bool nests(const VertexSet& a, const Separation& s) {
    auto subset = [](const VertexSet& x, const VertexSet& y) {
        return std::includes(y.begin(), y.end(), x.begin(), x.end());
    };
    return subset(a, s.left.verts) || subset(a, s.right.verts);
}

}  // namespace

TreeDecomposition improve_to_connected_bags(const Graph& g, const TreeDecomposition& td,
                                            int theta, const SignatureObserver& observe) {
    validate_decomposition(g, td);
    if (adhesion(g, td) >= theta)
        throw std::invalid_argument("improve_to_connected_bags: adhesion not below theta");

    TreeDecomposition cur = td;
    auto bags = all_bags(g, cur);
    auto sig = signature(bags);
    if (observe) observe(sig);
    while (true) {
        // The worst offender: largest non-theta-connected bag, then least node.
        int r = -1;
        std::size_t rsize = 0;
        std::map<int, std::vector<Separation>> viol;
        for (const auto& [t, bag] : bags) {
            if (r >= 0 && bag.size() < rsize) continue;
            if (r >= 0 && bag.size() == rsize && t > r) continue;
            auto v = minimum_violating_separations(g, bag, theta);
            if (!v.empty()) {
                r = t;
                rsize = bag.size();
                viol[t] = std::move(v);
            }
        }
        if (r < 0) return cur;

        auto sides = side_vertex_sets(cur, r);
        const Separation* chosen = nullptr;
        int best_bad = -1;
        for (const Separation& s : viol[r]) {
            int bad = 0;
            for (const auto& [t, av] : sides)
                if (!nests(av, s)) ++bad;
            if (!chosen || bad < best_bad ||
                (bad == best_bad && s.left.verts < chosen->left.verts)) {
                chosen = &s;
                best_bad = bad;
            }
        }

        // Split: two copies of the tree joined at r1 r2; each labelled leaf
        // keeps its label in the copy owning its edge.
        TreeDecomposition next;
        int offset = *cur.tree.vertices().rbegin() + 1;
        for (int v : cur.tree.vertices()) {
            next.tree.add_vertex(v);
            next.tree.add_vertex(v + offset);
        }
        for (const Edge& e : cur.tree.edges()) {
            next.tree.add_edge(e.u, e.v);
            next.tree.add_edge(e.u + offset, e.v + offset);
        }
        next.tree.add_edge(r, r + offset);
        for (const auto& [leaf, e] : cur.leaf_labels) {
            if (chosen->left.edges.count(e))
                next.leaf_labels.emplace(leaf, e);
            else
                next.leaf_labels.emplace(leaf + offset, e);
        }
        next = normalize(next);

        auto next_bags = all_bags(g, next);
        auto next_sig = signature(next_bags);
        if (!signature_less(next_sig, sig))
            throw std::logic_error("improvement signature did not decrease");
        if (adhesion(g, next) >= theta) throw std::logic_error("improvement raised adhesion");
        cur = std::move(next);
        bags = std::move(next_bags);
        sig = std::move(next_sig);
        if (observe) observe(sig);
    }
}

}  // namespace tw
