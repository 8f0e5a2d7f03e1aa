#include "tw/separation.hpp"

#include <algorithm>
#include <stdexcept>

namespace tw {

Side side_union(const Side& a, const Side& b) {
    Side out = a;
    out.verts.insert(b.verts.begin(), b.verts.end());
    out.edges.insert(b.edges.begin(), b.edges.end());
    return out;
}

Side side_intersection(const Side& a, const Side& b) {
    Side out;
    std::set_intersection(a.verts.begin(), a.verts.end(), b.verts.begin(), b.verts.end(),
                          std::inserter(out.verts, out.verts.end()));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                          std::inserter(out.edges, out.edges.end()));
    return out;
}

VertexSet Separation::shared() const {
    VertexSet out;
    std::set_intersection(left.verts.begin(), left.verts.end(), right.verts.begin(),
                          right.verts.end(), std::inserter(out, out.end()));
    return out;
}

int Separation::order() const { return static_cast<int>(shared().size()); }

static bool side_internally_valid(const Graph& g, const Side& s) {
    for (int v : s.verts)
        if (!g.has_vertex(v)) return false;
    for (const Edge& e : s.edges) {
        if (!g.has_edge(e.u, e.v)) return false;
        if (!s.verts.count(e.u) || !s.verts.count(e.v)) return false;
    }
    return true;
}

bool is_valid_separation(const Graph& g, const Separation& s) {
    if (!side_internally_valid(g, s.left) || !side_internally_valid(g, s.right)) return false;
    Side u = side_union(s.left, s.right);
    return u.verts == g.vertices() && u.edges == g.edges();
}

Separation make_separation(const Graph& g, const VertexSet& left_vertices,
                           const EdgeSet& left_edges) {
    for (int v : left_vertices)
        if (!g.has_vertex(v)) throw std::invalid_argument("left vertex not in G");
    for (const Edge& e : left_edges) {
        if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("left edge not in G");
        if (!left_vertices.count(e.u) || !left_vertices.count(e.v))
            throw std::invalid_argument("left edge endpoint outside left vertex set");
    }
    Separation s;
    s.left.verts = left_vertices;
    s.left.edges = left_edges;
    for (const Edge& e : g.edges()) {
        if (!left_edges.count(e)) {
            s.right.edges.insert(e);
            s.right.verts.insert(e.u);
            s.right.verts.insert(e.v);
        }
    }
    for (int v : g.vertices())
        if (!left_vertices.count(v)) s.right.verts.insert(v);
    return s;
}

std::pair<Separation, Separation> submodular_combine(const Graph& g, const Separation& s1,
                                                     const Separation& s2) {
    if (!is_valid_separation(g, s1) || !is_valid_separation(g, s2))
        throw std::invalid_argument("submodular_combine: inputs must separate the same graph");
    Separation a{side_intersection(s1.left, s2.left), side_union(s1.right, s2.right)};
    Separation b{side_union(s1.left, s2.left), side_intersection(s1.right, s2.right)};
    return {a, b};
}

void for_each_edge_bipartition_separation(const Graph& g,
                                          const std::function<void(const Separation&)>& fn) {
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    std::vector<int> isolated;
    for (int v : g.vertices())
        if (g.degree(v) == 0) isolated.push_back(v);
    if (edges.size() + isolated.size() > 24)
        throw std::invalid_argument("separation enumeration: instance too large");
    const std::uint64_t ne = edges.size(), ni = isolated.size();
    for (std::uint64_t em = 0; em < (1ull << ne); ++em) {
        Separation s;
        for (std::uint64_t i = 0; i < ne; ++i) {
            Side& side = (em >> i) & 1 ? s.left : s.right;
            side.edges.insert(edges[i]);
            side.verts.insert(edges[i].u);
            side.verts.insert(edges[i].v);
        }
        for (std::uint64_t im = 0; im < (1ull << ni); ++im) {
            Separation t = s;
            for (std::uint64_t i = 0; i < ni; ++i)
                ((im >> i) & 1 ? t.left : t.right).verts.insert(isolated[i]);
            fn(t);
        }
    }
}

}  // namespace tw
