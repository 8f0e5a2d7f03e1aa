#pragma once

#include <functional>
#include <utility>

#include "tw/graph.hpp"

namespace tw {

// One side of a separation: a subgraph given by explicit vertex and edge sets.
struct Side {
    VertexSet verts;
    EdgeSet edges;

    bool contains_vertex(int v) const { return verts.count(v) != 0; }
    auto operator<=>(const Side&) const = default;
};

Side side_union(const Side& a, const Side& b);
Side side_intersection(const Side& a, const Side& b);

// Ordered pair of edge-covering subgraphs (G1, G2) with G1 u G2 = G.
// The order lambda is |V(G1) n V(G2)|.
struct Separation {
    Side left;
    Side right;

    int order() const;
    VertexSet shared() const;
    auto operator<=>(const Separation&) const = default;
};

// Checks the Separation invariants against the ambient graph.
bool is_valid_separation(const Graph& g, const Separation& s);

// Builds a separation from an explicit left side; the right side is the
// complement closure: all edges of G outside left_edges plus their endpoints,
// plus every vertex of G not covered by the left side.
Separation make_separation(const Graph& g, const VertexSet& left_vertices,
                           const EdgeSet& left_edges);

// The submodular combination ((G1 n H1, G2 u H2), (G1 u H1, G2 n H2)).
// The sum of the two output orders is at most order(s1) + order(s2).
std::pair<Separation, Separation> submodular_combine(const Graph& g, const Separation& s1,
                                                     const Separation& s2);

// Visits every separation of G arising from a bipartition of E(G), with every
// placement of the isolated vertices of G on the left or right side.
// This family suffices for order-minimal questions: any separation is obtained
// from one of these by adding redundant shared vertices or duplicated edges,
// which never decreases the order.
void for_each_edge_bipartition_separation(const Graph& g,
                                          const std::function<void(const Separation&)>& fn);

}  // namespace tw
