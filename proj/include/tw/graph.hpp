#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tw {

// Undirected edge, endpoints normalized so u < v.
struct Edge {
    int u;
    int v;
    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
    auto operator<=>(const Edge&) const = default;
};

using VertexSet = std::set<int>;
using EdgeSet = std::set<Edge>;

// Simple undirected graph with stable integer vertex ids.
class Graph {
public:
    Graph() = default;

    void add_vertex(int v);
    void add_edge(int u, int v);  // adds endpoints as needed; rejects loops
    void remove_edge(int u, int v);
    void remove_vertex(int v);  // drops incident edges

    bool has_vertex(int v) const { return verts_.count(v) != 0; }
    bool has_edge(int u, int v) const { return u != v && edges_.count(Edge(u, v)) != 0; }

    const VertexSet& vertices() const { return verts_; }
    const EdgeSet& edges() const { return edges_; }
    std::size_t num_vertices() const { return verts_.size(); }
    std::size_t num_edges() const { return edges_.size(); }

    VertexSet neighbors(int v) const;
    EdgeSet incident_edges(int v) const;  // delta_G(v)
    int degree(int v) const;

    // Subgraph induced by a vertex set.
    Graph induced(const VertexSet& vs) const;

    std::vector<VertexSet> components() const;
    bool is_connected() const;
    bool is_tree() const;

    auto operator<=>(const Graph&) const = default;

private:
    VertexSet verts_;
    EdgeSet edges_;
};

// --- standard generators (canonical numbering documented in the README) ---

Graph grid(int n);                       // row-major ids 1..n*n
Graph complete_bipartite(int a, int b);  // left 1..a, right a+1..a+b
Graph complete(int n);                   // ids 1..n
Graph cycle(int n);                      // sequential ids, n >= 3
Graph path(int n);                       // sequential ids
Graph random_graph(int n, double edge_prob, std::uint64_t seed);
Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed);

// --- text I/O ---
// Format: "p <num_vertices> <num_edges>" then "u v" lines, '#' comments.
Graph parse_graph(std::istream& in);
Graph parse_graph_file(const std::string& path);
std::string format_graph(const Graph& g);
std::string to_dot(const Graph& g);

}  // namespace tw
