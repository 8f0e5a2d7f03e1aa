#pragma once

#include <optional>
#include <vector>

#include "tw/graph.hpp"
#include "tw/separation.hpp"

namespace tw {

using Path = std::vector<int>;  // vertex sequence; a single vertex is edgeless

struct DisjointPaths {
    int count = 0;
    std::vector<Path> paths;
};

// Maximum family of pairwise vertex-disjoint (X,Y)-paths, by vertex-splitting
// max flow. Vertices in X n Y each count as an edgeless path. Every returned
// path meets X u Y only at its ends unless it is edgeless.
DisjointPaths max_disjoint_paths(const Graph& g, const VertexSet& x, const VertexSet& y);

// Path-based definition: every pair of subsets X, Y of Z with |X| = |Y| <= theta
// is linked by |X| vertex-disjoint paths.
bool is_theta_connected_paths(const Graph& g, const VertexSet& z, int theta);

// Separation-based definition: no separation of order < theta has more than
// lambda vertices of Z on each side. Exhaustive separation enumeration on
// small edge sets, min-cut driven search otherwise.
bool is_theta_connected_separations(const Graph& g, const VertexSet& z, int theta);

// A theta-connected set of maximum cardinality (exact, |V| <= ~9).
VertexSet max_theta_connected_set(const Graph& g, int theta);

// If Z is not theta-connected, a violating separation of minimum order (ties
// broken by lexicographically least left vertex set); otherwise empty.
std::optional<Separation> violating_separation(const Graph& g, const VertexSet& z, int theta);

// All violating separations of minimum order, for callers that apply their
// own tie-breaking. Empty when Z is theta-connected.
std::vector<Separation> minimum_violating_separations(const Graph& g, const VertexSet& z,
                                                      int theta);

// Precomputed linkage verdicts for all subset pairs of size <= theta; supports
// fast theta-connectedness queries for many Z over one graph.
class LinkageTable {
public:
    LinkageTable(const Graph& g, int theta);
    bool is_theta_connected(const VertexSet& z) const;
    bool is_theta_connected(std::uint32_t z_mask) const;
    int index_of(int v) const;

private:
    std::vector<int> verts_;
    int theta_;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> broken_pairs_;  // unlinked (X,Y)
};

}  // namespace tw
