#pragma once

#include <map>
#include <utility>
#include <vector>

#include "tw/graph.hpp"
#include "tw/minor.hpp"
#include "tw/necklace.hpp"

namespace tw {

// (t,l,n)-wheel blueprint (T, Z, pi, psi): n cyclically linked copies of the
// rim tree T, the cycle closed through the permutation pi, plus hubs Z where
// hub z is adjacent to every copy of psi(z).
struct WheelSpec {
    Graph rim_tree;              // a tree, t = |V| >= 1
    VertexSet hubs;              // fresh labels, disjoint from V(rim_tree)
    std::map<int, int> pi;       // permutation of V(rim_tree)
    std::map<int, int> psi;      // hub label -> rim vertex
    int n = 0;                   // number of copies, >= 3

    int t() const { return static_cast<int>(rim_tree.num_vertices()); }
    int l() const { return static_cast<int>(hubs.size()); }
    // A (theta;n)-wheel has 2t + l = theta.
    int theta() const { return 2 * t() + l(); }
};

// Concrete wheel graph. Vertex numbering: sort V(rim_tree) ascending; the
// copy of the k-th rim vertex (k = 0-based) in T_i is (i-1)*t + k + 1, so
// copy T_i occupies (i-1)*t+1 .. i*t; hubs follow as n*t+1, n*t+2, ... in
// ascending hub-label order.
struct BuiltWheel {
    Graph graph;
    std::map<std::pair<int, int>, int> copies;  // (rim vertex, copy 1..n) -> id
    std::map<int, int> hub_ids;                 // hub label -> id
};

// Steps: disjoint copies of T; edges v_i v_{i+1}; wrap edges v_n (pi(v))_1;
// hub edges z (psi(z))_i for all i. Throws on an invalid spec.
BuiltWheel build_wheel(const WheelSpec& spec);

// True iff u avoids the hubs and holds exactly one vertex of each copy.
bool verify_rim_transversal(const WheelSpec& spec, const BuiltWheel& w, const VertexSet& u);

// Reads the built wheel back as a (t,t,l,n)-necklace: beads are the rim
// copies, M_i the consecutive matchings, M_n the wrap matching. Balanced and
// refined by construction.
Necklace necklace_from_wheel(const WheelSpec& spec, const BuiltWheel& w);

// From a balanced refined necklace (beads are trees on t >= 1 vertices, every
// matching perfect along rails) with m beads, extract a (t,l,n)-wheel minor of
// g: group beads by (rail-renamed tree, per-hub adjacent-rail profile), pick n
// indices in one class, contract the segments between them. Throws when t = 0,
// n < 3, or no class holds n beads (pigeonhole precondition unmet).
std::pair<WheelSpec, MinorModel> necklace_to_wheel(const Graph& g, const Necklace& nk, int n);

enum class WheelOutcomeKind { GridSubgraph, BicliqueMinor };
enum class WheelOutcomeMode { Auto, Grid, Biclique };

struct WheelOutcome {
    WheelOutcomeKind kind;
    BuiltWheel wheel;                   // the wheel the outcome lives in
    Graph target;                       // grid(n) or K_{n^2,n^2}
    std::map<int, int> grid_embedding;  // grid vertex -> wheel vertex (grid kind)
    MinorModel biclique_model;          // (biclique kind)
};

// If the rim tree has an n-vertex path: an n x n grid as a subgraph (path
// times n consecutive copies). Otherwise some rim vertex has degree >= n^2
// (for rim trees with >= n^(n^2) vertices; here simply required): contracting
// each neighbour's rail gives a K_{n^2,n^2} minor; needs spec.n >= n^2.
// Mode forces a branch; Auto prefers the grid. Throws when the requested
// branch is infeasible at the given sizes.
WheelOutcome wheel_to_grid_or_biclique(const WheelSpec& spec, int n,
                                       WheelOutcomeMode mode = WheelOutcomeMode::Auto);

}  // namespace tw
