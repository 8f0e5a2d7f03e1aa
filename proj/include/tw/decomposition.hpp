#pragma once

#include <functional>
#include <map>
#include <stdexcept>

#include "tw/graph.hpp"
#include "tw/separation.hpp"

namespace tw {

// Tree-decomposition in edge-leaf form: a tree whose labelled leaves carry the
// edges of G, one leaf per edge. Bags are derived, not stored: a node t holds
// vertex v exactly when t lies on the minimal subtree spanning the leaves
// labelled by the edges at v.
struct TreeDecomposition {
    Graph tree;
    std::map<int, Edge> leaf_labels;  // labelled leaf node -> edge of G
};

// Throws std::invalid_argument when the decomposition is malformed: tree not a
// tree, labels on non-leaves, duplicate labels, labels not covering E(G), or G
// has isolated vertices (the edge-leaf format cannot place them in any bag).
void validate_decomposition(const Graph& g, const TreeDecomposition& td);

VertexSet node_bag(const Graph& g, const TreeDecomposition& td, int t);
std::map<int, VertexSet> all_bags(const Graph& g, const TreeDecomposition& td);

// max |Y_t| - 1 over nodes; error when G has no edges (no bags exist).
int width(const Graph& g, const TreeDecomposition& td);
// max |Y_t n Y_t'| over tree edges; 0 for a single-node tree.
int adhesion(const Graph& g, const TreeDecomposition& td);

// The separation associated with a tree edge: each side is induced by the
// edges of G labelling one component of tree - e. The left side is the
// component containing the smaller endpoint of e. Its order equals |Y_e|.
Separation separation_of_tree_edge(const Graph& g, const TreeDecomposition& td, const Edge& e);

// Bridge from the standard bag format: attach one labelled leaf per G-edge to
// the least node whose bag contains it. Validates the standard decomposition
// (bag-subtree connectivity, edge coverage). Width does not increase; adhesion
// is at most max(2, largest adjacent-bag intersection).
TreeDecomposition from_bags(const Graph& g, const Graph& bag_tree,
                            const std::map<int, VertexSet>& bags);

// Removes unlabelled leaves and splices out degree-2 nodes until none remain.
// Bags of surviving nodes are unchanged, so width and adhesion cannot grow.
TreeDecomposition normalize(const TreeDecomposition& td);

// (G1 u G2) - E(H) for a shared clique H. Precondition failures are reported
// individually via std::invalid_argument.
Graph clique_sum(const Graph& g1, const Graph& g2, const VertexSet& h_vertices);

// Thrown when an instance exceeds the exact-solver size guard; distinct from
// std::invalid_argument so callers can report "too large" apart from "bad".
struct SizeGuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Vertex limit for the exact solvers: 12 by default, overridable through the
// THETA_WIDTH_MAX_VERTICES environment variable.
int size_guard_limit();

struct ThetaTreeWidthResult {
    int value = 0;
    TreeDecomposition witness;
};

// Exact theta-tree-width by the clique-sum recursion: tw_theta <= k iff the
// graph has <= k+1 vertices or splits along a separation of order < theta into
// two proper pieces (each clique-filled on the separator) of value <= k.
// The witness realizes the value; its adhesion is < theta when theta >= 3
// (for theta <= 2 an edge with two degree->=2 endpoints forces adhesion 2 in
// any edge-leaf decomposition, so no witness can do better).
ThetaTreeWidthResult theta_tree_width_exact(const Graph& g, int theta);

// The improvement loop behind "every graph has a tree-decomposition of
// adhesion < theta and optimal width whose bags are all theta-connected":
// repeatedly pick the largest non-theta-connected bag, split the tree along a
// violating separation of minimum order (then fewest non-nested parts, then
// lexicographic), and prune. Asserts the lexicographic bag-size signature
// strictly decreases each round. Requires adhesion(td) < theta.
// The optional observer sees the bag-size signature (count per size, largest
// first) once for the input and once after each improvement round.
using SignatureObserver = std::function<void(const std::map<int, int, std::greater<>>&)>;
TreeDecomposition improve_to_connected_bags(const Graph& g, const TreeDecomposition& td,
                                            int theta, const SignatureObserver& observe = {});

}  // namespace tw
