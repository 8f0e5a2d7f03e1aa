#pragma once

#include <optional>
#include <vector>

#include "tw/graph.hpp"
#include "tw/necklace.hpp"

namespace tw {

// From a (0,0,0,m)-necklace in a connected graph with m >= d^n, produce either
// a (0,0,1,d)-necklace (a vertex whose removal leaves d bead-holding
// components) or a (1,0,0,n)-necklace (components hanging off an n-vertex
// path of a compressed spanning tree). The output is supported by n0. Works
// on the actual instance; throws only when neither outcome can be realized
// (naming the d^n hypothesis when it is violated).
Necklace long_path_or_high_degree(const Graph& g, const Necklace& n0, int d, int n);

// Hub-accumulation loop: starting from the singletons of u, repeatedly find
// the component of G - Z holding almost all of u and convert a high-degree
// vertex into a hub. Ends with a (0,0,theta,n)-necklace supported by u, or a
// (1,0,0,p)-necklace whose beads each hold >= theta vertices of u.
Necklace init_necklace(const Graph& g, const VertexSet& u, int theta, int n, int p);

// k = |p_family| = |q_family| = |b_family|. Returns k vertex-disjoint
// (x,y)-paths inside the union subgraph (path edges plus the induced edges of
// each blob); a flow value below k is reported as a hypothesis violation.
std::vector<Path> reroute_disjoint_paths(const Graph& g, const std::vector<Path>& p_family,
                                         const std::vector<Path>& q_family,
                                         const std::vector<VertexSet>& b_family,
                                         const VertexSet& x, const VertexSet& y);

// Surgery on a (t,s,l,m)-necklace with an (s+1, s+n)-jump, t > s, m >= n+2s:
// absorb the jump interior into bead s+1, contract to (s+1,...,s+n-1), and add
// the remaining jump edge to the closing matching. The result is re-validated
// as a (t,s+1,l,n)-necklace; failures are raised as hypothesis violations.
Necklace jump_increase_s(const Graph& g, const Necklace& nk, const Jump& jump);

struct ExtractedPath {
    Necklace necklace;  // (t-1,s,0,n), supported by u
    Path path;          // disjoint from the necklace, with an edge to every bead
};

// From a (t,s,0,m)-necklace supported by u with t > s, t+s >= 2 and
// m >= t(n-1)+1: thread t disjoint path systems through the beads, find one
// path removable at >= n indices, contract there, and carve the beads around
// the removed path.
ExtractedPath extract_path(const Graph& g, const Necklace& nk, const VertexSet& u, int n);

enum class SearchStatus { Found, Exhausted, BudgetExhausted };

struct NecklaceSearchResult {
    SearchStatus status;
    std::optional<Necklace> necklace;  // set iff status == Found
};

// Bounded search for a (theta;n)-necklace supported by u: seed with
// init_necklace, then raise t+s+l one step at a time by converting hubs to
// jumps or applying jump_increase_s to jumps found in g. Exhausted means no
// further surgery applied (not a proof of absence); the budget caps the
// number of surgery/scan steps.
NecklaceSearchResult search_necklace(const Graph& g, const VertexSet& u, int theta, int n,
                                     long budget = 100000);

}  // namespace tw
