#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "tw/connectivity.hpp"
#include "tw/graph.hpp"

namespace tw {

// A bead: an explicit subgraph of the ambient graph.
struct Bead {
    VertexSet vertices;
    EdgeSet edges;

    bool operator==(const Bead&) const = default;
};

// (t,s,l,n)-necklace: n beads joined cyclically by matchings, plus hubs.
// beads[i] is B_{i+1} and matchings[i] is M_{i+1} in 1-based speak; the last
// matching M_n (size s) closes the cycle between B_n and B_1.
struct Necklace {
    int t = 0;
    int s = 0;
    int l = 0;
    int n = 0;
    std::vector<Bead> beads;
    std::vector<EdgeSet> matchings;
    VertexSet hubs;

    bool operator==(const Necklace&) const = default;
};

struct ConditionResult {
    bool pass = true;
    std::string witness;  // failure description, or a note on the evidence
};

// Verdict per condition N1..N7, plus the disjoint path families found inside
// beads while checking N5/N6 (reusable by surgeries).
struct NecklaceReport {
    std::array<ConditionResult, 7> conditions;
    std::vector<std::vector<Path>> bead_paths;  // per bead, may be empty

    bool all_pass() const {
        for (const auto& c : conditions)
            if (!c.pass) return false;
        return true;
    }
    const ConditionResult& n(int k) const { return conditions.at(k - 1); }
};

// Checks N1-N7. Throws only for malformed containers (sizes disagreeing with
// n, negative parameters, t < s, n < 2); condition failures go in the report.
NecklaceReport validate_necklace(const Graph& g, const Necklace& nk);

// X_i = vertices of B_i meeting M_{i-1}; Y_i = vertices of B_i meeting M_i.
struct AttachmentSequences {
    std::vector<VertexSet> left;   // X_1..X_n
    std::vector<VertexSet> right;  // Y_1..Y_n
};
AttachmentSequences attachment_sequences(const Necklace& nk);

// B'_i = B_{n-i+1}, M'_i = M_{n-i}; an involution preserving (t,s,l,n).
Necklace reverse(const Necklace& nk);

// Contraction N o (a_1,...,a_{n'-1}): merge runs of beads together with the
// matchings between them; M'_i = M_{a_i}. Valid whenever t >= 1 (with t = 0
// merged beads may be disconnected; the object is returned regardless).
Necklace contract(const Necklace& nk, const std::vector<int>& cut_points);

bool is_supported_by(const Necklace& nk, const VertexSet& u);
// Each bead of inner contains some bead of outer as a subgraph (transitive).
bool supports(const Necklace& outer, const Necklace& inner);

// V(N) and G[N]: bead edges, matchings, and all hub-to-bead edges of G.
VertexSet necklace_vertices(const Necklace& nk);
Graph necklace_graph(const Graph& g, const Necklace& nk);

// An (i,j)-jump: a path between beads i and j meeting V(N) only at its ends.
// Single edges of G[N] do not count (a matching edge is not a jump).
struct Jump {
    int i = 0;  // 1-based bead indices, i <= j
    int j = 0;
    Path path;
};
std::vector<Jump> find_jumps(const Graph& g, const Necklace& nk);
// Long: (j - i) mod n not in {0, 1, n-1}; in particular (1,n) is never long.
bool is_long_jump(const Jump& jp, int n);
bool is_long_jump_free(const Graph& g, const Necklace& nk);

// A synthetic (t,s,l,n)-necklace together with its ambient graph: beads are
// random trees on max{1,t} vertices, matchings aligned along rails, hubs
// adjacent to one random vertex per bead. Always validates.
struct SyntheticNecklace {
    Graph graph;
    Necklace necklace;
};
SyntheticNecklace synthetic_necklace(int t, int s, int l, int n, std::uint64_t seed);

// Tightness construction: A of size n, and one group of theta-1
// new vertices completely joined to each (theta-1)-subset of A. B is the union
// of the groups: a theta-connected set of size C(n,theta-1)*(theta-1).
struct TightExample {
    Graph graph;
    VertexSet a;
    VertexSet b;
};
TightExample tight_example(int n, int theta);

}  // namespace tw
