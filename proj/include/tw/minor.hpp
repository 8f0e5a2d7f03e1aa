#pragma once

#include <map>
#include <optional>

#include "tw/graph.hpp"

namespace tw {

// Witness that H is a minor of G: one branch set per H-vertex, plus a G-edge
// witnessing each H-edge between the corresponding branch sets.
struct MinorModel {
    std::map<int, VertexSet> branch_sets;  // H-vertex -> connected set in G
    std::map<Edge, Edge> edge_witnesses;   // H-edge -> G-edge
};

// Full independent validation: disjointness, connectivity, and witnesses.
bool validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m);

enum class MinorSearchStatus { Found, No, BudgetExhausted };

struct MinorSearchResult {
    MinorSearchStatus status;
    std::optional<MinorModel> model;  // set iff status == Found
};

// Exhaustive branch-set search, intended for |V(H)| <= ~8 and |V(G)| <= ~20.
// The budget caps explored search nodes; exhausting it is reported distinctly
// from a definitive "no".
MinorSearchResult is_minor(const Graph& g, const Graph& h, long budget = 2'000'000);

// Contraction of edge e onto its endpoint `keep`; the other endpoint's id
// vanishes and the result is simplified.
Graph retract_edge(const Graph& g, const Edge& e, int keep);

}  // namespace tw
