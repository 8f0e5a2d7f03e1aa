#pragma once

#include <string>

#include "tw/decomposition.hpp"
#include "tw/graph.hpp"
#include "tw/minor.hpp"
#include "tw/necklace.hpp"
#include "tw/wheel.hpp"

#include "json.hpp"

namespace tw {

// Lossless JSON round-trips for the structured artifacts. Schemas:
//   graph          {"vertices":[...], "edges":[[u,v],...]}
//   decomposition  {"nodes":[...], "tree_edges":[[a,b],...],
//                   "leaf_labels":{"<leaf>":[u,v],...}}
//   necklace       {"params":{"t":_,"s":_,"l":_,"n":_},
//                   "beads":[{"vertices":[...],"edges":[[u,v],...]},...],
//                   "matchings":[[[u,v],...],...], "hubs":[...]}
//   wheel spec     {"rim_tree":<graph>, "hubs":[...], "pi":{"<v>":w,...},
//                   "psi":{"<z>":v,...}, "n":_}
//   minor model    {"branch_sets":{"<h>":[...],...},
//                   "edge_witnesses":[{"h":[a,b],"g":[u,v]},...]}
// from_json throws std::invalid_argument on schema violations.

nlohmann::json graph_to_json(const Graph& g);
Graph graph_from_json(const nlohmann::json& j);

nlohmann::json decomposition_to_json(const TreeDecomposition& td);
TreeDecomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json necklace_to_json(const Necklace& nk);
Necklace necklace_from_json(const nlohmann::json& j);

nlohmann::json wheel_spec_to_json(const WheelSpec& spec);
WheelSpec wheel_spec_from_json(const nlohmann::json& j);

nlohmann::json minor_model_to_json(const MinorModel& m);
MinorModel minor_model_from_json(const nlohmann::json& j);

// Parses text that is either a JSON graph object or the plain text format
// ("p n m" header plus edge lines).
Graph parse_graph_any(const std::string& text);

}  // namespace tw
