#include "tw/json_io.hpp"

#include <sstream>
#include <stdexcept>

namespace tw {

namespace {

using nlohmann::json;

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

const json& field(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
    return j.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

json edge_to_json(const Edge& e) { return json::array({e.u, e.v}); }

Edge edge_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be a pair [u,v]");
    return Edge(as_int(j[0], what), as_int(j[1], what));
}

json vertex_set_to_json(const VertexSet& vs) {
    json a = json::array();
    for (int v : vs) a.push_back(v);
    return a;
}

VertexSet vertex_set_from_json(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    VertexSet vs;
    for (const json& x : j) vs.insert(as_int(x, what));
    return vs;
}

json edge_set_to_json(const EdgeSet& es) {
    json a = json::array();
    for (const Edge& e : es) a.push_back(edge_to_json(e));
    return a;
}

EdgeSet edge_set_from_json(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of pairs");
    EdgeSet es;
    for (const json& x : j) es.insert(edge_from_json(x, what));
    return es;
}

}  // namespace

json graph_to_json(const Graph& g) {
    return json{{"vertices", vertex_set_to_json(g.vertices())},
                {"edges", edge_set_to_json(g.edges())}};
}

Graph graph_from_json(const json& j) {
    Graph g;
    for (int v : vertex_set_from_json(field(j, "vertices"), "vertices")) g.add_vertex(v);
    for (const Edge& e : edge_set_from_json(field(j, "edges"), "edges")) g.add_edge(e.u, e.v);
    return g;
}

json decomposition_to_json(const TreeDecomposition& td) {
    json labels = json::object();
    for (const auto& [leaf, e] : td.leaf_labels) labels[std::to_string(leaf)] = edge_to_json(e);
    json tree_edges = json::array();
    for (const Edge& e : td.tree.edges()) tree_edges.push_back(edge_to_json(e));
    return json{{"nodes", vertex_set_to_json(td.tree.vertices())},
                {"tree_edges", tree_edges},
                {"leaf_labels", labels}};
}

TreeDecomposition decomposition_from_json(const json& j) {
    TreeDecomposition td;
    for (int v : vertex_set_from_json(field(j, "nodes"), "nodes")) td.tree.add_vertex(v);
    for (const Edge& e : edge_set_from_json(field(j, "tree_edges"), "tree_edges"))
        td.tree.add_edge(e.u, e.v);
    const json& labels = field(j, "leaf_labels");
    if (!labels.is_object()) bad("leaf_labels must be an object");
    for (auto it = labels.begin(); it != labels.end(); ++it) {
        int leaf = 0;
        try {
            leaf = std::stoi(it.key());
        } catch (const std::exception&) {
            bad("leaf_labels key '" + it.key() + "' is not an integer");
        }
        td.leaf_labels.insert({leaf, edge_from_json(it.value(), "leaf label")});
    }
    return td;
}

json necklace_to_json(const Necklace& nk) {
    json beads = json::array();
    for (const Bead& b : nk.beads)
        beads.push_back(json{{"vertices", vertex_set_to_json(b.vertices)},
                             {"edges", edge_set_to_json(b.edges)}});
    json matchings = json::array();
    for (const EdgeSet& m : nk.matchings) matchings.push_back(edge_set_to_json(m));
    return json{{"params", json{{"t", nk.t}, {"s", nk.s}, {"l", nk.l}, {"n", nk.n}}},
                {"beads", beads},
                {"matchings", matchings},
                {"hubs", vertex_set_to_json(nk.hubs)}};
}

Necklace necklace_from_json(const json& j) {
    Necklace nk;
    const json& p = field(j, "params");
    nk.t = as_int(field(p, "t"), "t");
    nk.s = as_int(field(p, "s"), "s");
    nk.l = as_int(field(p, "l"), "l");
    nk.n = as_int(field(p, "n"), "n");
    const json& beads = field(j, "beads");
    if (!beads.is_array()) bad("beads must be an array");
    for (const json& bj : beads) {
        Bead b;
        b.vertices = vertex_set_from_json(field(bj, "vertices"), "bead vertices");
        b.edges = edge_set_from_json(field(bj, "edges"), "bead edges");
        nk.beads.push_back(std::move(b));
    }
    const json& matchings = field(j, "matchings");
    if (!matchings.is_array()) bad("matchings must be an array");
    for (const json& mj : matchings) nk.matchings.push_back(edge_set_from_json(mj, "matching"));
    nk.hubs = vertex_set_from_json(field(j, "hubs"), "hubs");
    return nk;
}

json wheel_spec_to_json(const WheelSpec& spec) {
    json pi = json::object();
    for (const auto& [v, w] : spec.pi) pi[std::to_string(v)] = w;
    json psi = json::object();
    for (const auto& [z, v] : spec.psi) psi[std::to_string(z)] = v;
    return json{{"rim_tree", graph_to_json(spec.rim_tree)},
                {"hubs", vertex_set_to_json(spec.hubs)},
                {"pi", pi},
                {"psi", psi},
                {"n", spec.n}};
}

WheelSpec wheel_spec_from_json(const json& j) {
    WheelSpec spec;
    spec.rim_tree = graph_from_json(field(j, "rim_tree"));
    spec.hubs = vertex_set_from_json(field(j, "hubs"), "hubs");
    auto read_map = [&](const char* key) {
        const json& m = field(j, key);
        if (!m.is_object()) bad(std::string(key) + " must be an object");
        std::map<int, int> out;
        for (auto it = m.begin(); it != m.end(); ++it) {
            int k = 0;
            try {
                k = std::stoi(it.key());
            } catch (const std::exception&) {
                bad(std::string(key) + " key '" + it.key() + "' is not an integer");
            }
            out[k] = as_int(it.value(), key);
        }
        return out;
    };
    spec.pi = read_map("pi");
    spec.psi = read_map("psi");
    spec.n = as_int(field(j, "n"), "n");
    return spec;
}

json minor_model_to_json(const MinorModel& m) {
    json branch = json::object();
    for (const auto& [h, vs] : m.branch_sets) branch[std::to_string(h)] = vertex_set_to_json(vs);
    json witnesses = json::array();
    for (const auto& [he, ge] : m.edge_witnesses)
        witnesses.push_back(json{{"h", edge_to_json(he)}, {"g", edge_to_json(ge)}});
    return json{{"branch_sets", branch}, {"edge_witnesses", witnesses}};
}

MinorModel minor_model_from_json(const json& j) {
    MinorModel m;
    const json& branch = field(j, "branch_sets");
    if (!branch.is_object()) bad("branch_sets must be an object");
    for (auto it = branch.begin(); it != branch.end(); ++it) {
        int h = 0;
        try {
            h = std::stoi(it.key());
        } catch (const std::exception&) {
            bad("branch_sets key '" + it.key() + "' is not an integer");
        }
        m.branch_sets[h] = vertex_set_from_json(it.value(), "branch set");
    }
    const json& witnesses = field(j, "edge_witnesses");
    if (!witnesses.is_array()) bad("edge_witnesses must be an array");
    for (const json& w : witnesses)
        m.edge_witnesses.insert(
            {edge_from_json(field(w, "h"), "edge witness"), edge_from_json(field(w, "g"), "edge witness")});
    return m;
}

Graph parse_graph_any(const std::string& text) {
    auto first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{') {
        json j;
        try {
            j = json::parse(text);
        } catch (const json::parse_error& e) {
            bad(std::string("graph parse: ") + e.what());
        }
        return graph_from_json(j);
    }
    std::istringstream in(text);
    return parse_graph(in);
}

}  // namespace tw
