#include "tw/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>
#include <stdexcept>

namespace tw {

void Graph::add_vertex(int v) { verts_.insert(v); }

void Graph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("loop edge rejected");
    verts_.insert(u);
    verts_.insert(v);
    edges_.insert(Edge(u, v));
}

void Graph::remove_edge(int u, int v) { edges_.erase(Edge(u, v)); }

void Graph::remove_vertex(int v) {
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->u == v || it->v == v)
            it = edges_.erase(it);
        else
            ++it;
    }
    verts_.erase(v);
}

VertexSet Graph::neighbors(int v) const {
    VertexSet out;
    for (const Edge& e : edges_) {
        if (e.u == v) out.insert(e.v);
        if (e.v == v) out.insert(e.u);
    }
    return out;
}

EdgeSet Graph::incident_edges(int v) const {
    EdgeSet out;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) out.insert(e);
    return out;
}

int Graph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

Graph Graph::induced(const VertexSet& vs) const {
    Graph h;
    for (int v : vs)
        if (has_vertex(v)) h.add_vertex(v);
    for (const Edge& e : edges_)
        if (vs.count(e.u) && vs.count(e.v)) h.add_edge(e.u, e.v);
    return h;
}

std::vector<VertexSet> Graph::components() const {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int s : verts_) {
        if (seen.count(s)) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen.insert(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp.insert(v);
            for (int w : neighbors(v)) {
                if (!seen.count(w)) {
                    seen.insert(w);
                    stack.push_back(w);
                }
            }
        }
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool Graph::is_connected() const {
    if (verts_.empty()) return true;
    return components().size() == 1;
}

bool Graph::is_tree() const {
    return is_connected() && !verts_.empty() && edges_.size() == verts_.size() - 1;
}

Graph grid(int n) {
    if (n < 1) throw std::invalid_argument("grid: n >= 1 required");
    Graph g;
    auto id = [n](int r, int c) { return r * n + c + 1; };
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            g.add_vertex(id(r, c));
            if (c + 1 < n) g.add_edge(id(r, c), id(r, c + 1));
            if (r + 1 < n) g.add_edge(id(r, c), id(r + 1, c));
        }
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1) throw std::invalid_argument("complete_bipartite: sides >= 1");
    Graph g;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph complete(int n) {
    if (n < 1) throw std::invalid_argument("complete: n >= 1 required");
    Graph g;
    g.add_vertex(1);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) g.add_edge(i, j);
    return g;
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_edge(i, i % n + 1);
    return g;
}

Graph path(int n) {
    if (n < 1) throw std::invalid_argument("path: n >= 1 required");
    Graph g;
    g.add_vertex(1);
    for (int i = 1; i < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_graph: n >= 1 required");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    Graph g;
    for (int i = 1; i <= n; ++i) g.add_vertex(i);
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng) < edge_prob) g.add_edge(i, j);
    return g;
}

Graph random_connected_graph(int n, double edge_prob, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        Graph g = random_graph(n, edge_prob, rng());
        if (g.is_connected()) return g;
    }
    // Force connectivity with a random spanning path.
    Graph g = random_graph(n, edge_prob, rng());
    std::vector<int> order(g.vertices().begin(), g.vertices().end());
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i + 1 < order.size(); ++i) g.add_edge(order[i], order[i + 1]);
    return g;
}

Graph parse_graph(std::istream& in) {
    Graph g;
    std::string line;
    long nv = -1, ne = -1;
    bool have_header = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok[0] == '#') continue;
        if (tok == "p") {
            if (!(ls >> nv >> ne)) throw std::invalid_argument("bad p line");
            for (long i = 1; i <= nv; ++i) g.add_vertex(static_cast<int>(i));
            have_header = true;
            continue;
        }
        int u = std::stoi(tok), v;
        if (!(ls >> v)) throw std::invalid_argument("bad edge line: " + line);
        g.add_edge(u, v);
    }
    if (!have_header) throw std::invalid_argument("missing p header line");
    if (ne >= 0 && static_cast<long>(g.num_edges()) != ne)
        throw std::invalid_argument("edge count mismatch with header");
    return g;
}

Graph parse_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return parse_graph(in);
}

std::string format_graph(const Graph& g) {
    std::ostringstream out;
    out << "p " << g.num_vertices() << " " << g.num_edges() << "\n";
    for (const Edge& e : g.edges()) out << e.u << " " << e.v << "\n";
    return out.str();
}

std::string to_dot(const Graph& g) {
    std::ostringstream out;
    out << "graph G {\n";
    for (int v : g.vertices()) out << "  " << v << " [label=\"" << v << "\"];\n";
    for (const Edge& e : g.edges()) out << "  " << e.u << " -- " << e.v << ";\n";
    out << "}\n";
    return out.str();
}

}  // namespace tw
