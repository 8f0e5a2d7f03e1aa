#include "tw/minor.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace tw {

bool validate_minor_model(const Graph& g, const Graph& h, const MinorModel& m) {
    VertexSet used;
    for (int hv : h.vertices()) {
        auto it = m.branch_sets.find(hv);
        if (it == m.branch_sets.end() || it->second.empty()) return false;
        for (int v : it->second) {
            if (!g.has_vertex(v)) return false;
            if (!used.insert(v).second) return false;  // overlap
        }
        if (!g.induced(it->second).is_connected()) return false;
    }
    for (const Edge& he : h.edges()) {
        auto it = m.edge_witnesses.find(he);
        if (it == m.edge_witnesses.end()) return false;
        const Edge& ge = it->second;
        if (!g.has_edge(ge.u, ge.v)) return false;
        const VertexSet& bu = m.branch_sets.at(he.u);
        const VertexSet& bv = m.branch_sets.at(he.v);
        bool uv = bu.count(ge.u) && bv.count(ge.v);
        bool vu = bu.count(ge.v) && bv.count(ge.u);
        if (!uv && !vu) return false;
    }
    return true;
}

namespace {

struct SearchCtx {
    const Graph& g;
    std::vector<int> hverts;                 // assignment order
    std::vector<std::vector<int>> hadj;      // indices into hverts of earlier neighbors
    std::vector<VertexSet> branches;
    VertexSet used;
    long budget;
    bool exhausted = false;
};

bool touches(const Graph& g, const VertexSet& a, const VertexSet& b) {
    for (int v : a)
        for (int w : g.neighbors(v))
            if (b.count(w)) return true;
    return false;
}

bool assign(SearchCtx& c, std::size_t idx);

// Grow the branch set for hverts[idx] by connected expansion. Sets may be
// revisited along different expansion orders; the budget bounds the search.
bool grow(SearchCtx& c, std::size_t idx, VertexSet& cur) {
    if (--c.budget < 0) {
        c.exhausted = true;
        return false;
    }
    bool ok = true;
    for (std::size_t j : c.hadj[idx])
        if (!touches(c.g, cur, c.branches[j])) {
            ok = false;
            break;
        }
    if (ok) {
        c.branches[idx] = cur;
        if (assign(c, idx + 1)) return true;
        if (c.exhausted) return false;
    }
    // Leave room for the branch sets still to come.
    std::size_t remaining = c.hverts.size() - idx - 1;
    if (c.used.size() + remaining >= c.g.num_vertices()) return false;
    VertexSet frontier;
    for (int v : cur)
        for (int w : c.g.neighbors(v))
            if (!c.used.count(w)) frontier.insert(w);
    for (int w : frontier) {
        cur.insert(w);
        c.used.insert(w);
        if (grow(c, idx, cur)) return true;
        cur.erase(w);
        c.used.erase(w);
        if (c.exhausted) return false;
    }
    return false;
}

bool assign(SearchCtx& c, std::size_t idx) {
    if (idx == c.hverts.size()) return true;
    for (int seed : c.g.vertices()) {
        if (c.used.count(seed)) continue;
        VertexSet cur{seed};
        c.used.insert(seed);
        if (grow(c, idx, cur)) return true;
        c.used.erase(seed);
        if (c.exhausted) return false;
    }
    return false;
}

}  // namespace

MinorSearchResult is_minor(const Graph& g, const Graph& h, long budget) {
    if (h.num_vertices() > g.num_vertices() || h.num_edges() > g.num_edges())
        return {MinorSearchStatus::No, std::nullopt};
    SearchCtx c{g, {}, {}, {}, {}, budget};
    c.hverts.assign(h.vertices().begin(), h.vertices().end());
    // Assign high-degree H-vertices first; their constraints prune most.
    std::stable_sort(c.hverts.begin(), c.hverts.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    c.hadj.resize(c.hverts.size());
    for (std::size_t i = 0; i < c.hverts.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (h.has_edge(c.hverts[i], c.hverts[j])) c.hadj[i].push_back(j);
    c.branches.resize(c.hverts.size());
    if (assign(c, 0)) {
        MinorModel m;
        for (std::size_t i = 0; i < c.hverts.size(); ++i)
            m.branch_sets[c.hverts[i]] = c.branches[i];
        for (const Edge& he : h.edges()) {
            const VertexSet& bu = m.branch_sets[he.u];
            const VertexSet& bv = m.branch_sets[he.v];
            bool found = false;
            for (int v : bu) {
                for (int w : g.neighbors(v))
                    if (bv.count(w)) {
                        m.edge_witnesses.emplace(he, Edge(v, w));
                        found = true;
                        break;
                    }
                if (found) break;
            }
        }
        return {MinorSearchStatus::Found, m};
    }
    if (c.exhausted) return {MinorSearchStatus::BudgetExhausted, std::nullopt};
    return {MinorSearchStatus::No, std::nullopt};
}

Graph retract_edge(const Graph& g, const Edge& e, int keep) {
    if (!g.has_edge(e.u, e.v)) throw std::invalid_argument("retract_edge: edge not in G");
    if (keep != e.u && keep != e.v)
        throw std::invalid_argument("retract_edge: keep must be an endpoint");
    int gone = keep == e.u ? e.v : e.u;
    Graph h;
    for (int v : g.vertices())
        if (v != gone) h.add_vertex(v);
    for (const Edge& f : g.edges()) {
        int a = f.u == gone ? keep : f.u;
        int b = f.v == gone ? keep : f.v;
        if (a != b) h.add_edge(a, b);
    }
    return h;
}

}  // namespace tw
