#include "vclab/graph.hpp"

#include <algorithm>
#include <set>

namespace vclab {

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 0)
        throw std::invalid_argument("vertex count must be non-negative");
    n_ = n;
    adj_.assign(n_, {});
    std::set<Edge> seen;
    for (const Edge& e : edges) {
        Vertex u = e.first, v = e.second;
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u) + ", " + std::to_string(v) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop rejected at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;  // collapse duplicates
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    m_ = static_cast<int>(seen.size());
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
}

int Graph::degree(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return static_cast<int>(adj_[v].size());
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
    if (v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    return adj_[v];
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_)
        throw std::invalid_argument("vertex out of range");
    if (u == v) return false;
    const auto& nbrs = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    Vertex target = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nbrs.begin(), nbrs.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;
}

Graph make_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

Graph disjoint_union(const Graph& g, const Graph& h) {
    int off = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.first + off, e.second + off});
    return Graph(off + h.vertex_count(), edges);
}

Graph join(const Graph& g, const Graph& h) {
    int off = g.vertex_count();
    std::vector<Edge> edges = g.edges();
    for (const Edge& e : h.edges()) edges.push_back({e.first + off, e.second + off});
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v = 0; v < h.vertex_count(); ++v)
            edges.push_back({u, off + v});
    return Graph(off + h.vertex_count(), edges);
}

Graph add_isolated(const Graph& g, int t) {
    if (t < 0) throw std::invalid_argument("cannot add a negative number of vertices");
    return Graph(g.vertex_count() + t, g.edges());
}

DeletionResult delete_vertices(const Graph& g, const VertexSet& s) {
    VertexSet del = normalize_vertex_set(s);
    check_vertex_set(g, del);

    DeletionResult res;
    res.new_id.assign(g.vertex_count(), -1);
    std::size_t di = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (di < del.size() && del[di] == v) {
            ++di;
            continue;
        }
        res.new_id[v] = static_cast<Vertex>(res.original_id.size());
        res.original_id.push_back(v);
    }
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        Vertex u = res.new_id[e.first], v = res.new_id[e.second];
        if (u >= 0 && v >= 0) edges.push_back({u, v});
    }
    res.graph = Graph(static_cast<int>(res.original_id.size()), edges);
    return res;
}

int max_deg(const Graph& g) {
    int d = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) d = std::max(d, g.degree(v));
    return d;
}

bool is_vertex_cover(const Graph& g, const VertexSet& c) {
    VertexSet cov = normalize_vertex_set(c);
    check_vertex_set(g, cov);
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : cov) in[v] = 1;
    for (const Edge& e : g.edges())
        if (!in[e.first] && !in[e.second]) return false;
    return true;
}

VertexSet normalize_vertex_set(std::vector<Vertex> ids) {
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (Vertex v : s)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("vertex set contains out-of-range id " +
                                        std::to_string(v));
}

}  // namespace vclab
