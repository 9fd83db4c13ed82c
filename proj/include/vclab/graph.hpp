#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vclab {

using Vertex = int;
// Undirected edge, stored normalized as (min endpoint, max endpoint).
using Edge = std::pair<Vertex, Vertex>;
// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<Vertex>;

// Thrown when an instance exceeds the budget of an exact solver.
class InstanceTooLargeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Simple undirected graph on vertex ids [0, n).  No self-loops, no parallel
// edges.  Values are immutable once constructed; every operation returns a
// new graph.  The empty graph (n = 0) is a valid value.
class Graph {
public:
    Graph() = default;

    // Validates endpoints, rejects self-loops, normalizes and deduplicates
    // the edge list.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    int degree(Vertex v) const;
    const std::vector<Vertex>& neighbors(Vertex v) const;  // sorted ascending
    bool has_edge(Vertex u, Vertex v) const;

    // All edges as normalized pairs in (min, max) lexicographic order.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

Graph make_graph(int n, const std::vector<Edge>& edges);

// Disjoint union: vertices of h are shifted up by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

// Disjoint union plus every cross edge between g's block and h's block.
Graph join(const Graph& g, const Graph& h);

// g plus t extra isolated vertices (appended after g's block).
Graph add_isolated(const Graph& g, int t);

struct DeletionResult {
    Graph graph;
    // new id -> old id, ascending in old ids
    std::vector<Vertex> original_id;
    // old id -> new id, or -1 if the vertex was deleted
    std::vector<Vertex> new_id;
};

// Removes the vertices in s (and all incident edges); survivors are packed
// into [0, n - |s|) preserving relative order.
DeletionResult delete_vertices(const Graph& g, const VertexSet& s);

// Maximum degree; 0 for edgeless and empty graphs.
int max_deg(const Graph& g);

// True iff every edge of g has at least one endpoint in c.
bool is_vertex_cover(const Graph& g, const VertexSet& c);

// Sorts and deduplicates into VertexSet form.
VertexSet normalize_vertex_set(std::vector<Vertex> ids);

// Throws std::invalid_argument if some id lies outside [0, g.vertex_count()).
void check_vertex_set(const Graph& g, const VertexSet& s);

}  // namespace vclab
