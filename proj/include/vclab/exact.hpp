#pragma once

#include <cstdint>
#include <vector>

#include "vclab/graph.hpp"

namespace vclab {

// Exact solvers for small instances.  Budgets count vertices that carry at
// least one edge (isolated vertices are stripped before solving and never
// appear in covers); exceeding a budget raises InstanceTooLargeError.
inline constexpr int kDefaultVertexBudget = 64;
inline constexpr int kDefaultEdgeBudget = 64;

struct MvcResult {
    int size = 0;
    VertexSet cover;  // one optimal cover, deterministic
};

// Minimum vertex cover size.  Dispatches to subset enumeration on tiny
// inputs and branch-and-bound otherwise; both engines are also exposed
// directly so they can cross-check each other.
int mvc(const Graph& g, int vertex_budget = kDefaultVertexBudget);
MvcResult mvc_with_witness(const Graph& g, int vertex_budget = kDefaultVertexBudget);

// Engine (a): enumerate all vertex subsets; at most 20 non-isolated vertices.
int mvc_enumerate(const Graph& g);
MvcResult mvc_enumerate_with_witness(const Graph& g);

// Engine (b): branch-and-bound with degree-0/degree-1 reductions, a greedy
// maximal-matching lower bound, and max-degree branching ("vertex in cover"
// explored before "all neighbors in cover"); at most 64 non-isolated
// vertices.
int mvc_branch_and_bound(const Graph& g, int vertex_budget = kDefaultVertexBudget);
MvcResult mvc_branch_and_bound_with_witness(const Graph& g,
                                            int vertex_budget = kDefaultVertexBudget);

// True iff mvc(g) <= k.  Requires k >= 1.
bool vc_decision(const Graph& g, int k, int vertex_budget = kDefaultVertexBudget);

// True iff mvc(g) >= mvc(h).
bool vc_geq(const Graph& g, const Graph& h, int vertex_budget = kDefaultVertexBudget);

struct MatchingResult {
    int size = 0;
    std::vector<Edge> edges;  // vertex-disjoint
};

// Smallest inclusion-maximal matching (equivalently: a smallest edge set
// whose endpoints form a vertex cover).  Branch-and-bound over edges with a
// matching-based lower bound; the edge budget defaults to 64 and is capped
// at 128 by the implementation.
int min_maximal_matching(const Graph& g, int edge_budget = kDefaultEdgeBudget);
MatchingResult min_maximal_matching_with_witness(const Graph& g,
                                                 int edge_budget = kDefaultEdgeBudget);

// Maximum matching of a bipartite graph via augmenting paths.  side_a lists
// one side of the bipartition; throws std::invalid_argument if some edge
// fails to cross the two sides.  By König's theorem the result equals the
// minimum vertex cover size of g.
int max_bipartite_matching(const Graph& g, const VertexSet& side_a);

// True iff the edges are pairwise vertex-disjoint and all present in g.
bool is_matching(const Graph& g, const std::vector<Edge>& edges);

}  // namespace vclab
