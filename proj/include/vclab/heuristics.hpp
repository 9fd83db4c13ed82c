#pragma once

#include <cstdint>
#include <vector>

#include "vclab/graph.hpp"

namespace vclab {

// Choice policy for a single heuristic run.  "first" always takes the
// canonically smallest available choice; "random" draws uniformly among the
// available choices from a generator fully determined by the seed;
// "exhaustive" only marks the exhaustive searches and is rejected by the
// single-run entry points.
struct Policy {
    enum class Kind { First, Random, Exhaustive };
    Kind kind = Kind::First;
    std::uint64_t seed = 0;

    static Policy first() { return {Kind::First, 0}; }
    static Policy random(std::uint64_t seed) { return {Kind::Random, seed}; }
    static Policy exhaustive() { return {Kind::Exhaustive, 0}; }
};

enum class HeuristicAlgorithm { EdgeDeletion, MaxDegreeGreedy };

struct HeuristicTrace {
    HeuristicAlgorithm algorithm = HeuristicAlgorithm::EdgeDeletion;
    std::vector<Edge> edge_choices;      // edge-deletion runs
    std::vector<Vertex> vertex_choices;  // max-degree-greedy runs
    VertexSet cover;                     // sorted
    int size = 0;                        // == cover.size()
};

// Edge deletion: repeatedly pick a residual edge and delete both endpoints;
// the endpoints of the chosen edges are the cover.  The "first" policy picks
// the (min, max)-lexicographically smallest residual edge.
HeuristicTrace run_ed(const Graph& g, const Policy& policy);

// Maximum-degree greedy: repeatedly delete a vertex of maximum residual
// degree until no edge remains; the deleted vertices are the cover.  The
// "first" policy picks the smallest id among the tied maximum-degree
// vertices.
HeuristicTrace run_mdg(const Graph& g, const Policy& policy);

// Replays an explicit choice sequence, validating every step (the chosen
// edge must exist in the residual graph / the chosen vertex must have
// maximum residual degree) and that the run is complete (no residual edge
// remains afterwards).  Throws std::invalid_argument on violations.
HeuristicTrace replay_ed(const Graph& g, const std::vector<Edge>& choices);
HeuristicTrace replay_mdg(const Graph& g, const std::vector<Vertex>& choices);

// Smallest cover size any edge-deletion run can output.  Exhaustive
// depth-first search over edge choices, memoized on the residual vertex
// bitset, pruned against the best known total.  Requires at most
// `budget` (<= 64) vertices.
int min_ed(const Graph& g, int budget = 64);

// Smallest cover size any maximum-degree-greedy run can output.  Same
// search scheme; branches only over the currently tied maximum-degree
// vertices, and tied vertices with identical residual neighborhoods are
// interchangeable so only the first of each class is branched on.
int min_mdg(const Graph& g, int budget = 64);

// Decision forms: is there a run with cover size <= target?  Same searches
// with the bound fixed at target + 1 up front, which prunes much harder
// than computing the exact minimum when target is close to a lower bound.
bool ed_can_achieve(const Graph& g, int target, int budget = 64);
bool mdg_can_achieve(const Graph& g, int target, int budget = 64);

struct SizeRange {
    int min = 0;
    int max = 0;
};

// Smallest and largest cover size over all edge-deletion runs, via a full
// memoized sweep of the reachable residual states.  Meant for small graphs
// (at most 20 vertices).
SizeRange ed_size_range(const Graph& g);

}  // namespace vclab
