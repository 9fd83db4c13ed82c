#pragma once

#include <cstdint>
#include <vector>

#include "vclab/graph.hpp"

namespace vclab {

// Parameters of the staged bipartite gadget.  One side V consists of three
// groups u_1..u_n1, w_1..w_mu, z_1..z_n2; the other side Vt of the partner
// groups ut_1..ut_n1, wt_1..wt_mu.  Besides the perfect matching
// {u_i, ut_i}, {w_j, wt_j}, every V vertex receives one block of s distinct
// wt vertices, where s is the stage (delta + 3, delta + 4, ...) at which it
// is served.
struct GadgetSpec {
    long long n1 = 0;
    long long n2 = 0;
    long long delta = 0;
    long long mu = 0;

    bool operator==(const GadgetSpec&) const = default;
};

struct StageBlock {
    int stage = 0;        // block size s
    int alpha_index = 0;  // 0-based index into GadgetLayout::alpha
    std::vector<Vertex> block;
};

struct GadgetLayout {
    std::vector<Vertex> u, w, z;        // the V side, in id order
    std::vector<Vertex> u_tilde, w_tilde;  // the Vt side
    std::vector<Vertex> alpha;          // serving order of V: u ++ w ++ z
    std::vector<StageBlock> stage_blocks;  // one per alpha, serving order
};

// Exact integer check of the block-supply inequality
//   sum over s = delta+3 .. mu-1 of floor(mu / s)  >=  n1 + mu + n2.
// An empty range contributes 0.
bool gadget_feasible(const GadgetSpec& spec);

// Smallest mu >= 2 with mu * (ln mu - 2 ln(delta + 2) - 1) >= n1 + n2,
// evaluated with outward-rounded logarithms so rounding can only make the
// test stricter.  This bound implies the block-supply inequality above.
long long min_mu(long long n1, long long n2, long long delta);

// Builds the gadget.  All spec fields must be positive and the spec must be
// feasible.  The w_tilde vertices are kept in a rotating queue; each stage
// deals consecutive queue elements into blocks of size s, swapping a block
// element that is already adjacent to its target (the target's matching
// partner) with the first conflict-free undealt vertex.
struct GadgetResult {
    Graph graph;
    GadgetLayout layout;
};
GadgetResult lemma4_graph(const GadgetSpec& spec);

// Checks the degree-gap property: after deleting any subset of V (keeping
// at least one V vertex), the maximum surviving V degree exceeds the
// maximum Vt degree by more than delta.
//
// Two ingredients: an analytic sweep that, for every stage s, deletes all V
// vertices served after s and verifies every wt vertex keeps cross-degree
// at most 1 + (number of stages up to s); and `samples` seeded random
// V-subset deletions checked directly.  Returns false on a violation;
// throws std::invalid_argument if graph and layout do not fit each other.
bool verify_property4(const Graph& g, const GadgetSpec& spec, const GadgetLayout& layout,
                      int samples, std::uint64_t seed);

}  // namespace vclab
