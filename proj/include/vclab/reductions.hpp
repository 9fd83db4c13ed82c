#pragma once

#include <map>
#include <string>
#include <vector>

#include "vclab/gadgets.hpp"
#include "vclab/graph.hpp"
#include "vclab/ratio.hpp"

namespace vclab {

// Output of a construction together with bookkeeping: one role tag per
// output vertex (covering every vertex exactly once) and the named
// parameters the construction fixed.
struct ReductionArtifacts {
    Graph output;
    std::vector<std::string> roles;
    std::map<std::string, long long> constants;
};

// Per input vertex v a four-vertex component v.1..v.4 carrying edges
// {v.1, v.2}, {v.3, v.4}, {v.1, v.3}; per input edge {a, b} all 16 cross
// edges between the two components.  The output has 4n vertices and
// 3n + 16m edges, its minimum cover size is 2 (mvc(g) + n), and some
// edge-deletion run attains exactly that.
ReductionArtifacts g_ed(const Graph& g);

// Threshold construction for edge deletion at ratio 1 <= r < 2.  Both
// inputs must have the same vertex count (pad the smaller one with
// isolated vertices first).  With s = |V|, k = (ell + m) s, the output is
// the join of
//   L = ell copies of h2 padded to k (2m - ell) vertices, and
//   R = m copies of h1 padded to k ell vertices,
// plus k ell pendant pairs {a_i, b_i} with a_i attached to the i-th vertex
// of R.  Constants: k, ell, m, sizeL, sizeR.
ReductionArtifacts build_hat_h(const Graph& h1, const Graph& h2, const Ratio& r);

// Per input edge e = {u, v} a complete bipartite gadget on new vertices
// e.u1..e.u{d+1} / e.v1..e.v{d+1} (d = max degree of g), attached through
// {u, e.u1} and {v, e.v1}.  The input's own edges are not kept.  The output
// has n + 2m(d+1) vertices, m((d+1)^2 + 2) edges, and minimum cover size
// mvc(g) + m (d+1); maximum-degree greedy can attain it.
ReductionArtifacts g_mdg(const Graph& g);

// Threshold construction for maximum-degree greedy at ratio 1.  Builds
// h2 = g_mdg(g2), balances |V(h2)| = |V(g1)| + |E(g2)| (d2 + 1) by padding
// the smaller side with isolated vertices, then joins
//   L = h2 plus fresh vertices a_1..a_j   with   R = the padded g1,
// and pends b_i onto each a_i.  j = |V(R)| + max_deg(h2) + 1 keeps every
// R vertex's degree above every L degree however R is consumed.
// Constants: j, q = |V(h2 padded)| + j.
ReductionArtifacts build_hat_g(const Graph& g1, const Graph& g2);

struct PaddingSolution {
    long long n2 = 0;
    long long mu = 0;
};

// Solves m * n2 + K = (ell - m)(n1 + mu) over positive integers for the
// gadget sizes: mu runs over its residue class mod m (gcd(ell - m, m) = 1
// makes the class unique), n2 follows from the equation, and the returned
// solution is the one with smallest mu such that n2 >= n2_floor and the
// conservative log bound mu (ln mu - 2 ln(delta + 2) - 1) >= n1 + n2
// holds.  Requires r > 1.  Gives up after 10^9 candidates.
PaddingSolution solve_padding(const Ratio& r, long long n1, long long k_term,
                              long long n2_floor, long long delta);

// Threshold construction for maximum-degree greedy at ratio r > 1: the
// staged gadget sized by solve_padding with ell copies of g_mdg(g2) laid
// onto the u_tilde slots and m copies of g1 onto the z slots.
// Constants: p = m, q = n1 + mu, n1, n2, delta, mu.
ReductionArtifacts build_hat_g_r(const Graph& g1, const Graph& g2, const Ratio& r);

// Same, also handing back the underlying gadget spec and layout.
struct HatGrResult {
    ReductionArtifacts artifacts;
    GadgetSpec spec;
    GadgetLayout layout;
};
HatGrResult build_hat_g_r_full(const Graph& g1, const Graph& g2, const Ratio& r);

}  // namespace vclab
