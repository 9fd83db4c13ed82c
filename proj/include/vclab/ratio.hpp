#pragma once

#include <cstdint>
#include <string>

#include "vclab/graph.hpp"

namespace vclab {

// Approximation-factor threshold r = ell / m >= 1, stored in lowest terms.
// Note gcd(ell, m) = 1 implies gcd(ell - m, m) = 1, which the threshold
// constructions rely on.
struct Ratio {
    long long ell = 1;
    long long m = 1;

    bool operator==(const Ratio&) const = default;
};

// Reduces to lowest terms.  Rejects non-positive components, components
// above 10^9, and ratios below 1.
Ratio make_ratio(long long ell, long long m);

// Parses "L/M" (or a bare integer "L", meaning L/1).
Ratio parse_ratio(const std::string& text);

std::string ratio_to_string(const Ratio& r);

// True iff lhs <= r * rhs, decided by integer cross-multiplication
// (m * lhs <= ell * rhs); no floating point involved.
bool count_within_ratio(long long lhs, const Ratio& r, long long rhs);

// True iff the smallest edge-deletion output is within factor r of the
// minimum vertex cover size, i.e. min_ed(g) <= r * mvc(g).
bool member_sed(const Graph& g, const Ratio& r, int budget = 64);

// Same with maximum-degree greedy: min_mdg(g) <= r * mvc(g).
bool member_smdg(const Graph& g, const Ratio& r, int budget = 64);

struct MembershipDetail {
    bool member = false;
    long long heuristic_min = 0;  // min_ed or min_mdg
    long long mvc_size = 0;
};

MembershipDetail member_sed_detail(const Graph& g, const Ratio& r, int budget = 64);
MembershipDetail member_smdg_detail(const Graph& g, const Ratio& r, int budget = 64);

}  // namespace vclab
