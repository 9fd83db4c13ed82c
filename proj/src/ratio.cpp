#include "vclab/ratio.hpp"

#include <numeric>
#include <stdexcept>

#include "vclab/exact.hpp"
#include "vclab/heuristics.hpp"

namespace vclab {

namespace {
constexpr long long kComponentCap = 1000000000LL;  // keeps cross products in range
}

Ratio make_ratio(long long ell, long long m) {
    if (ell <= 0 || m <= 0)
        throw std::invalid_argument("ratio components must be positive");
    if (ell > kComponentCap || m > kComponentCap)
        throw std::invalid_argument("ratio components must be at most 10^9");
    long long g = std::gcd(ell, m);
    ell /= g;
    m /= g;
    if (ell < m) throw std::invalid_argument("ratio must be at least 1");
    return {ell, m};
}

Ratio parse_ratio(const std::string& text) {
    std::size_t slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t used = 0;
            long long ell = std::stoll(text, &used);
            if (used != text.size()) throw std::invalid_argument("trailing characters");
            return make_ratio(ell, 1);
        }
        std::size_t used = 0;
        long long ell = std::stoll(text.substr(0, slash), &used);
        if (used != slash) throw std::invalid_argument("trailing characters");
        std::string denom = text.substr(slash + 1);
        long long m = std::stoll(denom, &used);
        if (used != denom.size()) throw std::invalid_argument("trailing characters");
        return make_ratio(ell, m);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("cannot parse ratio '" + text + "', expected L/M");
    } catch (const std::out_of_range&) {
        throw std::invalid_argument("ratio component out of range in '" + text + "'");
    }
}

std::string ratio_to_string(const Ratio& r) {
    return std::to_string(r.ell) + "/" + std::to_string(r.m);
}

bool count_within_ratio(long long lhs, const Ratio& r, long long rhs) {
    if (lhs < 0 || rhs < 0) throw std::invalid_argument("counts must be non-negative");
    // Components are <= 10^9 and counts are graph-sized, so the products
    // stay well inside 64 bits.
    return r.m * lhs <= r.ell * rhs;
}

MembershipDetail member_sed_detail(const Graph& g, const Ratio& r, int budget) {
    MembershipDetail d;
    d.heuristic_min = min_ed(g, budget);
    d.mvc_size = mvc(g, budget);
    d.member = count_within_ratio(d.heuristic_min, r, d.mvc_size);
    return d;
}

MembershipDetail member_smdg_detail(const Graph& g, const Ratio& r, int budget) {
    MembershipDetail d;
    d.heuristic_min = min_mdg(g, budget);
    d.mvc_size = mvc(g, budget);
    d.member = count_within_ratio(d.heuristic_min, r, d.mvc_size);
    return d;
}

bool member_sed(const Graph& g, const Ratio& r, int budget) {
    return member_sed_detail(g, r, budget).member;
}

bool member_smdg(const Graph& g, const Ratio& r, int budget) {
    return member_smdg_detail(g, r, budget).member;
}

}  // namespace vclab
