#include "vclab/gadgets.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace vclab {

namespace {

void check_arith_fields(long long n1, long long n2, long long delta) {
    if (n1 < 0 || n2 < 0) throw std::invalid_argument("group sizes must be non-negative");
    if (delta < 1) throw std::invalid_argument("delta must be positive");
}

// Outward-rounded natural logs: two ulps of slack in the direction that
// makes the feasibility test stricter.
double log_down(double x) {
    double r = std::log(x);
    r = std::nextafter(r, -HUGE_VAL);
    return std::nextafter(r, -HUGE_VAL);
}

double log_up(double x) {
    double r = std::log(x);
    r = std::nextafter(r, HUGE_VAL);
    return std::nextafter(r, HUGE_VAL);
}

double round_down2(double x) {
    return std::nextafter(std::nextafter(x, -HUGE_VAL), -HUGE_VAL);
}

}  // namespace

bool gadget_feasible(const GadgetSpec& spec) {
    if (spec.n1 < 0 || spec.n2 < 0) throw std::invalid_argument("group sizes must be non-negative");
    if (spec.mu < 0) throw std::invalid_argument("mu must be non-negative");
    if (spec.delta < 1) return false;  // the stage ladder needs a positive gap
    long long supply = 0;
    long long need = spec.n1 + spec.mu + spec.n2;
    for (long long s = spec.delta + 3; s <= spec.mu - 1; ++s) {
        supply += spec.mu / s;
        if (supply >= need) return true;
    }
    return supply >= need;
}

long long min_mu(long long n1, long long n2, long long delta) {
    check_arith_fields(n1, n2, delta);
    const double penalty = 2.0 * log_up(static_cast<double>(delta + 2));
    const double target = static_cast<double>(n1 + n2);
    constexpr long long kScanCap = 200000000;
    for (long long mu = 2; mu <= kScanCap; ++mu) {
        double term = round_down2(log_down(static_cast<double>(mu)) - penalty - 1.0);
        double lhs = round_down2(static_cast<double>(mu) * term);
        if (lhs >= target) {
            if (!gadget_feasible({n1, n2, delta, mu}))
                throw std::logic_error("log bound did not imply the block-supply inequality");
            return mu;
        }
    }
    throw std::runtime_error("min_mu scan exceeded its cap");
}

GadgetResult lemma4_graph(const GadgetSpec& spec) {
    if (spec.n1 <= 0 || spec.n2 <= 0 || spec.delta <= 0 || spec.mu <= 0)
        throw std::invalid_argument("gadget spec fields must be positive");
    if (!gadget_feasible(spec))
        throw std::invalid_argument("gadget spec is infeasible: not enough stage blocks");
    long long total_ll = 2 * (spec.n1 + spec.mu) + spec.n2;
    if (total_ll > 2000000)
        throw InstanceTooLargeError("gadget would have " + std::to_string(total_ll) + " vertices");

    const int n1 = static_cast<int>(spec.n1);
    const int n2 = static_cast<int>(spec.n2);
    const int mu = static_cast<int>(spec.mu);
    const int delta = static_cast<int>(spec.delta);

    GadgetLayout lay;
    int next = 0;
    for (int i = 0; i < n1; ++i) lay.u.push_back(next++);
    for (int i = 0; i < mu; ++i) lay.w.push_back(next++);
    for (int i = 0; i < n2; ++i) lay.z.push_back(next++);
    for (int i = 0; i < n1; ++i) lay.u_tilde.push_back(next++);
    for (int i = 0; i < mu; ++i) lay.w_tilde.push_back(next++);
    const int n = next;

    lay.alpha = lay.u;
    lay.alpha.insert(lay.alpha.end(), lay.w.begin(), lay.w.end());
    lay.alpha.insert(lay.alpha.end(), lay.z.begin(), lay.z.end());
    const int total = static_cast<int>(lay.alpha.size());

    std::vector<Edge> edges;
    for (int i = 0; i < n1; ++i) edges.push_back({lay.u[i], lay.u_tilde[i]});
    for (int i = 0; i < mu; ++i) edges.push_back({lay.w[i], lay.w_tilde[i]});

    // The matching partner on the w_tilde side, or -1: the only vertex a
    // block may not contain when serving this target.
    auto partner_of = [&](Vertex target) -> Vertex {
        if (target >= lay.w.front() && target <= lay.w.back())
            return lay.w_tilde[target - lay.w.front()];
        return -1;
    };

    std::vector<Vertex> queue = lay.w_tilde;
    int served = 0;
    int stage = delta + 3;
    while (served < total) {
        const int blocks_avail = mu / stage;
        if (blocks_avail == 0)
            throw std::logic_error("stage block supply exhausted before every target was served");
        const int dealt = std::min(blocks_avail, total - served);

        // Conflict pre-pass: block b must not contain the matching partner of
        // its target.  A conflicting partner moves to the first position that
        // is outside its own block and not the partner of the block it lands
        // in; positions past the dealt blocks carry no constraint this stage.
        // Targets have distinct partners and every block has at least
        // delta + 3 >= 4 slots, so with two or more blocks (guaranteed below
        // stage mu, which feasibility never reaches) a slot always exists.
        for (int b = 0; b < dealt; ++b) {
            Vertex partner = partner_of(lay.alpha[served + b]);
            if (partner < 0) continue;
            const int lo = b * stage;
            int conflict = -1;
            for (int i = lo; i < lo + stage; ++i)
                if (queue[i] == partner) conflict = i;
            if (conflict < 0) continue;
            int swap_pos = -1;
            if (dealt * stage < mu) {
                swap_pos = dealt * stage;
            } else {
                for (int q = 0; q < dealt * stage; ++q) {
                    if (q >= lo && q < lo + stage) continue;
                    if (queue[q] == partner_of(lay.alpha[served + q / stage])) continue;
                    swap_pos = q;
                    break;
                }
            }
            if (swap_pos < 0) throw std::logic_error("no conflict-free swap vertex available");
            std::swap(queue[conflict], queue[swap_pos]);
        }

        for (int b = 0; b < dealt; ++b) {
            const int lo = b * stage;
            Vertex target = lay.alpha[served];
            StageBlock sb;
            sb.stage = stage;
            sb.alpha_index = served;
            sb.block.assign(queue.begin() + lo, queue.begin() + lo + stage);
            std::sort(sb.block.begin(), sb.block.end());
            for (Vertex wt : sb.block) edges.push_back({std::min(target, wt), std::max(target, wt)});
            lay.stage_blocks.push_back(std::move(sb));
            ++served;
        }
        std::rotate(queue.begin(), queue.begin() + (dealt * stage) % mu, queue.end());
        ++stage;
    }

    return {Graph(n, edges), lay};
}

namespace {

void check_layout(const Graph& g, const GadgetSpec& spec, const GadgetLayout& lay) {
    auto bad = [](const std::string& what) {
        throw std::invalid_argument("gadget layout mismatch: " + what);
    };
    if (static_cast<long long>(lay.u.size()) != spec.n1 ||
        static_cast<long long>(lay.w.size()) != spec.mu ||
        static_cast<long long>(lay.z.size()) != spec.n2 ||
        static_cast<long long>(lay.u_tilde.size()) != spec.n1 ||
        static_cast<long long>(lay.w_tilde.size()) != spec.mu)
        bad("group sizes disagree with the spec");
    long long n = 2 * (spec.n1 + spec.mu) + spec.n2;
    if (g.vertex_count() != n) bad("vertex count disagrees with the spec");
    std::vector<char> seen(g.vertex_count(), 0);
    for (const auto* group : {&lay.u, &lay.w, &lay.z, &lay.u_tilde, &lay.w_tilde})
        for (Vertex v : *group) {
            if (v < 0 || v >= g.vertex_count() || seen[v]) bad("groups do not partition the ids");
            seen[v] = 1;
        }
    std::vector<Vertex> expect_alpha = lay.u;
    expect_alpha.insert(expect_alpha.end(), lay.w.begin(), lay.w.end());
    expect_alpha.insert(expect_alpha.end(), lay.z.begin(), lay.z.end());
    if (lay.alpha != expect_alpha) bad("alpha order is not u ++ w ++ z");
    if (lay.stage_blocks.size() != lay.alpha.size()) bad("one stage block per target expected");
    for (std::size_t i = 0; i < lay.stage_blocks.size(); ++i) {
        const StageBlock& sb = lay.stage_blocks[i];
        if (sb.alpha_index != static_cast<int>(i)) bad("stage blocks not in serving order");
        if (sb.stage < spec.delta + 3) bad("stage below the starting stage");
        if (i > 0 && sb.stage < lay.stage_blocks[i - 1].stage) bad("stages must be non-decreasing");
        if (static_cast<long long>(sb.block.size()) != sb.stage) bad("block size differs from stage");
        std::set<Vertex> wt(lay.w_tilde.begin(), lay.w_tilde.end());
        for (Vertex v : sb.block)
            if (!wt.count(v)) bad("block contains a vertex outside the w_tilde group");
    }
    for (std::size_t i = 0; i < lay.u.size(); ++i)
        if (!g.has_edge(lay.u[i], lay.u_tilde[i])) bad("missing u matching edge");
    for (std::size_t i = 0; i < lay.w.size(); ++i)
        if (!g.has_edge(lay.w[i], lay.w_tilde[i])) bad("missing w matching edge");
}

}  // namespace

bool verify_property4(const Graph& g, const GadgetSpec& spec, const GadgetLayout& lay,
                      int samples, std::uint64_t seed) {
    if (samples < 0) throw std::invalid_argument("sample count must be non-negative");
    check_layout(g, spec, lay);

    const int total = static_cast<int>(lay.alpha.size());
    std::vector<char> in_v(g.vertex_count(), 0), in_vt(g.vertex_count(), 0);
    for (Vertex v : lay.alpha) in_v[v] = 1;
    for (Vertex v : lay.u_tilde) in_vt[v] = 1;
    for (Vertex v : lay.w_tilde) in_vt[v] = 1;

    // alive covers the V side only; the Vt side always survives.
    auto holds = [&](const std::vector<char>& alive_v) {
        int max_v = -1, max_vt = -1;
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            if (in_v[x] && !alive_v[x]) continue;
            int d = 0;
            for (Vertex y : g.neighbors(x))
                if (!in_v[y] || alive_v[y]) ++d;
            if (in_v[x])
                max_v = std::max(max_v, d);
            else
                max_vt = std::max(max_vt, d);
        }
        if (max_v < 0) return true;  // empty V side is out of scope
        return max_v > max_vt + static_cast<int>(spec.delta);
    };

    // Analytic sweep: keep only the targets served up to stage s.  Each wt
    // vertex then has at most one block edge per completed stage plus its
    // matching edge, and the property must hold on the truncated graph.
    int last_stage = lay.stage_blocks.back().stage;
    for (int s = static_cast<int>(spec.delta) + 3; s <= last_stage; ++s) {
        std::vector<char> alive(g.vertex_count(), 0);
        for (const StageBlock& sb : lay.stage_blocks)
            if (sb.stage <= s) alive[lay.alpha[sb.alpha_index]] = 1;
        long long bound = 1 + (s - (spec.delta + 3) + 1);
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            if (!in_vt[x]) continue;
            int cross = 0;
            for (Vertex y : g.neighbors(x))
                if (in_v[y] && alive[y]) ++cross;
            if (cross > bound) return false;
        }
        if (!holds(alive)) return false;
    }

    std::mt19937_64 rng(seed);
    for (int it = 0; it < samples; ++it) {
        std::vector<char> alive(g.vertex_count(), 0);
        int kept = 0;
        for (int i = 0; i < total; ++i) {
            if (rng() % 2 == 0) {
                alive[lay.alpha[i]] = 1;
                ++kept;
            }
        }
        if (kept == 0) alive[lay.alpha[0]] = 1;
        if (!holds(alive)) return false;
    }
    return true;
}

}  // namespace vclab
