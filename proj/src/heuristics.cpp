#include "vclab/heuristics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <random>
#include <unordered_map>

namespace vclab {

namespace {

std::vector<Edge> residual_edges(const Graph& g, const std::vector<char>& alive) {
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (alive[e.first] && alive[e.second]) out.push_back(e);
    return out;
}

void require_runnable(const Policy& policy) {
    if (policy.kind == Policy::Kind::Exhaustive)
        throw std::invalid_argument("single runs require the first or random policy");
}

}  // namespace

HeuristicTrace run_ed(const Graph& g, const Policy& policy) {
    require_runnable(policy);
    std::mt19937_64 rng(policy.seed);
    std::vector<char> alive(g.vertex_count(), 1);
    HeuristicTrace trace;
    trace.algorithm = HeuristicAlgorithm::EdgeDeletion;
    for (;;) {
        std::vector<Edge> avail = residual_edges(g, alive);
        if (avail.empty()) break;
        Edge pick = policy.kind == Policy::Kind::First
                        ? avail.front()
                        : avail[static_cast<std::size_t>(rng() % avail.size())];
        trace.edge_choices.push_back(pick);
        trace.cover.push_back(pick.first);
        trace.cover.push_back(pick.second);
        alive[pick.first] = alive[pick.second] = 0;
    }
    trace.cover = normalize_vertex_set(trace.cover);
    trace.size = static_cast<int>(trace.cover.size());
    return trace;
}

HeuristicTrace run_mdg(const Graph& g, const Policy& policy) {
    require_runnable(policy);
    std::mt19937_64 rng(policy.seed);
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<int> deg(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    HeuristicTrace trace;
    trace.algorithm = HeuristicAlgorithm::MaxDegreeGreedy;
    for (;;) {
        int dmax = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) dmax = std::max(dmax, deg[v]);
        if (dmax == 0) break;
        std::vector<Vertex> tied;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (alive[v] && deg[v] == dmax) tied.push_back(v);
        Vertex pick = policy.kind == Policy::Kind::First
                          ? tied.front()
                          : tied[static_cast<std::size_t>(rng() % tied.size())];
        trace.vertex_choices.push_back(pick);
        trace.cover.push_back(pick);
        alive[pick] = 0;
        for (Vertex u : g.neighbors(pick))
            if (alive[u]) --deg[u];
    }
    trace.cover = normalize_vertex_set(trace.cover);
    trace.size = static_cast<int>(trace.cover.size());
    return trace;
}

HeuristicTrace replay_ed(const Graph& g, const std::vector<Edge>& choices) {
    std::vector<char> alive(g.vertex_count(), 1);
    HeuristicTrace trace;
    trace.algorithm = HeuristicAlgorithm::EdgeDeletion;
    for (const Edge& e : choices) {
        Vertex u = std::min(e.first, e.second), v = std::max(e.first, e.second);
        if (u < 0 || v >= g.vertex_count() || u == v)
            throw std::invalid_argument("replayed edge choice is malformed");
        if (!alive[u] || !alive[v])
            throw std::invalid_argument("replayed edge choice has a deleted endpoint");
        if (!g.has_edge(u, v))
            throw std::invalid_argument("replayed edge choice is not an edge of the graph");
        trace.edge_choices.push_back({u, v});
        trace.cover.push_back(u);
        trace.cover.push_back(v);
        alive[u] = alive[v] = 0;
    }
    if (!residual_edges(g, alive).empty())
        throw std::invalid_argument("replayed edge-deletion run is incomplete");
    trace.cover = normalize_vertex_set(trace.cover);
    trace.size = static_cast<int>(trace.cover.size());
    return trace;
}

HeuristicTrace replay_mdg(const Graph& g, const std::vector<Vertex>& choices) {
    std::vector<char> alive(g.vertex_count(), 1);
    std::vector<int> deg(g.vertex_count(), 0);
    for (Vertex v = 0; v < g.vertex_count(); ++v) deg[v] = g.degree(v);
    HeuristicTrace trace;
    trace.algorithm = HeuristicAlgorithm::MaxDegreeGreedy;
    for (Vertex pick : choices) {
        if (pick < 0 || pick >= g.vertex_count())
            throw std::invalid_argument("replayed vertex choice out of range");
        if (!alive[pick]) throw std::invalid_argument("replayed vertex choice already deleted");
        int dmax = 0;
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (alive[v]) dmax = std::max(dmax, deg[v]);
        if (dmax == 0 || deg[pick] != dmax)
            throw std::invalid_argument("replayed vertex choice lacks maximum residual degree");
        trace.vertex_choices.push_back(pick);
        trace.cover.push_back(pick);
        alive[pick] = 0;
        for (Vertex u : g.neighbors(pick))
            if (alive[u]) --deg[u];
    }
    bool edges_left = false;
    for (const Edge& e : g.edges())
        if (alive[e.first] && alive[e.second]) edges_left = true;
    if (edges_left)
        throw std::invalid_argument("replayed maximum-degree-greedy run is incomplete");
    trace.cover = normalize_vertex_set(trace.cover);
    trace.size = static_cast<int>(trace.cover.size());
    return trace;
}

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<std::uint64_t> adjacency_masks64(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.first] |= std::uint64_t{1} << e.second;
        adj[e.second] |= std::uint64_t{1} << e.first;
    }
    return adj;
}

int greedy_matching64(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    int count = 0;
    std::uint64_t avail = alive;
    while (avail) {
        int u = std::countr_zero(avail);
        std::uint64_t nbrs = adj[u] & avail;
        avail &= avail - 1;
        if (nbrs) {
            int v = std::countr_zero(nbrs);
            avail &= ~(std::uint64_t{1} << v);
            ++count;
        }
    }
    return count;
}

// Bound-pruned depth-first minimum over edge-deletion runs.  Returns the
// exact minimum additional cover size when it is < limit, otherwise some
// valid lower bound >= limit.  Exact values (and only those) are memoized.
struct MinEdSolver {
    std::vector<std::uint64_t> adj;
    std::unordered_map<std::uint64_t, int> memo;

    int dfs(std::uint64_t alive, int limit) {
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;

        std::vector<Edge> avail;
        std::uint64_t scan = alive;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t nbrs = adj[u] & alive;
            std::uint64_t above = nbrs >> (u + 1) << (u + 1);
            while (above) {
                int v = std::countr_zero(above);
                above &= above - 1;
                avail.push_back({u, v});
            }
        }
        if (avail.empty()) {
            memo[alive] = 0;
            return 0;
        }
        // The remaining choices form a maximal matching of the residual
        // graph; any matching of t disjoint residual edges forces at least
        // ceil(t/2) more choices, i.e. t rounded up to even more vertices.
        int t = greedy_matching64(adj, alive);
        int lb = 2 * ((t + 1) / 2);
        if (lb >= limit) return lb;

        int best_local = kInf;
        for (const Edge& e : avail) {
            int bar = std::min(limit, best_local);
            if (2 >= bar) break;
            std::uint64_t child =
                alive & ~(std::uint64_t{1} << e.first) & ~(std::uint64_t{1} << e.second);
            int sub = dfs(child, bar - 2);
            best_local = std::min(best_local, 2 + sub);
        }
        if (best_local < limit) memo[alive] = best_local;
        return best_local;
    }
};

// Same scheme for maximum-degree greedy; branches only over the tied
// maximum-degree vertices, skipping repeats of one residual neighborhood
// (deleting either of two such vertices leaves isomorphic residual graphs).
struct MinMdgSolver {
    std::vector<std::uint64_t> adj;
    std::unordered_map<std::uint64_t, int> memo;

    int dfs(std::uint64_t alive, int limit) {
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;

        int dmax = 0;
        std::uint64_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            dmax = std::max(dmax, std::popcount(adj[v] & alive));
        }
        if (dmax == 0) {
            memo[alive] = 0;
            return 0;
        }
        int t = greedy_matching64(adj, alive);
        if (t >= limit) return t;

        std::vector<Vertex> tied;
        std::vector<std::uint64_t> tied_nbrs;
        scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t nbrs = adj[v] & alive;
            if (std::popcount(nbrs) != dmax) continue;
            if (std::find(tied_nbrs.begin(), tied_nbrs.end(), nbrs) != tied_nbrs.end())
                continue;
            tied.push_back(v);
            tied_nbrs.push_back(nbrs);
        }

        int best_local = kInf;
        for (Vertex v : tied) {
            int bar = std::min(limit, best_local);
            if (1 >= bar) break;
            int sub = dfs(alive & ~(std::uint64_t{1} << v), bar - 1);
            best_local = std::min(best_local, 1 + sub);
        }
        if (best_local < limit) memo[alive] = best_local;
        return best_local;
    }
};

std::uint64_t full_mask(int n) {
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

}  // namespace

int min_ed(const Graph& g, int budget) {
    int cap = std::min(budget, 64);
    if (g.vertex_count() > cap)
        throw InstanceTooLargeError("exhaustive edge-deletion search budget is " +
                                    std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    int ub = run_ed(g, Policy::first()).size;
    MinEdSolver solver;
    solver.adj = adjacency_masks64(g);
    int r = solver.dfs(full_mask(g.vertex_count()), ub);
    return std::min(r, ub);
}

int min_mdg(const Graph& g, int budget) {
    int cap = std::min(budget, 64);
    if (g.vertex_count() > cap)
        throw InstanceTooLargeError("exhaustive maximum-degree-greedy search budget is " +
                                    std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    int ub = run_mdg(g, Policy::first()).size;
    MinMdgSolver solver;
    solver.adj = adjacency_masks64(g);
    int r = solver.dfs(full_mask(g.vertex_count()), ub);
    return std::min(r, ub);
}

bool ed_can_achieve(const Graph& g, int target, int budget) {
    int cap = std::min(budget, 64);
    if (g.vertex_count() > cap)
        throw InstanceTooLargeError("exhaustive edge-deletion search budget is " +
                                    std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    if (target < 0) return false;
    if (run_ed(g, Policy::first()).size <= target) return true;
    MinEdSolver solver;
    solver.adj = adjacency_masks64(g);
    return solver.dfs(full_mask(g.vertex_count()), target + 1) <= target;
}

bool mdg_can_achieve(const Graph& g, int target, int budget) {
    int cap = std::min(budget, 64);
    if (g.vertex_count() > cap)
        throw InstanceTooLargeError("exhaustive maximum-degree-greedy search budget is " +
                                    std::to_string(cap) + " vertices, got " +
                                    std::to_string(g.vertex_count()));
    if (target < 0) return false;
    if (run_mdg(g, Policy::first()).size <= target) return true;
    MinMdgSolver solver;
    solver.adj = adjacency_masks64(g);
    return solver.dfs(full_mask(g.vertex_count()), target + 1) <= target;
}

namespace {

struct EdRangeSolver {
    std::vector<std::uint64_t> adj;
    std::unordered_map<std::uint64_t, SizeRange> memo;

    SizeRange dfs(std::uint64_t alive) {
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;
        SizeRange r{kInf, -1};
        bool any = false;
        std::uint64_t scan = alive;
        while (scan) {
            int u = std::countr_zero(scan);
            scan &= scan - 1;
            std::uint64_t nbrs = adj[u] & alive;
            std::uint64_t above = nbrs >> (u + 1) << (u + 1);
            while (above) {
                int v = std::countr_zero(above);
                above &= above - 1;
                any = true;
                SizeRange sub = dfs(alive & ~(std::uint64_t{1} << u) &
                                    ~(std::uint64_t{1} << v));
                r.min = std::min(r.min, 2 + sub.min);
                r.max = std::max(r.max, 2 + sub.max);
            }
        }
        if (!any) r = {0, 0};
        memo[alive] = r;
        return r;
    }
};

}  // namespace

SizeRange ed_size_range(const Graph& g) {
    if (g.vertex_count() > 20)
        throw InstanceTooLargeError("edge-deletion size sweep supports at most 20 vertices, got " +
                                    std::to_string(g.vertex_count()));
    EdRangeSolver solver;
    solver.adj = adjacency_masks64(g);
    return solver.dfs(full_mask(g.vertex_count()));
}

}  // namespace vclab
