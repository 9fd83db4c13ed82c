#include "vclab/exact.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <unordered_set>

namespace vclab {

namespace {

// The induced subgraph on vertices of degree >= 1, with the map back to
// original ids.  Isolated vertices never belong to any minimal cover.
struct Core {
    Graph graph;
    std::vector<Vertex> original_id;
};

Core strip_isolated(const Graph& g) {
    VertexSet isolated;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 0) isolated.push_back(v);
    DeletionResult del = delete_vertices(g, isolated);
    return {del.graph, del.original_id};
}

std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    std::vector<std::uint64_t> adj(g.vertex_count(), 0);
    for (const Edge& e : g.edges()) {
        adj[e.first] |= std::uint64_t{1} << e.second;
        adj[e.second] |= std::uint64_t{1} << e.first;
    }
    return adj;
}

// Greedy maximal matching size on the residual graph, scanning vertices in
// id order.  Any matching lower-bounds the vertex cover size.
int greedy_matching_bound(const std::vector<std::uint64_t>& adj, std::uint64_t alive) {
    int count = 0;
    std::uint64_t avail = alive;
    while (avail) {
        int u = std::countr_zero(avail);
        std::uint64_t nbrs = adj[u] & avail;
        avail &= avail - 1;  // drop u
        if (nbrs) {
            int v = std::countr_zero(nbrs);
            avail &= ~(std::uint64_t{1} << v);
            ++count;
        }
    }
    return count;
}

struct BranchBound {
    int n = 0;
    std::vector<std::uint64_t> adj;
    int best = 0;
    std::vector<Vertex> best_cover;
    std::vector<Vertex> cur;

    void run(const Graph& g) {
        n = g.vertex_count();
        adj = adjacency_masks(g);
        // Seed with the endpoints of a greedy maximal matching: a valid
        // cover within factor 2, good enough to start pruning.
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        std::uint64_t avail = all;
        best_cover.clear();
        while (avail) {
            int u = std::countr_zero(avail);
            std::uint64_t nbrs = adj[u] & avail;
            avail &= avail - 1;
            if (nbrs) {
                int v = std::countr_zero(nbrs);
                avail &= ~(std::uint64_t{1} << v);
                best_cover.push_back(u);
                best_cover.push_back(v);
            }
        }
        best = static_cast<int>(best_cover.size());
        dfs(all, 0);
        std::sort(best_cover.begin(), best_cover.end());
    }

    void dfs(std::uint64_t alive, int size) {
        std::size_t mark = cur.size();

        // Reductions: drop degree-0 vertices; for a degree-1 vertex, taking
        // its unique neighbor is always at least as good.
        bool changed = true;
        while (changed) {
            changed = false;
            std::uint64_t scan = alive;
            while (scan) {
                int v = std::countr_zero(scan);
                scan &= scan - 1;
                std::uint64_t nbrs = adj[v] & alive;
                int d = std::popcount(nbrs);
                if (d == 0) {
                    alive &= ~(std::uint64_t{1} << v);
                } else if (d == 1) {
                    int u = std::countr_zero(nbrs);
                    cur.push_back(u);
                    alive &= ~(std::uint64_t{1} << u);
                    alive &= ~(std::uint64_t{1} << v);
                    ++size;
                    changed = true;
                    break;
                }
            }
        }

        if (size + greedy_matching_bound(adj, alive) >= best) {
            cur.resize(mark);
            return;
        }

        // Pick a maximum-degree residual vertex (smallest id on ties).
        int pick = -1, pick_deg = 0;
        std::uint64_t scan = alive;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            int d = std::popcount(adj[v] & alive);
            if (d > pick_deg) {
                pick_deg = d;
                pick = v;
            }
        }
        if (pick < 0) {  // no residual edges: cur is a cover
            best = size;
            best_cover = cur;
            cur.resize(mark);
            return;
        }

        // Branch 1: pick joins the cover.
        cur.push_back(pick);
        dfs(alive & ~(std::uint64_t{1} << pick), size + 1);
        cur.pop_back();

        // Branch 2: pick stays out, so all residual neighbors join.
        std::uint64_t nbrs = adj[pick] & alive;
        std::uint64_t scan2 = nbrs;
        while (scan2) {
            int u = std::countr_zero(scan2);
            scan2 &= scan2 - 1;
            cur.push_back(u);
        }
        dfs(alive & ~nbrs & ~(std::uint64_t{1} << pick), size + pick_deg);
        cur.resize(mark);
    }
};

}  // namespace

MvcResult mvc_enumerate_with_witness(const Graph& g) {
    Core core = strip_isolated(g);
    int n = core.graph.vertex_count();
    if (n > 20)
        throw InstanceTooLargeError("subset enumeration supports at most 20 non-isolated vertices, got " +
                                    std::to_string(n));
    std::vector<std::uint64_t> adj = adjacency_masks(core.graph);
    std::uint64_t limit = std::uint64_t{1} << n;
    int best = n + 1;
    std::uint64_t best_mask = 0;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        int size = std::popcount(mask);
        if (size >= best) continue;
        bool cover = true;
        std::uint64_t outside = ~mask & (limit - 1);
        std::uint64_t scan = outside;
        while (scan) {
            int v = std::countr_zero(scan);
            scan &= scan - 1;
            if (adj[v] & outside) {
                cover = false;
                break;
            }
        }
        if (cover) {
            best = size;
            best_mask = mask;
        }
    }
    MvcResult res;
    res.size = best == n + 1 ? 0 : best;
    for (int v = 0; v < n; ++v)
        if (best_mask & (std::uint64_t{1} << v)) res.cover.push_back(core.original_id[v]);
    return res;
}

int mvc_enumerate(const Graph& g) { return mvc_enumerate_with_witness(g).size; }

MvcResult mvc_branch_and_bound_with_witness(const Graph& g, int vertex_budget) {
    Core core = strip_isolated(g);
    int n = core.graph.vertex_count();
    int cap = std::min(vertex_budget, 64);
    if (n > cap)
        throw InstanceTooLargeError("branch-and-bound budget is " + std::to_string(cap) +
                                    " non-isolated vertices, got " + std::to_string(n));
    BranchBound bb;
    bb.run(core.graph);
    MvcResult res;
    res.size = bb.best;
    for (Vertex v : bb.best_cover) res.cover.push_back(core.original_id[v]);
    res.cover = normalize_vertex_set(res.cover);
    return res;
}

int mvc_branch_and_bound(const Graph& g, int vertex_budget) {
    return mvc_branch_and_bound_with_witness(g, vertex_budget).size;
}

MvcResult mvc_with_witness(const Graph& g, int vertex_budget) {
    Core core = strip_isolated(g);
    int n = core.graph.vertex_count();
    if (n > std::min(vertex_budget, 64))
        throw InstanceTooLargeError("vertex budget is " +
                                    std::to_string(std::min(vertex_budget, 64)) +
                                    " non-isolated vertices, got " + std::to_string(n));
    if (n <= 14) return mvc_enumerate_with_witness(g);
    return mvc_branch_and_bound_with_witness(g, vertex_budget);
}

int mvc(const Graph& g, int vertex_budget) { return mvc_with_witness(g, vertex_budget).size; }

bool vc_decision(const Graph& g, int k, int vertex_budget) {
    if (k < 1) throw std::invalid_argument("vc_decision requires k >= 1");
    return mvc(g, vertex_budget) <= k;
}

bool vc_geq(const Graph& g, const Graph& h, int vertex_budget) {
    return mvc(g, vertex_budget) >= mvc(h, vertex_budget);
}

namespace {

struct Mask128 {
    std::uint64_t lo = 0, hi = 0;
    bool operator==(const Mask128&) const = default;
    void set(int i) {
        if (i < 64)
            lo |= std::uint64_t{1} << i;
        else
            hi |= std::uint64_t{1} << (i - 64);
    }
    bool test(int i) const {
        return i < 64 ? (lo >> i) & 1 : (hi >> (i - 64)) & 1;
    }
};

struct Mask128Hash {
    std::size_t operator()(const Mask128& m) const {
        return std::hash<std::uint64_t>{}(m.lo * 0x9e3779b97f4a7c15ULL ^ m.hi);
    }
};

struct MmmSolver {
    int m = 0;
    std::vector<Edge> edge_list;           // canonical order
    std::vector<std::vector<int>> at;      // vertex -> incident edge indices
    std::vector<int> matched;              // vertex -> 0/1
    std::vector<int> chosen;
    int best = 0;
    std::vector<int> best_chosen;
    std::unordered_set<Mask128, Mask128Hash> visited;

    void seed_greedy(const std::vector<int>& order) {
        std::vector<char> used(matched.size(), 0);
        std::vector<int> picked;
        for (int idx : order) {
            auto [u, v] = edge_list[idx];
            if (!used[u] && !used[v]) {
                used[u] = used[v] = 1;
                picked.push_back(idx);
            }
        }
        if (static_cast<int>(picked.size()) < best) {
            best = static_cast<int>(picked.size());
            best_chosen = picked;
        }
    }

    void run(const Graph& g) {
        edge_list = g.edges();
        m = static_cast<int>(edge_list.size());
        at.assign(g.vertex_count(), {});
        for (int i = 0; i < m; ++i) {
            at[edge_list[i].first].push_back(i);
            at[edge_list[i].second].push_back(i);
        }
        matched.assign(g.vertex_count(), 0);
        best = m + 1;

        // Greedy maximal matchings from several edge orders seed the bound.
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        seed_greedy(order);
        std::reverse(order.begin(), order.end());
        seed_greedy(order);
        auto deg_sum = [&](int i) {
            return static_cast<int>(at[edge_list[i].first].size() + at[edge_list[i].second].size());
        };
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg_sum(a) > deg_sum(b); });
        seed_greedy(order);
        std::reverse(order.begin(), order.end());
        seed_greedy(order);

        dfs(Mask128{}, 0);
        std::sort(best_chosen.begin(), best_chosen.end());
    }

    void dfs(Mask128 mask, int size) {
        // Scan the free-free edges (both endpoints unmatched): compute a
        // greedy matching among them for the lower bound and locate the
        // pivot edge with the fewest covering candidates.
        std::vector<char> tmp_used(matched.size(), 0);
        int t = 0;
        bool any = false;
        for (int i = 0; i < m; ++i) {
            auto [u, v] = edge_list[i];
            if (matched[u] || matched[v]) continue;
            any = true;
            if (!tmp_used[u] && !tmp_used[v]) {
                tmp_used[u] = tmp_used[v] = 1;
                ++t;
            }
        }
        if (!any) {
            if (size < best) {
                best = size;
                best_chosen = chosen;
            }
            return;
        }
        // Every added edge dominates at most two of the t disjoint free-free
        // edges, so at least ceil(t/2) additions remain.
        if (size + (t + 1) / 2 >= best) return;

        auto candidates_of = [&](int i) {
            std::vector<int> cand;
            auto [u, v] = edge_list[i];
            for (int j : at[u]) {
                auto [x, y] = edge_list[j];
                if (!matched[x] && !matched[y]) cand.push_back(j);
            }
            for (int j : at[v]) {
                if (j == i) continue;
                auto [x, y] = edge_list[j];
                if (!matched[x] && !matched[y]) cand.push_back(j);
            }
            std::sort(cand.begin(), cand.end());
            cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
            return cand;
        };

        int pivot = -1;
        std::vector<int> pivot_cand;
        for (int i = 0; i < m; ++i) {
            auto [u, v] = edge_list[i];
            if (matched[u] || matched[v]) continue;
            std::vector<int> cand = candidates_of(i);
            if (pivot < 0 || cand.size() < pivot_cand.size()) {
                pivot = i;
                pivot_cand = std::move(cand);
                if (pivot_cand.size() <= 2) break;
            }
        }

        // Free-free degree of each endpoint orders the branches: edges that
        // dominate more first.
        std::vector<int> ff_deg(matched.size(), 0);
        for (int i = 0; i < m; ++i) {
            auto [u, v] = edge_list[i];
            if (!matched[u] && !matched[v]) {
                ++ff_deg[u];
                ++ff_deg[v];
            }
        }
        std::stable_sort(pivot_cand.begin(), pivot_cand.end(), [&](int a, int b) {
            return ff_deg[edge_list[a].first] + ff_deg[edge_list[a].second] >
                   ff_deg[edge_list[b].first] + ff_deg[edge_list[b].second];
        });

        for (int c : pivot_cand) {
            Mask128 next = mask;
            next.set(c);
            if (!visited.insert(next).second) continue;
            auto [u, v] = edge_list[c];
            matched[u] = matched[v] = 1;
            chosen.push_back(c);
            dfs(next, size + 1);
            chosen.pop_back();
            matched[u] = matched[v] = 0;
        }
    }
};

}  // namespace

MatchingResult min_maximal_matching_with_witness(const Graph& g, int edge_budget) {
    int cap = std::min(edge_budget, 128);
    if (g.edge_count() > cap)
        throw InstanceTooLargeError("minimum maximal matching budget is " + std::to_string(cap) +
                                    " edges, got " + std::to_string(g.edge_count()));
    MatchingResult res;
    if (g.edge_count() == 0) return res;
    MmmSolver solver;
    solver.run(g);
    res.size = solver.best;
    for (int idx : solver.best_chosen) res.edges.push_back(solver.edge_list[idx]);
    return res;
}

int min_maximal_matching(const Graph& g, int edge_budget) {
    return min_maximal_matching_with_witness(g, edge_budget).size;
}

int max_bipartite_matching(const Graph& g, const VertexSet& side_a) {
    VertexSet a = normalize_vertex_set(side_a);
    check_vertex_set(g, a);
    std::vector<char> in_a(g.vertex_count(), 0);
    for (Vertex v : a) in_a[v] = 1;
    for (const Edge& e : g.edges())
        if (in_a[e.first] == in_a[e.second])
            throw std::invalid_argument("graph is not bipartite with the given side: edge (" +
                                        std::to_string(e.first + 1) + ", " +
                                        std::to_string(e.second + 1) + ") does not cross");

    std::vector<int> match(g.vertex_count(), -1);  // for B-side vertices: matched A partner
    std::vector<char> seen(g.vertex_count(), 0);

    auto augment = [&](auto&& self, Vertex u) -> bool {
        for (Vertex v : g.neighbors(u)) {
            if (seen[v]) continue;
            seen[v] = 1;
            if (match[v] < 0 || self(self, match[v])) {
                match[v] = u;
                return true;
            }
        }
        return false;
    };

    int size = 0;
    for (Vertex u : a) {
        std::fill(seen.begin(), seen.end(), 0);
        if (augment(augment, u)) ++size;
    }
    return size;
}

bool is_matching(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<char> used(g.vertex_count(), 0);
    for (const Edge& e : edges) {
        if (e.first < 0 || e.first >= g.vertex_count() || e.second < 0 ||
            e.second >= g.vertex_count())
            return false;
        if (!g.has_edge(e.first, e.second)) return false;
        if (used[e.first] || used[e.second]) return false;
        used[e.first] = used[e.second] = 1;
    }
    return true;
}

}  // namespace vclab
