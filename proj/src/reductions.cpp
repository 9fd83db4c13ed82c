#include "vclab/reductions.hpp"

#include <boost/integer/extended_euclidean.hpp>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace vclab {

namespace {

constexpr long long kOutputCap = 2000000;  // vertices

void check_output_size(long long n) {
    if (n > kOutputCap)
        throw InstanceTooLargeError("construction output would have " + std::to_string(n) +
                                    " vertices");
}

}  // namespace

ReductionArtifacts g_ed(const Graph& g) {
    const int n = g.vertex_count();
    check_output_size(4LL * n);
    ReductionArtifacts art;
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) {
        int base = 4 * v;
        edges.push_back({base + 0, base + 1});  // v.1 - v.2
        edges.push_back({base + 2, base + 3});  // v.3 - v.4
        edges.push_back({base + 0, base + 2});  // v.1 - v.3
    }
    for (const Edge& e : g.edges())
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                edges.push_back({4 * e.first + i, 4 * e.second + j});
    art.output = Graph(4 * n, edges);
    art.roles.resize(4 * n);
    for (Vertex v = 0; v < n; ++v)
        for (int i = 0; i < 4; ++i)
            art.roles[4 * v + i] = "v" + std::to_string(v) + "." + std::to_string(i + 1);
    return art;
}

ReductionArtifacts build_hat_h(const Graph& h1, const Graph& h2, const Ratio& r) {
    if (h1.vertex_count() != h2.vertex_count())
        throw std::invalid_argument("inputs must have the same vertex count; pad the smaller one");
    if (r.ell >= 2 * r.m)
        throw std::invalid_argument("ratio must lie in [1, 2)");
    const long long ell = r.ell, m = r.m;
    const long long s = h1.vertex_count();
    const long long k = (ell + m) * s;
    const long long size_l = k * (2 * m - ell);
    const long long size_r = k * ell;
    check_output_size(size_l + size_r + 2 * size_r);
    if (size_l < ell * s) throw std::logic_error("left side cannot hold its copies");

    ReductionArtifacts art;
    std::vector<Edge> edges;
    std::vector<std::string> roles;
    roles.reserve(size_l + 3 * size_r);

    // L block: ell copies of h2, then padding.
    for (long long t = 0; t < ell; ++t) {
        long long base = t * s;
        for (const Edge& e : h2.edges())
            edges.push_back({static_cast<Vertex>(base + e.first),
                             static_cast<Vertex>(base + e.second)});
        for (long long v = 0; v < s; ++v)
            roles.push_back("L.c" + std::to_string(t) + "." + std::to_string(v));
    }
    for (long long i = 0; i < size_l - ell * s; ++i) roles.push_back("L.pad" + std::to_string(i));

    // R block: m copies of h1, then padding.
    const long long r_base = size_l;
    for (long long t = 0; t < m; ++t) {
        long long base = r_base + t * s;
        for (const Edge& e : h1.edges())
            edges.push_back({static_cast<Vertex>(base + e.first),
                             static_cast<Vertex>(base + e.second)});
        for (long long v = 0; v < s; ++v)
            roles.push_back("R.c" + std::to_string(t) + "." + std::to_string(v));
    }
    for (long long i = 0; i < size_r - m * s; ++i) roles.push_back("R.pad" + std::to_string(i));

    // Full join between the two blocks.
    for (long long x = 0; x < size_l; ++x)
        for (long long y = 0; y < size_r; ++y)
            edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(r_base + y)});

    // Pendant pairs: a_i is attached to the i-th vertex of R and to b_i.
    const long long a_base = size_l + size_r;
    const long long b_base = a_base + size_r;
    for (long long i = 0; i < size_r; ++i) {
        edges.push_back({static_cast<Vertex>(r_base + i), static_cast<Vertex>(a_base + i)});
        edges.push_back({static_cast<Vertex>(a_base + i), static_cast<Vertex>(b_base + i)});
        roles.push_back("a" + std::to_string(i));
    }
    for (long long i = 0; i < size_r; ++i) roles.push_back("b" + std::to_string(i));

    art.output = Graph(static_cast<int>(b_base + size_r), edges);
    art.roles = std::move(roles);
    art.constants = {{"k", k},       {"ell", ell},      {"m", m},
                     {"sizeL", size_l}, {"sizeR", size_r}};
    return art;
}

ReductionArtifacts g_mdg(const Graph& g) {
    const int n = g.vertex_count();
    const int width = max_deg(g) + 1;
    const std::vector<Edge> gedges = g.edges();
    const long long extra = 2LL * width * static_cast<long long>(gedges.size());
    check_output_size(n + extra);

    ReductionArtifacts art;
    std::vector<Edge> edges;
    art.roles.resize(n + extra);
    for (Vertex v = 0; v < n; ++v) art.roles[v] = "g" + std::to_string(v);

    for (std::size_t t = 0; t < gedges.size(); ++t) {
        const auto [u, v] = gedges[t];
        const int ubase = n + static_cast<int>(t) * 2 * width;
        const int vbase = ubase + width;
        for (int i = 0; i < width; ++i)
            for (int j = 0; j < width; ++j)
                edges.push_back({ubase + i, vbase + j});
        edges.push_back({u, ubase});  // u - e.u1
        edges.push_back({v, vbase});  // v - e.v1
        for (int i = 0; i < width; ++i) {
            art.roles[ubase + i] = "e" + std::to_string(t) + ".u" + std::to_string(i + 1);
            art.roles[vbase + i] = "e" + std::to_string(t) + ".v" + std::to_string(i + 1);
        }
    }
    art.output = Graph(n + static_cast<int>(extra), edges);
    art.constants = {{"delta", max_deg(g)}};
    return art;
}

ReductionArtifacts build_hat_g(const Graph& g1_in, const Graph& g2) {
    ReductionArtifacts h2_art = g_mdg(g2);
    Graph h2 = h2_art.output;
    const long long d2 = max_deg(g2);
    const long long balance = static_cast<long long>(g2.edge_count()) * (d2 + 1);

    // Balance |V(h2)| = |V(g1)| + |E(g2)| (d2 + 1) by padding one side.
    Graph g1 = g1_in;
    long long h2_pad = 0;
    long long target = g1.vertex_count() + balance;
    if (h2.vertex_count() < target) {
        h2_pad = target - h2.vertex_count();
        h2 = add_isolated(h2, static_cast<int>(h2_pad));
    } else if (h2.vertex_count() > target) {
        g1 = add_isolated(g1, static_cast<int>(h2.vertex_count() - balance - g1.vertex_count()));
    }

    const long long size_h2 = h2.vertex_count();
    const long long size_r = g1.vertex_count();
    const long long dh2 = max_deg(h2);
    const long long j = size_r + dh2 + 1;
    const long long q = size_h2 + j;
    check_output_size(size_h2 + j + size_r + j);
    // Every R vertex keeps degree >= |L| = j + size_h2 through the join no
    // matter what is deleted from R, while L degrees stay below that.
    if (!(j + size_h2 > dh2 + size_r)) throw std::logic_error("degree forcing violated");

    std::vector<Edge> edges;
    std::vector<std::string> roles;

    // L block: h2 vertices (with padding), then a_1..a_j.
    for (const Edge& e : h2.edges()) edges.push_back(e);
    for (long long v = 0; v < size_h2; ++v)
        roles.push_back(v < size_h2 - h2_pad ? "L.h2." + std::to_string(v)
                                             : "L.h2pad" + std::to_string(v - (size_h2 - h2_pad)));
    const long long a_base = size_h2;
    for (long long i = 0; i < j; ++i) roles.push_back("L.a" + std::to_string(i));

    // R block: the padded g1.
    const long long r_base = size_h2 + j;
    for (const Edge& e : g1.edges())
        edges.push_back({static_cast<Vertex>(r_base + e.first),
                         static_cast<Vertex>(r_base + e.second)});
    for (long long v = 0; v < size_r; ++v)
        roles.push_back(v < g1_in.vertex_count() ? "R.g1." + std::to_string(v)
                                                 : "R.pad" + std::to_string(v - g1_in.vertex_count()));

    // Join all of L (h2 block and a block) with all of R.
    for (long long x = 0; x < size_h2 + j; ++x)
        for (long long y = 0; y < size_r; ++y)
            edges.push_back({static_cast<Vertex>(x), static_cast<Vertex>(r_base + y)});

    // Pendants b_i under each a_i.
    const long long b_base = r_base + size_r;
    for (long long i = 0; i < j; ++i) {
        edges.push_back({static_cast<Vertex>(a_base + i), static_cast<Vertex>(b_base + i)});
        roles.push_back("b" + std::to_string(i));
    }

    ReductionArtifacts art;
    art.output = Graph(static_cast<int>(b_base + j), edges);
    art.roles = std::move(roles);
    art.constants = {{"j", j}, {"q", q}};
    return art;
}

PaddingSolution solve_padding(const Ratio& r, long long n1, long long k_term,
                              long long n2_floor, long long delta) {
    if (r.ell <= r.m) throw std::invalid_argument("padding equation requires ratio > 1");
    if (n1 < 1 || n2_floor < 1 || delta < 1 || k_term < 0)
        throw std::invalid_argument("padding parameters out of range");
    const long long m = r.m;
    const long long d = r.ell - r.m;  // gcd(d, m) = 1 since the ratio is reduced

    // Smallest positive mu in the residue class of the linear congruence
    // d * mu == k_term - d * n1 (mod m).
    long long rhs = ((k_term - d % m * (n1 % m)) % m + m) % m;
    long long inv = 1;
    if (m > 1) {
        auto eg = boost::integer::extended_euclidean(d % m == 0 ? m : d % m, m);
        inv = ((eg.x % m) + m) % m;
    }
    long long mu = m > 1 ? (rhs * inv) % m : 1;
    if (mu == 0) mu = m;

    constexpr long long kBudget = 1000000000;
    const double penalty = 2.0 * std::log(static_cast<double>(delta + 2));
    for (long long tries = 0; tries < kBudget; ++tries, mu += m) {
        long long num = d * (n1 + mu) - k_term;
        if (num <= 0 || num % m != 0) continue;
        long long n2 = num / m;
        if (n2 < n2_floor) continue;
        // Conservative log bound, two ulps outward.
        double term = std::log(static_cast<double>(mu)) - penalty - 1.0;
        term = std::nextafter(std::nextafter(term, -HUGE_VAL), -HUGE_VAL);
        double lhs = static_cast<double>(mu) * term;
        lhs = std::nextafter(std::nextafter(lhs, -HUGE_VAL), -HUGE_VAL);
        if (lhs >= static_cast<double>(n1 + n2)) return {n2, mu};
    }
    throw std::runtime_error("padding solver exhausted its candidate budget");
}

HatGrResult build_hat_g_r_full(const Graph& g1, const Graph& g2, const Ratio& r) {
    if (r.ell <= r.m)
        throw std::invalid_argument("this construction requires ratio > 1");
    ReductionArtifacts h2_art = g_mdg(g2);
    const Graph& h2 = h2_art.output;
    if (h2.vertex_count() == 0)
        throw std::invalid_argument("second input must have at least one vertex");

    const long long ell = r.ell, m = r.m;
    const long long n1 = ell * h2.vertex_count();
    const long long delta = max_deg(h2) + 1;
    const long long k_term =
        m * ell * static_cast<long long>(g2.edge_count()) * (max_deg(g2) + 1);
    const long long n2_floor = std::max<long long>(1, m * g1.vertex_count());

    PaddingSolution pad = solve_padding(r, n1, k_term, n2_floor, delta);
    GadgetSpec spec{n1, pad.n2, delta, pad.mu};
    GadgetResult gadget = lemma4_graph(spec);

    std::vector<Edge> edges = gadget.graph.edges();
    // ell copies of h2 on the u_tilde slots.
    for (long long t = 0; t < ell; ++t) {
        long long base = t * h2.vertex_count();
        for (const Edge& e : h2.edges())
            edges.push_back({gadget.layout.u_tilde[base + e.first],
                             gadget.layout.u_tilde[base + e.second]});
    }
    // m copies of g1 on the z slots; surplus z vertices stay bare.
    for (long long t = 0; t < m; ++t) {
        long long base = t * g1.vertex_count();
        for (const Edge& e : g1.edges())
            edges.push_back(
                {gadget.layout.z[base + e.first], gadget.layout.z[base + e.second]});
    }

    HatGrResult res;
    res.spec = spec;
    res.layout = gadget.layout;
    res.artifacts.output = Graph(gadget.graph.vertex_count(), edges);
    res.artifacts.constants = {{"p", m},     {"q", n1 + pad.mu}, {"n1", n1},
                               {"n2", pad.n2}, {"delta", delta},   {"mu", pad.mu}};

    std::vector<std::string>& roles = res.artifacts.roles;
    roles.resize(res.artifacts.output.vertex_count());
    for (std::size_t i = 0; i < gadget.layout.u.size(); ++i)
        roles[gadget.layout.u[i]] = "u" + std::to_string(i);
    for (std::size_t i = 0; i < gadget.layout.w.size(); ++i)
        roles[gadget.layout.w[i]] = "w" + std::to_string(i);
    for (std::size_t i = 0; i < gadget.layout.z.size(); ++i) {
        long long copies_span = m * g1.vertex_count();
        if (static_cast<long long>(i) < copies_span) {
            long long t = static_cast<long long>(i) / g1.vertex_count();
            long long v = static_cast<long long>(i) % g1.vertex_count();
            roles[gadget.layout.z[i]] =
                "z" + std::to_string(i) + ".g1c" + std::to_string(t) + "." + std::to_string(v);
        } else {
            roles[gadget.layout.z[i]] = "z" + std::to_string(i) + ".pad";
        }
    }
    for (std::size_t i = 0; i < gadget.layout.u_tilde.size(); ++i) {
        long long t = static_cast<long long>(i) / h2.vertex_count();
        long long v = static_cast<long long>(i) % h2.vertex_count();
        roles[gadget.layout.u_tilde[i]] =
            "ut" + std::to_string(i) + ".h2c" + std::to_string(t) + "." + std::to_string(v);
    }
    for (std::size_t i = 0; i < gadget.layout.w_tilde.size(); ++i)
        roles[gadget.layout.w_tilde[i]] = "wt" + std::to_string(i);
    return res;
}

ReductionArtifacts build_hat_g_r(const Graph& g1, const Graph& g2, const Ratio& r) {
    return build_hat_g_r_full(g1, g2, r).artifacts;
}

}  // namespace vclab
