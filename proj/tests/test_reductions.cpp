#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "vclab/exact.hpp"
#include "vclab/gadgets.hpp"
#include "vclab/graph.hpp"
#include "vclab/heuristics.hpp"
#include "vclab/ratio.hpp"
#include "vclab/reductions.hpp"

using namespace vclab;

namespace {

Graph k1() { return Graph(1, {}); }
Graph k2() { return Graph(2, {{0, 1}}); }

Graph random_graph(std::mt19937_64& rng, int n, int percent) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<int>(rng() % 100) < percent) edges.push_back({u, v});
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("edge-deletion blowup on the single vertex") {
    ReductionArtifacts art = g_ed(k1());
    CHECK(art.output.vertex_count() == 4);
    CHECK(art.output.edge_count() == 3);
    CHECK(art.output.has_edge(0, 1));
    CHECK(art.output.has_edge(2, 3));
    CHECK(art.output.has_edge(0, 2));
    CHECK(mvc(art.output) == 2);
    CHECK(min_ed(art.output) == 2);
    REQUIRE(art.roles.size() == 4);
    CHECK(art.roles[0] == "v0.1");
    CHECK(art.roles[3] == "v0.4");
    CHECK(art.constants.empty());
}

TEST_CASE("edge-deletion blowup on one edge") {
    ReductionArtifacts art = g_ed(k2());
    CHECK(art.output.vertex_count() == 8);
    CHECK(art.output.edge_count() == 3 * 2 + 16);
    // all 16 cross pairs are present
    for (int a = 0; a < 4; ++a)
        for (int b = 4; b < 8; ++b) CHECK(art.output.has_edge(a, b));
    CHECK(mvc(art.output) == 2 * (1 + 2));
    CHECK(min_ed(art.output) == 6);
}

TEST_CASE("edge-deletion blowup law on random graphs") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 25; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, static_cast<int>(rng() % 101));
        ReductionArtifacts art = g_ed(g);
        CHECK(art.output.vertex_count() == 4 * n);
        CHECK(art.output.edge_count() == 3 * n + 16 * g.edge_count());
        int expect = 2 * (mvc(g) + n);
        CHECK(mvc(art.output) == expect);
        CHECK(ed_can_achieve(art.output, expect));
        CHECK(art.roles.size() == static_cast<std::size_t>(4 * n));
    }
    CHECK(g_ed(Graph(0, {})).output.vertex_count() == 0);
}

TEST_CASE("greedy blowup on one edge and a path") {
    ReductionArtifacts art = g_mdg(k2());
    // width d+1 = 2: one complete 2x2 block plus two attachment edges
    CHECK(art.output.vertex_count() == 6);
    CHECK(art.output.edge_count() == 6);
    CHECK_FALSE(art.output.has_edge(0, 1));  // original edges are dropped
    CHECK(mvc(art.output) == 3);
    CHECK(min_mdg(art.output) == 3);
    CHECK(art.constants.at("delta") == 1);
    REQUIRE(art.roles.size() == 6);
    CHECK(art.roles[0] == "g0");
    CHECK(art.roles[2] == "e0.u1");

    Graph p3(3, {{0, 1}, {1, 2}});
    ReductionArtifacts path_art = g_mdg(p3);
    CHECK(path_art.output.vertex_count() == 15);
    CHECK(mvc(path_art.output) == 7);
    CHECK(min_mdg(path_art.output) == 7);
}

TEST_CASE("greedy blowup law on small random graphs") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + static_cast<int>(rng() % 4);
        Graph g = random_graph(rng, n, 50);
        int width = max_deg(g) + 1;
        ReductionArtifacts art = g_mdg(g);
        CHECK(art.output.vertex_count() == n + 2 * g.edge_count() * width);
        CHECK(art.output.edge_count() == g.edge_count() * (width * width + 2));
        int expect = mvc(g) + g.edge_count() * width;
        CHECK(mvc(art.output) == expect);
        CHECK(mdg_can_achieve(art.output, expect));
    }
}

TEST_CASE("edge-deletion threshold construction at ratio 1") {
    Graph h = g_ed(k1()).output;
    ReductionArtifacts art = build_hat_h(h, h, make_ratio(1, 1));
    CHECK(art.output.vertex_count() == 32);
    CHECK(art.constants.at("k") == 8);
    CHECK(art.constants.at("ell") == 1);
    CHECK(art.constants.at("m") == 1);
    CHECK(art.constants.at("sizeL") == 8);
    CHECK(art.constants.at("sizeR") == 8);
    CHECK(art.output.edge_count() == 86);
    // predicted values: smallest run 2*k*ell + ell*mvc(h2), optimum
    // m*mvc(h1) + 2*k*m, both 18 here
    CHECK(mvc(art.output) == 18);
    CHECK(2 * min_maximal_matching(art.output, 128) == 18);
    REQUIRE(art.roles.size() == 32);
    CHECK(art.roles[0] == "L.c0.0");
    CHECK(art.roles[4] == "L.pad0");
    CHECK(art.roles[8] == "R.c0.0");
    CHECK(art.roles[16] == "a0");
    CHECK(art.roles[24] == "b0");
}

TEST_CASE("edge-deletion threshold construction validates inputs") {
    Graph h = g_ed(k1()).output;
    CHECK_THROWS_AS(build_hat_h(h, k1(), make_ratio(1, 1)), std::invalid_argument);
    CHECK_THROWS_AS(build_hat_h(h, h, make_ratio(2, 1)), std::invalid_argument);
    CHECK_THROWS_AS(build_hat_h(h, h, make_ratio(5, 2)), std::invalid_argument);
    CHECK_NOTHROW(build_hat_h(h, h, make_ratio(3, 2)));
}

TEST_CASE("edge-deletion threshold at ratio 3/2 has the predicted shape") {
    Graph h = g_ed(k1()).output;
    ReductionArtifacts art = build_hat_h(h, h, make_ratio(3, 2));
    CHECK(art.constants.at("k") == 20);
    CHECK(art.constants.at("sizeL") == 20);
    CHECK(art.constants.at("sizeR") == 60);
    CHECK(art.output.vertex_count() == 200);
    // pendant pairs: the i-th pendant chain hangs off the i-th R vertex
    long long size_l = art.constants.at("sizeL");
    long long size_r = art.constants.at("sizeR");
    int r_base = static_cast<int>(size_l);
    int a_base = static_cast<int>(size_l + size_r);
    int b_base = a_base + static_cast<int>(size_r);
    for (int i = 0; i < size_r; ++i) {
        CHECK(art.output.has_edge(r_base + i, a_base + i));
        CHECK(art.output.has_edge(a_base + i, b_base + i));
        CHECK(art.output.degree(b_base + i) == 1);
    }
    // the join: every L vertex sees every R vertex
    for (int l = 0; l < size_l; ++l) CHECK(art.output.degree(l) >= size_r);
}

TEST_CASE("greedy threshold construction at ratio 1") {
    ReductionArtifacts art = build_hat_g(k1(), k1());
    CHECK(art.output.vertex_count() == 6);
    CHECK(art.constants.at("j") == 2);
    CHECK(art.constants.at("q") == 3);
    CHECK(mvc(art.output) == 3);
    CHECK(min_mdg(art.output) == 3);

    ReductionArtifacts both = build_hat_g(k2(), k2());
    CHECK(both.output.vertex_count() == 26);
    CHECK(both.constants.at("j") == 8);
    CHECK(both.constants.at("q") == 14);
    CHECK(mvc(both.output) == 15);
    CHECK(min_mdg(both.output) == 15);

    ReductionArtifacts iso = build_hat_g(Graph(4, {}), k2());
    CHECK(iso.output.vertex_count() == 26);
    CHECK(mvc(iso.output) == 14);
    CHECK(min_mdg(iso.output) == 15);
}

TEST_CASE("padding equation solver") {
    PaddingSolution s = solve_padding(make_ratio(2, 1), 2, 0, 1, 1);
    CHECK(s.n2 == 73);
    CHECK(s.mu == 71);
    // the defining identity and the feasibility floor
    CHECK(1 * s.n2 + 0 == (2 - 1) * (2 + s.mu));
    CHECK(gadget_feasible({2, s.n2, 1, s.mu}));

    for (long long ell : {2, 3, 5}) {
        for (long long n1 : {1, 7, 20}) {
            for (long long k_term : {0, 5, 40}) {
                Ratio r = make_ratio(ell, ell - 1);
                PaddingSolution p = solve_padding(r, n1, k_term, 1, 1);
                CHECK(p.n2 >= 1);
                CHECK(p.mu >= 1);
                CHECK(r.m * p.n2 + k_term == (r.ell - r.m) * (n1 + p.mu));
                CHECK(gadget_feasible({n1, p.n2, 1, p.mu}));
            }
        }
    }
    CHECK_THROWS_AS(solve_padding(make_ratio(1, 1), 2, 0, 1, 1), std::invalid_argument);
}

TEST_CASE("greedy threshold construction above ratio 1") {
    HatGrResult res = build_hat_g_r_full(k1(), k1(), make_ratio(2, 1));
    const Graph& a = res.artifacts.output;
    CHECK(res.spec == GadgetSpec{2, 73, 1, 71});
    CHECK(a.vertex_count() == 219);
    CHECK(res.artifacts.constants.at("p") == 1);
    CHECK(res.artifacts.constants.at("q") == 73);
    CHECK(res.artifacts.constants.at("n1") == 2);
    CHECK(res.artifacts.constants.at("n2") == 73);
    CHECK(res.artifacts.constants.at("delta") == 1);
    CHECK(res.artifacts.constants.at("mu") == 71);
    CHECK(res.artifacts.roles.size() == 219);

    // single-vertex inputs add no overlay edges: the graph is the bare gadget
    GadgetResult bare = lemma4_graph(res.spec);
    CHECK(a == bare.graph);

    // thin wrapper returns the same artifacts
    ReductionArtifacts direct = build_hat_g_r(k1(), k1(), make_ratio(2, 1));
    CHECK(direct.output == a);
    CHECK(direct.constants == res.artifacts.constants);
}

TEST_CASE("greedy threshold overlays copies of its inputs") {
    // g1 = k2 forces real overlay edges on the free primary slots
    HatGrResult res = build_hat_g_r_full(k2(), k1(), make_ratio(3, 2));
    const Graph& a = res.artifacts.output;
    long long n1 = res.artifacts.constants.at("n1");
    long long n2 = res.artifacts.constants.at("n2");
    long long mu = res.artifacts.constants.at("mu");
    CHECK(n1 == 3);  // ell copies of the one-vertex blowup
    CHECK(a.vertex_count() == 2 * (n1 + mu) + n2);
    CHECK(res.artifacts.constants.at("p") == 2);
    CHECK(res.artifacts.constants.at("q") == n1 + mu);

    // the two copies of g1 = k2 contribute exactly two overlay edges inside z
    const std::vector<Vertex>& z = res.layout.z;
    CHECK(a.has_edge(z[0], z[1]));
    CHECK(a.has_edge(z[2], z[3]));
    GadgetResult bare = lemma4_graph(res.spec);
    CHECK(a.edge_count() == bare.graph.edge_count() + 2);

    // roles name the embedded copies
    CHECK(res.artifacts.roles[z[0]] == "z0.g1c0.0");
    CHECK(res.artifacts.roles[z[1]] == "z1.g1c0.1");
    CHECK(res.artifacts.roles[z[2]] == "z2.g1c1.0");
}

TEST_CASE("roles cover every vertex in every construction") {
    Graph g = k2();
    for (const ReductionArtifacts& art :
         {g_ed(g), g_mdg(g), build_hat_h(g_ed(k1()).output, g_ed(k1()).output, make_ratio(1, 1)),
          build_hat_g(g, g), build_hat_g_r(k1(), k1(), make_ratio(2, 1))}) {
        CHECK(art.roles.size() == static_cast<std::size_t>(art.output.vertex_count()));
        for (const std::string& role : art.roles) CHECK_FALSE(role.empty());
    }
}
