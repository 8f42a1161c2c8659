#include <doctest.h>

#include <stdexcept>

#include <random>

#include "idpoly/families.hpp"
#include "idpoly/graph.hpp"

using namespace idpoly;

namespace {

Graph random_graph(std::mt19937_64& rng, int n, bool with_loops = false) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < 0.5) edges.emplace_back(u, v);
    std::vector<int> loops;
    if (with_loops)
        for (int v = 0; v < n; ++v)
            if (coin(rng) < 0.3) loops.push_back(v);
    return Graph(n, std::move(edges), std::move(loops));
}

// drops edges whose endpoints are both looped; such edges cannot affect any
// independent dominating set, so graphs equal up to them share the same id
Graph strip_inert_edges(const Graph& g) {
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (!g.has_loop(u) || !g.has_loop(v)) edges.emplace_back(u, v);
    return Graph(g.order(), std::move(edges), g.loops());
}

} // namespace

TEST_CASE("construction invariants") {
    Graph g(3, {{2, 0}, {0, 1}}, {1});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_loop(1));
    CHECK_FALSE(g.has_loop(0));
    CHECK(g.degree(0) == 2);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(1, {}, {3}), std::invalid_argument);
}

TEST_CASE("induced_subgraph") {
    Graph p3 = make_path(3);
    auto sub = induced_subgraph(p3, vbit(0) | vbit(2));
    CHECK(sub.graph == make_edgeless(2));
    CHECK(sub.labels == std::vector<int>{0, 2});

    auto whole = induced_subgraph(p3, p3.full_mask());
    CHECK(whole.graph == p3);
    CHECK(whole.labels == std::vector<int>{0, 1, 2});

    Graph c4 = make_cycle(4);
    CHECK(induced_subgraph(c4, vbit(0) | vbit(1) | vbit(2)).graph == make_path(3));
    CHECK_THROWS_AS(induced_subgraph(p3, vbit(5)), std::invalid_argument);
}

TEST_CASE("delete_vertex / delete_edge") {
    CHECK(delete_vertex(make_complete(3), 1) == make_complete(2));
    CHECK(delete_vertex(make_path(3), 1) == make_edgeless(2)); // K_1 u K_1 after removing center
    // P_3 - edge {0,1} = K_1 u P_2
    CHECK(delete_edge(make_path(3), 0, 1) == Graph(3, {{1, 2}}));
    CHECK(delete_edge(make_cycle(4), 0, 3) == make_path(4));
    CHECK_THROWS_AS(delete_vertex(make_path(3), 4), std::invalid_argument);
    CHECK_THROWS_AS(delete_edge(make_path(3), 0, 2), std::invalid_argument);
}

TEST_CASE("remove_closed_neighborhood") {
    Graph c4 = make_cycle(4); // 0-1-2-3-0
    Graph r = remove_closed_neighborhood(c4, vbit(0));
    CHECK(r == make_edgeless(1)); // vertex 2 survives
    CHECK(remove_closed_neighborhood(make_path(3), vbit(1)).order() == 0);
    CHECK(remove_closed_neighborhood(make_path(3), vbit(0) | vbit(1)).order() == 0);
}

TEST_CASE("circ") {
    Graph p2 = make_path(2);
    Graph c = circ(p2, 1);
    CHECK(c.order() == 1);
    CHECK(c.has_loop(0));

    Graph c4 = make_cycle(4);
    Graph r = circ(c4, 0); // path 1-2-3 with loops on 1 and 3 (relabeled 0,1,2)
    CHECK(r == Graph(3, {{0, 1}, {1, 2}}, {0, 2}));
    CHECK(circ(make_edgeless(1), 0).order() == 0);
    // idempotent loop addition
    Graph looped(2, {{0, 1}}, {0});
    CHECK(circ(looped, 1) == Graph(1, {}, {0}));
}

TEST_CASE("odot") {
    CHECK(odot(make_complete(3), 0) == Graph(3, {{0, 1}, {0, 2}})); // P_3 with center 0
    CHECK(odot(make_path(3), 1) == make_path(3));
    CHECK(strip_inert_edges(circ(odot(make_complete(3), 0), 0)) ==
          strip_inert_edges(circ(make_complete(3), 0)));
    CHECK_THROWS_AS(odot(make_path(3), 3), std::invalid_argument);
}

TEST_CASE("odot/circ identities on random graphs") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 8), true);
        for (int v = 0; v < g.order(); ++v) {
            // (G⊙v)∘v agrees with G∘v up to edges between looped vertices
            CHECK(strip_inert_edges(circ(odot(g, v), v)) ==
                  strip_inert_edges(circ(g, v)));
            CHECK(remove_closed_neighborhood(odot(g, v), vbit(v)) ==
                  remove_closed_neighborhood(g, vbit(v)));
        }
    }
}

TEST_CASE("components") {
    Graph p2_k1(3, {{0, 1}});
    CHECK(components(p2_k1) == std::vector<VertexSet>{vbit(0) | vbit(1), vbit(2)});
    CHECK(components(make_cycle(4)) == std::vector<VertexSet>{vfull(4)});
    CHECK(components(Graph(0, {})).empty());

    std::mt19937_64 rng(3);
    for (int i = 0; i < 40; ++i) {
        Graph g = random_graph(rng, static_cast<int>(rng() % 6));
        Graph h = random_graph(rng, static_cast<int>(rng() % 6));
        CHECK(components(disjoint_union(g, h)).size() ==
              components(g).size() + components(h).size());
    }
}

TEST_CASE("iso_count") {
    Graph p3 = make_path(3);
    CHECK(iso_count(p3, vbit(0) | vbit(2)) == 2);
    CHECK(iso_count(p3, vbit(0) | vbit(1)) == 0);
    CHECK(iso_count(p3, 0) == 0);
    // a looped vertex is not isolated
    Graph looped(2, {}, {0});
    CHECK(iso_count(looped, vfull(2)) == 1);
}

TEST_CASE("products") {
    CHECK(join(make_edgeless(1), make_edgeless(1)) == make_complete(2));
    // corona(K_2, K_1): pendant-pendant path a'-a-b-b' (labels 2-0-1-3)
    Graph cr = corona(make_complete(2), make_complete(1));
    CHECK(cr == Graph(4, {{0, 1}, {0, 2}, {1, 3}}));
    CHECK(expansion(make_complete(2), 2) == make_complete_bipartite(2, 2));
    CHECK_THROWS_AS(expansion(make_complete(2), 0), std::invalid_argument);

    std::mt19937_64 rng(17);
    for (int i = 0; i < 30; ++i) {
        Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 6));
        CHECK(expansion(g, 1) == g);
    }
}

TEST_CASE("empty graph is legal everywhere the definition permits") {
    Graph e(0, {});
    CHECK(components(e).empty());
    CHECK(induced_subgraph(e, 0).graph == e);
    CHECK(disjoint_union(e, e) == e);
    CHECK(expansion(e, 3) == e);
    CHECK(iso_count(e, 0) == 0);
}
