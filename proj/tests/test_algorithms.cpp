#include <doctest.h>

#include <stdexcept>

#include <random>

#include "idpoly/algorithms.hpp"
#include "idpoly/errors.hpp"

using namespace idpoly;

namespace {

Polynomial poly(std::initializer_list<long long> coeffs) {
    std::vector<BigInt> v;
    for (long long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

Graph random_loopy_graph(std::mt19937_64& rng, int n) {
    Graph base = make_random(n, 0.5, rng());
    std::vector<int> loops;
    for (int v = 0; v < n; ++v)
        if (rng() % 3 == 0) loops.push_back(v);
    return Graph(n, base.edges(), loops);
}

} // namespace

TEST_CASE("brute force reference values") {
    CHECK(id_brute_force(make_complete(5)) == poly({0, 5}));
    CHECK(id_brute_force(Graph(0, {})) == Polynomial::one());
    CHECK(id_brute_force(Graph(1, {}, {0})).is_zero());
    CHECK(id_brute_force(make_path(3)) == poly({0, 1, 1}));
    CHECK(id_brute_force(make_path(2)) == poly({0, 2}));
    CHECK(id_brute_force(make_edgeless(3)) == poly({0, 0, 0, 1}));
    CHECK_THROWS_AS(id_brute_force(make_edgeless(5), 4), BoundError);
}

TEST_CASE("loop semantics") {
    // a looped vertex cannot join a set and still needs a dominating neighbor
    Graph p2_loop1(2, {{0, 1}}, {1}); // id = x ({0} dominates 1)
    CHECK(id_brute_force(p2_loop1) == poly({0, 1}));
    Graph e2_loop(2, {}, {0}); // looped isolated vertex kills everything
    CHECK(id_brute_force(e2_loop).is_zero());
    // circ(P_2, 1) = single looped vertex, id = 0: forces the vertex
    // recurrence id(P_2) = x - 0 + x = 2x
    CHECK(id_brute_force(circ(make_path(2), 1)).is_zero());
}

TEST_CASE("recursive engine") {
    CHECK(id_recursive(make_cycle(4)) == poly({0, 0, 2}));
    CHECK(id_recursive(make_path(2)) == poly({0, 2}));
    CHECK(id_recursive(make_edgeless(3)) == poly({0, 0, 0, 1}));
    CHECK(id_recursive(Graph(0, {})) == Polynomial::one());
    CHECK(id_recursive(Graph(1, {}, {0})).is_zero());

    RecursiveStats stats;
    Polynomial p300 = id_recursive(make_path(300), &stats);
    CHECK(p300 == id_family({FamilyKind::path, 300}, FamilyVariant::closed_form));
    CHECK(stats.memo_entries > 0);
}

TEST_CASE("recursive equals brute force, including loops") {
    std::mt19937_64 rng(41);
    for (int i = 0; i < 120; ++i) {
        Graph g = random_loopy_graph(rng, 1 + static_cast<int>(rng() % 9));
        CHECK(id_recursive(g) == id_brute_force(g));
    }
}

TEST_CASE("looped-pivot reduced rule: id(G) = id(G-v) - id(G∘v) for looped v") {
    std::mt19937_64 rng(43);
    int checked = 0;
    while (checked < 60) {
        Graph g = random_loopy_graph(rng, 2 + static_cast<int>(rng() % 7));
        for (int v : g.loops()) {
            CHECK(id_brute_force(g) ==
                  id_brute_force(delete_vertex(g, v)) - id_brute_force(circ(g, v)));
            ++checked;
        }
    }
}

TEST_CASE("id((G⊙v)∘v) = id(G∘v)") {
    std::mt19937_64 rng(47);
    for (int i = 0; i < 60; ++i) {
        Graph g = random_loopy_graph(rng, 1 + static_cast<int>(rng() % 8));
        for (int v = 0; v < g.order(); ++v)
            CHECK(id_brute_force(circ(odot(g, v), v)) == id_brute_force(circ(g, v)));
    }
}

TEST_CASE("inclusion-exclusion") {
    CHECK(id_inclusion_exclusion(make_complete(2)) == poly({0, 2}));
    CHECK(id_inclusion_exclusion(make_path(3)) == poly({0, 1, 1}));
    CHECK(id_inclusion_exclusion(make_edgeless(1)) == poly({0, 1}));
    CHECK(id_inclusion_exclusion(Graph(0, {})) == Polynomial::one());
    CHECK_THROWS_AS(id_inclusion_exclusion(Graph(1, {}, {0})), InputMismatchError);
    CHECK_THROWS_AS(id_inclusion_exclusion(make_edgeless(10), 9), BoundError);
}

TEST_CASE("essential-set formula") {
    CHECK(id_essential_formula(make_complete(2)) == poly({0, 2}));
    CHECK(id_essential_formula(make_path(3)) == poly({0, 1, 1}));
    CHECK(id_essential_formula(make_complete(1)) == poly({0, 1}));
    CHECK_THROWS_AS(id_essential_formula(Graph(0, {})), std::invalid_argument);
    CHECK_THROWS_AS(id_essential_formula(Graph(1, {}, {0})), InputMismatchError);
}

TEST_CASE("coefficient formula") {
    CHECK(id_coefficient_formula(make_complete(2)) == poly({0, 2}));
    CHECK(id_coefficient_formula(make_edgeless(2)) == poly({0, 0, 1}));
    CHECK(id_coefficient_formula(make_path(3)) == poly({0, 1, 1}));
    CHECK(id_coefficient_formula(Graph(0, {})) == Polynomial::one());
    CHECK_THROWS_AS(id_coefficient_formula(Graph(1, {}, {0})), InputMismatchError);
}

TEST_CASE("independence polynomial") {
    CHECK(independence_polynomial(make_complete(2)) == poly({1, 2}));
    CHECK(independence_polynomial(make_edgeless(2)) == poly({1, 2, 1}));
    CHECK(independence_polynomial(make_complete(1)) == poly({1, 1}));
    CHECK(independence_polynomial(Graph(0, {})) == Polynomial::one());
    CHECK_THROWS_AS(independence_polynomial(Graph(1, {}, {0})), InputMismatchError);

    // brute-force cross-check: count independent sets by size
    std::mt19937_64 rng(5);
    for (int i = 0; i < 40; ++i) {
        int n = static_cast<int>(rng() % 9);
        Graph g = make_random(n, 0.5, rng());
        std::vector<BigInt> counts(static_cast<std::size_t>(n) + 1, BigInt(0));
        for (VertexSet w = 0; w < (VertexSet{1} << n); ++w) {
            bool independent = true;
            for (VertexSet t = w; t && independent; t &= t - 1)
                independent = (g.neighbor_mask(__builtin_ctzll(t)) & w) == 0;
            if (independent) ++counts[static_cast<std::size_t>(vcount(w))];
        }
        CHECK(independence_polynomial(g) == Polynomial(std::move(counts)));
    }
}

TEST_CASE("enumerate_mids") {
    CHECK(enumerate_mids(make_path(3)) ==
          std::vector<VertexSet>{vbit(1), vbit(0) | vbit(2)});
    CHECK(enumerate_mids(make_complete(3)) ==
          std::vector<VertexSet>{vbit(0), vbit(1), vbit(2)});
    CHECK(enumerate_mids(Graph(1, {}, {0})).empty());

    // coefficient of x^k counts the size-k sets
    std::mt19937_64 rng(19);
    for (int i = 0; i < 50; ++i) {
        Graph g = make_random(1 + static_cast<int>(rng() % 10), 0.5, rng());
        auto mids = enumerate_mids(g);
        Polynomial p = id_brute_force(g);
        BigInt total = 0;
        for (std::size_t k = 0; !p.is_zero() && k <= p.degree(); ++k) total += p.coeff(k);
        CHECK(total == BigInt(mids.size()));
        for (auto w : mids) CHECK(p.coeff(static_cast<std::size_t>(vcount(w))) > 0);
    }
}

TEST_CASE("enumerate_essential_sets") {
    CHECK(enumerate_essential_sets(make_complete(2)) ==
          std::vector<VertexSet>{vbit(0), vbit(1)});
    // P_3: {1}, {0,1}, {0,2}, {1,2} in size-then-lex order
    CHECK(enumerate_essential_sets(make_path(3)) ==
          std::vector<VertexSet>{vbit(1), vbit(0) | vbit(1), vbit(0) | vbit(2),
                                 vbit(1) | vbit(2)});
    // min member size equals the minimum degree
    std::mt19937_64 rng(29);
    for (int i = 0; i < 50; ++i) {
        Graph g = make_random(1 + static_cast<int>(rng() % 8), 0.5, rng());
        auto ess = enumerate_essential_sets(g);
        REQUIRE(!ess.empty());
        CHECK(vcount(ess.front()) == g.min_degree());
    }
}

TEST_CASE("five-way agreement on random graphs") {
    std::mt19937_64 rng(61);
    for (int i = 0; i < 60; ++i) {
        Graph g = make_random(1 + static_cast<int>(rng() % 10), 0.5, rng());
        Polynomial p = id_brute_force(g);
        CHECK(id_recursive(g) == p);
        CHECK(id_inclusion_exclusion(g) == p);
        CHECK(id_essential_formula(g) == p);
        CHECK(id_coefficient_formula(g) == p);
    }
}

TEST_CASE("multiplicativity over disjoint union") {
    std::mt19937_64 rng(71);
    for (int i = 0; i < 40; ++i) {
        Graph g = make_random(static_cast<int>(rng() % 6), 0.5, rng());
        Graph h = make_random(static_cast<int>(rng() % 6), 0.5, rng());
        CHECK(id_brute_force(disjoint_union(g, h)) ==
              id_brute_force(g) * id_brute_force(h));
    }
}

TEST_CASE("family formulas") {
    CHECK(id_family({FamilyKind::path, 3}) == poly({0, 1, 1}));
    CHECK(id_family({FamilyKind::path, 5}) == poly({0, 0, 3, 1}));
    CHECK(id_family({FamilyKind::cycle, 7}) == poly({0, 0, 0, 7}));
    CHECK(id_family({FamilyKind::cycle, 4}) == poly({0, 0, 2}));
    CHECK(id_family({FamilyKind::cycle, 5}) == poly({0, 0, 5}));
    CHECK(id_family({FamilyKind::cycle, 6}) == poly({0, 0, 3, 2}));
    CHECK(id_family({FamilyKind::complete_bipartite, 0, 2, 3}) == poly({0, 0, 1, 1}));
    CHECK(id_family({FamilyKind::edgeless, 4}) == poly({0, 0, 0, 0, 1}));
    CHECK(id_family({FamilyKind::complete, 6}) == poly({0, 6}));
    CHECK(id_family({FamilyKind::star, 5}) == poly({0, 1, 0, 0, 1}));
    CHECK_THROWS_AS(id_family({FamilyKind::path, 0}), std::invalid_argument);
    CHECK_THROWS_AS(id_family({FamilyKind::cycle, 2}), std::invalid_argument);
    CHECK_THROWS_AS(id_family({FamilyKind::random, 5}), std::invalid_argument);
    CHECK_THROWS_AS(id_family({FamilyKind::cycle, 5}, FamilyVariant::closed_form),
                    std::invalid_argument);
}

TEST_CASE("stored cycle bases regenerate from brute force") {
    for (int n = 3; n <= 6; ++n)
        CHECK(id_family({FamilyKind::cycle, n}) == id_brute_force(make_cycle(n)));
}

TEST_CASE("family variants agree") {
    for (int n = 1; n <= 60; ++n)
        CHECK(id_family({FamilyKind::path, n}, FamilyVariant::closed_form) ==
              id_family({FamilyKind::path, n}, FamilyVariant::recurrence));
    for (int n = 7; n <= 60; ++n)
        CHECK(id_family({FamilyKind::cycle, n}, FamilyVariant::closed_form) ==
              id_family({FamilyKind::cycle, n}, FamilyVariant::recurrence));
    for (int n = 1; n <= 14; ++n)
        CHECK(id_family({FamilyKind::path, n}) == id_brute_force(make_path(n)));
    for (int n = 3; n <= 14; ++n)
        CHECK(id_family({FamilyKind::cycle, n}) == id_brute_force(make_cycle(n)));
}

TEST_CASE("alternating sum over induced subgraphs") {
    CHECK(alternating_sum_induced(make_edgeless(2)) == poly({1, -2, 1}));
    CHECK(alternating_sum_induced(make_edgeless(1)) == poly({1, -1}));
    CHECK(alternating_sum_induced(make_cycle(4)) == Polynomial::one());
}
