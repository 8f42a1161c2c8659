#ifndef IDPOLY_ALGORITHMS_HPP
#define IDPOLY_ALGORITHMS_HPP

#include <cstddef>
#include <vector>

#include "idpoly/families.hpp"
#include "idpoly/graph.hpp"
#include "idpoly/polynomial.hpp"

namespace idpoly {

// Default size bounds for the exhaustive-subset algorithms; every
// acceptance check finishes in seconds at these values.
inline constexpr int kBruteForceMaxN = 26;
inline constexpr int kSubsetFormulaMaxN = 24;

// Reference oracle: sums x^{|W|} over all W that are independent (no
// non-loop edge inside W, no looped member) and dominating (every vertex
// outside W has a non-loop neighbor in W). Throws BoundError past max_n.
Polynomial id_brute_force(const Graph& g, int max_n = kBruteForceMaxN);

// Brute force restricted to the induced subgraph G[scope], without
// materializing the subgraph. scope must be a subset of V(G).
Polynomial id_brute_force_on(const Graph& g, VertexSet scope, int max_n = kBruteForceMaxN);

struct RecursiveStats {
    std::size_t memo_entries = 0;
};

// Deletion recurrence engine: component factorization plus the pivot rule
// id(G) = id(G-v) - id(G∘v) + x id(G-N[v]) on an unlooped vertex of
// maximum degree. Memoized on original-label (vertex set, loop set) pairs;
// handles graphs of any order the memo table can hold.
Polynomial id_recursive(const Graph& g, RecursiveStats* stats = nullptr);

// id(G,x) = sum_{W subset V} (-1)^{|W|} (1-x)^{iso(G[W])}. Simple graphs
// only; throws InputMismatchError on loops, BoundError past max_n.
Polynomial id_inclusion_exclusion(const Graph& g, int max_n = kSubsetFormulaMaxN);

// id(G,x) = (-1)^n sum over i-essential U of (-1)^{|U|}((1-x)^{f(U)} - 1),
// f(U) = #{v not in U : N(v) subset of U}. Simple graphs, n >= 1.
Polynomial id_essential_formula(const Graph& g, int max_n = kSubsetFormulaMaxN);

// Coefficient-by-coefficient assembly:
// a_k = sum_{W : iso(G[W]) >= k} (-1)^{|W|+k} C(iso(G[W]), k).
Polynomial id_coefficient_formula(const Graph& g, int max_n = kSubsetFormulaMaxN);

// ind(G,x): generating function over all independent sets (empty set
// included), via ind(G) = ind(G-v) + x ind(G-N[v]). Simple graphs only.
Polynomial independence_polynomial(const Graph& g);

// All independent dominating sets, sorted by size then lexicographically
// by element sequence.
std::vector<VertexSet> enumerate_mids(const Graph& g, int max_n = kBruteForceMaxN);

// The i-essential family {X : exists v outside X with N(v) subset of X},
// by predicate test over all subsets. Simple graphs only.
std::vector<VertexSet> enumerate_essential_sets(const Graph& g, int max_n = kSubsetFormulaMaxN);

// sum_{W subset V} (-1)^{|W|} id(G[W], x), each summand by brute force.
Polynomial alternating_sum_induced(const Graph& g, int max_n = kSubsetFormulaMaxN);

enum class FamilyVariant { closed_form, recurrence };

// Family formulas: edgeless x^n, complete nx, complete bipartite x^p+x^q,
// star x+x^{n-1}, path (recurrence or binomial closed form), cycle
// (recurrence with stored bases for n = 3..6, closed form for n >= 7).
Polynomial id_family(const FamilySpec& spec, FamilyVariant variant = FamilyVariant::recurrence);

} // namespace idpoly

#endif
