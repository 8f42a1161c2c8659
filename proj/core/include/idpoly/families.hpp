#ifndef IDPOLY_FAMILIES_HPP
#define IDPOLY_FAMILIES_HPP

#include <cstdint>
#include <string>

#include "idpoly/graph.hpp"

namespace idpoly {

enum class FamilyKind {
    edgeless,
    complete,
    complete_bipartite,
    path,
    cycle,
    star,
    random,
};

FamilyKind family_kind_from_string(const std::string& name);
std::string to_string(FamilyKind kind);

// Descriptor of a parametric graph family. For complete_bipartite the
// part sizes are (p, q); for random, edge_prob and seed drive a
// reproducible Erdős–Rényi-style draw.
struct FamilySpec {
    FamilyKind kind = FamilyKind::path;
    int n = 0;
    int p = 0;
    int q = 0;
    double edge_prob = 0.0;
    std::uint64_t seed = 0;

    std::string describe() const;
};

// Deterministic graph for deterministic kinds; the random kind is
// reproducible from (n, edge_prob, seed) bit-exactly across platforms.
// Throws std::invalid_argument for invalid parameters.
Graph generate(const FamilySpec& spec);

// Convenience constructors used throughout the tests.
Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);
Graph make_complete_bipartite(int p, int q);
Graph make_edgeless(int n);
Graph make_star(int n);
Graph make_random(int n, double edge_prob, std::uint64_t seed);

// Exhaustive labeled-graph corpus: all simple graphs on n vertices are
// indexed by a bitmask over the C(n,2) vertex pairs in lexicographic
// order. Requires C(n,2) <= 63.
std::uint64_t pair_count(int n);
Graph graph_from_pair_mask(int n, std::uint64_t mask);

// The repo's fixed 64-bit mixer (splitmix64), used by the random family.
std::uint64_t splitmix64(std::uint64_t z);

} // namespace idpoly

#endif
