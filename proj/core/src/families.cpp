#include "idpoly/families.hpp"

#include <sstream>
#include <stdexcept>

namespace idpoly {

FamilyKind family_kind_from_string(const std::string& name) {
    if (name == "edgeless") return FamilyKind::edgeless;
    if (name == "complete") return FamilyKind::complete;
    if (name == "complete-bipartite") return FamilyKind::complete_bipartite;
    if (name == "path") return FamilyKind::path;
    if (name == "cycle") return FamilyKind::cycle;
    if (name == "star") return FamilyKind::star;
    if (name == "random") return FamilyKind::random;
    throw std::invalid_argument("unknown family kind: " + name);
}

std::string to_string(FamilyKind kind) {
    switch (kind) {
        case FamilyKind::edgeless: return "edgeless";
        case FamilyKind::complete: return "complete";
        case FamilyKind::complete_bipartite: return "complete-bipartite";
        case FamilyKind::path: return "path";
        case FamilyKind::cycle: return "cycle";
        case FamilyKind::star: return "star";
        case FamilyKind::random: return "random";
    }
    return "?";
}

std::string FamilySpec::describe() const {
    std::ostringstream os;
    os << to_string(kind);
    if (kind == FamilyKind::complete_bipartite) {
        os << " p=" << p << " q=" << q;
    } else {
        os << " n=" << n;
    }
    if (kind == FamilyKind::random) os << " prob=" << edge_prob << " seed=" << seed;
    return os.str();
}

std::uint64_t splitmix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

Graph make_edgeless(int n) {
    if (n < 0) throw std::invalid_argument("edgeless: n must be >= 0");
    return Graph(n, {});
}

Graph make_complete(int n) {
    if (n < 0) throw std::invalid_argument("complete: n must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

Graph make_complete_bipartite(int p, int q) {
    if (p < 0 || q < 0) throw std::invalid_argument("complete-bipartite: p,q must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < p; ++u)
        for (int v = 0; v < q; ++v) edges.emplace_back(u, p + v);
    return Graph(p + q, std::move(edges));
}

Graph make_path(int n) {
    if (n < 0) throw std::invalid_argument("path: n must be >= 0");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph(n, std::move(edges));
}

Graph make_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    edges.emplace_back(0, n - 1);
    return Graph(n, std::move(edges));
}

Graph make_star(int n) {
    // Star on n vertices: center 0 adjacent to 1..n-1.
    if (n < 1) throw std::invalid_argument("star: n must be >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph(n, std::move(edges));
}

Graph make_random(int n, double edge_prob, std::uint64_t seed) {
    if (n < 0) throw std::invalid_argument("random: n must be >= 0");
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0))
        throw std::invalid_argument("random: edge probability must be in [0,1]");
    // Pair k (lexicographic over u < v) is present iff the top 53 bits of
    // splitmix64(seed + k) fall below edge_prob * 2^53. Integer threshold
    // comparison keeps the draw bit-exact across platforms.
    const std::uint64_t two53 = 1ULL << 53;
    const std::uint64_t threshold =
        edge_prob >= 1.0 ? two53 : static_cast<std::uint64_t>(edge_prob * 9007199254740992.0);
    std::vector<std::pair<int, int>> edges;
    std::uint64_t k = 0;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v, ++k) {
            std::uint64_t draw = splitmix64(seed + k) >> 11;
            if (draw < threshold) edges.emplace_back(u, v);
        }
    }
    return Graph(n, std::move(edges));
}

Graph generate(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::edgeless: return make_edgeless(spec.n);
        case FamilyKind::complete: return make_complete(spec.n);
        case FamilyKind::complete_bipartite: return make_complete_bipartite(spec.p, spec.q);
        case FamilyKind::path: return make_path(spec.n);
        case FamilyKind::cycle: return make_cycle(spec.n);
        case FamilyKind::star: return make_star(spec.n);
        case FamilyKind::random: return make_random(spec.n, spec.edge_prob, spec.seed);
    }
    throw std::invalid_argument("generate: unknown family kind");
}

std::uint64_t pair_count(int n) {
    return static_cast<std::uint64_t>(n) * (n - 1) / 2;
}

Graph graph_from_pair_mask(int n, std::uint64_t mask) {
    std::uint64_t pairs = pair_count(n);
    if (pairs > 63) throw std::invalid_argument("graph_from_pair_mask: C(n,2) must be <= 63");
    if (pairs < 64 && (mask >> pairs) != 0)
        throw std::invalid_argument("graph_from_pair_mask: mask out of range");
    std::vector<std::pair<int, int>> edges;
    std::uint64_t k = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++k)
            if ((mask >> k) & 1u) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

} // namespace idpoly
