#ifndef IDPOLY_GRAPH_HPP
#define IDPOLY_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

namespace idpoly {

// Vertex subset as a bitmask over labels 0..n-1. Operations taking a
// VertexSet require n <= 64.
using VertexSet = std::uint64_t;

inline VertexSet vbit(int v) { return VertexSet{1} << v; }
inline bool vhas(VertexSet s, int v) { return (s >> v) & 1u; }
inline int vcount(VertexSet s) { return __builtin_popcountll(s); }
inline VertexSet vfull(int n) { return n == 0 ? 0 : (~VertexSet{0} >> (64 - n)); }

// Labeled graph on vertices 0..n-1: a simple edge set plus a separate set
// of looped vertices. A loop marks a vertex as self-dominating; it is not
// an edge and never contributes adjacency. Immutable after construction.
class Graph {
public:
    Graph() = default;
    Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops = {});

    int order() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& loops() const { return loops_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    bool has_edge(int u, int v) const;
    bool has_loop(int v) const;
    bool is_simple() const { return loops_.empty(); }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int min_degree() const;
    int max_degree() const;

    // Bitmask views; require order() <= 64.
    VertexSet neighbor_mask(int v) const;
    VertexSet closed_neighbor_mask(VertexSet s) const;
    VertexSet full_mask() const;
    VertexSet loop_mask() const;

    bool operator==(const Graph& rhs) const {
        return n_ == rhs.n_ && edges_ == rhs.edges_ && loops_ == rhs.loops_;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;   // u < v, sorted, unique
    std::vector<int> loops_;                   // sorted, unique
    std::vector<std::vector<int>> adj_;        // non-loop adjacency, sorted
};

// Induced subgraph together with the map from new indices to original labels.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w);
Graph delete_vertex(const Graph& g, int v);
Graph delete_edge(const Graph& g, int u, int v);

// Induced subgraph on V \ N[S], where N[S] = S together with all non-loop
// neighbors of S.
Graph remove_closed_neighborhood(const Graph& g, VertexSet s);

// G ∘ v: delete v and add a loop to every neighbor of v.
Graph circ(const Graph& g, int v);

// G ⊙ v: remove every edge joining two neighbors of v; v and its incident
// edges stay.
Graph odot(const Graph& g, int v);

// Connected components of the non-loop edge relation; requires n <= 64.
std::vector<VertexSet> components(const Graph& g);

// Number of vertices of G[W] with no incident edge inside W. A looped
// vertex counts as non-isolated.
int iso_count(const Graph& g, VertexSet w);

// Graph products. Vertex numbering: G's vertices first, then copies/blocks
// in vertex order. All require simple inputs.
Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph corona(const Graph& g, const Graph& h);
Graph expansion(const Graph& g, int r);

} // namespace idpoly

#endif
