#include "idpoly/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace idpoly {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex " + std::to_string(v) +
                                    " out of range [0," + std::to_string(n) + ")");
}

void check_mask(VertexSet s, int n, const char* what) {
    if (n > 64) throw std::invalid_argument(std::string(what) + ": VertexSet requires n <= 64");
    if (s & ~vfull(n))
        throw std::invalid_argument(std::string(what) + ": vertex set out of range");
}

} // namespace

Graph::Graph(int n, std::vector<std::pair<int, int>> edges, std::vector<int> loops)
    : n_(n), edges_(std::move(edges)), loops_(std::move(loops)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (auto& [u, v] : edges_) {
        check_vertex(u, n_, "Graph edge");
        check_vertex(v, n_, "Graph edge");
        if (u == v) throw std::invalid_argument("Graph: loop passed as edge");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("Graph: duplicate edge");
    for (int v : loops_) check_vertex(v, n_, "Graph loop");
    std::sort(loops_.begin(), loops_.end());
    loops_.erase(std::unique(loops_.begin(), loops_.end()), loops_.end());
    adj_.assign(n_, {});
    for (auto [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(u, v));
}

bool Graph::has_loop(int v) const {
    return std::binary_search(loops_.begin(), loops_.end(), v);
}

int Graph::min_degree() const {
    if (n_ == 0) throw std::logic_error("min_degree of the empty graph is undefined");
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
    return d;
}

int Graph::max_degree() const {
    if (n_ == 0) throw std::logic_error("max_degree of the empty graph is undefined");
    int d = degree(0);
    for (int v = 1; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::neighbor_mask(int v) const {
    check_mask(0, n_, "neighbor_mask");
    check_vertex(v, n_, "neighbor_mask");
    VertexSet m = 0;
    for (int u : adj_[v]) m |= vbit(u);
    return m;
}

VertexSet Graph::closed_neighbor_mask(VertexSet s) const {
    check_mask(s, n_, "closed_neighbor_mask");
    VertexSet m = s;
    for (int v = 0; v < n_; ++v)
        if (vhas(s, v)) m |= neighbor_mask(v);
    return m;
}

VertexSet Graph::full_mask() const {
    check_mask(0, n_, "full_mask");
    return vfull(n_);
}

VertexSet Graph::loop_mask() const {
    check_mask(0, n_, "loop_mask");
    VertexSet m = 0;
    for (int v : loops_) m |= vbit(v);
    return m;
}

InducedSubgraph induced_subgraph(const Graph& g, VertexSet w) {
    check_mask(w, g.order(), "induced_subgraph");
    std::vector<int> labels;
    std::vector<int> index(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (vhas(w, v)) {
            index[v] = static_cast<int>(labels.size());
            labels.push_back(v);
        }
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        if (index[u] >= 0 && index[v] >= 0) edges.emplace_back(index[u], index[v]);
    std::vector<int> loops;
    for (int v : g.loops())
        if (index[v] >= 0) loops.push_back(index[v]);
    return {Graph(static_cast<int>(labels.size()), std::move(edges), std::move(loops)),
            std::move(labels)};
}

Graph delete_vertex(const Graph& g, int v) {
    check_vertex(v, g.order(), "delete_vertex");
    std::vector<std::pair<int, int>> edges;
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    for (auto [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
    std::vector<int> loops;
    for (int u : g.loops())
        if (u != v) loops.push_back(shift(u));
    return Graph(g.order() - 1, std::move(edges), std::move(loops));
}

Graph delete_edge(const Graph& g, int u, int v) {
    if (!g.has_edge(u, v))
        throw std::invalid_argument("delete_edge: edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} not in graph");
    if (u > v) std::swap(u, v);
    std::vector<std::pair<int, int>> edges;
    for (auto e : g.edges())
        if (e != std::make_pair(u, v)) edges.push_back(e);
    return Graph(g.order(), std::move(edges), g.loops());
}

Graph remove_closed_neighborhood(const Graph& g, VertexSet s) {
    check_mask(s, g.order(), "remove_closed_neighborhood");
    VertexSet keep = g.full_mask() & ~g.closed_neighbor_mask(s);
    return induced_subgraph(g, keep).graph;
}

Graph circ(const Graph& g, int v) {
    check_vertex(v, g.order(), "circ");
    auto shift = [v](int u) { return u > v ? u - 1 : u; };
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges())
        if (a != v && b != v) edges.emplace_back(shift(a), shift(b));
    std::vector<int> loops;
    for (int u : g.loops())
        if (u != v) loops.push_back(shift(u));
    for (int u : g.neighbors(v)) loops.push_back(shift(u));
    return Graph(g.order() - 1, std::move(edges), std::move(loops));
}

Graph odot(const Graph& g, int v) {
    check_vertex(v, g.order(), "odot");
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        bool both_neighbors = g.has_edge(v, a) && g.has_edge(v, b);
        if (!both_neighbors) edges.emplace_back(a, b);
    }
    return Graph(g.order(), std::move(edges), g.loops());
}

std::vector<VertexSet> components(const Graph& g) {
    check_mask(0, g.order(), "components");
    std::vector<VertexSet> out;
    VertexSet seen = 0;
    for (int start = 0; start < g.order(); ++start) {
        if (vhas(seen, start)) continue;
        VertexSet comp = 0;
        std::vector<int> stack{start};
        seen |= vbit(start);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            comp |= vbit(v);
            for (int u : g.neighbors(v)) {
                if (!vhas(seen, u)) {
                    seen |= vbit(u);
                    stack.push_back(u);
                }
            }
        }
        out.push_back(comp);
    }
    return out;
}

int iso_count(const Graph& g, VertexSet w) {
    check_mask(w, g.order(), "iso_count");
    int count = 0;
    for (int v = 0; v < g.order(); ++v) {
        if (!vhas(w, v) || g.has_loop(v)) continue;
        if ((g.neighbor_mask(v) & w) == 0) ++count;
    }
    return count;
}

namespace {

void require_simple(const Graph& g, const char* what) {
    if (!g.is_simple())
        throw std::invalid_argument(std::string(what) + ": requires a simple graph");
}

} // namespace

Graph disjoint_union(const Graph& g, const Graph& h) {
    require_simple(g, "disjoint_union");
    require_simple(h, "disjoint_union");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    return Graph(g.order() + h.order(), std::move(edges));
}

Graph join(const Graph& g, const Graph& h) {
    require_simple(g, "join");
    require_simple(h, "join");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (auto [u, v] : h.edges()) edges.emplace_back(u + g.order(), v + g.order());
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) edges.emplace_back(u, v + g.order());
    return Graph(g.order() + h.order(), std::move(edges));
}

Graph corona(const Graph& g, const Graph& h) {
    require_simple(g, "corona");
    require_simple(h, "corona");
    std::vector<std::pair<int, int>> edges = g.edges();
    for (int v = 0; v < g.order(); ++v) {
        int base = g.order() + v * h.order();
        for (auto [a, b] : h.edges()) edges.emplace_back(base + a, base + b);
        for (int a = 0; a < h.order(); ++a) edges.emplace_back(v, base + a);
    }
    return Graph(g.order() + g.order() * h.order(), std::move(edges));
}

Graph expansion(const Graph& g, int r) {
    require_simple(g, "expansion");
    if (r < 1) throw std::invalid_argument("expansion: requires r >= 1");
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges())
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) edges.emplace_back(u * r + i, v * r + j);
    return Graph(g.order() * r, std::move(edges));
}

} // namespace idpoly
