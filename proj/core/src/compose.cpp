#include "idpoly/compose.hpp"

#include <stdexcept>

#include "idpoly/algorithms.hpp"

namespace idpoly {

Polynomial id_join(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("id_join: operands must be nonempty");
    return id_recursive(g) + id_recursive(h);
}

Polynomial id_disjoint_union(const Graph& g, const Graph& h) {
    return id_recursive(g) * id_recursive(h);
}

Polynomial id_corona(const Graph& g, const Graph& h) {
    if (g.order() < 1 || h.order() < 1)
        throw std::invalid_argument("id_corona: operands must be nonempty");
    return corona_compose(independence_polynomial(g), id_recursive(h),
                          static_cast<std::size_t>(g.order()));
}

Polynomial id_corona_edgeless(const Graph& g, unsigned r) {
    if (g.order() < 1)
        throw std::invalid_argument("id_corona_edgeless: G must be nonempty");
    return corona_edgeless_compose(independence_polynomial(g),
                                   static_cast<std::size_t>(g.order()), r);
}

Polynomial id_expansion(const Graph& g, unsigned r) {
    if (r < 1) throw std::invalid_argument("id_expansion: requires r >= 1");
    return id_recursive(g).substitute_power(r);
}

} // namespace idpoly
