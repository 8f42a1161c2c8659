#ifndef IDPOLY_COMPOSE_HPP
#define IDPOLY_COMPOSE_HPP

#include "idpoly/graph.hpp"
#include "idpoly/polynomial.hpp"

namespace idpoly {

// Product/composition formulas: each computes id of the product graph from
// the operands' polynomials, without building the product.

// id(G ∨ H) = id(G) + id(H). Operands must be nonempty.
Polynomial id_join(const Graph& g, const Graph& h);

// id(G ∪ H) = id(G) id(H).
Polynomial id_disjoint_union(const Graph& g, const Graph& h);

// id(G ∘ H) = sum_k i_k x^k id(H)^{n-k} with i_k from ind(G), n = |V(G)|.
Polynomial id_corona(const Graph& g, const Graph& h);

// id(G ∘ E_r) termwise: sum_k i_k x^{k + r(n-k)}.
Polynomial id_corona_edgeless(const Graph& g, unsigned r);

// id(exp(G, r)) = id(G, x^r).
Polynomial id_expansion(const Graph& g, unsigned r);

} // namespace idpoly

#endif
