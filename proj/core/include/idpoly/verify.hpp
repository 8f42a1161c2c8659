#ifndef IDPOLY_VERIFY_HPP
#define IDPOLY_VERIFY_HPP

#include <string>
#include <vector>

#include "idpoly/graph.hpp"
#include "idpoly/polynomial.hpp"

namespace idpoly {

enum class VerifyStatus { passed, failed, hypothesis_unmet };

std::string to_string(VerifyStatus s);

// Result of checking one identity on one instance. The witness carries
// both sides of the identity; it is present exactly when the check failed.
// note holds informational extras (computed values, unmet hypotheses).
struct Report {
    std::string identity;
    std::string instance;
    VerifyStatus status = VerifyStatus::passed;
    std::string witness;
    std::string note;

    bool passed() const { return status == VerifyStatus::passed; }
    std::string to_line() const;
};

// Each verifier evaluates both sides against the brute-force oracle and
// reports exact polynomial equality (or set-property truth). Instances
// violating a theorem's hypotheses yield hypothesis_unmet, not failure.

// id(G) = id(G-v) - id(G∘v) + x id(G-N[v])
Report verify_vertex_recurrence(const Graph& g, int v, const std::string& instance = "");
// id(G) = id(G-v) + id(G⊙v) - id(G⊙v - v)
Report verify_odot_recurrence(const Graph& g, int v, const std::string& instance = "");
// id(G) = id(G-e) - x^2 id(G-N[u,v]) + x id(G∘v-N[u]) + x id(G∘u-N[v])
Report verify_edge_recurrence(const Graph& g, int u, int v, const std::string& instance = "");
// N(u) = N(v), u != v: id(G) = id(G-v) + (x^2-x) id(G-N[v]-u)
Report verify_open_twin(const Graph& g, int u, int v, const std::string& instance = "");
// N[u] = N[v]: id(G) = id(G-e) + (2x-x^2) id(G-N[u])
Report verify_closed_twin(const Graph& g, int u, int v, const std::string& instance = "");
// sum_W (-1)^{|W|} id(G[W]) = (1-x)^{iso(G)}
Report verify_alternating_sum(const Graph& g, const std::string& instance = "");
// no independent dominating set contains another
Report verify_antichain(const Graph& g, const std::string& instance = "");
// min member size of ess_i(G) = δ(G); N(v) ∈ ess_i(G) for every v
Report verify_essential_lemma(const Graph& g, const std::string& instance = "");
// all five id algorithms agree
Report verify_five_way(const Graph& g, const std::string& instance = "");

// All identities over every admissible parameter choice for g.
std::vector<Report> verify_all(const Graph& g, const std::string& instance = "");

// Dispatch by identity name over all admissible parameters; names:
// vertex-recurrence, odot-recurrence, edge-recurrence, open-twin,
// closed-twin, alternating-sum, antichain, essential-lemma, five-way.
std::vector<Report> run_identity(const std::string& name, const Graph& g,
                                 const std::string& instance = "");

const std::vector<std::string>& identity_names();

} // namespace idpoly

#endif
