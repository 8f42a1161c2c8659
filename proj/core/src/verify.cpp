#include "idpoly/verify.hpp"

#include <algorithm>
#include <stdexcept>

#include "idpoly/algorithms.hpp"

namespace idpoly {

std::string to_string(VerifyStatus s) {
    switch (s) {
        case VerifyStatus::passed: return "passed";
        case VerifyStatus::failed: return "FAILED";
        case VerifyStatus::hypothesis_unmet: return "hypothesis-unmet";
    }
    return "?";
}

std::string Report::to_line() const {
    std::string line = identity + " | " + instance + " | " + to_string(status);
    if (!witness.empty()) line += " | " + witness;
    if (!note.empty()) line += " | " + note;
    return line;
}

namespace {

std::string with_param(const std::string& instance, const std::string& param) {
    return instance.empty() ? param : instance + " " + param;
}

Report compare(const std::string& identity, const std::string& instance, const Polynomial& lhs,
               const Polynomial& rhs) {
    Report r{identity, instance, VerifyStatus::passed, "", ""};
    if (lhs != rhs) {
        r.status = VerifyStatus::failed;
        r.witness = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
    }
    return r;
}

Report unmet(const std::string& identity, const std::string& instance, const std::string& why) {
    return {identity, instance, VerifyStatus::hypothesis_unmet, "", why};
}

bool same_open_neighborhood(const Graph& g, int u, int v) {
    return g.neighbors(u) == g.neighbors(v);
}

bool same_closed_neighborhood(const Graph& g, int u, int v) {
    VertexSet nu = g.neighbor_mask(u) | vbit(u);
    VertexSet nv = g.neighbor_mask(v) | vbit(v);
    return nu == nv;
}

} // namespace

Report verify_vertex_recurrence(const Graph& g, int v, const std::string& instance) {
    std::string inst = with_param(instance, "v=" + std::to_string(v));
    Polynomial lhs = id_brute_force(g);
    Polynomial rhs = id_brute_force(delete_vertex(g, v)) - id_brute_force(circ(g, v)) +
                     Polynomial::x() * id_brute_force(remove_closed_neighborhood(g, vbit(v)));
    return compare("vertex-recurrence", inst, lhs, rhs);
}

Report verify_odot_recurrence(const Graph& g, int v, const std::string& instance) {
    std::string inst = with_param(instance, "v=" + std::to_string(v));
    Graph gv = odot(g, v);
    Polynomial lhs = id_brute_force(g);
    Polynomial rhs =
        id_brute_force(delete_vertex(g, v)) + id_brute_force(gv) - id_brute_force(delete_vertex(gv, v));
    return compare("odot-recurrence", inst, lhs, rhs);
}

Report verify_edge_recurrence(const Graph& g, int u, int v, const std::string& instance) {
    std::string inst =
        with_param(instance, "e={" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (!g.has_edge(u, v)) return unmet("edge-recurrence", inst, "not an edge");
    Polynomial lhs = id_brute_force(g);
    // G∘v - N[u]: N[u] taken in the looped graph; label of u after circ(v).
    auto circ_minus = [&](int removed, int kept) {
        Graph c = circ(g, removed);
        int label = kept > removed ? kept - 1 : kept;
        return remove_closed_neighborhood(c, vbit(label));
    };
    Polynomial rhs = id_brute_force(delete_edge(g, u, v)) -
                     Polynomial::monomial(1, 2) *
                         id_brute_force(remove_closed_neighborhood(g, vbit(u) | vbit(v))) +
                     Polynomial::x() * id_brute_force(circ_minus(v, u)) +
                     Polynomial::x() * id_brute_force(circ_minus(u, v));
    return compare("edge-recurrence", inst, lhs, rhs);
}

Report verify_open_twin(const Graph& g, int u, int v, const std::string& instance) {
    std::string inst =
        with_param(instance, "pair=(" + std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v || !same_open_neighborhood(g, u, v))
        return unmet("open-twin", inst, "N(u) != N(v)");
    Polynomial lhs = id_brute_force(g);
    // G - N[v] - u, evaluated without re-labeling: restrict the oracle to
    // the surviving vertices.
    VertexSet rest = g.full_mask() & ~(g.closed_neighbor_mask(vbit(v)) | vbit(u));
    Polynomial tail = id_brute_force_on(g, rest);
    Polynomial x2_minus_x = Polynomial::monomial(1, 2) - Polynomial::x();
    Polynomial rhs = id_brute_force(delete_vertex(g, v)) + x2_minus_x * tail;
    return compare("open-twin", inst, lhs, rhs);
}

Report verify_closed_twin(const Graph& g, int u, int v, const std::string& instance) {
    std::string inst =
        with_param(instance, "e={" + std::to_string(u) + "," + std::to_string(v) + "}");
    if (!g.has_edge(u, v) || !same_closed_neighborhood(g, u, v))
        return unmet("closed-twin", inst, "N[u] != N[v]");
    Polynomial lhs = id_brute_force(g);
    Polynomial two_x_minus_x2 = Polynomial::monomial(2, 1) - Polynomial::monomial(1, 2);
    Polynomial rhs =
        id_brute_force(delete_edge(g, u, v)) +
        two_x_minus_x2 * id_brute_force(remove_closed_neighborhood(g, vbit(u)));
    return compare("closed-twin", inst, lhs, rhs);
}

Report verify_alternating_sum(const Graph& g, const std::string& instance) {
    if (!g.is_simple()) return unmet("alternating-sum", instance, "requires a simple graph");
    Polynomial lhs = alternating_sum_induced(g);
    Polynomial rhs = one_minus_x_pow(static_cast<std::size_t>(iso_count(g, g.full_mask())));
    Report r = compare("alternating-sum", instance, lhs, rhs);
    if (r.passed()) r.note = "value=" + lhs.to_string();
    return r;
}

Report verify_antichain(const Graph& g, const std::string& instance) {
    auto mids = enumerate_mids(g);
    for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t j = 0; j < mids.size(); ++j) {
            if (i != j && (mids[i] & mids[j]) == mids[i]) {
                Report r{"antichain", instance, VerifyStatus::failed, "", ""};
                r.witness = "set " + std::to_string(i) + " contained in set " + std::to_string(j);
                return r;
            }
        }
    }
    return {"antichain", instance, VerifyStatus::passed, "", ""};
}

Report verify_essential_lemma(const Graph& g, const std::string& instance) {
    if (!g.is_simple()) return unmet("essential-lemma", instance, "requires a simple graph");
    if (g.order() == 0) return unmet("essential-lemma", instance, "requires n >= 1");
    auto ess = enumerate_essential_sets(g);
    Report r{"essential-lemma", instance, VerifyStatus::passed, "", ""};
    int min_size = vcount(*std::min_element(
        ess.begin(), ess.end(), [](VertexSet a, VertexSet b) { return vcount(a) < vcount(b); }));
    if (min_size != g.min_degree()) {
        r.status = VerifyStatus::failed;
        r.witness = "min member size " + std::to_string(min_size) + " != delta " +
                    std::to_string(g.min_degree());
        return r;
    }
    for (int v = 0; v < g.order(); ++v) {
        VertexSet nv = g.neighbor_mask(v);
        if (std::find(ess.begin(), ess.end(), nv) == ess.end()) {
            r.status = VerifyStatus::failed;
            r.witness = "N(" + std::to_string(v) + ") not i-essential";
            return r;
        }
    }
    return r;
}

Report verify_five_way(const Graph& g, const std::string& instance) {
    if (!g.is_simple()) return unmet("five-way", instance, "requires a simple graph");
    Polynomial oracle = id_brute_force(g);
    auto check = [&](const char* name, const Polynomial& p) -> Report {
        Report r = compare("five-way", instance, oracle, p);
        if (!r.passed()) r.witness = std::string(name) + " disagrees: " + r.witness;
        return r;
    };
    if (Report r = check("recursive", id_recursive(g)); !r.passed()) return r;
    if (Report r = check("inclusion-exclusion", id_inclusion_exclusion(g)); !r.passed()) return r;
    if (Report r = check("coefficient", id_coefficient_formula(g)); !r.passed()) return r;
    if (g.order() >= 1) {
        if (Report r = check("essential", id_essential_formula(g)); !r.passed()) return r;
    }
    return {"five-way", instance, VerifyStatus::passed, "", ""};
}

std::vector<Report> verify_all(const Graph& g, const std::string& instance) {
    std::vector<Report> out;
    for (const auto& name : identity_names()) {
        auto reports = run_identity(name, g, instance);
        out.insert(out.end(), reports.begin(), reports.end());
    }
    return out;
}

const std::vector<std::string>& identity_names() {
    static const std::vector<std::string> names = {
        "vertex-recurrence", "odot-recurrence", "edge-recurrence",
        "open-twin",         "closed-twin",     "alternating-sum",
        "antichain",         "essential-lemma", "five-way",
    };
    return names;
}

std::vector<Report> run_identity(const std::string& name, const Graph& g,
                                 const std::string& instance) {
    std::vector<Report> out;
    if (name == "vertex-recurrence") {
        for (int v = 0; v < g.order(); ++v) out.push_back(verify_vertex_recurrence(g, v, instance));
    } else if (name == "odot-recurrence") {
        for (int v = 0; v < g.order(); ++v) out.push_back(verify_odot_recurrence(g, v, instance));
    } else if (name == "edge-recurrence") {
        for (auto [u, v] : g.edges()) out.push_back(verify_edge_recurrence(g, u, v, instance));
    } else if (name == "open-twin") {
        for (int u = 0; u < g.order(); ++u)
            for (int v = u + 1; v < g.order(); ++v)
                out.push_back(verify_open_twin(g, u, v, instance));
    } else if (name == "closed-twin") {
        for (auto [u, v] : g.edges()) out.push_back(verify_closed_twin(g, u, v, instance));
    } else if (name == "alternating-sum") {
        out.push_back(verify_alternating_sum(g, instance));
    } else if (name == "antichain") {
        out.push_back(verify_antichain(g, instance));
    } else if (name == "essential-lemma") {
        out.push_back(verify_essential_lemma(g, instance));
    } else if (name == "five-way") {
        out.push_back(verify_five_way(g, instance));
    } else {
        throw std::invalid_argument("unknown identity: " + name);
    }
    return out;
}

} // namespace idpoly
