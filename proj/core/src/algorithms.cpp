#include "idpoly/algorithms.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "idpoly/errors.hpp"

namespace idpoly {

namespace {

void require_simple(const Graph& g, const char* what) {
    if (!g.is_simple())
        throw InputMismatchError(std::string(what) + ": requires a simple graph (no loops)");
}

void require_order(const Graph& g, int max_n, const char* what) {
    if (g.order() > max_n)
        throw BoundError(std::string(what) + ": n = " + std::to_string(g.order()) +
                         " exceeds bound " + std::to_string(max_n));
}

// C(a, b) with the convention C(a, b) = 0 for b < 0 or b > a.
BigInt binom(long long a, long long b) {
    if (b < 0 || b > a) return 0;
    b = std::min(b, a - b);
    BigInt r = 1;
    for (long long i = 0; i < b; ++i) r = r * BigInt(a - i) / BigInt(i + 1);
    return r;
}

// Size-then-lexicographic order on vertex sets (element sequences).
bool set_less(VertexSet a, VertexSet b) {
    int ca = vcount(a), cb = vcount(b);
    if (ca != cb) return ca < cb;
    while (a && b) {
        int va = __builtin_ctzll(a), vb = __builtin_ctzll(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return false;
}

// Is w an independent dominating set of G[scope]? Loops forbid membership;
// every scope vertex outside w needs a non-loop neighbor in w.
bool is_ids(const std::vector<VertexSet>& nb, VertexSet loop_mask, VertexSet scope, VertexSet w) {
    if (w & loop_mask) return false;
    for (VertexSet t = w; t; t &= t - 1) {
        if (nb[__builtin_ctzll(t)] & w) return false;
    }
    for (VertexSet t = scope & ~w; t; t &= t - 1) {
        if ((nb[__builtin_ctzll(t)] & w) == 0) return false;
    }
    return true;
}

std::vector<VertexSet> neighbor_masks(const Graph& g) {
    std::vector<VertexSet> nb(g.order());
    for (int v = 0; v < g.order(); ++v) nb[v] = g.neighbor_mask(v);
    return nb;
}

} // namespace

Polynomial id_brute_force_on(const Graph& g, VertexSet scope, int max_n) {
    if (g.order() > 64) throw BoundError("id_brute_force: n > 64");
    if (vcount(scope) > max_n)
        throw BoundError("id_brute_force: scope size exceeds bound " + std::to_string(max_n));
    const auto nb = neighbor_masks(g);
    // nb restricted to scope so domination only sees in-scope neighbors.
    std::vector<VertexSet> nbs(nb.size());
    for (std::size_t v = 0; v < nb.size(); ++v) nbs[v] = nb[v] & scope;
    const VertexSet loops = g.loop_mask() & scope;
    std::vector<BigInt> counts(static_cast<std::size_t>(vcount(scope)) + 1, BigInt(0));
    VertexSet w = 0;
    while (true) {
        if (is_ids(nbs, loops, scope, w)) ++counts[vcount(w)];
        if (w == scope) break;
        w = (w - scope) & scope; // next subset of scope
    }
    return Polynomial(std::move(counts));
}

Polynomial id_brute_force(const Graph& g, int max_n) {
    require_order(g, max_n, "id_brute_force");
    if (g.order() > 64) throw BoundError("id_brute_force: n > 64");
    return id_brute_force_on(g, g.full_mask(), max_n);
}

std::vector<VertexSet> enumerate_mids(const Graph& g, int max_n) {
    require_order(g, max_n, "enumerate_mids");
    if (g.order() > 64) throw BoundError("enumerate_mids: n > 64");
    const auto nb = neighbor_masks(g);
    const VertexSet loops = g.loop_mask();
    const VertexSet full = g.full_mask();
    std::vector<VertexSet> out;
    VertexSet w = 0;
    while (true) {
        if (is_ids(nb, loops, full, w)) out.push_back(w);
        if (w == full) break;
        w = (w - full) & full;
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

// ---------------------------------------------------------------------------
// Recursive deletion engine.
//
// States are induced subgraphs of the input with extra loops; -v, ∘v and
// -N[v] never add edges, so a state is fully described by the pair
// (present vertices, looped vertices) over original labels. That pair is
// the memo key. Vertex sets are dynamic bitsets so graphs with n > 64
// (e.g. long paths) work too.
namespace {

class RecursiveEngine {
public:
    explicit RecursiveEngine(const Graph& g)
        : g_(g), words_(static_cast<std::size_t>(g.order() + 63) / 64) {}

    Polynomial run() {
        Bits present(words_, ~std::uint64_t{0});
        if (g_.order() % 64 != 0 && words_ > 0)
            present.back() >>= (64 - g_.order() % 64);
        if (g_.order() == 0) return Polynomial::one();
        Bits loops(words_, 0);
        for (int v : g_.loops()) bset(loops, v);
        return id_of(present, loops);
    }

    std::size_t memo_entries() const { return memo_.size(); }

private:
    using Bits = std::vector<std::uint64_t>;

    static bool btest(const Bits& b, int v) { return (b[v >> 6] >> (v & 63)) & 1u; }
    static void bset(Bits& b, int v) { b[v >> 6] |= std::uint64_t{1} << (v & 63); }
    static void breset(Bits& b, int v) { b[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
    static bool bempty(const Bits& b) {
        for (auto w : b)
            if (w) return false;
        return true;
    }
    static int bcount(const Bits& b) {
        int c = 0;
        for (auto w : b) c += __builtin_popcountll(w);
        return c;
    }
    static Bits band(const Bits& a, const Bits& b) {
        Bits r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] & b[i];
        return r;
    }

    struct BitsHash {
        std::size_t operator()(const Bits& b) const {
            std::uint64_t h = 1469598103934665603ULL;
            for (auto w : b) {
                h ^= w;
                h *= 1099511628211ULL;
            }
            return static_cast<std::size_t>(h);
        }
    };

    // Full graph value: component factorization, then the pivot rule per
    // component.
    Polynomial id_of(const Bits& present, const Bits& loops) {
        Polynomial result = Polynomial::one();
        Bits seen(words_, 0);
        for (int start = 0; start < g_.order(); ++start) {
            if (!btest(present, start) || btest(seen, start)) continue;
            Bits comp(words_, 0);
            std::vector<int> stack{start};
            bset(seen, start);
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                bset(comp, v);
                for (int u : g_.neighbors(v)) {
                    if (btest(present, u) && !btest(seen, u)) {
                        bset(seen, u);
                        stack.push_back(u);
                    }
                }
            }
            Polynomial factor = id_component(comp, band(loops, comp));
            if (factor.is_zero()) return Polynomial::zero();
            result *= factor;
        }
        return result;
    }

    Polynomial id_component(const Bits& comp, const Bits& loops) {
        Bits key = comp;
        key.insert(key.end(), loops.begin(), loops.end());
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;

        Polynomial result;
        int size = bcount(comp);
        if (size == 1) {
            // Isolated vertex: a loop makes domination impossible.
            result = bempty(loops) ? Polynomial::x() : Polynomial::zero();
        } else {
            // Pivot: unlooped vertex of maximum degree within the fragment,
            // smallest original label on ties. A component whose vertices are
            // all looped admits no independent dominating set.
            int pivot = -1, best_deg = -1;
            for (int v = 0; v < g_.order(); ++v) {
                if (!btest(comp, v) || btest(loops, v)) continue;
                int deg = 0;
                for (int u : g_.neighbors(v))
                    if (btest(comp, u)) ++deg;
                if (deg > best_deg) {
                    best_deg = deg;
                    pivot = v;
                }
            }
            if (pivot < 0) {
                result = Polynomial::zero();
            } else {
                // id(G) = id(G-v) - id(G∘v) + x id(G-N[v])
                Bits without = comp;
                breset(without, pivot);
                Polynomial a = id_of(without, loops);
                Bits circ_loops = loops;
                for (int u : g_.neighbors(pivot))
                    if (btest(comp, u)) bset(circ_loops, u);
                Polynomial b = id_of(without, circ_loops);
                Bits closed = without;
                for (int u : g_.neighbors(pivot))
                    if (btest(closed, u)) breset(closed, u);
                Polynomial d = id_of(closed, loops);
                result = a - b + Polynomial::x() * d;
            }
        }
        memo_.emplace(std::move(key), result);
        return result;
    }

    const Graph& g_;
    std::size_t words_;
    std::unordered_map<Bits, Polynomial, BitsHash> memo_;
};

} // namespace

Polynomial id_recursive(const Graph& g, RecursiveStats* stats) {
    RecursiveEngine engine(g);
    Polynomial p = engine.run();
    if (stats) stats->memo_entries = engine.memo_entries();
    return p;
}

// ---------------------------------------------------------------------------
// Subset-sum formulas (simple graphs only).

Polynomial id_inclusion_exclusion(const Graph& g, int max_n) {
    require_simple(g, "id_inclusion_exclusion");
    require_order(g, max_n, "id_inclusion_exclusion");
    const int n = g.order();
    const auto nb = neighbor_masks(g);
    // Histogram of (-1)^{|W|} by iso(G[W]); then sum c_m (1-x)^m.
    std::vector<long long> signed_count(static_cast<std::size_t>(n) + 1, 0);
    const VertexSet full = vfull(n);
    for (VertexSet w = 0;; ++w) {
        int iso = 0;
        for (VertexSet t = w; t; t &= t - 1)
            if ((nb[__builtin_ctzll(t)] & w) == 0) ++iso;
        signed_count[iso] += (vcount(w) % 2 == 0) ? 1 : -1;
        if (w == full) break;
    }
    Polynomial acc;
    for (int m = 0; m <= n; ++m)
        if (signed_count[m] != 0)
            acc += Polynomial::constant(signed_count[m]) * one_minus_x_pow(m);
    return acc;
}

Polynomial id_essential_formula(const Graph& g, int max_n) {
    require_simple(g, "id_essential_formula");
    if (g.order() == 0)
        throw std::invalid_argument("id_essential_formula: requires n >= 1");
    require_order(g, max_n, "id_essential_formula");
    const int n = g.order();
    const auto nb = neighbor_masks(g);
    const VertexSet full = vfull(n);
    // Histogram of (-1)^{|U|} by f(U) = #{v outside U : N(v) subset of U};
    // subsets with f = 0 are not i-essential and contribute nothing.
    std::vector<long long> signed_count(static_cast<std::size_t>(n) + 1, 0);
    for (VertexSet u = 0;; ++u) {
        int f = 0;
        for (VertexSet t = full & ~u; t; t &= t - 1)
            if ((nb[__builtin_ctzll(t)] & ~u) == 0) ++f;
        if (f > 0) signed_count[f] += (vcount(u) % 2 == 0) ? 1 : -1;
        if (u == full) break;
    }
    Polynomial acc;
    for (int f = 1; f <= n; ++f)
        if (signed_count[f] != 0)
            acc += Polynomial::constant(signed_count[f]) *
                   (one_minus_x_pow(f) - Polynomial::one());
    if (n % 2 != 0) acc = -acc;
    return acc;
}

Polynomial id_coefficient_formula(const Graph& g, int max_n) {
    require_simple(g, "id_coefficient_formula");
    require_order(g, max_n, "id_coefficient_formula");
    const int n = g.order();
    const auto nb = neighbor_masks(g);
    const VertexSet full = vfull(n);
    std::vector<std::vector<BigInt>> pascal(n + 1, std::vector<BigInt>(n + 1, BigInt(0)));
    for (int a = 0; a <= n; ++a) {
        pascal[a][0] = 1;
        for (int b = 1; b <= a; ++b)
            pascal[a][b] = pascal[a - 1][b - 1] + (b <= a - 1 ? pascal[a - 1][b] : BigInt(0));
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(n) + 1, BigInt(0));
    for (VertexSet w = 0;; ++w) {
        int iso = 0;
        for (VertexSet t = w; t; t &= t - 1)
            if ((nb[__builtin_ctzll(t)] & w) == 0) ++iso;
        const bool w_even = vcount(w) % 2 == 0;
        for (int k = 0; k <= iso; ++k) {
            if (w_even == (k % 2 == 0))
                coeffs[k] += pascal[iso][k];
            else
                coeffs[k] -= pascal[iso][k];
        }
        if (w == full) break;
    }
    return Polynomial(std::move(coeffs));
}

std::vector<VertexSet> enumerate_essential_sets(const Graph& g, int max_n) {
    require_simple(g, "enumerate_essential_sets");
    require_order(g, max_n, "enumerate_essential_sets");
    const int n = g.order();
    const auto nb = neighbor_masks(g);
    const VertexSet full = vfull(n);
    std::vector<VertexSet> out;
    if (n == 0) return out;
    for (VertexSet x = 0;; ++x) {
        bool essential = false;
        for (VertexSet t = full & ~x; t && !essential; t &= t - 1)
            essential = (nb[__builtin_ctzll(t)] & ~x) == 0;
        if (essential) out.push_back(x);
        if (x == full) break;
    }
    std::sort(out.begin(), out.end(), set_less);
    return out;
}

Polynomial alternating_sum_induced(const Graph& g, int max_n) {
    require_simple(g, "alternating_sum_induced");
    require_order(g, max_n, "alternating_sum_induced");
    const VertexSet full = g.full_mask();
    Polynomial acc;
    for (VertexSet w = 0;; ++w) {
        Polynomial term = id_brute_force_on(g, w, max_n);
        if (vcount(w) % 2 == 0)
            acc += term;
        else
            acc -= term;
        if (w == full) break;
    }
    return acc;
}

Polynomial independence_polynomial(const Graph& g) {
    require_simple(g, "independence_polynomial");
    if (g.order() > 64) throw BoundError("independence_polynomial: n > 64");
    const auto nb = neighbor_masks(g);
    std::unordered_map<VertexSet, Polynomial> memo;
    // ind(G) = ind(G-v) + x ind(G-N[v]), pivot of maximum residual degree.
    auto rec = [&](auto&& self, VertexSet s) -> Polynomial {
        if (s == 0) return Polynomial::one();
        if (auto it = memo.find(s); it != memo.end()) return it->second;
        int pivot = -1, best = -1;
        for (VertexSet t = s; t; t &= t - 1) {
            int v = __builtin_ctzll(t);
            int deg = vcount(nb[v] & s);
            if (deg > best) {
                best = deg;
                pivot = v;
            }
        }
        Polynomial r = self(self, s & ~vbit(pivot)) +
                       Polynomial::x() * self(self, s & ~(nb[pivot] | vbit(pivot)));
        memo.emplace(s, r);
        return r;
    };
    return rec(rec, g.full_mask());
}

// ---------------------------------------------------------------------------
// Family formulas.

namespace {

Polynomial id_path_recurrence(int n) {
    // id(P_n) = x id(P_{n-2}) + x id(P_{n-3}); P_1 = x, P_2 = 2x, P_3 = x + x^2.
    std::vector<Polynomial> p(std::max(n, 3) + 1);
    p[1] = Polynomial::x();
    p[2] = Polynomial::monomial(2, 1);
    p[3] = Polynomial::x() + Polynomial::monomial(1, 2);
    for (int i = 4; i <= n; ++i) p[i] = Polynomial::x() * (p[i - 2] + p[i - 3]);
    return p[n];
}

Polynomial id_path_closed_form(int n) {
    // sum_{k=1}^{floor((n+3)/2)} C(k+1, n-2k+1) x^k; out-of-range binomials
    // vanish, so the loose upper limit is harmless.
    Polynomial acc;
    for (int k = 1; k <= (n + 3) / 2; ++k) {
        BigInt c = binom(k + 1, n - 2 * k + 1);
        if (c != 0) acc += Polynomial::monomial(c, k);
    }
    return acc;
}

// id(C_n) for n = 3..6; derived once by brute force, regenerated in tests.
Polynomial id_cycle_base(int n) {
    switch (n) {
        case 3: return Polynomial::monomial(3, 1);
        case 4: return Polynomial::monomial(2, 2);
        case 5: return Polynomial::monomial(5, 2);
        case 6: return Polynomial::monomial(3, 2) + Polynomial::monomial(2, 3);
        default: throw std::logic_error("id_cycle_base: n must be 3..6");
    }
}

Polynomial id_cycle_recurrence(int n) {
    if (n <= 6) return id_cycle_base(n);
    // id(C_n) = 2x id(P_{n-3}) + x^2 id(P_{n-6}), n >= 7.
    return Polynomial::monomial(2, 1) * id_path_recurrence(n - 3) +
           Polynomial::monomial(1, 2) * id_path_recurrence(n - 6);
}

Polynomial id_cycle_closed_form(int n) {
    if (n < 7)
        throw std::invalid_argument("id_family: cycle closed form requires n >= 7");
    Polynomial acc;
    for (int k = 0; k <= (n - 2) / 2; ++k) {
        BigInt c = 2 * binom(k + 2, n - 2 * k - 4) + binom(k + 1, n - 2 * k - 5);
        if (c != 0) acc += Polynomial::monomial(c, k + 2);
    }
    return acc;
}

} // namespace

Polynomial id_family(const FamilySpec& spec, FamilyVariant variant) {
    switch (spec.kind) {
        case FamilyKind::edgeless:
            if (spec.n < 0) throw std::invalid_argument("id_family: edgeless needs n >= 0");
            return Polynomial::monomial(1, spec.n);
        case FamilyKind::complete:
            if (spec.n < 0) throw std::invalid_argument("id_family: complete needs n >= 0");
            if (spec.n == 0) return Polynomial::one();
            return Polynomial::monomial(spec.n, 1);
        case FamilyKind::complete_bipartite:
            if (spec.p < 1 || spec.q < 1)
                throw std::invalid_argument("id_family: complete-bipartite needs p,q >= 1");
            return Polynomial::monomial(1, spec.p) + Polynomial::monomial(1, spec.q);
        case FamilyKind::star:
            if (spec.n < 1) throw std::invalid_argument("id_family: star needs n >= 1");
            if (spec.n == 1) return Polynomial::x();
            return Polynomial::x() + Polynomial::monomial(1, spec.n - 1);
        case FamilyKind::path:
            if (spec.n < 1) throw std::invalid_argument("id_family: path needs n >= 1");
            return variant == FamilyVariant::closed_form ? id_path_closed_form(spec.n)
                                                         : id_path_recurrence(spec.n);
        case FamilyKind::cycle:
            if (spec.n < 3) throw std::invalid_argument("id_family: cycle needs n >= 3");
            return variant == FamilyVariant::closed_form ? id_cycle_closed_form(spec.n)
                                                         : id_cycle_recurrence(spec.n);
        case FamilyKind::random:
            throw std::invalid_argument("id_family: no formula for the random family");
    }
    throw std::invalid_argument("id_family: unknown kind");
}

} // namespace idpoly
