#include "maxcon/factors.hpp"

#include <algorithm>
#include <random>

#include "maxcon/cuts.hpp"
#include "maxcon/matching.hpp"
#include "maxcon/oracle.hpp"

namespace maxcon {

namespace {

// Degrees in the caller's vertex order: vertex original_position(i)+1 carries term i.
std::vector<int> vertex_order_degrees(const DegreeSequence& seq) {
    std::vector<int> out(seq.size());
    for (int i = 0; i < seq.size(); ++i) out[seq.original_position(i)] = seq.term(i);
    return out;
}

int overlap_count(const Graph& a, const Graph& b) {
    int count = 0;
    for (auto [u, v] : a.edges())
        if (b.has_edge(u, v)) ++count;
    return count;
}

// Overlap change if `move` were applied to `target` while `other` is fixed.
int overlap_delta(const Graph& other, const ExchangeMove& m) {
    int delta = 0;
    if (other.has_edge(m.a, m.a_prime)) --delta;
    if (other.has_edge(m.b, m.b_prime)) --delta;
    if (other.has_edge(m.a, m.b_prime)) ++delta;
    if (other.has_edge(m.a_prime, m.b)) ++delta;
    return delta;
}

bool legal_exchange(const Graph& g, const ExchangeMove& m) {
    const int vs[4] = {m.a, m.a_prime, m.b, m.b_prime};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j]) return false;
    return g.has_edge(m.a, m.a_prime) && g.has_edge(m.b, m.b_prime) &&
           !g.has_edge(m.a, m.b_prime) && !g.has_edge(m.a_prime, m.b);
}

// First exchange in `target` that strictly lowers the overlap with `other`.
std::optional<ExchangeMove> improving_overlap_move(const Graph& target, const Graph& other) {
    auto edges = target.edges();
    for (auto [u, v] : edges) {
        if (!other.has_edge(u, v)) continue;  // focus on overlapping edges
        for (auto [x, y] : edges) {
            if (x == u && y == v) continue;
            for (ExchangeMove m : {ExchangeMove{u, v, x, y}, ExchangeMove{u, v, y, x}}) {
                if (legal_exchange(target, m) && overlap_delta(other, m) < 0) return m;
            }
        }
    }
    return std::nullopt;
}

// Exhaustive fallback: realize kappa and the residual on disjoint edge sets.
std::optional<std::pair<Graph, Graph>> exhaustive_disjoint_pair(const DegreeSequence& kappa_seq,
                                                                const DegreeSequence& resid_seq) {
    std::optional<std::pair<Graph, Graph>> found;
    oracle::enumerate_realizations(kappa_seq, [&](const Graph& k) {
        bool embedded = false;
        oracle::enumerate_realizations(
            resid_seq,
            [&](const Graph& gp) {
                found = {gp, k};
                embedded = true;
                return false;
            },
            nullptr, &k);
        return !embedded;
    });
    return found;
}

}  // namespace

std::pair<Graph, Graph> kundu_realize(const FactorRequest& request) {
    const int n = request.pi.size();
    if (static_cast<int>(request.kappa.size()) != n)
        throw ValidationError("kundu_realize: kappa length differs from pi");
    for (int ki : request.kappa)
        if (ki < request.k || ki > request.k + 1)
            throw ValidationError("kundu_realize: kappa term outside {k, k+1}");
    if (!is_graphic(request.pi)) throw NotGraphicError("kundu_realize: pi is not graphic");

    auto degrees = vertex_order_degrees(request.pi);
    std::vector<int> residual(n);
    for (int i = 0; i < n; ++i) {
        residual[i] = degrees[i] - request.kappa[i];
        if (residual[i] < 0)
            throw ValidationError("kundu_realize: kappa exceeds a degree term");
    }
    DegreeSequence kappa_seq = DegreeSequence::sorted(request.kappa);
    DegreeSequence resid_seq = DegreeSequence::sorted(residual);
    if (!is_graphic(resid_seq))
        throw NotGraphicError("kundu_realize: (d_i - k_i) is not graphic");

    Graph factor = realize(kappa_seq);
    Graph rest = realize(resid_seq);

    // Reduce |E(rest) ∩ E(factor)| to zero by exchanges applied alternately;
    // a strict improvement is preferred, plateau moves shake loose stalls.
    std::mt19937 rng(0x6b756e64u);
    const long long step_cap = 2000 + 400LL * n;
    long long steps = 0;
    int overlap = overlap_count(rest, factor);
    while (overlap > 0 && steps < step_cap) {
        ++steps;
        if (auto m = improving_overlap_move(rest, factor)) {
            rest = edge_exchange(rest, *m);
            overlap += overlap_delta(factor, *m);
            continue;
        }
        if (auto m = improving_overlap_move(factor, rest)) {
            factor = edge_exchange(factor, *m);
            overlap += overlap_delta(rest, *m);
            continue;
        }
        // Plateau: one random overlap-neutral exchange.
        bool moved = false;
        for (int attempt = 0; attempt < 800 && !moved; ++attempt) {
            bool on_rest = rng() & 1;
            Graph& target = on_rest ? rest : factor;
            const Graph& other = on_rest ? factor : rest;
            auto edges = target.edges();
            if (edges.size() < 2) continue;
            auto e1 = edges[rng() % edges.size()];
            auto e2 = edges[rng() % edges.size()];
            ExchangeMove m = (rng() & 1) ? ExchangeMove{e1.first, e1.second, e2.first, e2.second}
                                         : ExchangeMove{e1.first, e1.second, e2.second, e2.first};
            if (!legal_exchange(target, m) || overlap_delta(other, m) > 0) continue;
            target = edge_exchange(target, m);
            moved = true;
        }
        if (!moved) break;
        overlap = overlap_count(rest, factor);
    }

    if (overlap > 0) {
        if (n <= oracle::realization_guard()) {
            if (auto pair = exhaustive_disjoint_pair(kappa_seq, resid_seq)) {
                rest = pair->first;
                factor = pair->second;
                overlap = 0;
            }
        }
        if (overlap > 0)
            throw TheoremContradiction(
                "kundu_realize: could not separate factor and residual edge sets");
    }
    return {union_edges(rest, factor), factor};
}

MaxconFactorResult maxcon_with_factor(const FactorRequest& request) {
    if (request.k < 1) throw HypothesisViolation("k >= 1 required");
    if (request.pi.size() > 0 && request.pi.min_term() < 2)
        throw HypothesisViolation("d_i >= 2 required");
    auto [g, factor] = kundu_realize(request);

    RewireProblem p{g, Graph(g.vertex_count()), factor, RewireMode::Full};
    RewireResult res = rewire(p);

    Graph kept = subtract_edges(g, factor);
    Graph new_factor = subtract_edges(res.graph, kept);
    for (int v = 1; v <= g.vertex_count(); ++v)
        if (new_factor.degree(v) != request.kappa[v - 1])
            throw TheoremContradiction("maxcon_with_factor: factor degree audit failed");
    return {res.graph, new_factor, res.certificate};
}

namespace {

FactorDecomposition peel_loop(const DegreeSequence& pi, int k, int r) {
    const int n = pi.size();
    FactorRequest request{pi, std::vector<int>(n, k), k};
    auto [g, factor] = kundu_realize(request);

    Graph h = factor;                       // current (k-i)-factor
    Graph fixed = subtract_edges(g, factor);  // non-factor edges plus peeled matchings
    std::vector<std::vector<std::pair<int, int>>> matchings;

    for (int i = 0; i <= r; ++i) {
        if (h.min_degree() < fixed.max_degree() + 2 * (r - i))
            throw TheoremContradiction("peel loop invariant delta(H) >= Delta(F) + 2(r-i) failed");
        const int needed = k - i - 1;
        if (needed >= 1 && edge_connectivity_value(h) < needed) {
            RewireProblem p{g, fixed, h, RewireMode::Relaxed};
            RewireResult res = rewire(p);
            g = res.graph;
            h = subtract_edges(g, fixed);
        }
        auto matching = perfect_matching(h);
        if (!matching)
            throw TheoremContradiction(
                "peel: no perfect matching in a factor the Berge bound covers");
        matchings.push_back(*matching);
        for (auto [u, v] : *matching) {
            h.remove_edge(u, v);
            fixed.add_edge(u, v);
        }
    }

    Graph final_factor = h;
    for (const auto& matching : matchings)
        for (auto [u, v] : matching) final_factor.add_edge(u, v);
    return {g, final_factor, matchings, h};
}

void check_common_peel_preconditions(const DegreeSequence& pi, int k, int r) {
    if (pi.size() % 2 != 0) throw PreconditionFailed("peel: n must be even");
    if (r < 0) throw PreconditionFailed("peel: r must be non-negative");
    if (k < 1) throw PreconditionFailed("peel: k must be positive");
    if (!is_graphic(pi)) throw NotGraphicError("peel: pi is not graphic");
    if (pi.min_term() < k || !is_graphic(subtract_k(pi, k)))
        throw PreconditionFailed("peel: D_k(pi) must be graphic");
}

}  // namespace

FactorDecomposition peel_one_factors(const DegreeSequence& pi, int k, int r) {
    check_common_peel_preconditions(pi, k, r);
    if (2 * k < pi.max_term() + 2 * r)
        throw PreconditionFailed("peel: k >= d_1/2 + r required");
    return peel_loop(pi, k, r);
}

FactorDecomposition peel_complement_case(const DegreeSequence& pi, int k, int r) {
    check_common_peel_preconditions(pi, k, r);
    const int n = pi.size();
    if (k < n - 1 - pi.min_term() + 2 * r)
        throw PreconditionFailed("peel: k >= n-1-d_n+2r required");

    // Direct case on the reverse-complement shift (n-1-d_n+k, ..., n-1-d_1+k);
    // its D_k is the reverse complement of pi.
    DegreeSequence rho = complement_reverse(subtract_k(pi, k));
    FactorDecomposition lifted = peel_loop(rho, k, r);

    // Map back: complement the realization, reverse the labels, and carry the
    // factor across; the factor is edge-disjoint from the complement.
    auto relabel = [&](int v) { return pi.original_position(n - v) + 1; };
    Graph g(n), factor(n), residual(n);
    for (auto [u, v] : lifted.g.complement().edges()) g.add_edge(relabel(u), relabel(v));
    for (auto [u, v] : lifted.factor.edges()) {
        factor.add_edge(relabel(u), relabel(v));
        g.add_edge(relabel(u), relabel(v));
    }
    for (auto [u, v] : lifted.residual.edges()) residual.add_edge(relabel(u), relabel(v));
    std::vector<std::vector<std::pair<int, int>>> matchings;
    for (const auto& matching : lifted.one_factors) {
        std::vector<std::pair<int, int>> mapped;
        for (auto [u, v] : matching) {
            int a = relabel(u), b = relabel(v);
            mapped.emplace_back(std::min(a, b), std::max(a, b));
        }
        std::sort(mapped.begin(), mapped.end());
        matchings.push_back(std::move(mapped));
    }
    return {g, factor, matchings, residual};
}

DecompositionReport verify_decomposition(const FactorDecomposition& d, const DegreeSequence& pi,
                                         const std::vector<int>& kappa) {
    DecompositionReport report;
    auto flag = [&](const std::string& msg) { report.violations.push_back(msg); };
    const int n = d.g.vertex_count();

    if (pi.size() != n || static_cast<int>(kappa.size()) != n) {
        flag("vertex count disagrees with pi/kappa length");
        return report;
    }
    if (!(d.g.degree_sequence() == pi)) flag("realization degrees do not match pi");
    if (!d.factor.is_subgraph_of(d.g)) flag("factor is not a subgraph of the realization");
    for (int v = 1; v <= n; ++v)
        if (d.factor.degree(v) != kappa[v - 1]) {
            flag("factor degree at vertex " + std::to_string(v) + " is not kappa");
            break;
        }

    Graph rebuilt = d.residual;
    bool partition_ok = d.residual.is_subgraph_of(d.factor);
    for (size_t i = 0; i < d.one_factors.size() && partition_ok; ++i) {
        std::vector<bool> covered(n + 1, false);
        for (auto [u, v] : d.one_factors[i]) {
            if (u < 1 || v < 1 || u > n || v > n || covered[u] || covered[v]) {
                flag("matching " + std::to_string(i) + " does not cover every vertex once");
                partition_ok = false;
                break;
            }
            covered[u] = covered[v] = true;
            if (!d.factor.has_edge(u, v)) {
                flag("matching " + std::to_string(i) + " leaves the factor");
                partition_ok = false;
                break;
            }
            if (rebuilt.has_edge(u, v)) {
                flag("matching " + std::to_string(i) + " overlaps earlier parts");
                partition_ok = false;
                break;
            }
            rebuilt.add_edge(u, v);
        }
        if (partition_ok)
            for (int v = 1; v <= n; ++v)
                if (!covered[v]) {
                    flag("matching " + std::to_string(i) + " misses vertex " + std::to_string(v));
                    partition_ok = false;
                    break;
                }
    }
    if (partition_ok && !(rebuilt == d.factor))
        flag("residual plus matchings do not partition the factor");
    return report;
}

}  // namespace maxcon
