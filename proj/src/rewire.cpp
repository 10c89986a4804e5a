#include "maxcon/rewire.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace maxcon {

namespace {

int mode_target(RewireMode mode, int delta_h) {
    if (mode == RewireMode::Full) return delta_h;
    return delta_h % 2 == 0 ? delta_h : delta_h - 1;  // relaxed, odd delta gives delta-1
}

}  // namespace

ValidationResult validate(const RewireProblem& p) {
    auto fail = [](std::string clause) { return ValidationResult{false, std::move(clause)}; };
    const int n = p.g0.vertex_count();
    if (p.f.vertex_count() != n || p.z0.vertex_count() != n)
        return fail("F and Z0 must share the vertex set of G0");
    if (!p.f.is_subgraph_of(p.g0)) return fail("F must be a subgraph of G0");
    if (!p.z0.is_subgraph_of(p.g0)) return fail("Z0 must be a subgraph of G0");
    for (auto [u, v] : p.f.edges())
        if (p.z0.has_edge(u, v)) return fail("F and Z0 must be edge-disjoint");
    if (p.mode == RewireMode::Full) {
        if (p.z0.min_degree() <= p.f.max_degree())
            return fail("delta(Z0) > Delta(F) required (full mode)");
    } else {
        if (!(p.z0 == subtract_edges(p.g0, p.f)))
            return fail("Z0 = G0 - E(F) required (relaxed mode)");
        if (p.z0.min_degree() < p.f.max_degree())
            return fail("delta(G0 - E(F)) >= Delta(F) required (relaxed mode)");
    }
    if (n >= 1 && p.g0.min_degree() == 1 && p.z0.edge_count() < n - 1)
        return fail("|E(Z0)| >= |V| - 1 required when delta(G0) = 1");
    return {};
}

RewireState::RewireState(const RewireProblem& problem)
    : g_(problem.g0),
      z_(problem.z0),
      h_(subtract_edges(problem.g0, problem.f)),
      f_(problem.f),
      protected_(subtract_edges(problem.g0, problem.z0)),
      mode_(problem.mode) {
    delta_h_ = h_.min_degree();
    target_ = mode_target(mode_, delta_h_);
}

void RewireState::apply(const ExchangeMove& m) {
    if (!z_.has_edge(m.a, m.a_prime) || !z_.has_edge(m.b, m.b_prime))
        throw IllegalExchangeError("rewire move must swap two z-edges");
    g_ = edge_exchange(g_, m);  // validates non-edges and distinctness
    z_.remove_edge(m.a, m.a_prime);
    z_.remove_edge(m.b, m.b_prime);
    z_.add_edge(m.a, m.b_prime);
    z_.add_edge(m.a_prime, m.b);
    h_.remove_edge(m.a, m.a_prime);
    h_.remove_edge(m.b, m.b_prime);
    h_.add_edge(m.a, m.b_prime);
    h_.add_edge(m.a_prime, m.b);
    trace_.push_back(m);
}

void connect_phase(RewireState& state) {
    const Graph& g = state.g();
    const Graph& f = state.f();
    if (state.target_lambda() < 1 || g.vertex_count() < 2) return;

    while (true) {
        const Graph& h = state.h();
        auto comp = component_ids(h);
        int comps = *std::max_element(comp.begin() + 1, comp.end());
        if (comps <= 1) return;

        auto z_edges = state.z().edges();
        // z-edges on a cycle of h first (removal keeps their component intact)
        std::vector<std::pair<int, int>> cycle_edges, other_edges;
        for (auto e : z_edges) {
            Graph probe = h;
            probe.remove_edge(e.first, e.second);
            auto pid = component_ids(probe);
            (pid[e.first] == pid[e.second] ? cycle_edges : other_edges).push_back(e);
        }
        std::vector<std::pair<int, int>> ordered = cycle_edges;
        ordered.insert(ordered.end(), other_edges.begin(), other_edges.end());

        bool applied = false;
        for (size_t i = 0; i < ordered.size() && !applied; ++i) {
            for (size_t j = 0; j < z_edges.size() && !applied; ++j) {
                auto e1 = ordered[i], e2 = z_edges[j];
                if (comp[e1.first] == comp[e2.first]) continue;
                for (auto [a, ap] : {e1, std::make_pair(e1.second, e1.first)}) {
                    for (auto [b, bp] : {e2, std::make_pair(e2.second, e2.first)}) {
                        if (f.has_edge(ap, b) || f.has_edge(a, bp)) continue;
                        if (g.has_edge(a, bp) || g.has_edge(ap, b)) continue;
                        ExchangeMove m{a, ap, b, bp};
                        Graph probe = edge_exchange(h, m);
                        if (component_count(probe) < comps) {
                            state.apply(m);
                            applied = true;
                            break;
                        }
                    }
                    if (applied) break;
                }
            }
        }
        if (!applied)
            throw TheoremContradiction(
                "connect phase found no component-merging exchange; "
                "hypotheses guarantee one exists");
    }
}

std::vector<ExchangeMove> candidate_exchanges(const RewireState& state) {
    const Graph& g = state.g();
    const Graph& h = state.h();
    const Graph& z = state.z();
    const Graph& f = state.f();
    const int n = h.vertex_count();

    std::vector<ExchangeMove> out;
    if (n < 2) return out;
    const int lambda = edge_connectivity_value(h);
    if (lambda >= state.target_lambda()) return out;

    std::set<std::tuple<int, int, int, int>> seen;
    auto push = [&](int a, int ap, int b, int bp) {
        if (seen.insert({a, ap, b, bp}).second) out.push_back({a, ap, b, bp});
    };

    // Proof-guided stream: minimally weak shore, critically weak sets on both
    // sides, interior vertices, z-neighbors avoiding F adjacency.
    auto min_cuts = enumerate_min_cuts(h);
    for (const Cut& cut : min_cuts) {
        for (int orientation = 0; orientation < 2; ++orientation) {
            VertexSet a0 = orientation == 0 ? cut.side : cut.side.complement();
            VertexSet a0c = a0.complement();
            VertexSet set_a = find_critically_weak(h, a0);
            VertexSet set_b = find_critically_weak(h, a0c);
            if (boundary(h, set_a).count() < boundary(h, set_b).count()) std::swap(set_a, set_b);

            auto interior_a = set_a.subtract(boundary(h, set_a)).vertices();
            auto interior_b = set_b.subtract(boundary(h, set_b)).vertices();

            std::vector<std::pair<int, int>> pairs;
            for (int a : interior_a)
                for (int b : interior_b)
                    if (f.has_edge(a, b)) pairs.emplace_back(a, b);
            for (int a : interior_a)
                for (int b : interior_b)
                    if (!f.has_edge(a, b)) pairs.emplace_back(a, b);

            for (auto [a, b] : pairs) {
                for (int ap : z.neighbors(a)) {
                    if (f.has_edge(ap, b)) continue;
                    for (int bp : z.neighbors(b)) {
                        if (f.has_edge(a, bp)) continue;
                        if (ap == bp || ap == b || bp == a) continue;
                        if (g.has_edge(a, bp) || g.has_edge(ap, b)) continue;
                        push(a, ap, b, bp);
                    }
                }
            }
        }
    }

    // Exhaustive fallback: every legal exchange over a pair of z-edges.
    auto z_edges = z.edges();
    for (size_t i = 0; i < z_edges.size(); ++i) {
        for (size_t j = i + 1; j < z_edges.size(); ++j) {
            auto e1 = z_edges[i], e2 = z_edges[j];
            int vs[4] = {e1.first, e1.second, e2.first, e2.second};
            bool distinct = true;
            for (int x = 0; x < 4 && distinct; ++x)
                for (int y = x + 1; y < 4; ++y)
                    if (vs[x] == vs[y]) {
                        distinct = false;
                        break;
                    }
            if (!distinct) continue;
            for (auto [a, ap] : {e1, std::make_pair(e1.second, e1.first)}) {
                for (auto [b, bp] : {e2, std::make_pair(e2.second, e2.first)}) {
                    if (g.has_edge(a, bp) || g.has_edge(ap, b)) continue;
                    push(a, ap, b, bp);
                }
            }
        }
    }
    return out;
}

std::optional<ExchangeMove> improve_step(RewireState& state) {
    const Graph& h = state.h();
    if (h.vertex_count() < 2) return std::nullopt;
    const int lambda = edge_connectivity_value(h);
    if (lambda >= state.target_lambda()) return std::nullopt;
    const int cuts = lambda > 0 ? min_cut_count(h) : 0;

    for (const ExchangeMove& m : candidate_exchanges(state)) {
        Graph probe = edge_exchange(h, m);
        const int new_lambda = edge_connectivity_value(probe);
        if (new_lambda < lambda) continue;
        if (new_lambda == lambda && (lambda == 0 || min_cut_count(probe) >= cuts)) continue;
        state.apply(m);
        return m;
    }
    return std::nullopt;
}

RewireResult rewire(const RewireProblem& problem) {
    auto verdict = validate(problem);
    if (!verdict.ok) throw HypothesisViolation(verdict.clause);

    RewireState state(problem);
    const int n = problem.g0.vertex_count();
    if (n >= 2) {
        connect_phase(state);
        const long long cap =
            static_cast<long long>(n) * n * std::max(state.delta_h(), 1) + 16;
        long long applied = 0;
        while (edge_connectivity_value(state.h()) < state.target_lambda()) {
            if (!improve_step(state))
                throw TheoremContradiction(
                    "no single exchange improves the potential below the mode target");
            if (++applied > cap)
                throw TheoremContradiction("exchange count exceeded the termination cap");
        }
    }

    // Independent audit of the returned graph.
    RewireResult result{state.g(), {}, state.trace()};
    RewireCertificate& cert = result.certificate;
    cert.moves_applied = static_cast<int>(state.trace().size());
    Graph h_final = subtract_edges(result.graph, problem.f);
    cert.final_delta = h_final.min_degree();
    cert.final_lambda = n >= 2 ? edge_connectivity_value(h_final) : 0;
    Graph kept = subtract_edges(problem.g0, problem.z0);
    cert.preserved_edges_ok =
        kept.is_subgraph_of(result.graph) && result.graph.degrees() == problem.g0.degrees();
    cert.mode_target_met =
        n < 2 || cert.final_lambda >= mode_target(problem.mode, cert.final_delta);
    if (!cert.preserved_edges_ok)
        throw TheoremContradiction("rewire audit failed: degrees or protected edges changed");
    return result;
}

}  // namespace maxcon
