#include "maxcon/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <numeric>

#include "maxcon/factors.hpp"
#include "maxcon/graph_io.hpp"
#include "maxcon/matching.hpp"
#include "maxcon/rewire.hpp"

namespace maxcon {
namespace oracle {

namespace {

int guard_override() {
    if (const char* raw = std::getenv("MAXCON_GUARD_N")) {
        int value = std::atoi(raw);
        if (value > 0) return value;
    }
    return 0;
}

}  // namespace

int realization_guard() {
    int o = guard_override();
    return o > 0 ? o : 10;
}

int cut_guard() {
    int o = guard_override();
    return o > 0 ? o : 12;
}

int matching_guard() {
    int o = guard_override();
    return o > 0 ? o : 10;
}

// ---------------------------------------------------------------------------
// Exhaustive realization enumeration
// ---------------------------------------------------------------------------

namespace {

struct RealizationEnumerator {
    int n;
    std::vector<int> want;  // target degree of vertex v (index v)
    std::vector<int> rem;   // degree still to place at v
    const Graph* require;
    const Graph* forbid;
    Graph g;
    const std::function<bool(const Graph&)>* visit;
    bool stopped = false;

    // Decide pairs (u,v) in lexicographic upper-triangle order.
    bool run(int u, int v) {
        if (stopped) return false;
        if (u >= n) {
            if (rem[n] != 0) return true;
            if (!(*visit)(g)) stopped = true;
            return !stopped;
        }
        if (v > n) {
            if (rem[u] != 0) return true;  // row closed with unmet demand
            return run(u + 1, u + 2);
        }
        // Remaining slots in u's row must be able to absorb rem[u].
        if (rem[u] > n - v + 1) return true;

        const bool forced_in = require && require->has_edge(u, v);
        const bool forced_out = forbid && forbid->has_edge(u, v);
        if (forced_in && forced_out) return true;

        if (!forced_in) {
            if (!run(u, v + 1)) return false;
        }
        if (!forced_out && rem[u] > 0 && rem[v] > 0) {
            g.add_edge(u, v);
            --rem[u];
            --rem[v];
            bool keep = run(u, v + 1);
            ++rem[u];
            ++rem[v];
            g.remove_edge(u, v);
            if (!keep) return false;
        }
        return true;
    }
};

std::vector<int> vertex_order_targets(const DegreeSequence& pi) {
    std::vector<int> want(pi.size() + 1, 0);
    for (int i = 0; i < pi.size(); ++i) want[pi.original_position(i) + 1] = pi.term(i);
    return want;
}

}  // namespace

void enumerate_realizations(const DegreeSequence& pi, const std::function<bool(const Graph&)>& visit,
                            const Graph* require, const Graph* forbid) {
    const int n = pi.size();
    if (n > realization_guard())
        throw ScaleError("enumerate_realizations: n exceeds the enumeration guard");
    if (require && require->vertex_count() != n)
        throw ValidationError("enumerate_realizations: required subgraph has the wrong order");
    if (forbid && forbid->vertex_count() != n)
        throw ValidationError("enumerate_realizations: forbidden subgraph has the wrong order");
    if (!is_graphic(pi)) return;

    RealizationEnumerator e;
    e.n = n;
    e.want = vertex_order_targets(pi);
    e.rem = e.want;
    e.require = require;
    e.forbid = forbid;
    e.g = Graph(n);
    e.visit = &visit;
    if (n == 0) {
        visit(e.g);
        return;
    }
    e.run(1, 2);
}

std::vector<Graph> all_realizations(const DegreeSequence& pi, const Graph* require) {
    std::vector<Graph> out;
    enumerate_realizations(
        pi,
        [&](const Graph& g) {
            out.push_back(g);
            return true;
        },
        require);
    return out;
}

long long count_realizations(const DegreeSequence& pi, const Graph* require) {
    long long count = 0;
    enumerate_realizations(
        pi,
        [&](const Graph&) {
            ++count;
            return true;
        },
        require);
    return count;
}

// ---------------------------------------------------------------------------
// Brute-force cut and matching oracles
// ---------------------------------------------------------------------------

std::pair<int, std::vector<VertexSet>> brute_min_cut(const Graph& g) {
    const int n = g.vertex_count();
    if (n > cut_guard()) throw ScaleError("brute_min_cut: n exceeds the cut guard");
    if (n < 2) throw ValidationError("brute_min_cut requires at least two vertices");
    auto edges = g.edges();

    int best = g.edge_count() + 1;
    std::vector<VertexSet> shores;
    const unsigned long long top = 1ULL << (n - 1);
    // Canonical shores contain vertex 1: fix bit for v1, vary the rest.
    for (unsigned long long mask = 0; mask + 1 < top; ++mask) {
        unsigned long long side = (mask << 1) | 1ULL;  // bit v-1 set => v on shore
        int value = 0;
        for (auto [u, v] : edges)
            value += ((side >> (u - 1)) & 1ULL) != ((side >> (v - 1)) & 1ULL);
        if (value > best) continue;
        if (value < best) {
            best = value;
            shores.clear();
        }
        VertexSet s(n);
        for (int v = 1; v <= n; ++v)
            if ((side >> (v - 1)) & 1ULL) s.add(v);
        shores.push_back(std::move(s));
    }
    std::sort(shores.begin(), shores.end());
    return {best, shores};
}

int brute_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n > matching_guard()) throw ScaleError("brute_matching: n exceeds the matching guard");
    if (n == 0) return 0;
    std::vector<int> dp(1u << n, -1);
    dp[0] = 0;
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        int v = std::countr_zero(mask);  // lowest vertex present (0-based)
        dp[mask] = dp[mask & (mask - 1)];  // leave v unmatched
        for (int u = v + 1; u < n; ++u) {
            if (!((mask >> u) & 1u)) continue;
            if (!g.has_edge(v + 1, u + 1)) continue;
            dp[mask] = std::max(dp[mask], 1 + dp[mask & ~(1u << v) & ~(1u << u)]);
        }
    }
    return dp[(1u << n) - 1];
}

// ---------------------------------------------------------------------------
// Sequence and random instance helpers
// ---------------------------------------------------------------------------

namespace {

void descend_sequences(int n, int pos, int limit, std::vector<int>& current,
                       std::vector<DegreeSequence>& out) {
    if (pos == n) {
        DegreeSequence seq(current);
        if (is_graphic(seq)) out.push_back(std::move(seq));
        return;
    }
    for (int d = limit; d >= 0; --d) {
        current.push_back(d);
        descend_sequences(n, pos + 1, d, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<DegreeSequence> all_graphic_sequences(int n) {
    std::vector<DegreeSequence> out;
    std::vector<int> current;
    descend_sequences(n, 0, n - 1, current, out);
    return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

Graph random_connected_graph(int n, double p, std::mt19937& rng) {
    Graph g = random_graph(n, p, rng);
    while (!is_connected(g) && n >= 2) {
        auto comp = component_ids(g);
        std::vector<int> left, right;
        for (int v = 1; v <= n; ++v) (comp[v] == comp[1] ? left : right).push_back(v);
        g.add_edge(left[rng() % left.size()], right[rng() % right.size()]);
    }
    return g;
}

std::optional<Graph> random_regular_graph(int n, int k, std::mt19937& rng) {
    if (k < 0 || k >= n || (static_cast<long long>(n) * k) % 2 != 0) return std::nullopt;
    std::vector<int> stubs;
    stubs.reserve(n * k);
    for (int attempt = 0; attempt < 400; ++attempt) {
        stubs.clear();
        for (int v = 1; v <= n; ++v) stubs.insert(stubs.end(), k, v);
        std::shuffle(stubs.begin(), stubs.end(), rng);
        Graph g(n);
        bool ok = true;
        for (size_t i = 0; i + 1 < stubs.size() && ok; i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v || g.has_edge(u, v)) ok = false;
            else g.add_edge(u, v);
        }
        if (ok) return g;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Theorem checkers
// ---------------------------------------------------------------------------

namespace {

std::string seq_tag(const DegreeSequence& pi) { return "pi=(" + pi.to_string() + ")"; }

// Degree-preserving construction of a maximally edge-connected realization.
Graph edmonds_pipeline(const DegreeSequence& pi) {
    Graph g0 = realize(pi);
    RewireProblem p{g0, Graph(g0.vertex_count()), g0, RewireMode::Full};
    return rewire(p).graph;
}

CheckReport check_thm1(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm1";
    for (int n = 2; n <= options.max_n; ++n) {
        for (const DegreeSequence& pi : all_graphic_sequences(n)) {
            if (pi.min_term() < 1) continue;
            ++report.instances_checked;
            const int delta = pi.min_term();
            if (edmonds_feasible(pi, delta)) {
                Graph g = edmonds_pipeline(pi);
                if (brute_min_cut(g).first != delta)
                    report.failures.push_back(seq_tag(pi) + " pipeline missed lambda=delta");
            }
            // Claimed-infeasible targets must have no realization at all.
            for (int k = 1; k <= delta; ++k) {
                if (edmonds_feasible(pi, k)) continue;
                bool witnessed = false;
                enumerate_realizations(pi, [&](const Graph& g) {
                    if (brute_min_cut(g).first >= k) witnessed = true;
                    return !witnessed;
                });
                if (witnessed)
                    report.failures.push_back(seq_tag(pi) + " infeasibility claim wrong at k=" +
                                              std::to_string(k));
            }
        }
    }
    return report;
}

Graph spanning_forest_topped(const Graph& g, std::mt19937& rng) {
    const int n = g.vertex_count();
    Graph z(n);
    std::vector<bool> seen(n + 1, false);
    for (int root = 1; root <= n; ++root) {
        if (seen[root]) continue;
        seen[root] = true;
        std::vector<int> queue{root};
        for (size_t i = 0; i < queue.size(); ++i)
            for (int u : g.neighbors(queue[i]))
                if (!seen[u]) {
                    seen[u] = true;
                    z.add_edge(queue[i], u);
                    queue.push_back(u);
                }
    }
    auto spare = subtract_edges(g, z).edges();
    std::shuffle(spare.begin(), spare.end(), rng);
    for (auto [u, v] : spare) {
        if (z.edge_count() >= n - 1) break;
        z.add_edge(u, v);
    }
    return z;
}

CheckReport check_thm2(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm2";
    std::mt19937 rng(options.seed);
    std::uniform_real_distribution<double> pdist(0.25, 0.75);
    const int hi = std::max(4, options.max_n);
    while (report.instances_checked < options.samples) {
        int n = 4 + static_cast<int>(rng() % (hi - 3));
        Graph g0 = random_graph(n, pdist(rng), rng);
        if (g0.min_degree() < 1 || g0.edge_count() < n - 1) continue;
        Graph z0 = spanning_forest_topped(g0, rng);
        if (z0.edge_count() < n - 1) continue;
        ++report.instances_checked;

        RewireResult res = rewire({g0, Graph(n), z0, RewireMode::Full});
        const Graph& g = res.graph;
        std::string tag = "g0=" + encode_graph6(g0);
        if (!(g.degree_sequence() == g0.degree_sequence()))
            report.failures.push_back(tag + " degree sequence changed");
        if (!subtract_edges(g0, z0).is_subgraph_of(g))
            report.failures.push_back(tag + " protected edge dropped");
        if (subtract_edges(g0, g).edge_count() > z0.edge_count())
            report.failures.push_back(tag + " touched more edges than |E(Z0)|");
        if (brute_min_cut(g).first != g.min_degree())
            report.failures.push_back(tag + " lambda != delta");
    }
    return report;
}

CheckReport check_thm3(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm3";
    std::mt19937 rng(options.seed + 1);
    std::uniform_real_distribution<double> pdist(0.4, 0.8);
    const int hi = std::max(5, options.max_n);
    while (report.instances_checked < options.samples) {
        int n = 5 + static_cast<int>(rng() % (hi - 4));
        Graph g0 = random_connected_graph(n, pdist(rng), rng);
        if (g0.min_degree() < 2) continue;

        // Grow F while delta(G0 - F) >= Delta(F) survives.
        Graph f(n);
        auto pool = g0.edges();
        std::shuffle(pool.begin(), pool.end(), rng);
        int budget = 1 + static_cast<int>(rng() % n);
        for (auto [u, v] : pool) {
            if (f.edge_count() >= budget) break;
            f.add_edge(u, v);
            Graph h = subtract_edges(g0, f);
            if (h.min_degree() < f.max_degree()) f.remove_edge(u, v);
        }
        if (f.edge_count() == 0) continue;
        Graph z0 = subtract_edges(g0, f);
        if (g0.min_degree() == 1 && z0.edge_count() < n - 1) continue;
        ++report.instances_checked;

        RewireResult res = rewire({g0, f, z0, RewireMode::Relaxed});
        Graph h = subtract_edges(res.graph, f);
        std::string tag = "g0=" + encode_graph6(g0) + " f=" + encode_graph6(f);
        int lambda = n <= cut_guard() ? brute_min_cut(h).first : edge_connectivity_value(h);
        int delta = h.min_degree();
        if (lambda < delta - 1) report.failures.push_back(tag + " lambda below delta-1");
        if (delta % 2 == 0 && lambda != delta)
            report.failures.push_back(tag + " even delta but lambda < delta");
        if (!f.is_subgraph_of(res.graph)) report.failures.push_back(tag + " F edge lost");
    }
    return report;
}

CheckReport check_thm5(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm5";
    const int hi = std::min(options.max_n, 6);
    for (int n = 3; n <= hi; ++n) {
        for (const DegreeSequence& pi : all_graphic_sequences(n)) {
            if (pi.min_term() < 2) continue;
            for (int k = 1; k <= 2; ++k) {
                for (unsigned mask = 0; mask < (1u << n); ++mask) {
                    std::vector<int> kappa(n), resid(n);
                    bool feasible = true;
                    for (int i = 0; i < n && feasible; ++i) {
                        kappa[i] = k + ((mask >> i) & 1u);
                        resid[i] = pi.term(i) - kappa[i];
                        feasible = resid[i] >= 0;
                    }
                    if (!feasible) continue;
                    if (!is_graphic(DegreeSequence::sorted(kappa))) continue;
                    if (!is_graphic(DegreeSequence::sorted(resid))) continue;
                    ++report.instances_checked;

                    MaxconFactorResult res = maxcon_with_factor({pi, kappa, k});
                    std::string tag = seq_tag(pi) + " k=" + std::to_string(k) +
                                      " mask=" + std::to_string(mask);
                    if (!(res.g.degree_sequence() == pi))
                        report.failures.push_back(tag + " degrees wrong");
                    if (!res.factor.is_subgraph_of(res.g))
                        report.failures.push_back(tag + " factor not embedded");
                    if (res.factor.degrees() != kappa)
                        report.failures.push_back(tag + " factor degrees wrong");
                    if (brute_min_cut(res.g).first != res.g.min_degree())
                        report.failures.push_back(tag + " not maximally edge-connected");
                }
            }
        }
    }
    return report;
}

CheckReport check_thm6(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm6";
    std::mt19937 rng(options.seed + 2);
    const int hi = std::max(6, options.max_n);
    int stale = 0;
    while (report.instances_checked < options.samples && stale < 4000) {
        int k = 1 + static_cast<int>(rng() % 4);
        int n = k + 2 + static_cast<int>(rng() % std::max(1, hi - k - 1));
        if (n % 2 != 0 || (n * k) % 2 != 0) {
            ++stale;
            continue;
        }
        auto g = random_regular_graph(n, k, rng);
        if (!g || edge_connectivity_value(*g) < k - 1) {
            ++stale;
            continue;
        }
        stale = 0;
        ++report.instances_checked;
        if (!perfect_matching(*g))
            report.failures.push_back("g=" + encode_graph6(*g) + " no matching found");
    }
    return report;
}

void audit_decomposition(const FactorDecomposition& d, const DegreeSequence& pi, int k, int r,
                         const std::string& tag, CheckReport& report) {
    auto audit = verify_decomposition(d, pi, std::vector<int>(pi.size(), k));
    for (const std::string& v : audit.violations) report.failures.push_back(tag + " " + v);
    if (static_cast<int>(d.one_factors.size()) < r + 1)
        report.failures.push_back(tag + " fewer than r+1 matchings");
}

CheckReport check_thm7(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "thm7";
    const int hi = std::max(4, options.max_n);
    for (int n = 4; n <= hi; n += 2) {
        // Regular and near-regular sequences.
        std::vector<DegreeSequence> seqs;
        for (int d = 1; d <= n - 1; ++d) {
            if ((n * d) % 2 == 0) seqs.emplace_back(std::vector<int>(n, d));
            for (int m = 1; m < n && d + 1 <= n - 1; ++m) {
                if ((m * (d + 1) + (n - m) * d) % 2 != 0) continue;
                std::vector<int> t(n, d);
                std::fill(t.begin(), t.begin() + m, d + 1);
                seqs.emplace_back(std::move(t));
            }
        }
        for (const DegreeSequence& pi : seqs) {
            if (!is_graphic(pi)) continue;
            for (int r = 0; r <= 2; ++r) {
                // Direct case, boundary values of k only (the range interior
                // only loosens the hypothesis).
                int lo = (pi.max_term() + 1) / 2 + r;
                for (int k : {lo, pi.min_term()}) {
                    if (k < lo || k > pi.min_term() || k < 1) continue;
                    if (!is_graphic(subtract_k(pi, k))) continue;
                    ++report.instances_checked;
                    std::string tag = seq_tag(pi) + " k=" + std::to_string(k) +
                                      " r=" + std::to_string(r) + " direct";
                    audit_decomposition(peel_one_factors(pi, k, r), pi, k, r, tag, report);
                    if (k == pi.min_term()) break;  // both bounds coincide
                }
                // Complement case.
                int clo = n - 1 - pi.min_term() + 2 * r;
                for (int k : {clo, pi.min_term()}) {
                    if (k < clo || k > pi.min_term() || k < 1) continue;
                    if (!is_graphic(subtract_k(pi, k))) continue;
                    ++report.instances_checked;
                    std::string tag = seq_tag(pi) + " k=" + std::to_string(k) +
                                      " r=" + std::to_string(r) + " complement";
                    audit_decomposition(peel_complement_case(pi, k, r), pi, k, r, tag, report);
                    if (k == pi.min_term()) break;
                }
            }
        }
    }
    return report;
}

// Random graph in the lambda < delta regime: two dense blobs, few bridges.
std::optional<std::pair<Graph, VertexSet>> weak_instance(std::mt19937& rng, int max_n) {
    const int n = std::max(6, 6 + static_cast<int>(rng() % std::max(1, max_n - 5)));
    const int left = 3 + static_cast<int>(rng() % (n - 5));
    Graph g(n);
    std::bernoulli_distribution dense(0.9);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if ((u <= left) == (v <= left) && dense(rng)) g.add_edge(u, v);
    int bridges = 1 + static_cast<int>(rng() % 2);
    for (int b = 0; b < bridges; ++b) {
        int u = 1 + static_cast<int>(rng() % left);
        int v = left + 1 + static_cast<int>(rng() % (n - left));
        if (!g.has_edge(u, v)) g.add_edge(u, v);
    }
    if (!is_connected(g)) return std::nullopt;
    if (edge_connectivity_value(g) >= g.min_degree()) return std::nullopt;
    auto [lambda, cut] = edge_connectivity(g);
    VertexSet a = find_critically_weak(g, cut.side);
    return std::pair{std::move(g), std::move(a)};
}

CheckReport fuzz_lemma1(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "lemma1";
    std::mt19937 rng(options.seed + 3);
    while (report.instances_checked < options.samples) {
        auto inst = weak_instance(rng, std::max(8, options.max_n));
        if (!inst) continue;
        auto& [g, a] = *inst;
        if (a.count() < 2) continue;

        // S = A, plus the boundary when it is a smaller admissible choice.
        std::vector<VertexSet> s_choices{a};
        VertexSet gamma = boundary(g, a);
        if (gamma.count() >= 2 && !(gamma == a) &&
            cut_size(g, gamma, gamma.complement()) <= g.min_degree())
            s_choices.push_back(gamma);
        const VertexSet& s = s_choices[rng() % s_choices.size()];

        auto members = s.vertices();
        VertexSet x(g.vertex_count());
        unsigned mask = 1 + static_cast<unsigned>(rng() % ((1u << members.size()) - 2));
        for (size_t i = 0; i < members.size(); ++i)
            if ((mask >> i) & 1u) x.add(members[i]);

        ++report.instances_checked;
        auto rep = check_lemma1(g, a, s, x);
        if (!rep.holds)
            report.failures.push_back("g=" + encode_graph6(g) + " interior cut " +
                                      std::to_string(rep.interior_cut) + " below bound " +
                                      std::to_string(rep.interior_bound));
    }
    return report;
}

CheckReport fuzz_lemma2(const CheckOptions& options) {
    CheckReport report;
    report.theorem_id = "lemma2";
    std::mt19937 rng(options.seed + 4);
    while (report.instances_checked < options.samples) {
        auto inst = weak_instance(rng, std::max(8, options.max_n));
        if (!inst) continue;
        auto& [g, a] = *inst;
        ++report.instances_checked;
        auto rep = check_lemma2(g, a);
        if (!rep.holds) report.failures.push_back("g=" + encode_graph6(g) + " interior defect");
    }
    return report;
}

}  // namespace

CheckReport check_theorem(const std::string& theorem_id, const CheckOptions& options) {
    if (theorem_id == "thm1") return check_thm1(options);
    if (theorem_id == "thm2") return check_thm2(options);
    if (theorem_id == "thm3") return check_thm3(options);
    if (theorem_id == "thm5") return check_thm5(options);
    if (theorem_id == "thm6") return check_thm6(options);
    if (theorem_id == "thm7") return check_thm7(options);
    if (theorem_id == "lemma1") return fuzz_lemma1(options);
    if (theorem_id == "lemma2") return fuzz_lemma2(options);
    throw ValidationError("unknown theorem id: " + theorem_id);
}

// ---------------------------------------------------------------------------
// Conjecture explorer
// ---------------------------------------------------------------------------

namespace {

bool peel_disjoint_matchings(Graph& g, int k);

// Extend a perfect matching covering vertices < v; on completion peel it.
bool extend_matching(Graph& g, std::vector<bool>& covered, int v, int k,
                     std::vector<std::pair<int, int>>& m) {
    const int n = g.vertex_count();
    while (v <= n && covered[v]) ++v;
    if (v > n) {
        for (auto [x, y] : m) g.remove_edge(x, y);
        bool ok = peel_disjoint_matchings(g, k - 1);
        for (auto [x, y] : m) g.add_edge(x, y);
        return ok;
    }
    for (int u : g.neighbors(v)) {
        if (covered[u]) continue;
        covered[v] = covered[u] = true;
        m.emplace_back(v, u);
        if (extend_matching(g, covered, v + 1, k, m)) return true;
        m.pop_back();
        covered[v] = covered[u] = false;
    }
    return false;
}

// True iff g contains k pairwise edge-disjoint perfect matchings.
bool peel_disjoint_matchings(Graph& g, int k) {
    if (k == 0) return true;
    if (2 * static_cast<int>(maximum_matching(g).size()) != g.vertex_count()) return false;
    std::vector<bool> covered(g.vertex_count() + 1, false);
    std::vector<std::pair<int, int>> m;
    return extend_matching(g, covered, 1, k, m);
}

}  // namespace

CheckReport conjecture1_explore(int n, int k) {
    CheckReport report;
    report.theorem_id = "conjecture1";
    if (n > realization_guard())
        throw ScaleError("conjecture1_explore: n exceeds the enumeration guard");
    if (n % 2 != 0) throw ValidationError("conjecture1_explore: n must be even");
    if (k < 1) throw ValidationError("conjecture1_explore: k must be positive");

    for (const DegreeSequence& pi : all_graphic_sequences(n)) {
        if (pi.min_term() < k) continue;
        if (!is_graphic(subtract_k(pi, k))) continue;
        ++report.instances_checked;

        bool witnessed = false;
        enumerate_realizations(pi, [&](const Graph& g) {
            Graph h = g;
            if (peel_disjoint_matchings(h, k)) witnessed = true;
            return !witnessed;
        });
        if (witnessed) continue;

        // Independent route before reporting a candidate: place k disjoint
        // matchings into the complement of a realization of the lowered
        // sequence.
        enumerate_realizations(subtract_k(pi, k), [&](const Graph& g) {
            Graph c = g.complement();
            if (peel_disjoint_matchings(c, k)) witnessed = true;
            return !witnessed;
        });
        if (!witnessed)
            report.failures.push_back(seq_tag(pi) + " k=" + std::to_string(k) +
                                      " no realization with k disjoint 1-factors");
    }
    return report;
}

}  // namespace oracle
}  // namespace maxcon
