#include "maxcon/cuts.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <set>

namespace maxcon {

namespace {

std::vector<std::pair<int, int>> crossing_edges(const Graph& g, const VertexSet& side) {
    std::vector<std::pair<int, int>> out;
    for (auto [u, v] : g.edges())
        if (side.contains(u) != side.contains(v)) out.emplace_back(u, v);
    return out;
}

Cut make_cut(const Graph& g, const VertexSet& side) {
    Cut c;
    c.side = side;
    c.crossing = crossing_edges(g, side);
    c.value = static_cast<int>(c.crossing.size());
    return c;
}

// Stoer-Wagner over an integer weight matrix; returns (value, shore of 1..n labels
// mapped through groups).
std::pair<int, std::vector<int>> stoer_wagner(int n, std::vector<std::vector<int>> w) {
    std::vector<std::vector<int>> group(n);
    for (int i = 0; i < n; ++i) group[i] = {i + 1};
    std::vector<int> active(n);
    for (int i = 0; i < n; ++i) active[i] = i;

    int best = std::numeric_limits<int>::max();
    std::vector<int> best_shore;
    while (active.size() > 1) {
        std::vector<int> adherence(active.size(), 0);
        std::vector<bool> added(active.size(), false);
        int prev = -1, last = -1;
        for (size_t step = 0; step < active.size(); ++step) {
            int pick = -1;
            for (size_t i = 0; i < active.size(); ++i)
                if (!added[i] && (pick == -1 || adherence[i] > adherence[pick]))
                    pick = static_cast<int>(i);
            added[pick] = true;
            prev = last;
            last = pick;
            for (size_t i = 0; i < active.size(); ++i)
                if (!added[i]) adherence[i] += w[active[pick]][active[i]];
        }
        int phase_cut = adherence[last];
        if (phase_cut < best) {
            best = phase_cut;
            best_shore = group[active[last]];
        }
        // merge last into prev
        int lv = active[last], pv = active[prev];
        for (int x : group[lv]) group[pv].push_back(x);
        for (size_t i = 0; i < active.size(); ++i) {
            w[pv][active[i]] += w[lv][active[i]];
            w[active[i]][pv] = w[pv][active[i]];
        }
        active.erase(active.begin() + last);
    }
    return {best, best_shore};
}

struct Dinic {
    struct Arc {
        int to, rev, cap;
    };
    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level, iter;

    explicit Dinic(int nodes) : arcs(nodes) {}

    void add_edge(int u, int v, int cap_uv, int cap_vu) {
        arcs[u].push_back({v, static_cast<int>(arcs[v].size()), cap_uv});
        arcs[v].push_back({u, static_cast<int>(arcs[u].size()) - 1, cap_vu});
    }

    bool bfs(int s, int t) {
        level.assign(arcs.size(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (const Arc& a : arcs[v]) {
                if (a.cap > 0 && level[a.to] < 0) {
                    level[a.to] = level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    int dfs(int v, int t, int f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < static_cast<int>(arcs[v].size()); ++i) {
            Arc& a = arcs[v][i];
            if (a.cap > 0 && level[v] < level[a.to]) {
                int d = dfs(a.to, t, std::min(f, a.cap));
                if (d > 0) {
                    a.cap -= d;
                    arcs[a.to][a.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    int max_flow(int s, int t, int limit = std::numeric_limits<int>::max()) {
        int flow = 0;
        while (flow < limit && bfs(s, t)) {
            iter.assign(arcs.size(), 0);
            int f;
            while (flow < limit && (f = dfs(s, t, limit - flow)) > 0) flow += f;
        }
        return flow;
    }

    std::vector<bool> residual_reachable(int s) const {
        std::vector<bool> seen(arcs.size(), false);
        std::vector<int> queue{s};
        seen[s] = true;
        for (size_t qi = 0; qi < queue.size(); ++qi)
            for (const Arc& a : arcs[queue[qi]])
                if (a.cap > 0 && !seen[a.to]) {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
        return seen;
    }
};

// Strongly connected components (iterative Tarjan); returns component id per node.
std::vector<int> scc_ids(const std::vector<std::vector<int>>& adj, int& scc_count) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> index(n, -1), low(n, 0), comp(n, -1), stack, call_node, call_edge;
    std::vector<bool> on_stack(n, false);
    int next_index = 0;
    scc_count = 0;
    for (int root = 0; root < n; ++root) {
        if (index[root] != -1) continue;
        call_node = {root};
        call_edge = {0};
        index[root] = low[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call_node.empty()) {
            int v = call_node.back();
            if (call_edge.back() < static_cast<int>(adj[v].size())) {
                int u = adj[v][call_edge.back()++];
                if (index[u] == -1) {
                    index[u] = low[u] = next_index++;
                    stack.push_back(u);
                    on_stack[u] = true;
                    call_node.push_back(u);
                    call_edge.push_back(0);
                } else if (on_stack[u]) {
                    low[v] = std::min(low[v], index[u]);
                }
            } else {
                if (low[v] == index[v]) {
                    for (;;) {
                        int u = stack.back();
                        stack.pop_back();
                        on_stack[u] = false;
                        comp[u] = scc_count;
                        if (u == v) break;
                    }
                    ++scc_count;
                }
                call_node.pop_back();
                call_edge.pop_back();
                if (!call_node.empty())
                    low[call_node.back()] = std::min(low[call_node.back()], low[v]);
            }
        }
    }
    return comp;
}

// All successor-closed SCC-DAG subsets containing comp(s) and avoiding
// comp(t); each corresponds to one minimum s-t cut (Picard-Queyranne).
void enumerate_closures(const std::vector<std::vector<bool>>& reach,
                        std::vector<int> state,  // 0 undecided, 1 in, 2 out
                        const std::function<void(const std::vector<int>&)>& emit) {
    const int k = static_cast<int>(state.size());
    int pick = -1;
    for (int i = 0; i < k && pick == -1; ++i)
        if (state[i] == 0) pick = i;
    if (pick == -1) {
        emit(state);
        return;
    }
    {
        auto next = state;
        next[pick] = 1;
        for (int j = 0; j < k; ++j)
            if (next[j] == 0 && reach[pick][j]) next[j] = 1;
        enumerate_closures(reach, std::move(next), emit);
    }
    {
        auto next = state;
        next[pick] = 2;
        for (int j = 0; j < k; ++j)
            if (next[j] == 0 && reach[j][pick]) next[j] = 2;
        enumerate_closures(reach, std::move(next), emit);
    }
}

bool has_weak_proper_subset(const Graph& g, const VertexSet& a, int delta, VertexSet* witness);

}  // namespace

std::pair<int, Cut> edge_connectivity(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw ValidationError("edge_connectivity requires at least two vertices");
    if (!is_connected(g)) {
        auto ids = component_ids(g);
        VertexSet side(n);
        for (int v = 1; v <= n; ++v)
            if (ids[v] == ids[1]) side.add(v);
        return {0, make_cut(g, side)};
    }
    std::vector<std::vector<int>> w(n, std::vector<int>(n, 0));
    for (auto [u, v] : g.edges()) w[u - 1][v - 1] = w[v - 1][u - 1] = 1;
    auto [value, shore] = stoer_wagner(n, std::move(w));
    VertexSet side(n, shore);
    return {value, make_cut(g, side)};
}

int edge_connectivity_value(const Graph& g) {
    return edge_connectivity(g).first;
}

std::vector<Cut> enumerate_min_cuts(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw ValidationError("enumerate_min_cuts requires at least two vertices");
    if (!is_connected(g)) throw DisconnectedError("enumerate_min_cuts requires a connected graph");
    const int lambda = edge_connectivity_value(g);

    std::set<std::vector<int>> shores;
    const auto edge_list = g.edges();
    const int s = 0;  // vertex 1
    for (int t = 1; t < n; ++t) {
        Dinic flow(n);
        for (auto [u, v] : edge_list) flow.add_edge(u - 1, v - 1, 1, 1);
        if (flow.max_flow(s, t, lambda + 1) != lambda) continue;

        // residual digraph
        std::vector<std::vector<int>> radj(n);
        for (int v = 0; v < n; ++v)
            for (const auto& arc : flow.arcs[v])
                if (arc.cap > 0) radj[v].push_back(arc.to);
        int k = 0;
        auto comp = scc_ids(radj, k);
        std::vector<std::vector<bool>> reach(k, std::vector<bool>(k, false));
        for (int i = 0; i < k; ++i) reach[i][i] = true;
        for (int v = 0; v < n; ++v)
            for (int u : radj[v]) reach[comp[v]][comp[u]] = true;
        // transitive closure (k is small)
        for (int m = 0; m < k; ++m)
            for (int i = 0; i < k; ++i)
                if (reach[i][m])
                    for (int j = 0; j < k; ++j)
                        if (reach[m][j]) reach[i][j] = true;

        std::vector<int> state(k, 0);
        for (int i = 0; i < k; ++i) {
            if (reach[comp[s]][i]) state[i] = 1;
            if (reach[i][comp[t]]) state[i] = 2;
        }
        enumerate_closures(reach, state, [&](const std::vector<int>& final_state) {
            std::vector<int> shore;
            for (int v = 0; v < n; ++v)
                if (final_state[comp[v]] == 1) shore.push_back(v + 1);
            shores.insert(std::move(shore));
        });
    }

    std::vector<Cut> cuts;
    cuts.reserve(shores.size());
    for (const auto& shore : shores) cuts.push_back(make_cut(g, VertexSet(n, shore)));
    return cuts;
}

int min_cut_count(const Graph& g) {
    return static_cast<int>(enumerate_min_cuts(g).size());
}

namespace {

// Cheapest cut whose shore contains `a`, lies inside A, and excludes
// `excluded` in A: contract everything outside A (plus `excluded`) into the
// sink and run a unit-capacity flow.
std::pair<int, VertexSet> min_cut_within(const Graph& g, const VertexSet& a, int va,
                                         int excluded) {
    const int n = g.vertex_count();
    std::vector<int> node(n + 1, -1);
    std::vector<int> members;
    for (int v : a.vertices())
        if (v != excluded) {
            node[v] = static_cast<int>(members.size());
            members.push_back(v);
        }
    const int sink = static_cast<int>(members.size());
    Dinic flow(sink + 1);
    std::map<std::pair<int, int>, int> sink_caps;
    for (auto [u, v] : g.edges()) {
        int nu = node[u], nv = node[v];
        if (nu >= 0 && nv >= 0) {
            flow.add_edge(nu, nv, 1, 1);
        } else if (nu >= 0) {
            sink_caps[{nu, sink}] += 1;
        } else if (nv >= 0) {
            sink_caps[{nv, sink}] += 1;
        }
    }
    for (const auto& [key, cap] : sink_caps) flow.add_edge(key.first, key.second, cap, cap);
    int value = flow.max_flow(node[va], sink);
    auto seen = flow.residual_reachable(node[va]);
    VertexSet shore(n);
    for (size_t i = 0; i < members.size(); ++i)
        if (seen[i]) shore.add(members[i]);
    return {value, shore};
}

bool has_weak_proper_subset(const Graph& g, const VertexSet& a, int delta, VertexSet* witness) {
    auto members = a.vertices();
    for (int va : members) {
        for (int excluded : members) {
            if (excluded == va) continue;
            auto [value, shore] = min_cut_within(g, a, va, excluded);
            if (value < delta) {
                if (witness) *witness = shore;
                return true;
            }
        }
    }
    return false;
}

}  // namespace

WeakClassification classify(const Graph& g, const VertexSet& a) {
    const int n = g.vertex_count();
    if (a.universe_size() != n) throw ValidationError("classify: universe mismatch");
    if (a.empty() || a.is_full())
        throw ValidationError("classify: set must be a proper nonempty subset");
    const int delta = g.min_degree();
    const int lambda = edge_connectivity_value(g);
    if (lambda >= delta)
        throw NotApplicableError("weak-set classification requires lambda(G) < delta(G)");

    WeakClassification out;
    const int value = cut_size(g, a, a.complement());
    out.is_weak = value < delta;
    out.is_minimally_weak = out.is_weak && value == lambda;
    if (out.is_weak) {
        VertexSet witness(n);
        if (has_weak_proper_subset(g, a, delta, &witness)) {
            out.is_critically_weak = false;
            out.witness = witness;
        } else {
            out.is_critically_weak = true;
        }
    }
    return out;
}

VertexSet find_critically_weak(const Graph& g, const VertexSet& a) {
    const int delta = g.min_degree();
    const int lambda = edge_connectivity_value(g);
    if (lambda >= delta)
        throw ValidationError("find_critically_weak requires lambda(G) < delta(G)");
    if (cut_size(g, a, a.complement()) >= delta)
        throw ValidationError("find_critically_weak: set is not weak");
    VertexSet current = a;
    for (;;) {
        VertexSet witness(g.vertex_count());
        if (!has_weak_proper_subset(g, current, delta, &witness)) return current;
        current = witness;
    }
}

Lemma1Report check_lemma1(const Graph& g, const VertexSet& a, const VertexSet& s,
                          const VertexSet& x) {
    const int delta = g.min_degree();
    auto cls = classify(g, a);  // also enforces the lambda < delta regime
    if (!cls.is_critically_weak) throw ValidationError("check_lemma1: A is not critically weak");
    if (!s.is_subset_of(a)) throw ValidationError("check_lemma1: S is not a subset of A");
    if (s.empty()) throw ValidationError("check_lemma1: S is empty");
    const int s_cut = cut_size(g, s, s.complement());
    if (s_cut > delta) throw ValidationError("check_lemma1: e(S, S-bar) exceeds delta");
    if (x.intersect(s).empty() || x.complement().intersect(s).empty())
        throw ValidationError("check_lemma1: X does not split S");

    Lemma1Report report;
    report.delta = delta;
    report.s_equals_a = (s == a);
    const VertexSet xc = x.complement();
    report.interior_cut = cut_size(g, x.intersect(s), xc.intersect(s));
    if (!report.s_equals_a) {
        report.interior_bound = (delta + 1) / 2;  // ceil(delta / 2)
        report.holds = report.interior_cut >= report.interior_bound;
    } else {
        report.interior_bound = (delta + 2) / 2;  // ceil((delta + 1) / 2)
        report.holds = report.interior_cut >= report.interior_bound;
        if (report.holds && report.interior_cut == report.interior_bound) {
            report.equality_case = true;
            const VertexSet ac = a.complement();
            report.side_min = std::min(cut_size(g, x.intersect(a), ac),
                                       cut_size(g, xc.intersect(a), ac));
            report.side_bound = (delta - 1) / 2;  // floor((delta - 1) / 2), delta >= 1
            report.holds = report.side_min >= report.side_bound;
        }
    }
    return report;
}

Lemma2Report check_lemma2(const Graph& g, const VertexSet& a) {
    const int delta = g.min_degree();
    const int lambda = edge_connectivity_value(g);
    if (lambda >= delta) throw ValidationError("check_lemma2 requires lambda(G) < delta(G)");
    if (a.empty() || a.is_full())
        throw ValidationError("check_lemma2: set must be a proper nonempty subset");
    if (cut_size(g, a, a.complement()) >= delta)
        throw ValidationError("check_lemma2: set is not weak");

    Lemma2Report report;
    report.interior = a.subtract(boundary(g, a));
    report.holds = !report.interior.empty();
    for (int v : report.interior.vertices()) {
        bool has_interior_neighbor = false;
        for (int u : g.neighbors(v))
            if (report.interior.contains(u)) {
                has_interior_neighbor = true;
                break;
            }
        if (!has_interior_neighbor) {
            report.isolated_interior_vertices.push_back(v);
            report.holds = false;
        }
    }
    return report;
}

}  // namespace maxcon
