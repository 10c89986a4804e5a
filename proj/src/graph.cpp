#include "maxcon/graph.hpp"

#include <algorithm>
#include <string>

namespace maxcon {

VertexSet::VertexSet(int n, const std::vector<int>& members) : VertexSet(n) {
    for (int v : members) add(v);
}

VertexSet VertexSet::full(int n) {
    VertexSet s(n);
    for (int v = 1; v <= n; ++v) s.add(v);
    return s;
}

void VertexSet::add(int v) {
    if (v < 1 || v > n_) throw ValidationError("vertex id " + std::to_string(v) + " out of range");
    if (!bits_[v]) {
        bits_[v] = true;
        ++count_;
    }
}

void VertexSet::remove(int v) {
    if (v < 1 || v > n_) throw ValidationError("vertex id " + std::to_string(v) + " out of range");
    if (bits_[v]) {
        bits_[v] = false;
        --count_;
    }
}

VertexSet VertexSet::complement() const {
    VertexSet s(n_);
    for (int v = 1; v <= n_; ++v)
        if (!bits_[v]) s.add(v);
    return s;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
    VertexSet s(n_);
    for (int v = 1; v <= n_; ++v)
        if (bits_[v] && other.contains(v)) s.add(v);
    return s;
}

VertexSet VertexSet::subtract(const VertexSet& other) const {
    VertexSet s(n_);
    for (int v = 1; v <= n_; ++v)
        if (bits_[v] && !other.contains(v)) s.add(v);
    return s;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    for (int v = 1; v <= n_; ++v)
        if (bits_[v] && !other.contains(v)) return false;
    return true;
}

std::vector<int> VertexSet::vertices() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 1; v <= n_; ++v)
        if (bits_[v]) out.push_back(v);
    return out;
}

bool VertexSet::operator<(const VertexSet& other) const {
    return vertices() < other.vertices();
}

Graph::Graph(int n) : n_(n), adj_(n + 1, std::vector<bool>(n + 1, false)) {
    if (n < 0) throw ValidationError("vertex count must be non-negative");
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph Graph::complete(int n) {
    Graph g(n);
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw ValidationError("vertex id " + std::to_string(v) + " out of range 1.." +
                              std::to_string(n_));
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u][v];
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw ValidationError("loops are not allowed");
    if (adj_[u][v])
        throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " already present");
    adj_[u][v] = adj_[v][u] = true;
    ++edge_count_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u][v])
        throw ValidationError("edge " + std::to_string(u) + "-" + std::to_string(v) +
                              " not present");
    adj_[u][v] = adj_[v][u] = false;
    --edge_count_;
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int u = 1; u <= n_; ++u)
        if (adj_[v][u]) ++d;
    return d;
}

int Graph::min_degree() const {
    int best = n_ == 0 ? 0 : n_;
    for (int v = 1; v <= n_; ++v) best = std::min(best, degree(v));
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 1; v <= n_; ++v) best = std::max(best, degree(v));
    return best;
}

std::vector<int> Graph::degrees() const {
    std::vector<int> out(n_);
    for (int v = 1; v <= n_; ++v) out[v - 1] = degree(v);
    return out;
}

DegreeSequence Graph::degree_sequence() const {
    return DegreeSequence::sorted(degrees());
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u = 1; u <= n_; ++u)
        if (adj_[v][u]) out.push_back(u);
    return out;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adj_[u][v]) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!adj_[u][v]) g.add_edge(u, v);
    return g;
}

bool Graph::is_subgraph_of(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (adj_[u][v] && !other.adj_[u][v]) return false;
    return true;
}

int cut_size(const Graph& g, const VertexSet& x, const VertexSet& y) {
    if (x.universe_size() != g.vertex_count() || y.universe_size() != g.vertex_count())
        throw ValidationError("vertex set universe does not match graph");
    int count = 0;
    for (auto [u, v] : g.edges()) {
        bool crosses = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (crosses) ++count;
    }
    return count;
}

VertexSet boundary(const Graph& g, const VertexSet& a) {
    if (a.universe_size() != g.vertex_count())
        throw ValidationError("vertex set universe does not match graph");
    VertexSet out(g.vertex_count());
    for (int v : a.vertices()) {
        for (int u : g.neighbors(v)) {
            if (!a.contains(u)) {
                out.add(v);
                break;
            }
        }
    }
    return out;
}

Graph edge_exchange(const Graph& g, const ExchangeMove& m) {
    auto name = [](int u, int v) { return std::to_string(u) + "-" + std::to_string(v); };
    const int vs[4] = {m.a, m.a_prime, m.b, m.b_prime};
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (vs[i] == vs[j])
                throw IllegalExchangeError("exchange vertices are not distinct");
    if (!g.has_edge(m.a, m.a_prime))
        throw IllegalExchangeError("missing edge " + name(m.a, m.a_prime));
    if (!g.has_edge(m.b, m.b_prime))
        throw IllegalExchangeError("missing edge " + name(m.b, m.b_prime));
    if (g.has_edge(m.a, m.b_prime))
        throw IllegalExchangeError("edge " + name(m.a, m.b_prime) + " already present");
    if (g.has_edge(m.a_prime, m.b))
        throw IllegalExchangeError("edge " + name(m.a_prime, m.b) + " already present");
    Graph out = g;
    out.remove_edge(m.a, m.a_prime);
    out.remove_edge(m.b, m.b_prime);
    out.add_edge(m.a, m.b_prime);
    out.add_edge(m.a_prime, m.b);
    return out;
}

Graph subtract_edges(const Graph& g, const Graph& f, bool strict) {
    if (g.vertex_count() != f.vertex_count())
        throw ValidationError("subtract_edges: vertex counts differ");
    Graph out = g;
    for (auto [u, v] : f.edges()) {
        if (out.has_edge(u, v)) {
            out.remove_edge(u, v);
        } else if (strict) {
            throw ValidationError("subtract_edges: edge " + std::to_string(u) + "-" +
                                  std::to_string(v) + " absent from minuend");
        }
    }
    return out;
}

Graph union_edges(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count())
        throw ValidationError("union_edges: vertex counts differ");
    Graph out = g;
    for (auto [u, v] : h.edges()) {
        if (out.has_edge(u, v))
            throw OverlapError("union_edges: edge " + std::to_string(u) + "-" +
                               std::to_string(v) + " present in both graphs");
        out.add_edge(u, v);
    }
    return out;
}

std::vector<int> component_ids(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> id(n + 1, 0);
    int next = 0;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (id[s] != 0) continue;
        ++next;
        id[s] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (id[u] == 0) {
                    id[u] = next;
                    stack.push_back(u);
                }
            }
        }
    }
    return id;
}

int component_count(const Graph& g) {
    auto id = component_ids(g);
    int best = 0;
    for (int v = 1; v <= g.vertex_count(); ++v) best = std::max(best, id[v]);
    return best;
}

bool is_connected(const Graph& g) {
    return component_count(g) <= 1;
}

}  // namespace maxcon
