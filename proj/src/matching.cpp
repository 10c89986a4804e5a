#include "maxcon/matching.hpp"

#include <algorithm>
#include <queue>

namespace maxcon {

namespace {

// Blossom algorithm, augmenting-path search with base contraction. O(V^3).
class Blossom {
public:
    explicit Blossom(const Graph& g) : n_(g.vertex_count()), adj_(n_ + 1) {
        for (auto [u, v] : g.edges()) {
            adj_[u].push_back(v);
            adj_[v].push_back(u);
        }
        match_.assign(n_ + 1, 0);
    }

    std::vector<std::pair<int, int>> run() {
        for (int v = 1; v <= n_; ++v)
            if (match_[v] == 0) augment_from(v);
        std::vector<std::pair<int, int>> out;
        for (int v = 1; v <= n_; ++v)
            if (match_[v] > v) out.emplace_back(v, match_[v]);
        return out;
    }

private:
    int lca(int a, int b) {
        std::vector<bool> used(n_ + 1, false);
        for (;;) {
            a = base_[a];
            used[a] = true;
            if (match_[a] == 0) break;
            a = parent_[match_[a]];
        }
        for (;;) {
            b = base_[b];
            if (used[b]) return b;
            b = parent_[match_[b]];
        }
    }

    void mark_path(int v, int b, int child, std::vector<bool>& blossom) {
        while (base_[v] != b) {
            blossom[base_[v]] = true;
            blossom[base_[match_[v]]] = true;
            parent_[v] = child;
            child = match_[v];
            v = parent_[match_[v]];
        }
    }

    int find_path(int root) {
        parent_.assign(n_ + 1, 0);
        base_.resize(n_ + 1);
        for (int v = 0; v <= n_; ++v) base_[v] = v;
        std::vector<bool> used(n_ + 1, false);
        used[root] = true;
        std::queue<int> queue;
        queue.push(root);
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop();
            for (int to : adj_[v]) {
                if (base_[v] == base_[to] || match_[v] == to) continue;
                if (to == root || (match_[to] != 0 && parent_[match_[to]] != 0)) {
                    int b = lca(v, to);
                    std::vector<bool> blossom(n_ + 1, false);
                    mark_path(v, b, to, blossom);
                    mark_path(to, b, v, blossom);
                    for (int i = 1; i <= n_; ++i) {
                        if (blossom[base_[i]]) {
                            base_[i] = b;
                            if (!used[i]) {
                                used[i] = true;
                                queue.push(i);
                            }
                        }
                    }
                } else if (parent_[to] == 0) {
                    parent_[to] = v;
                    if (match_[to] == 0) return to;
                    used[match_[to]] = true;
                    queue.push(match_[to]);
                }
            }
        }
        return 0;
    }

    void augment_from(int root) {
        int v = find_path(root);
        while (v != 0) {
            int pv = parent_[v];
            int ppv = match_[pv];
            match_[v] = pv;
            match_[pv] = v;
            v = ppv;
        }
    }

    int n_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> match_, parent_, base_;
};

}  // namespace

std::vector<std::pair<int, int>> maximum_matching(const Graph& g) {
    return Blossom(g).run();
}

std::optional<std::vector<std::pair<int, int>>> perfect_matching(const Graph& g) {
    const int n = g.vertex_count();
    if (n % 2 != 0) return std::nullopt;
    auto matching = maximum_matching(g);
    if (static_cast<int>(matching.size()) * 2 != n) return std::nullopt;
    return matching;
}

}  // namespace maxcon
