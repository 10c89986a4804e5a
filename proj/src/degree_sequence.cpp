#include "maxcon/degree_sequence.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "maxcon/graph.hpp"

namespace maxcon {

DegreeSequence::DegreeSequence(std::vector<int> terms) : terms_(std::move(terms)) {
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i] < 0) throw ValidationError("degree sequence has a negative term");
        if (i > 0 && terms_[i] > terms_[i - 1])
            throw ValidationError("degree sequence is not non-increasing");
    }
    order_.resize(terms_.size());
    std::iota(order_.begin(), order_.end(), 0);
}

DegreeSequence DegreeSequence::sorted(const std::vector<int>& terms) {
    std::vector<int> order(terms.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return terms[a] > terms[b]; });
    std::vector<int> sorted_terms(terms.size());
    for (size_t i = 0; i < terms.size(); ++i) sorted_terms[i] = terms[order[i]];
    DegreeSequence seq(std::move(sorted_terms));
    seq.order_ = std::move(order);
    return seq;
}

DegreeSequence DegreeSequence::parse(const std::string& line) {
    std::string cleaned = line;
    std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
    std::istringstream in(cleaned);
    std::vector<int> terms;
    std::string token;
    while (in >> token) {
        try {
            size_t pos = 0;
            int value = std::stoi(token, &pos);
            if (pos != token.size()) throw std::invalid_argument(token);
            terms.push_back(value);
        } catch (const std::exception&) {
            throw ValidationError("cannot parse degree term '" + token + "'");
        }
    }
    return DegreeSequence::sorted(terms);
}

long long DegreeSequence::sum() const {
    return std::accumulate(terms_.begin(), terms_.end(), 0LL);
}

std::string DegreeSequence::to_string() const {
    std::ostringstream out;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (i) out << ',';
        out << terms_[i];
    }
    return out.str();
}

bool is_graphic(const DegreeSequence& seq) {
    const auto& d = seq.terms();
    const int n = seq.size();
    if (n == 0) return true;
    if (d.front() > n - 1) return false;
    if (seq.sum() % 2 != 0) return false;

    // Erdos-Gallai with suffix sums. For each k:
    //   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k)
    std::vector<long long> suffix(n + 1, 0);
    for (int i = n - 1; i >= 0; --i) suffix[i] = suffix[i + 1] + d[i];
    long long prefix = 0;
    for (int k = 1; k <= n; ++k) {
        prefix += d[k - 1];
        // first index >= k whose term is <= k (terms are non-increasing)
        auto it = std::lower_bound(d.begin() + k, d.end(), k,
                                   [](int term, int bound) { return term > bound; });
        long long idx = it - d.begin();
        long long rhs = static_cast<long long>(k) * (k - 1) +
                        static_cast<long long>(k) * (idx - k) + suffix[idx];
        if (prefix > rhs) return false;
    }
    return true;
}

Graph realize(const DegreeSequence& seq) {
    if (!is_graphic(seq)) throw NotGraphicError("sequence " + seq.to_string() + " is not graphic");
    const int n = seq.size();
    Graph g(n);

    // Havel-Hakimi: repeatedly satisfy the largest residual degree.
    // residual[i] pairs with sorted position i; vertex label is
    // original_position(i)+1 so output respects the caller's order.
    std::vector<std::pair<int, int>> residual(n);  // (remaining degree, sorted pos)
    for (int i = 0; i < n; ++i) residual[i] = {seq.term(i), i};

    for (int round = 0; round < n; ++round) {
        std::sort(residual.begin(), residual.end(), [](const auto& a, const auto& b) {
            return a.first != b.first ? a.first > b.first : a.second < b.second;
        });
        if (residual[0].first == 0) break;
        int take = residual[0].first;
        int u = seq.original_position(residual[0].second) + 1;
        if (take > n - 1 - round) throw TheoremContradiction("Havel-Hakimi ran out of vertices");
        residual[0].first = 0;
        for (int j = 1; j <= take; ++j) {
            if (residual[j].first <= 0)
                throw TheoremContradiction("Havel-Hakimi hit an exhausted vertex");
            residual[j].first -= 1;
            int v = seq.original_position(residual[j].second) + 1;
            g.add_edge(u, v);
        }
    }
    return g;
}

DegreeSequence subtract_k(const DegreeSequence& seq, int k) {
    if (k < 0) throw ValidationError("subtract_k: k must be non-negative");
    if (seq.size() > 0 && seq.min_term() < k)
        throw ValidationError("subtract_k: smallest term is below k");
    std::vector<int> terms = seq.terms();
    for (int& t : terms) t -= k;
    return DegreeSequence(std::move(terms));
}

DegreeSequence complement_reverse(const DegreeSequence& seq) {
    const int n = seq.size();
    std::vector<int> terms(n);
    for (int i = 0; i < n; ++i) terms[i] = n - 1 - seq.term(n - 1 - i);
    return DegreeSequence(std::move(terms));
}

bool edmonds_feasible(const DegreeSequence& seq, int k) {
    if (k <= 0) throw ValidationError("edmonds_feasible: k must be positive");
    if (!is_graphic(seq)) throw ValidationError("edmonds_feasible: sequence is not graphic");
    const int n = seq.size();
    if (n < 2) return false;
    if (seq.min_term() < k) return false;
    if (seq.min_term() == 1 && seq.sum() < 2LL * (n - 1)) return false;
    return true;
}

}  // namespace maxcon
