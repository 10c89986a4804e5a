#pragma once

#include <string>
#include <vector>

#include "maxcon/errors.hpp"

namespace maxcon {

class Graph;

/// Non-increasing sequence of non-negative integers d_1 >= ... >= d_n.
///
/// Terms are stored sorted; the permutation from sorted position back to the
/// caller's original position is retained so realizations can be reported in
/// input order.
class DegreeSequence {
public:
    DegreeSequence() = default;

    // Requires terms already non-increasing and non-negative.
    explicit DegreeSequence(std::vector<int> terms);

    // Accepts any order; sorts descending and records the permutation.
    static DegreeSequence sorted(const std::vector<int>& terms);

    // One text line of whitespace- or comma-separated integers.
    static DegreeSequence parse(const std::string& line);

    int size() const { return static_cast<int>(terms_.size()); }
    const std::vector<int>& terms() const { return terms_; }
    int term(int i) const { return terms_.at(i); }
    long long sum() const;
    int min_term() const { return terms_.empty() ? 0 : terms_.back(); }
    int max_term() const { return terms_.empty() ? 0 : terms_.front(); }

    // original_position(i) is the caller-supplied index (0-based) of sorted
    // term i. Identity unless constructed through sorted()/parse().
    int original_position(int i) const { return order_.at(i); }
    const std::vector<int>& order() const { return order_; }

    bool operator==(const DegreeSequence& other) const { return terms_ == other.terms_; }

    std::string to_string() const;

private:
    std::vector<int> terms_;
    std::vector<int> order_;
};

// Erdos-Gallai test: true iff some simple graph realizes seq.
bool is_graphic(const DegreeSequence& seq);

// Havel-Hakimi construction; vertex v_{i+1} gets the i-th original term.
// Throws NotGraphicError when is_graphic(seq) fails.
Graph realize(const DegreeSequence& seq);

// The D_k transform (d_1-k, ..., d_n-k). Requires d_n >= k.
DegreeSequence subtract_k(const DegreeSequence& seq, int k);

// (n-1-d_n, ..., n-1-d_1); an involution that preserves graphicality.
DegreeSequence complement_reverse(const DegreeSequence& seq);

// Edmonds feasibility: a k-edge-connected realization exists iff d_n >= k
// and, when d_n = 1, the degree sum is at least 2(n-1).
bool edmonds_feasible(const DegreeSequence& seq, int k);

}  // namespace maxcon
