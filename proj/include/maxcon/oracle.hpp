#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "maxcon/cuts.hpp"
#include "maxcon/graph.hpp"

namespace maxcon {
namespace oracle {

// Enumeration guards; MAXCON_GUARD_N (environment) raises or lowers all of them.
int realization_guard();  // default 10
int cut_guard();          // default 12
int matching_guard();     // default 10

struct CheckReport {
    std::string theorem_id;
    long long instances_checked = 0;
    std::vector<std::string> failures;  // serialized counterexample candidates
    bool ok() const { return failures.empty(); }
};

// Exhaustive labeled realizations of pi, optionally restricted to supergraphs
// of `require` and/or graphs avoiding `forbid`. Visits each realization once;
// stop early by returning false from the callback.
void enumerate_realizations(const DegreeSequence& pi,
                            const std::function<bool(const Graph&)>& visit,
                            const Graph* require = nullptr, const Graph* forbid = nullptr);

std::vector<Graph> all_realizations(const DegreeSequence& pi, const Graph* require = nullptr);

long long count_realizations(const DegreeSequence& pi, const Graph* require = nullptr);

// Exact global min cut by shore enumeration; shores are canonical (contain v1).
std::pair<int, std::vector<VertexSet>> brute_min_cut(const Graph& g);

// Exact maximum matching size by bitmask dynamic programming.
int brute_matching(const Graph& g);

// All non-increasing graphic sequences of length n (d_i <= n-1).
std::vector<DegreeSequence> all_graphic_sequences(int n);

// Deterministic random instance helpers (seeded; no wall-clock entropy).
Graph random_graph(int n, double p, std::mt19937& rng);
Graph random_connected_graph(int n, double p, std::mt19937& rng);
// Simple k-regular graph via pairing + repair swaps; empty optional on failure.
std::optional<Graph> random_regular_graph(int n, int k, std::mt19937& rng);

struct CheckOptions {
    int max_n = 6;
    int samples = 100;
    unsigned seed = 0;
};

// Batch checker for the in-scope theorems; theorem_id one of
// thm1, thm2, thm3, thm5, thm6, thm7, lemma1, lemma2.
CheckReport check_theorem(const std::string& theorem_id, const CheckOptions& options);

// For each graphic pi of length n with D_k(pi) graphic, search all
// realizations for k edge-disjoint 1-factors; failures list sequences with
// none (counterexample candidates, re-verified by an independent search).
CheckReport conjecture1_explore(int n, int k);

}  // namespace oracle
}  // namespace maxcon
