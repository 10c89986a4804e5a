#pragma once

#include <string>
#include <vector>

#include "maxcon/degree_sequence.hpp"
#include "maxcon/graph.hpp"
#include "maxcon/rewire.hpp"

namespace maxcon {

/// Request for a realization of pi with a (k_1,...,k_n)-factor,
/// k <= k_i <= k+1 (Kundu's band). kappa[i] is the demand at vertex i+1.
struct FactorRequest {
    DegreeSequence pi;
    std::vector<int> kappa;
    int k = 0;
};

struct FactorDecomposition {
    Graph g;                                             // realization of pi
    Graph factor;                                        // degrees kappa_i, subgraph of g
    std::vector<std::vector<std::pair<int, int>>> one_factors;  // edge-disjoint perfect matchings
    Graph residual;                                      // factor minus the peeled matchings
};

struct DecompositionReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

// Kundu realization: g realizes pi with a kappa-factor; the residual
// g - E(factor) realizes (d_i - k_i). Constructive overlap reduction with an
// exhaustive fallback at small n.
std::pair<Graph, Graph> kundu_realize(const FactorRequest& request);

struct MaxconFactorResult {
    Graph g;
    Graph factor;
    RewireCertificate certificate;
};

// Maximally edge-connected realization containing a kappa-factor: Kundu
// followed by rewiring with F empty and Z0 the factor. Requires d_i >= 2
// and k >= 1.
MaxconFactorResult maxcon_with_factor(const FactorRequest& request);

// k-factor with at least r+1 edge-disjoint 1-factors, direct case
// k >= d_1/2 + r: repeated relaxed rewiring and matching extraction.
FactorDecomposition peel_one_factors(const DegreeSequence& pi, int k, int r);

// Complement case k >= n-1-d_n+2r: runs the direct case on the
// complement-reversed sequences and maps the factor back onto pi.
FactorDecomposition peel_complement_case(const DegreeSequence& pi, int k, int r);

// Re-audits every decomposition invariant from scratch.
DecompositionReport verify_decomposition(const FactorDecomposition& d, const DegreeSequence& pi,
                                         const std::vector<int>& kappa);

}  // namespace maxcon
