#pragma once

#include <optional>
#include <string>
#include <vector>

#include "maxcon/cuts.hpp"
#include "maxcon/graph.hpp"

namespace maxcon {

enum class RewireMode { Full, Relaxed };

/// (G0, F, Z0) with the hypotheses of the full or relaxed rewiring theorem.
/// F is the protected subgraph, Z0 the sacrificial spanning subgraph.
struct RewireProblem {
    Graph g0;
    Graph f;
    Graph z0;
    RewireMode mode = RewireMode::Full;
};

struct ValidationResult {
    bool ok = true;
    std::string clause;  // failed hypothesis, empty when ok
};

struct RewireCertificate {
    int final_lambda = 0;
    int final_delta = 0;
    int moves_applied = 0;
    bool preserved_edges_ok = false;
    bool mode_target_met = false;
};

struct RewireResult {
    Graph graph;
    RewireCertificate certificate;
    std::vector<ExchangeMove> trace;
};

/// Mutable search state: current realization g, its sacrificial edges z,
/// and the derived graph h = g - E(f) whose connectivity is being raised.
class RewireState {
public:
    RewireState(const RewireProblem& problem);

    const Graph& g() const { return g_; }
    const Graph& z() const { return z_; }
    const Graph& h() const { return h_; }
    const Graph& f() const { return f_; }
    const Graph& protected_edges() const { return protected_; }
    RewireMode mode() const { return mode_; }
    const std::vector<ExchangeMove>& trace() const { return trace_; }

    int target_lambda() const { return target_; }
    int delta_h() const { return delta_h_; }

    // Applies a move using two z-edges and two g-non-edges; maintains all
    // state invariants. Throws IllegalExchangeError / ValidationError.
    void apply(const ExchangeMove& move);

private:
    Graph g_, z_, h_, f_, protected_;
    RewireMode mode_;
    int target_ = 0;
    int delta_h_ = 0;
    std::vector<ExchangeMove> trace_;
};

// Checks every RewireProblem invariant; names the failed clause.
ValidationResult validate(const RewireProblem& problem);

// Claim-1 phase: merge components of h by exchanging a cycle z-edge with a
// z-edge of another component. Component count strictly decreases per move.
void connect_phase(RewireState& state);

// Proof-guided candidate moves (critically weak shores, interior vertices,
// F-avoiding partners) followed by the exhaustive stream of all legal
// z-edge pairs.
std::vector<ExchangeMove> candidate_exchanges(const RewireState& state);

// Applies the first candidate that strictly raises the lexicographic
// potential (lambda(h), -min_cut_count(h)). Returns the move, or nullopt.
std::optional<ExchangeMove> improve_step(RewireState& state);

// Full pipeline: validate, connect, climb until the mode target is met.
// The certificate is re-audited from scratch against the returned graph.
RewireResult rewire(const RewireProblem& problem);

}  // namespace maxcon
