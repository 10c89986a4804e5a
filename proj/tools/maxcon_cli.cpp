// Command-line surface for the degree-sequence / edge-connectivity toolkit.
//
// Exit codes: 0 success, 1 input parse error, 2 hypothesis or validation
// failure, 3 internal contradiction (a state the underlying results rule out).

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcon/cuts.hpp"
#include "maxcon/degree_sequence.hpp"
#include "maxcon/factors.hpp"
#include "maxcon/graph_io.hpp"
#include "maxcon/matching.hpp"
#include "maxcon/oracle.hpp"
#include "maxcon/rewire.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitHypothesis = 2;
constexpr int kExitContradiction = 3;

json graph_json(const maxcon::Graph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges()) edges.push_back({u, v});
    return json{{"n", g.vertex_count()}, {"graph6", maxcon::encode_graph6(g)}, {"edges", edges}};
}

json certificate_json(const maxcon::RewireCertificate& c) {
    return json{{"final_lambda", c.final_lambda},
                {"final_delta", c.final_delta},
                {"moves_applied", c.moves_applied},
                {"preserved_edges_ok", c.preserved_edges_ok},
                {"mode_target_met", c.mode_target_met}};
}

json trace_json(const std::vector<maxcon::ExchangeMove>& trace) {
    json out = json::array();
    for (const auto& m : trace) out.push_back({m.a, m.a_prime, m.b, m.b_prime});
    return out;
}

json report_json(const maxcon::oracle::CheckReport& rep, unsigned seed) {
    return json{{"schema", 1},
                {"seed", seed},
                {"theorem", rep.theorem_id},
                {"instances_checked", rep.instances_checked},
                {"failures", rep.failures},
                {"ok", rep.ok()}};
}

void emit(const json& j, const std::string& path) {
    if (path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(path);
        out << j.dump(2) << "\n";
    }
}

void emit_graph(const maxcon::Graph& g, const std::string& path) {
    if (path.empty())
        std::cout << maxcon::write_edge_list(g);
    else
        maxcon::write_graph_file(g, path);
}

// An independent audit recomputes every certificate field from the graph
// about to be emitted; a mismatch is an internal contradiction.
void audit_certificate(const maxcon::RewireProblem& problem, const maxcon::RewireResult& res) {
    maxcon::Graph h = maxcon::subtract_edges(res.graph, problem.f);
    int lambda = res.graph.vertex_count() >= 2 ? maxcon::edge_connectivity_value(h) : 0;
    if (lambda != res.certificate.final_lambda || h.min_degree() != res.certificate.final_delta)
        throw maxcon::TheoremContradiction("emitted certificate disagrees with audit pass");
}

struct SharedOptions {
    unsigned seed = 0;
    std::string out_path;
    std::string json_path;
};

// Input-parsing failures exit with code 1; later pipeline validation with 2.
struct InputParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

maxcon::DegreeSequence parse_sequence(const std::string& text) {
    try {
        return maxcon::DegreeSequence::parse(text);
    } catch (const maxcon::ValidationError& e) {
        throw InputParseError(e.what());
    }
}

maxcon::Graph read_graph(const std::string& path) {
    try {
        return maxcon::read_graph_file(path);
    } catch (const maxcon::ValidationError& e) {
        throw InputParseError(e.what());
    }
}

int run(int argc, char** argv) {
    CLI::App app{"degree-sequence realization, edge-connectivity rewiring, and factor tools"};
    app.require_subcommand(1);
    SharedOptions shared;

    // check SEQ [-k K]
    std::string seq_text, kappa_text;
    int k_flag = -1, r_flag = 0;
    auto* check = app.add_subcommand("check", "graphicality and connectivity feasibility");
    check->add_option("sequence", seq_text, "comma-separated degree sequence")->required();
    check->add_option("-k", k_flag, "edge-connectivity target");

    auto* realize_cmd = app.add_subcommand("realize", "build one realization");
    realize_cmd->add_option("sequence", seq_text)->required();
    realize_cmd->add_option("-o,--out", shared.out_path, "output graph file (.g6 or edge list)");

    std::string g_path, f_path, z_path, mode_text = "full";
    auto* rewire_cmd = app.add_subcommand("rewire", "raise edge connectivity by edge exchanges");
    rewire_cmd->add_option("-g,--graph", g_path, "input graph")->required();
    rewire_cmd->add_option("-f,--protected", f_path, "subgraph whose edges must survive");
    rewire_cmd->add_option("-z,--sacrificial", z_path, "subgraph whose edges may be rewired");
    rewire_cmd->add_option("--mode", mode_text)->check(CLI::IsMember({"full", "relaxed"}));
    rewire_cmd->add_option("-o,--out", shared.out_path);
    rewire_cmd->add_option("--json", shared.json_path, "certificate + move trace report");

    auto* kundu = app.add_subcommand("kundu", "realization with a prescribed factor");
    kundu->add_option("sequence", seq_text)->required();
    kundu->add_option("kappa", kappa_text, "comma-separated factor degrees")->required();
    kundu->add_option("--json", shared.json_path);

    auto* mf = app.add_subcommand("maxcon-factor",
                                  "maximally edge-connected realization with a factor");
    mf->add_option("sequence", seq_text)->required();
    mf->add_option("kappa", kappa_text)->required();
    mf->add_option("--json", shared.json_path);

    bool complement_flag = false;
    auto* peel = app.add_subcommand("peel", "k-factor with r+1 edge-disjoint perfect matchings");
    peel->add_option("sequence", seq_text)->required();
    peel->add_option("-k", k_flag, "factor degree")->required();
    peel->add_option("-r", r_flag, "extra matchings beyond the first");
    peel->add_flag("--complement", complement_flag, "use the dense-sequence hypothesis");
    peel->add_option("--json", shared.json_path);

    std::string theorem_id;
    int max_n = 6, samples = 100, conj_n = 0, conj_k = 1;
    auto* oracle_cmd = app.add_subcommand("oracle", "brute-force sweeps and batch checks");
    oracle_cmd->add_option("--theorem", theorem_id,
                           "thm1|thm2|thm3|thm5|thm6|thm7|lemma1|lemma2");
    oracle_cmd->add_option("--max-n", max_n);
    oracle_cmd->add_option("--samples", samples);
    oracle_cmd->add_option("--conjecture-n", conj_n, "explore 1-factor packing at this order");
    oracle_cmd->add_option("--conjecture-k", conj_k);
    oracle_cmd->add_option("--seed", shared.seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*check) {
            maxcon::DegreeSequence pi = parse_sequence(seq_text);
            bool graphic = maxcon::is_graphic(pi);
            std::cout << "graphic: " << (graphic ? "yes" : "no");
            if (k_flag >= 0)
                std::cout << "; k-edge-connected realization: "
                          << (graphic && maxcon::edmonds_feasible(pi, k_flag) ? "yes" : "no");
            std::cout << "\n";
            return kExitOk;
        }
        if (*realize_cmd) {
            emit_graph(maxcon::realize(parse_sequence(seq_text)), shared.out_path);
            return kExitOk;
        }
        if (*rewire_cmd) {
            maxcon::Graph g0 = read_graph(g_path);
            maxcon::Graph f = f_path.empty() ? maxcon::Graph(g0.vertex_count())
                                             : read_graph(f_path);
            maxcon::Graph z0 = z_path.empty() ? maxcon::subtract_edges(g0, f)
                                              : read_graph(z_path);
            maxcon::RewireProblem problem{
                g0, f, z0,
                mode_text == "full" ? maxcon::RewireMode::Full : maxcon::RewireMode::Relaxed};
            maxcon::RewireResult res = maxcon::rewire(problem);
            audit_certificate(problem, res);
            emit_graph(res.graph, shared.out_path);
            json report{{"schema", 1},
                        {"seed", shared.seed},
                        {"mode", mode_text},
                        {"certificate", certificate_json(res.certificate)},
                        {"trace", trace_json(res.trace)},
                        {"graph", graph_json(res.graph)}};
            if (!shared.json_path.empty()) emit(report, shared.json_path);
            return kExitOk;
        }
        if (*kundu || *mf) {
            maxcon::DegreeSequence pi = parse_sequence(seq_text);
            maxcon::DegreeSequence kappa_seq = parse_sequence(kappa_text);
            std::vector<int> kappa(kappa_seq.size());
            for (int i = 0; i < kappa_seq.size(); ++i)
                kappa[kappa_seq.original_position(i)] = kappa_seq.term(i);
            int k = kappa_seq.min_term();
            json report{{"schema", 1}, {"seed", shared.seed}};
            if (*kundu) {
                auto [g, factor] = maxcon::kundu_realize({pi, kappa, k});
                report["graph"] = graph_json(g);
                report["factor"] = graph_json(factor);
            } else {
                auto res = maxcon::maxcon_with_factor({pi, kappa, k});
                maxcon::Graph h = res.g;
                if (maxcon::edge_connectivity_value(h) != res.certificate.final_lambda)
                    throw maxcon::TheoremContradiction("certificate disagrees with audit pass");
                report["graph"] = graph_json(res.g);
                report["factor"] = graph_json(res.factor);
                report["certificate"] = certificate_json(res.certificate);
            }
            emit(report, shared.json_path);
            return kExitOk;
        }
        if (*peel) {
            maxcon::DegreeSequence pi = parse_sequence(seq_text);
            maxcon::FactorDecomposition dec = complement_flag
                                                  ? maxcon::peel_complement_case(pi, k_flag, r_flag)
                                                  : maxcon::peel_one_factors(pi, k_flag, r_flag);
            auto audit = maxcon::verify_decomposition(
                dec, pi, std::vector<int>(pi.size(), k_flag));
            if (!audit.ok())
                throw maxcon::TheoremContradiction("decomposition failed the audit pass: " +
                                                   audit.violations.front());
            json matchings = json::array();
            for (const auto& m : dec.one_factors) {
                json edges = json::array();
                for (auto [u, v] : m) edges.push_back({u, v});
                matchings.push_back(edges);
            }
            json report{{"schema", 1},       {"seed", shared.seed},
                        {"k", k_flag},       {"r", r_flag},
                        {"graph", graph_json(dec.g)}, {"factor", graph_json(dec.factor)},
                        {"one_factors", matchings},   {"residual", graph_json(dec.residual)}};
            emit(report, shared.json_path);
            return kExitOk;
        }
        if (*oracle_cmd) {
            std::vector<maxcon::oracle::CheckReport> reports;
            if (!theorem_id.empty()) {
                maxcon::oracle::CheckOptions opt;
                opt.max_n = max_n;
                opt.samples = samples;
                opt.seed = shared.seed;
                reports.push_back(maxcon::oracle::check_theorem(theorem_id, opt));
            }
            if (conj_n > 0)
                reports.push_back(maxcon::oracle::conjecture1_explore(conj_n, conj_k));
            if (reports.empty()) {
                std::cerr << "oracle: nothing to run (pass --theorem or --conjecture-n)\n";
                return kExitParse;
            }
            std::ofstream file;
            std::ostream* os = &std::cout;
            if (!shared.json_path.empty()) {
                file.open(shared.json_path);
                os = &file;
            }
            bool all_ok = true;
            for (const auto& rep : reports) {
                *os << report_json(rep, shared.seed).dump() << "\n";  // JSON lines
                all_ok = all_ok && rep.ok();
            }
            return all_ok ? kExitOk : kExitContradiction;
        }
    } catch (const InputParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const maxcon::TheoremContradiction& e) {
        std::cerr << "contradiction: " << e.what() << "\n";
        return kExitContradiction;
    } catch (const maxcon::ScaleError& e) {
        std::cerr << "scale guard: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const maxcon::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
