#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "chordalkit/certificate.hpp"
#include "chordalkit/exec.hpp"
#include "chordalkit/graph.hpp"

namespace chordalkit {

enum class GraphClass { chordal, interval, directed_path, path };

GraphClass parse_graph_class(const std::string& name); // throws on bad name
const char* graph_class_name(GraphClass cls);

struct CertifyOptions {
    bool oracle_engine = false; // path class: exhaustion trace instead of sun system
    int max_host_vertices = 12;
    int max_cliques = 12;
    Exec exec = Exec::parallel;
};

struct CertifyOutcome {
    bool member = false;
    std::optional<Certificate> certificate; // set for non-members
};

// Membership plus a re-verified witness of non-membership.
CertifyOutcome certify(const Graph& g, GraphClass cls, const CertifyOptions& opts = {});

struct RecognitionProfile {
    bool chordal = false;
    bool interval = false;
    bool directed_path = false;
    bool path = false;
};

// The characterization-based recognizers for all four classes at once.
RecognitionProfile recognize(const Graph& g, const CertifyOptions& opts = {});

struct ValidateOptions {
    int n_max = 7;       // exhaustive corpus bound for cross-validations
    int lemma_n_max = 6; // corpus bound for the clique-tree lemma sweep
    int samples = 500;   // random-graph count for the theorem suite
    int random_n = 10;
    int clique_budget = 6;
    std::uint64_t seed = 2026;
    int oracle_clique_cap = 12;
    Exec exec = Exec::parallel;
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;                  // counts and parameters
    std::vector<std::string> violations; // first few witnesses
    double seconds = 0.0;
};

CriterionResult criterion_hierarchy_witnesses();
CriterionResult criterion_theorem_cross_validation(const ValidateOptions& opts);
CriterionResult criterion_directed_double_characterization(const ValidateOptions& opts);
CriterionResult criterion_interval_double_characterization(const ValidateOptions& opts);
CriterionResult criterion_three_leaves_lemma(const ValidateOptions& opts);
CriterionResult criterion_common_neighborhood(const ValidateOptions& opts);
CriterionResult criterion_ta_construction();
CriterionResult criterion_reconstruction_gate();
CriterionResult criterion_certificate_soundness(const ValidateOptions& opts);
CriterionResult criterion_split_ray_adjacency();

// suite in {hierarchy, theorem, lemmas, prop44, all}; unknown -> throw
std::vector<CriterionResult> run_validation_suite(const std::string& suite,
                                                  const ValidateOptions& opts);

// Path-graph sun systems with split rays used by the split-ray suite; also
// exposed for tests. Every instance is a verified sun system on <= 10
// vertices that the oracle accepts as a path graph.
std::vector<Graph> split_ray_instances(int minimum);

std::string format_criterion(const CriterionResult& r);

} // namespace chordalkit
