// Acceptance suite: runs each criterion at full scale and prints one
// pass/fail line per criterion. Exit code is the number of failures.
// Usage: acceptance_test [criterion-id]

#include <cstdlib>
#include <iostream>
#include <vector>

#include "chordalkit/validate.hpp"

using namespace chordalkit;

namespace {

struct Budgeted {
    CriterionResult result;
    double budget_seconds; // 0 = no budget
};

Budgeted run_criterion(int id, const ValidateOptions& opts) {
    switch (id) {
    case 1: return {criterion_hierarchy_witnesses(), 1.0};
    case 2: return {criterion_theorem_cross_validation(opts), 600.0};
    case 3: return {criterion_directed_double_characterization(opts), 0.0};
    case 4: return {criterion_interval_double_characterization(opts), 0.0};
    case 5: return {criterion_three_leaves_lemma(opts), 0.0};
    case 6: return {criterion_common_neighborhood(opts), 0.0};
    case 7: return {criterion_ta_construction(), 60.0};
    case 8: return {criterion_reconstruction_gate(), 0.0};
    case 9: return {criterion_certificate_soundness(opts), 0.0};
    case 10: return {criterion_split_ray_adjacency(), 0.0};
    default: throw graph_error("criterion id must be 1..10");
    }
}

} // namespace

int main(int argc, char** argv) {
    ValidateOptions opts; // full scale: n <= 7, 500 random graphs at n = 10

    std::vector<int> ids;
    if (argc > 1) {
        ids.push_back(std::atoi(argv[1]));
    } else {
        for (int id = 1; id <= 10; ++id) ids.push_back(id);
    }

    int failures = 0;
    for (int id : ids) {
        Budgeted run = run_criterion(id, opts);
        bool passed = run.result.passed;
        if (run.budget_seconds > 0 && run.result.seconds >= run.budget_seconds) {
            passed = false;
            run.result.violations.push_back(
                "runtime " + std::to_string(run.result.seconds) + "s exceeds budget " +
                std::to_string(run.budget_seconds) + "s");
        }
        run.result.passed = passed;
        std::cout << format_criterion(run.result) << "\n";
        if (!passed) ++failures;
    }
    return failures;
}
