#ifndef SESQUI_ACCEPTANCE_HPP
#define SESQUI_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace sesqui::acceptance {

struct Options {
    unsigned seed = 0;
    std::string filter;  // substring match on criterion names; empty runs all
};

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::vector<std::string> failures;
    std::vector<std::string> notes;
    double seconds = 0.0;
};

/// Runs the acceptance criteria in order. Tolerances and thresholds are
/// fixed in code; the seed only drives the randomized property suites.
std::vector<CriterionResult> run(const Options& options);

nlohmann::json to_json(const std::vector<CriterionResult>& results);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace sesqui::acceptance

#endif
