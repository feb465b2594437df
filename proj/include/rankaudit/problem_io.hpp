#ifndef RANKAUDIT_PROBLEM_IO_HPP
#define RANKAUDIT_PROBLEM_IO_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "rankaudit/decision_matrix.hpp"
#include "rankaudit/methods.hpp"

namespace rankaudit {

/// One preprocessing stage as declared in the config file. Names come from
/// the fixed vocabulary {invert_minimize, filter_gt, filter_non_dominated,
/// sum_scaler, vector_scaler}.
struct StageSpec {
    std::string name;
    std::map<std::string, double> thresholds; // filter_gt only
};

struct ProblemConfig {
    std::map<std::string, Objective> objectives;
    std::map<std::string, double> weights;
    std::vector<StageSpec> pipeline;
    std::string method;            // "weighted_sum" | "topsis"
    std::string tiebreak_fallback; // empty = none
    bool force_untie = true;
    nlohmann::json echo;           // canonical form, embedded in reports
};

/// Parses the CSV matrix ("alternative" header column, then criteria) and the
/// JSON config, validates them against each other and returns the pair.
/// Criteria order comes from the CSV header.
std::pair<DecisionMatrix, ProblemConfig> load_problem(const std::string& matrix_path,
                                                      const std::string& config_path);

/// CSV-only entry point (used by load_problem and tests). `source_name`
/// appears in ParseError messages alongside line/column.
struct CsvMatrix {
    std::vector<std::string> alternatives;
    std::vector<std::string> criteria;
    std::vector<std::vector<double>> values;
};
CsvMatrix parse_matrix_csv(const std::string& text, const std::string& source_name);

ProblemConfig parse_config(const nlohmann::json& doc);

/// The configured pipeline: declared transformer stages plus the terminal
/// method, ready to run.
Pipeline build_pipeline(const ProblemConfig& config);

/// Decider wrapping the configured pipeline.
Decider make_decider(const ProblemConfig& config);

TieBreakPolicy make_tie_policy(const ProblemConfig& config);

} // namespace rankaudit

#endif // RANKAUDIT_PROBLEM_IO_HPP
