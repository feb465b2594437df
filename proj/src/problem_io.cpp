#include "rankaudit/problem_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "rankaudit/error.hpp"

namespace rankaudit {

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        fail(ErrorCode::ParseError, "cannot open file: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t')) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (char ch : line) {
        if (ch == ',') {
            fields.push_back(trim(current));
            current.clear();
        } else {
            current += ch;
        }
    }
    fields.push_back(trim(current));
    return fields;
}

[[noreturn]] void parse_fail(const std::string& source, std::size_t line,
                             std::size_t column, const std::string& what) {
    fail(ErrorCode::ParseError, source + ":" + std::to_string(line) + ":" +
                                    std::to_string(column) + ": " + what);
}

double parse_number(const std::string& field, const std::string& source,
                    std::size_t line, std::size_t column) {
    const char* begin = field.data();
    const char* end = begin + field.size();
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end || field.empty()) {
        parse_fail(source, line, column, "expected a number, got '" + field + "'");
    }
    return value;
}

} // namespace

CsvMatrix parse_matrix_csv(const std::string& text, const std::string& source_name) {
    std::vector<std::string> lines;
    std::string current;
    for (char ch : text) {
        if (ch == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(current);
            current.clear();
        } else {
            current += ch;
        }
    }
    if (!current.empty()) {
        if (current.back() == '\r') current.pop_back();
        lines.push_back(current);
    }
    while (!lines.empty() && trim(lines.back()).empty()) lines.pop_back();
    if (lines.empty()) {
        parse_fail(source_name, 1, 1, "empty matrix file");
    }

    const auto header = split_fields(lines[0]);
    if (header.empty() || header[0] != "alternative") {
        parse_fail(source_name, 1, 1, "header must start with 'alternative'");
    }
    if (header.size() < 2) {
        parse_fail(source_name, 1, 2, "header needs at least one criterion");
    }

    CsvMatrix matrix;
    matrix.criteria.assign(header.begin() + 1, header.end());
    for (std::size_t c = 0; c < matrix.criteria.size(); ++c) {
        if (matrix.criteria[c].empty()) {
            parse_fail(source_name, 1, c + 2, "empty criterion name");
        }
    }

    for (std::size_t li = 1; li < lines.size(); ++li) {
        if (trim(lines[li]).empty()) {
            parse_fail(source_name, li + 1, 1, "blank line inside the matrix");
        }
        const auto fields = split_fields(lines[li]);
        if (fields.size() != header.size()) {
            parse_fail(source_name, li + 1, fields.size(),
                       "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()));
        }
        if (fields[0].empty()) {
            parse_fail(source_name, li + 1, 1, "empty alternative name");
        }
        matrix.alternatives.push_back(fields[0]);
        std::vector<double> row;
        row.reserve(matrix.criteria.size());
        for (std::size_t f = 1; f < fields.size(); ++f) {
            row.push_back(parse_number(fields[f], source_name, li + 1, f + 1));
        }
        matrix.values.push_back(std::move(row));
    }
    if (matrix.alternatives.empty()) {
        parse_fail(source_name, 2, 1, "matrix has no alternative rows");
    }
    return matrix;
}

namespace {

const char* kStageNames[] = {"invert_minimize", "filter_gt", "filter_non_dominated",
                             "sum_scaler", "vector_scaler"};

bool known_stage(const std::string& name) {
    for (const char* stage : kStageNames) {
        if (name == stage) return true;
    }
    return false;
}

void require_object(const nlohmann::json& doc, const std::string& key) {
    if (!doc.contains(key) || !doc.at(key).is_object()) {
        fail(ErrorCode::InvalidConfig, "config needs an object field '" + key + "'");
    }
}

} // namespace

ProblemConfig parse_config(const nlohmann::json& doc) {
    if (!doc.is_object()) {
        fail(ErrorCode::InvalidConfig, "config root must be an object");
    }
    require_object(doc, "objectives");
    require_object(doc, "weights");
    if (!doc.contains("method") || !doc.at("method").is_string()) {
        fail(ErrorCode::InvalidConfig, "config needs a string field 'method'");
    }

    ProblemConfig config;
    for (const auto& [criterion, value] : doc.at("objectives").items()) {
        if (!value.is_string() || (value != "max" && value != "min")) {
            fail(ErrorCode::InvalidConfig,
                 "objective for " + criterion + " must be \"max\" or \"min\"");
        }
        config.objectives[criterion] =
            value == "max" ? Objective::Maximize : Objective::Minimize;
    }
    for (const auto& [criterion, value] : doc.at("weights").items()) {
        if (!value.is_number()) {
            fail(ErrorCode::InvalidConfig, "weight for " + criterion + " must be a number");
        }
        config.weights[criterion] = value.get<double>();
    }

    config.method = doc.at("method").get<std::string>();
    if (config.method != "weighted_sum" && config.method != "topsis") {
        fail(ErrorCode::InvalidConfig, "unknown method: " + config.method);
    }

    if (doc.contains("pipeline")) {
        if (!doc.at("pipeline").is_array()) {
            fail(ErrorCode::InvalidConfig, "'pipeline' must be an array of stages");
        }
        for (const auto& stage : doc.at("pipeline")) {
            if (!stage.is_object() || !stage.contains("stage") ||
                !stage.at("stage").is_string()) {
                fail(ErrorCode::InvalidConfig,
                     "each pipeline entry needs a string field 'stage'");
            }
            StageSpec spec;
            spec.name = stage.at("stage").get<std::string>();
            if (!known_stage(spec.name)) {
                fail(ErrorCode::UnknownStage, "unknown pipeline stage: " + spec.name);
            }
            if (spec.name == "filter_gt") {
                if (!stage.contains("thresholds") || !stage.at("thresholds").is_object() ||
                    stage.at("thresholds").empty()) {
                    fail(ErrorCode::InvalidConfig,
                         "filter_gt needs a non-empty 'thresholds' object");
                }
                for (const auto& [criterion, value] : stage.at("thresholds").items()) {
                    if (!value.is_number()) {
                        fail(ErrorCode::InvalidConfig,
                             "threshold for " + criterion + " must be a number");
                    }
                    spec.thresholds[criterion] = value.get<double>();
                }
            }
            config.pipeline.push_back(std::move(spec));
        }
    }

    if (doc.contains("tiebreak")) {
        const auto& tb = doc.at("tiebreak");
        if (!tb.is_object()) {
            fail(ErrorCode::InvalidConfig, "'tiebreak' must be an object");
        }
        if (tb.contains("fallback")) {
            if (!tb.at("fallback").is_string()) {
                fail(ErrorCode::InvalidConfig, "tiebreak.fallback must be a method name");
            }
            config.tiebreak_fallback = tb.at("fallback").get<std::string>();
            if (config.tiebreak_fallback != "weighted_sum" &&
                config.tiebreak_fallback != "topsis") {
                fail(ErrorCode::InvalidConfig,
                     "unknown tiebreak fallback: " + config.tiebreak_fallback);
            }
        }
        if (tb.contains("force_untie")) {
            if (!tb.at("force_untie").is_boolean()) {
                fail(ErrorCode::InvalidConfig, "tiebreak.force_untie must be a boolean");
            }
            config.force_untie = tb.at("force_untie").get<bool>();
        }
    }

    // Canonical echo for reports: exactly what was understood, nothing more.
    nlohmann::json pipeline_echo = nlohmann::json::array();
    for (const auto& spec : config.pipeline) {
        nlohmann::json stage{{"stage", spec.name}};
        if (!spec.thresholds.empty()) stage["thresholds"] = spec.thresholds;
        pipeline_echo.push_back(std::move(stage));
    }
    nlohmann::json objectives_echo = nlohmann::json::object();
    for (const auto& [criterion, objective] : config.objectives) {
        objectives_echo[criterion] = to_string(objective);
    }
    config.echo = nlohmann::json{
        {"method", config.method},
        {"objectives", std::move(objectives_echo)},
        {"weights", config.weights},
        {"pipeline", std::move(pipeline_echo)},
        {"tiebreak",
         {{"fallback", config.tiebreak_fallback.empty()
                           ? nlohmann::json(nullptr)
                           : nlohmann::json(config.tiebreak_fallback)},
          {"force_untie", config.force_untie}}}};
    return config;
}

std::pair<DecisionMatrix, ProblemConfig> load_problem(const std::string& matrix_path,
                                                      const std::string& config_path) {
    const CsvMatrix csv = parse_matrix_csv(read_file(matrix_path), matrix_path);

    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(config_path));
    } catch (const nlohmann::json::parse_error& err) {
        fail(ErrorCode::ParseError, config_path + ": " + err.what());
    }
    ProblemConfig config = parse_config(doc);

    std::vector<Objective> objectives;
    std::vector<double> weights;
    for (const auto& criterion : csv.criteria) {
        const auto obj = config.objectives.find(criterion);
        if (obj == config.objectives.end()) {
            fail(ErrorCode::MissingObjective,
                 "config declares no objective for criterion " + criterion);
        }
        const auto w = config.weights.find(criterion);
        if (w == config.weights.end()) {
            fail(ErrorCode::MissingWeight,
                 "config declares no weight for criterion " + criterion);
        }
        objectives.push_back(obj->second);
        weights.push_back(w->second);
    }

    DecisionMatrix dm = DecisionMatrix::build(csv.alternatives, csv.criteria,
                                              csv.values, objectives, weights);
    return {std::move(dm), std::move(config)};
}

Pipeline build_pipeline(const ProblemConfig& config) {
    std::vector<PipelineStage> stages;
    stages.reserve(config.pipeline.size());
    for (const auto& spec : config.pipeline) {
        if (spec.name == "invert_minimize") {
            stages.push_back({spec.name, [](const DecisionMatrix& dm) {
                                  return invert_minimize(dm);
                              }});
        } else if (spec.name == "filter_gt") {
            stages.push_back({spec.name, [thresholds = spec.thresholds](
                                             const DecisionMatrix& dm) {
                                  return filter_gt(dm, thresholds);
                              }});
        } else if (spec.name == "filter_non_dominated") {
            stages.push_back({spec.name, [](const DecisionMatrix& dm) {
                                  return filter_non_dominated(dm);
                              }});
        } else if (spec.name == "sum_scaler") {
            stages.push_back({spec.name, [](const DecisionMatrix& dm) {
                                  return sum_scaler_weights(dm);
                              }});
        } else if (spec.name == "vector_scaler") {
            stages.push_back({spec.name, [](const DecisionMatrix& dm) {
                                  return vector_scaler_matrix(dm);
                              }});
        } else {
            fail(ErrorCode::UnknownStage, "unknown pipeline stage: " + spec.name);
        }
    }
    Decider terminal = config.method == "topsis"
                           ? Decider(static_cast<RankResult (*)(const DecisionMatrix&)>(topsis))
                           : Decider(static_cast<RankResult (*)(const DecisionMatrix&)>(weighted_sum));
    return Pipeline(std::move(stages), config.method, std::move(terminal));
}

Decider make_decider(const ProblemConfig& config) {
    return [pipeline = build_pipeline(config)](const DecisionMatrix& dm) {
        return run_pipeline(pipeline, dm);
    };
}

TieBreakPolicy make_tie_policy(const ProblemConfig& config) {
    TieBreakPolicy policy;
    policy.force_untie = config.force_untie;
    if (config.tiebreak_fallback == "weighted_sum") {
        policy.fallback = [](const DecisionMatrix& dm) { return weighted_sum(dm); };
    } else if (config.tiebreak_fallback == "topsis") {
        policy.fallback = [](const DecisionMatrix& dm) { return topsis(dm); };
    }
    return policy;
}

} // namespace rankaudit
