#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "rankaudit/problem_io.hpp"
#include "rankaudit/rank_invariant.hpp"
#include "rankaudit/report.hpp"
#include "rankaudit/transitivity.hpp"
#include "support/oracles.hpp"
#include "support/schema_check.hpp"

using namespace rankaudit;

namespace {

const char* kM1Csv =
    "alternative,c1,c2\n"
    "A,10,10\n"
    "B,8,9\n"
    "C,5,4\n";

const char* kM1Config = R"({
  "objectives": {"c1": "max", "c2": "max"},
  "weights": {"c1": 0.6, "c2": 0.4},
  "method": "weighted_sum"
})";

/// Temp file that deletes itself; content written on construction.
class TempFile {
public:
    TempFile(const std::string& stem, const std::string& content) {
        static int counter = 0;
        path_ = (std::filesystem::temp_directory_path() /
                 ("rankaudit_test_" + stem + "_" + std::to_string(++counter)))
                    .string();
        std::ofstream out(path_, std::ios::binary);
        out << content;
    }
    ~TempFile() { std::remove(path_.c_str()); }
    const std::string& path() const { return path_; }

private:
    std::string path_;
};

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& err) {
        return err.code();
    }
    FAIL("expected an error");
    return ErrorCode::ParseError;
}

nlohmann::json load_schema() {
    std::ifstream in(RANKAUDIT_SCHEMA_PATH);
    REQUIRE(in);
    return nlohmann::json::parse(in);
}

} // namespace

TEST_CASE("parse_matrix_csv reads the fixture and reports locations") {
    const auto matrix = parse_matrix_csv(kM1Csv, "m1.csv");
    CHECK(matrix.alternatives == std::vector<std::string>{"A", "B", "C"});
    CHECK(matrix.criteria == std::vector<std::string>{"c1", "c2"});
    CHECK(matrix.values[2] == std::vector<double>{5, 4});

    try {
        parse_matrix_csv("alternative,c1\nA,not_a_number\n", "bad.csv");
        FAIL_CHECK("expected ParseError");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::ParseError);
        CHECK(std::string(err.what()).find("bad.csv:2:2") != std::string::npos);
    }

    CHECK(code_of([] { parse_matrix_csv("name,c1\nA,1\n", "x"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_matrix_csv("alternative,c1\nA,1,2\n", "x"); }) ==
          ErrorCode::ParseError);
    CHECK(code_of([] { parse_matrix_csv("alternative,c1\n", "x"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("load_problem round-trips the fixture") {
    const TempFile matrix("m1", kM1Csv);
    const TempFile config("cfg", kM1Config);
    const auto [dm, cfg] = load_problem(matrix.path(), config.path());
    CHECK(dm == oracles::m1());
    CHECK(cfg.method == "weighted_sum");
    CHECK(cfg.force_untie);
    CHECK(cfg.tiebreak_fallback.empty());
    CHECK(cfg.pipeline.empty());
}

TEST_CASE("load_problem rejects incomplete configs") {
    const TempFile matrix("m1", kM1Csv);

    const TempFile no_weight("cfg", R"({
      "objectives": {"c1": "max", "c2": "max"},
      "weights": {"c1": 0.6},
      "method": "weighted_sum"
    })");
    CHECK(code_of([&] { load_problem(matrix.path(), no_weight.path()); }) ==
          ErrorCode::MissingWeight);

    const TempFile no_objective("cfg", R"({
      "objectives": {"c1": "max"},
      "weights": {"c1": 0.6, "c2": 0.4},
      "method": "weighted_sum"
    })");
    CHECK(code_of([&] { load_problem(matrix.path(), no_objective.path()); }) ==
          ErrorCode::MissingObjective);

    const TempFile bad_stage("cfg", R"({
      "objectives": {"c1": "max", "c2": "max"},
      "weights": {"c1": 0.6, "c2": 0.4},
      "method": "weighted_sum",
      "pipeline": [{"stage": "filter_lt"}]
    })");
    CHECK(code_of([&] { load_problem(matrix.path(), bad_stage.path()); }) ==
          ErrorCode::UnknownStage);

    const TempFile broken_json("cfg", "{not json");
    CHECK(code_of([&] { load_problem(matrix.path(), broken_json.path()); }) ==
          ErrorCode::ParseError);

    CHECK(code_of([&] { load_problem(matrix.path(), "/nonexistent/cfg.json"); }) ==
          ErrorCode::ParseError);
}

TEST_CASE("configured pipeline runs the declared stages") {
    const TempFile matrix("m1", kM1Csv);
    const TempFile config("cfg", R"({
      "objectives": {"c1": "max", "c2": "max"},
      "weights": {"c1": 0.6, "c2": 0.4},
      "method": "topsis",
      "pipeline": [
        {"stage": "filter_gt", "thresholds": {"c1": 6}},
        {"stage": "sum_scaler"},
        {"stage": "vector_scaler"}
      ],
      "tiebreak": {"fallback": "weighted_sum", "force_untie": true}
    })");
    const auto [dm, cfg] = load_problem(matrix.path(), config.path());
    const auto decider = make_decider(cfg);
    const auto result = decider(dm);
    CHECK(result.alternatives() == std::vector<std::string>{"A", "B"});
    CHECK(result.extra().at("pipeline.steps") ==
          nlohmann::json::array({"filter_gt", "sum_scaler", "vector_scaler", "topsis"}));

    const auto policy = make_tie_policy(cfg);
    CHECK(policy.force_untie);
    CHECK(static_cast<bool>(policy.fallback));
}

TEST_CASE("reports validate against the shipped schema and round-trip") {
    const auto schema = load_schema();
    const auto dm = oracles::m1();
    const TempFile matrix("m1", kM1Csv);
    const TempFile config_file("cfg", kM1Config);
    const auto [dm_loaded, config] = load_problem(matrix.path(), config_file.path());
    const auto decider = make_decider(config);

    std::string error;

    const auto eval_report = build_eval_report(dm, config, 3, decider(dm));
    CHECK_MESSAGE(schema_check::validate_report(schema, eval_report, &error), error);

    Rrt1Config rrt1_config;
    rrt1_config.seed = 42;
    rrt1_config.repeats = 2;
    const auto comparator = run_rrt1(decider, dm, rrt1_config);
    const auto rrt1_report = build_rrt1_report(dm, config, rrt1_config, comparator,
                                               rrt1_verdict(comparator));
    CHECK_MESSAGE(schema_check::validate_report(schema, rrt1_report, &error), error);
    CHECK(rrt1_report.at("rrt1").at("rankings") == 5);

    const auto rrt2 = run_rrt2(decider, dm, make_tie_policy(config));
    const auto rrt2_report = build_rrt2_report(dm, config, 7, rrt2);
    CHECK_MESSAGE(schema_check::validate_report(schema, rrt2_report, &error), error);

    const auto rrt3 = run_rrt3(decider, dm, make_tie_policy(config), 3,
                               CycleBreakStrategy::Weighted, 11);
    const auto rrt3_report =
        build_rrt3_report(dm, config, 11, 3, CycleBreakStrategy::Weighted, rrt3);
    CHECK_MESSAGE(schema_check::validate_report(schema, rrt3_report, &error), error);

    // Serialization round-trips losslessly.
    for (const auto& report : {eval_report, rrt1_report, rrt2_report, rrt3_report}) {
        const auto text = serialize_report(report);
        CHECK(nlohmann::json::parse(text) == report);
    }

    // A cyclic case exercises the resolutions/rank_distribution branches.
    const auto rps_decider = [](const DecisionMatrix& m) { return topsis(m); };
    ProblemConfig rps_config = config;
    const auto cyclic = run_rrt3(rps_decider, oracles::rps(), make_tie_policy(config),
                                 4, CycleBreakStrategy::Random, 5);
    const auto cyclic_report = build_rrt3_report(oracles::rps(), rps_config, 5, 4,
                                                 CycleBreakStrategy::Random, cyclic);
    CHECK_MESSAGE(schema_check::validate_report(schema, cyclic_report, &error), error);
    CHECK(cyclic_report.at("rrt3").at("resolutions").size() == 4);
    CHECK(nlohmann::json::parse(serialize_report(cyclic_report)) == cyclic_report);
}

TEST_CASE("identical runs serialize byte-identically") {
    const TempFile matrix("m1", kM1Csv);
    const TempFile config_file("cfg", kM1Config);
    const auto [dm, config] = load_problem(matrix.path(), config_file.path());
    const auto decider = make_decider(config);

    Rrt1Config rrt1_config;
    rrt1_config.seed = 99;
    rrt1_config.repeats = 3;
    const auto first = run_rrt1(decider, dm, rrt1_config);
    const auto second = run_rrt1(decider, dm, rrt1_config);
    CHECK(serialize_report(build_rrt1_report(dm, config, rrt1_config, first,
                                             rrt1_verdict(first))) ==
          serialize_report(build_rrt1_report(dm, config, rrt1_config, second,
                                             rrt1_verdict(second))));
}
