// rankaudit — evaluate MCDA decision problems and audit them for rank
// reversals (RRT1 degradation stability, RRT2 pairwise transitivity, RRT3
// recomposition consistency).
//
// Exit codes: 0 audit ran and passed, 3 audit ran and failed,
//             1 input/config error, 2 runtime error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "rankaudit/problem_io.hpp"
#include "rankaudit/rank_invariant.hpp"
#include "rankaudit/report.hpp"
#include "rankaudit/transitivity.hpp"
#include "rankaudit/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitInputError = 1;
constexpr int kExitRuntimeError = 2;
constexpr int kExitFail = 3;

struct CommonArgs {
    std::string matrix_path;
    std::string config_path;
    std::string out_path;
    std::uint64_t seed = 0;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--matrix", args.matrix_path, "decision matrix CSV")->required();
    cmd->add_option("--config", args.config_path, "problem config JSON")->required();
    cmd->add_option("--out", args.out_path, "report output path (JSON)")->required();
    cmd->add_option("--seed", args.seed, "RNG seed (default 0)");
}

void write_report(const std::string& path, const nlohmann::json& report) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        rankaudit::fail(rankaudit::ErrorCode::ParseError,
                        "cannot write report file: " + path);
    }
    out << rankaudit::serialize_report(report);
}

} // namespace

int main(int argc, char** argv) {
    using namespace rankaudit;

    CLI::App app{std::string(kToolName) +
                 " - MCDA evaluation with rank-reversal audits"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonArgs args;
    int repeats = 1;
    bool allow_missing = true;
    int candidates = 5;
    std::string strategy_name = "random";

    CLI::App* cmd_eval = app.add_subcommand("eval", "run the configured pipeline once");
    add_common(cmd_eval, args);

    CLI::App* cmd_rrt1 = app.add_subcommand(
        "rrt1", "stability of the optimum under controlled degradation");
    add_common(cmd_rrt1, args);
    cmd_rrt1->add_option("--repeats", repeats, "degradation repetitions (default 1)");
    cmd_rrt1->add_option("--allow-missing", allow_missing,
                         "pad pipeline-filtered alternatives with the worst rank");

    CLI::App* cmd_rrt2 =
        app.add_subcommand("rrt2", "transitivity of pairwise decompositions");
    add_common(cmd_rrt2, args);

    CLI::App* cmd_rrt3 =
        app.add_subcommand("rrt3", "consistency of recomposed rankings");
    add_common(cmd_rrt3, args);
    cmd_rrt3->add_option("--candidates", candidates,
                         "DAG candidates when the graph is cyclic (default 5)");
    cmd_rrt3
        ->add_option("--strategy", strategy_name,
                     "cycle-breaking strategy: random|weighted")
        ->check(CLI::IsMember({"random", "weighted"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInputError;
    }

    // Phase 1: ingest. Anything wrong with the inputs is exit 1.
    std::optional<std::pair<DecisionMatrix, ProblemConfig>> problem;
    try {
        problem = load_problem(args.matrix_path, args.config_path);
    } catch (const Error& err) {
        std::cerr << "input error [" << to_string(err.code()) << "]: " << err.what()
                  << "\n";
        return kExitInputError;
    }
    const DecisionMatrix& dm = problem->first;
    const ProblemConfig& config = problem->second;

    // Phase 2: run and report. Failures here are exit 2.
    try {
        const Decider decider = make_decider(config);
        const TieBreakPolicy tie_policy = make_tie_policy(config);

        if (cmd_eval->parsed()) {
            const RankResult ranking = decider(dm);
            write_report(args.out_path,
                         build_eval_report(dm, config, args.seed, ranking));
            std::cout << "eval: OK (method " << ranking.method() << ", "
                      << ranking.size() << " alternatives ranked)\n";
            return kExitPass;
        }

        if (cmd_rrt1->parsed()) {
            Rrt1Config rrt1_config;
            rrt1_config.repeats = repeats;
            rrt1_config.seed = args.seed;
            rrt1_config.allow_missing = allow_missing;
            const RanksComparator comparator = run_rrt1(decider, dm, rrt1_config);
            const Rrt1Report verdict = rrt1_verdict(comparator);
            write_report(args.out_path, build_rrt1_report(dm, config, rrt1_config,
                                                          comparator, verdict));
            std::cout << "rrt1: " << (verdict.passed ? "PASS" : "FAIL")
                      << " (pass rate " << verdict.aggregate_pass_rate << ", "
                      << comparator.size() << " rankings)\n";
            return verdict.passed ? kExitPass : kExitFail;
        }

        if (cmd_rrt2->parsed()) {
            const Rrt2Result result = run_rrt2(decider, dm, tie_policy);
            write_report(args.out_path,
                         build_rrt2_report(dm, config, args.seed, result));
            std::cout << "rrt2: " << (result.report.test_criterion_2 ? "PASS" : "FAIL")
                      << " (trans_break_rate " << result.report.trans_break_rate
                      << ", " << result.report.trans_break.size() << " three-cycles)\n";
            return result.report.test_criterion_2 ? kExitPass : kExitFail;
        }

        const CycleBreakStrategy strategy = strategy_name == "weighted"
                                                ? CycleBreakStrategy::Weighted
                                                : CycleBreakStrategy::Random;
        const Rrt3Result result =
            run_rrt3(decider, dm, tie_policy, candidates, strategy, args.seed);
        write_report(args.out_path, build_rrt3_report(dm, config, args.seed,
                                                      candidates, strategy, result));
        std::cout << "rrt3: " << (result.test_criterion_3 ? "PASS" : "FAIL")
                  << " (criterion_2 " << (result.test_criterion_2 ? "pass" : "fail")
                  << ", " << result.resolutions.size() << " cycle resolutions)\n";
        return result.test_criterion_3 ? kExitPass : kExitFail;
    } catch (const Error& err) {
        std::cerr << "runtime error [" << to_string(err.code()) << "]: " << err.what()
                  << "\n";
        return kExitRuntimeError;
    } catch (const std::exception& err) {
        std::cerr << "runtime error: " << err.what() << "\n";
        return kExitRuntimeError;
    }
}
