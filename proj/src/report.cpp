#include "rankaudit/report.hpp"

#include "rankaudit/version.hpp"

namespace rankaudit {

namespace {

nlohmann::json envelope(const std::string& command, const DecisionMatrix& dm,
                        const ProblemConfig& config, std::uint64_t seed,
                        bool passed) {
    return nlohmann::json{
        {"command", command},
        {"config", config.echo},
        {"matrix",
         {{"alternatives", dm.alternatives()}, {"criteria", dm.criteria()}}},
        {"seed", seed},
        {"tool", {{"name", kToolName}, {"version", kToolVersion}}},
        {"verdict", {{"test", command}, {"passed", passed}}}};
}

nlohmann::json graph_to_json(const DominanceGraph& graph) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [winner, loser] : graph.edge_list()) {
        edges.push_back(nlohmann::json::array({winner, loser}));
    }
    return nlohmann::json{{"nodes", graph.nodes()}, {"edges", std::move(edges)}};
}

nlohmann::json cycles_to_json(const std::vector<std::array<std::string, 3>>& cycles) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& cycle : cycles) {
        out.push_back(nlohmann::json::array({cycle[0], cycle[1], cycle[2]}));
    }
    return out;
}

nlohmann::json rrt2_section(const Rrt2Result& result) {
    return nlohmann::json{{"baseline", rank_result_to_json(result.baseline)},
                          {"graph", graph_to_json(result.report.graph)},
                          {"missing", result.report.missing},
                          {"test_criterion_2", result.report.test_criterion_2},
                          {"trans_break", cycles_to_json(result.report.trans_break)},
                          {"trans_break_rate", result.report.trans_break_rate}};
}

} // namespace

nlohmann::json rank_result_to_json(const RankResult& rank) {
    return nlohmann::json{{"method", rank.method()},
                          {"alternatives", rank.alternatives()},
                          {"values", rank.values()},
                          {"extra", rank.extra().data()}};
}

nlohmann::json rank_table_to_json(const RankTable& table) {
    return nlohmann::json{{"columns", table.columns},
                          {"labels", table.labels},
                          {"rows", table.rows}};
}

nlohmann::json comparator_to_json(const RanksComparator& comparator) {
    nlohmann::json entries = nlohmann::json::array();
    for (const auto& [label, rank] : comparator.entries()) {
        entries.push_back(
            nlohmann::json{{"label", label}, {"ranking", rank_result_to_json(rank)}});
    }
    return nlohmann::json{{"entries", std::move(entries)},
                          {"extra", comparator.extra().data()}};
}

nlohmann::json build_eval_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, const RankResult& ranking) {
    nlohmann::json report = envelope("eval", dm, config, seed, true);
    report["eval"] = nlohmann::json{{"ranking", rank_result_to_json(ranking)}};
    return report;
}

nlohmann::json build_rrt1_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 const Rrt1Config& rrt1_config,
                                 const RanksComparator& comparator,
                                 const Rrt1Report& verdict) {
    nlohmann::json mutations = nlohmann::json::array();
    for (const auto& mutation : verdict.mutations) {
        const auto& record = comparator.at(mutation.label).extra().at("rank_inv_check");
        mutations.push_back(nlohmann::json{{"label", mutation.label},
                                           {"iteration", mutation.iteration},
                                           {"mutated", mutation.mutated},
                                           {"noise", record.at("noise")},
                                           {"missing", record.at("missing")},
                                           {"passed", mutation.passed}});
    }
    nlohmann::json report =
        envelope("rrt1", dm, config, rrt1_config.seed, verdict.passed);
    report["rrt1"] = nlohmann::json{
        {"aggregate_pass_rate", verdict.aggregate_pass_rate},
        {"allow_missing", rrt1_config.allow_missing},
        {"repeats", rrt1_config.repeats},
        {"rankings", comparator.size()},
        {"mutations", std::move(mutations)},
        {"rank_table", rank_table_to_json(comparator.to_rank_table())}};
    return report;
}

nlohmann::json build_rrt2_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, const Rrt2Result& result) {
    nlohmann::json report =
        envelope("rrt2", dm, config, seed, result.report.test_criterion_2);
    report["rrt2"] = rrt2_section(result);
    return report;
}

nlohmann::json build_rrt3_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, int candidates,
                                 CycleBreakStrategy strategy, const Rrt3Result& result) {
    nlohmann::json resolutions = nlohmann::json::array();
    for (const auto& resolution : result.resolutions) {
        nlohmann::json removed = nlohmann::json::array();
        for (const auto& [winner, loser] : resolution.removed_edges) {
            removed.push_back(nlohmann::json::array({winner, loser}));
        }
        resolutions.push_back(
            nlohmann::json{{"acyclic_graph", graph_to_json(resolution.acyclic_graph)},
                           {"removed_edges", std::move(removed)},
                           {"strategy", to_string(resolution.strategy)},
                           {"seed", resolution.seed},
                           {"missing", resolution.missing}});
    }

    nlohmann::json report =
        envelope("rrt3", dm, config, seed, result.test_criterion_3);
    report["rrt3"] = nlohmann::json{
        {"candidates", candidates},
        {"strategy", to_string(strategy)},
        {"rrt2", rrt2_section(result.rrt2)},
        {"test_criterion_2", result.test_criterion_2},
        {"test_criterion_3", result.test_criterion_3},
        {"resolutions", std::move(resolutions)},
        {"rank_distribution", result.rank_distribution},
        {"rank_table", rank_table_to_json(result.comparator.to_rank_table())}};
    return report;
}

std::string serialize_report(const nlohmann::json& report) {
    return report.dump(2) + "\n";
}

} // namespace rankaudit
