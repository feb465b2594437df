#ifndef RANKAUDIT_REPORT_HPP
#define RANKAUDIT_REPORT_HPP

#include <cstdint>
#include <string>

#include <json.hpp>

#include "rankaudit/problem_io.hpp"
#include "rankaudit/rank_invariant.hpp"
#include "rankaudit/transitivity.hpp"

namespace rankaudit {

/**
 * Audit report builders. Every report is a JSON document with a common
 * envelope (command, config echo, matrix shape, seed, tool, verdict) plus a
 * per-command section; keys serialize in sorted order so identical runs are
 * byte-identical. The shape is published in schemas/report.schema.json.
 */

nlohmann::json rank_result_to_json(const RankResult& rank);
nlohmann::json rank_table_to_json(const RankTable& table);
nlohmann::json comparator_to_json(const RanksComparator& comparator);

nlohmann::json build_eval_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, const RankResult& ranking);

nlohmann::json build_rrt1_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 const Rrt1Config& rrt1_config,
                                 const RanksComparator& comparator,
                                 const Rrt1Report& verdict);

nlohmann::json build_rrt2_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, const Rrt2Result& result);

nlohmann::json build_rrt3_report(const DecisionMatrix& dm, const ProblemConfig& config,
                                 std::uint64_t seed, int candidates,
                                 CycleBreakStrategy strategy, const Rrt3Result& result);

/// Pretty-printed with a trailing newline; what cmd_* writes to --out.
std::string serialize_report(const nlohmann::json& report);

} // namespace rankaudit

#endif // RANKAUDIT_REPORT_HPP
