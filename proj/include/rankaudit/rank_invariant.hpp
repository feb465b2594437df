#ifndef RANKAUDIT_RANK_INVARIANT_HPP
#define RANKAUDIT_RANK_INVARIANT_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankaudit/decision_matrix.hpp"
#include "rankaudit/methods.hpp"
#include "rankaudit/ranks_comparator.hpp"
#include "rankaudit/rng.hpp"

namespace rankaudit {

/// How the worst-ranked alternative's noise bound aggregates the adjacent
/// gaps (median is robust to outlier gaps and is the default).
enum class GapAggregator { Median, Mean };

struct Rrt1Config {
    int repeats = 1;
    std::uint64_t seed = 0;
    bool allow_missing = true;
    GapAggregator last_alternative_aggregator = GapAggregator::Median;
};

/// Full provenance of one controlled degradation, stored under
/// extra["rank_inv_check"] of the mutated ranking.
struct MutationRecord {
    int iteration = 0;
    std::string mutated;
    std::map<std::string, double> noise;    // criterion -> signed applied delta
    std::vector<std::string> missing;       // names padded back after filtering
};

/**
 * Per-criterion noise bound for degrading `target`: the absolute gap to the
 * next-worse alternative in the baseline's untied order, or (for the worst
 * alternative) the aggregated adjacent gaps. Throws TargetIsOptimal when the
 * target holds rank 1.
 */
std::map<std::string, double> noise_bounds(const DecisionMatrix& dm,
                                           const RankResult& baseline,
                                           const std::string& target,
                                           GapAggregator aggregator);

struct DegradedRow {
    std::vector<double> row;
    std::map<std::string, double> noise;   // signed deltas actually applied
};

/// Draws per-criterion noise in [0, bound] and worsens the target's row:
/// subtracted on Maximize criteria, added on Minimize criteria.
DegradedRow degrade(const DecisionMatrix& dm, const std::string& target,
                    const std::map<std::string, double>& bounds, SplitMix64& rng);

/// Graceful degradation: alternatives a pipeline filtered out re-enter with
/// the shared worst rank max(values)+1, or raise when not allowed.
std::pair<std::vector<std::string>, std::vector<int>> pad_missing(
    std::vector<std::string> alternatives, std::vector<int> values,
    const std::vector<std::string>& full_alternatives, bool allow_missing);

/// RankResult-level padding; preserves method and extra.
RankResult pad_missing_rank(const RankResult& rank,
                            const std::vector<std::string>& full_alternatives,
                            bool allow_missing);

/**
 * RRT1 — systematic degradation of suboptimal alternatives.
 *
 * Entry 0 is the baseline ("Original"); then one mutated-matrix ranking per
 * (repetition, suboptimal alternative), labeled "M.{name}.{iteration}" and
 * ordered by (repetition, baseline position). With a unique optimum, that is
 * (n-1)*R + 1 entries. The (repetition x target) grid runs in parallel;
 * per-cell RNG substreams keep the outcome byte-identical for a given seed.
 */
RanksComparator run_rrt1(const Decider& decider, const DecisionMatrix& dm,
                         const Rrt1Config& config);

struct Rrt1Report {
    struct Mutation {
        std::string label;
        std::string mutated;
        int iteration = 0;
        bool passed = false;
    };
    std::vector<Mutation> mutations;
    double aggregate_pass_rate = 0.0;
    bool passed = false;
};

/// Verdict over a run_rrt1 comparator: a mutation passes iff every baseline
/// rank-1 alternative still holds rank 1; the test passes iff all do.
Rrt1Report rrt1_verdict(const RanksComparator& comparator);

} // namespace rankaudit

#endif // RANKAUDIT_RANK_INVARIANT_HPP
