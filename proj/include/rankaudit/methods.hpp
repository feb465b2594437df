#ifndef RANKAUDIT_METHODS_HPP
#define RANKAUDIT_METHODS_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rankaudit/decision_matrix.hpp"
#include "rankaudit/rank_result.hpp"

namespace rankaudit {

/// An evaluator from decision matrix to ranking. Deciders must be pure:
/// equal matrices produce equal rankings, and the output alternative set is a
/// subset of the input's (pipelines may filter rows).
using Decider = std::function<RankResult(const DecisionMatrix&)>;

/// A matrix-to-matrix preprocessing step.
using Transformer = std::function<DecisionMatrix(const DecisionMatrix&)>;

/// Score tolerance when two alternatives count as tied.
inline constexpr double kScoreTieTolerance = 1e-12;

// --- ranking methods -------------------------------------------------------

/// Weighted-sum ranking on an all-Maximize matrix. Scores land in
/// extra["weighted_sum.scores"]. Throws MinimizeNotInverted if a Minimize
/// criterion reaches it un-inverted.
RankResult weighted_sum(const DecisionMatrix& dm);

/// Standard TOPSIS: vector normalization, weighting, ideal/anti-ideal per
/// objective, closeness C = d- / (d+ + d-). Similarities land in
/// extra["topsis.similarity"].
RankResult topsis(const DecisionMatrix& dm);

// --- transformers ----------------------------------------------------------

/// Replaces each Minimize column by its elementwise reciprocal and flips the
/// objective. Zero in a Minimize column is an error, not an epsilon-shift.
DecisionMatrix invert_minimize(const DecisionMatrix& dm);

/// Satisficing filter: keeps alternatives strictly above every threshold.
DecisionMatrix filter_gt(const DecisionMatrix& dm,
                         const std::map<std::string, double>& thresholds);

/// Pareto dominance filter: drops every alternative some other alternative
/// dominates (at least as good everywhere, strictly better somewhere).
DecisionMatrix filter_non_dominated(const DecisionMatrix& dm);

/// Weights scaled to sum 1; matrix untouched.
DecisionMatrix sum_scaler_weights(const DecisionMatrix& dm);

/// Each column divided by its Euclidean norm; weights untouched.
DecisionMatrix vector_scaler_matrix(const DecisionMatrix& dm);

// --- pipelines -------------------------------------------------------------

struct PipelineStage {
    std::string name;
    Transformer apply;
};

/// Ordered transformers followed by exactly one terminal decider.
class Pipeline {
public:
    Pipeline(std::vector<PipelineStage> transformers, std::string decider_name,
             Decider decider);

    const std::vector<PipelineStage>& transformers() const { return transformers_; }
    const std::string& decider_name() const { return decider_name_; }
    const Decider& decider() const { return decider_; }

    /// "stage1>stage2>method"
    std::string name() const;

private:
    std::vector<PipelineStage> transformers_;
    std::string decider_name_;
    Decider decider_;
};

/// Applies the stages in order, then the decider. Stage names are recorded in
/// extra["pipeline.steps"]; a failing stage's error is re-raised with the
/// stage index in the message but its original code.
RankResult run_pipeline(const Pipeline& pipeline, const DecisionMatrix& dm);

// --- tie breaking ----------------------------------------------------------

/// Hierarchical tie-break policy for pairwise audits: primary ranking, then
/// an optional fallback decider, then first-position-in-matrix order when
/// force_untie demands a strict winner.
struct TieBreakPolicy {
    Decider fallback;          // empty = no fallback
    bool force_untie = true;
};

/// Winner of {x, y} under the policy, or nullopt for a standing tie.
/// `primary` must rank both names; `sub` is the pair's decision matrix.
std::optional<std::string> break_tie(const std::string& x, const std::string& y,
                                     const RankResult& primary,
                                     const TieBreakPolicy& policy,
                                     const DecisionMatrix& sub);

} // namespace rankaudit

#endif // RANKAUDIT_METHODS_HPP
