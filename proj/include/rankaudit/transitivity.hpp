#ifndef RANKAUDIT_TRANSITIVITY_HPP
#define RANKAUDIT_TRANSITIVITY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rankaudit/decision_matrix.hpp"
#include "rankaudit/dominance_graph.hpp"
#include "rankaudit/methods.hpp"
#include "rankaudit/ranks_comparator.hpp"

namespace rankaudit {

/// Cap on enumerated simple cycles per pass; audits target desk-scale n,
/// where cycle counts can still be exponential.
inline constexpr std::size_t kMaxEnumeratedCycles = 10000;

struct PairwiseOutcome {
    DominanceGraph graph;
    std::vector<std::string> missing; // pair members eliminated by the pipeline
};

/**
 * Decomposes the problem into all n(n-1)/2 pairwise subproblems, evaluates
 * each with the decider and aggregates the winners into a dominance graph.
 * Ties fall through the tie-break hierarchy; a pair member the pipeline
 * filters out loses its pair, and a fully filtered pair is decided by
 * first-position order with both members recorded as missing. Subproblems
 * run in parallel and merge in canonical pair order.
 */
PairwiseOutcome pairwise_graph(const Decider& decider, const DecisionMatrix& dm,
                               const TieBreakPolicy& tie_policy);

struct TransitivityReport {
    bool test_criterion_2 = false;
    std::vector<std::array<std::string, 3>> trans_break; // 3-cycles A>B>C>A
    double trans_break_rate = 0.0;
    DominanceGraph graph;
    std::vector<std::string> missing;
};

struct Rrt2Result {
    TransitivityReport report;
    /// Full-problem ranking, padded, with the report summary embedded under
    /// extra["rank_trans_check"].
    RankResult baseline;
};

/// RRT2 — pairwise transitivity. Rate = |3-cycles| / Moon bound; n = 2 has
/// no triples and passes with rate 0 by definition.
Rrt2Result run_rrt2(const Decider& decider, const DecisionMatrix& dm,
                    const TieBreakPolicy& tie_policy);

enum class CycleBreakStrategy { Random, Weighted };

const char* to_string(CycleBreakStrategy strategy);

struct CycleResolution {
    DominanceGraph acyclic_graph;
    std::vector<std::pair<std::string, std::string>> removed_edges;
    CycleBreakStrategy strategy = CycleBreakStrategy::Random;
    std::uint64_t seed = 0;
    std::vector<std::string> missing;
};

/**
 * Removes edges until the graph is acyclic. Random picks one edge uniformly
 * from each still-unbroken enumerated cycle; Weighted repeatedly removes the
 * edge sitting on the most unbroken cycles. Both re-enumerate after a pass in
 * case the cycle list was capped. Throws AlreadyAcyclic when there is
 * nothing to break.
 */
CycleResolution break_cycles(const DominanceGraph& graph, CycleBreakStrategy strategy,
                             std::uint64_t seed);

/// Hierarchical topological sort of a DAG into preference levels: rank 1 is
/// every zero in-degree node, then peel and repeat. Throws CycleDetected.
RankResult recompose_ranking(const DominanceGraph& dag);

struct Rrt3Result {
    bool test_criterion_2 = false;
    bool test_criterion_3 = false;
    Rrt2Result rrt2;
    std::vector<CycleResolution> resolutions;      // empty when already acyclic
    /// "Original" + recomposed candidate rankings; comparator extra carries
    /// "test_criterion_3", candidates carry "transitivity_check".
    RanksComparator comparator;
    /// Dense rank of each alternative across all recomposed candidates.
    std::map<std::string, std::vector<int>> rank_distribution;
};

/// RRT3 — recomposition consistency. An acyclic dominance graph recomposes
/// once and must reproduce the original ranking exactly; a cyclic one yields
/// `candidates` DAG resolutions (seeds seed, seed+1, ...) whose rankings
/// quantify the damage.
Rrt3Result run_rrt3(const Decider& decider, const DecisionMatrix& dm,
                    const TieBreakPolicy& tie_policy, int candidates,
                    CycleBreakStrategy strategy, std::uint64_t seed);

} // namespace rankaudit

#endif // RANKAUDIT_TRANSITIVITY_HPP
