#include "rankaudit/transitivity.hpp"

#include <algorithm>
#include <optional>

#include <json.hpp>

#include "rankaudit/error.hpp"
#include "rankaudit/parallel.hpp"
#include "rankaudit/rank_invariant.hpp"
#include "rankaudit/rng.hpp"

namespace rankaudit {

const char* to_string(CycleBreakStrategy strategy) {
    return strategy == CycleBreakStrategy::Random ? "random" : "weighted";
}

namespace {

struct PairVerdict {
    std::optional<std::pair<std::size_t, std::size_t>> edge; // winner, loser
    std::vector<std::string> missing;
};

nlohmann::json edges_to_json(const DominanceGraph& graph) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [winner, loser] : graph.edge_list()) {
        edges.push_back(nlohmann::json::array({winner, loser}));
    }
    return edges;
}

} // namespace

PairwiseOutcome pairwise_graph(const Decider& decider, const DecisionMatrix& dm,
                               const TieBreakPolicy& tie_policy) {
    const std::size_t n = dm.n_alternatives();
    if (n < 2) {
        fail(ErrorCode::DimensionMismatch, "pairwise decomposition needs >= 2 alternatives");
    }

    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    pairs.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    auto evaluate_pair = [&](std::size_t p) -> PairVerdict {
        const auto [i, j] = pairs[p];
        const std::string& x = dm.alternatives()[i];
        const std::string& y = dm.alternatives()[j];
        const DecisionMatrix sub = dm.sub_matrix({x, y});

        PairVerdict verdict;
        std::optional<RankResult> raw;
        try {
            raw = decider(sub);
        } catch (const Error& err) {
            if (err.code() != ErrorCode::AllFiltered) throw;
        }

        if (!raw.has_value()) {
            // Pipeline removed the whole pair; first position wins, both are
            // reported as missing.
            verdict.edge = {i, j};
            verdict.missing = {x, y};
            return verdict;
        }

        for (const auto& name : {x, y}) {
            if (!raw->has_alternative(name)) verdict.missing.push_back(name);
        }
        const RankResult padded = pad_missing_rank(*raw, {x, y}, true);
        const auto winner = break_tie(x, y, padded, tie_policy, sub);
        if (winner.has_value()) {
            verdict.edge = *winner == x ? std::make_pair(i, j) : std::make_pair(j, i);
        }
        return verdict;
    };

    const auto verdicts = parallel_map(pairs.size(), evaluate_pair);

    PairwiseOutcome outcome{DominanceGraph(dm.alternatives()), {}};
    for (const auto& verdict : verdicts) {
        if (verdict.edge.has_value()) {
            outcome.graph.add_edge(verdict.edge->first, verdict.edge->second);
        }
        for (const auto& name : verdict.missing) {
            if (std::find(outcome.missing.begin(), outcome.missing.end(), name) ==
                outcome.missing.end()) {
                outcome.missing.push_back(name);
            }
        }
    }
    std::sort(outcome.missing.begin(), outcome.missing.end());
    return outcome;
}

Rrt2Result run_rrt2(const Decider& decider, const DecisionMatrix& dm,
                    const TieBreakPolicy& tie_policy) {
    RankResult baseline = pad_missing_rank(decider(dm), dm.alternatives(), true);
    auto [graph, missing] = pairwise_graph(decider, dm, tie_policy);

    TransitivityReport report{false, {}, 0.0, graph, missing};
    if (dm.n_alternatives() >= 3) {
        report.trans_break = find_three_cycles(graph);
        report.trans_break_rate =
            static_cast<double>(report.trans_break.size()) /
            static_cast<double>(max_three_cycles(static_cast<int>(dm.n_alternatives())));
    }
    report.test_criterion_2 = report.trans_break_rate == 0.0;

    nlohmann::json breaks = nlohmann::json::array();
    for (const auto& cycle : report.trans_break) {
        breaks.push_back(nlohmann::json::array({cycle[0], cycle[1], cycle[2]}));
    }
    baseline.extra().set("rank_trans_check",
                         nlohmann::json{{"test_criterion_2", report.test_criterion_2},
                                        {"trans_break", std::move(breaks)},
                                        {"trans_break_rate", report.trans_break_rate},
                                        {"graph_edges", edges_to_json(graph)},
                                        {"missing", missing}});
    return Rrt2Result{std::move(report), std::move(baseline)};
}

namespace {

using Cycle = std::vector<std::size_t>;

bool cycle_intact(const DominanceGraph& graph, const Cycle& cycle) {
    for (std::size_t k = 0; k < cycle.size(); ++k) {
        if (!graph.has_edge(cycle[k], cycle[(k + 1) % cycle.size()])) return false;
    }
    return true;
}

void remove_random_per_cycle(DominanceGraph& work, const std::vector<Cycle>& cycles,
                             SplitMix64& rng,
                             std::vector<std::pair<std::size_t, std::size_t>>& removed) {
    for (const auto& cycle : cycles) {
        if (!cycle_intact(work, cycle)) continue;
        const std::size_t k = rng.below(cycle.size());
        const std::size_t winner = cycle[k];
        const std::size_t loser = cycle[(k + 1) % cycle.size()];
        work.remove_edge(winner, loser);
        removed.emplace_back(winner, loser);
    }
}

void remove_most_shared(DominanceGraph& work, const std::vector<Cycle>& cycles,
                        std::vector<std::pair<std::size_t, std::size_t>>& removed) {
    for (;;) {
        // Membership count of every edge over the still-unbroken cycles.
        std::map<std::pair<std::size_t, std::size_t>, std::size_t> load;
        for (const auto& cycle : cycles) {
            if (!cycle_intact(work, cycle)) continue;
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                ++load[{cycle[k], cycle[(k + 1) % cycle.size()]}];
            }
        }
        if (load.empty()) return;
        auto best = load.begin();
        for (auto it = load.begin(); it != load.end(); ++it) {
            if (it->second > best->second) best = it; // ties: smallest edge wins
        }
        work.remove_edge(best->first.first, best->first.second);
        removed.push_back(best->first);
    }
}

} // namespace

CycleResolution break_cycles(const DominanceGraph& graph, CycleBreakStrategy strategy,
                             std::uint64_t seed) {
    if (graph.is_acyclic()) {
        fail(ErrorCode::AlreadyAcyclic, "graph has no cycles to break");
    }

    DominanceGraph work = graph;
    std::vector<std::pair<std::size_t, std::size_t>> removed;
    SplitMix64 rng(seed);

    // The enumeration is capped, so removals run against a possibly partial
    // cycle list and the loop re-enumerates until nothing is left.
    for (;;) {
        const auto cycles = enumerate_simple_cycles(work, kMaxEnumeratedCycles);
        if (cycles.empty()) break;
        if (strategy == CycleBreakStrategy::Random) {
            remove_random_per_cycle(work, cycles, rng, removed);
        } else {
            remove_most_shared(work, cycles, removed);
        }
    }
    if (!work.is_acyclic()) {
        fail(ErrorCode::CycleDetected, "cycle breaking left a cycle behind");
    }

    CycleResolution resolution;
    resolution.removed_edges.reserve(removed.size());
    for (const auto& [winner, loser] : removed) {
        resolution.removed_edges.emplace_back(graph.node(winner), graph.node(loser));
    }
    resolution.acyclic_graph = std::move(work);
    resolution.strategy = strategy;
    resolution.seed = seed;
    return resolution;
}

RankResult recompose_ranking(const DominanceGraph& dag) {
    const std::size_t n = dag.size();
    std::vector<std::size_t> indegree(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (dag.has_edge(i, j)) ++indegree[j];
        }
    }

    std::vector<int> level(n, 0);
    std::vector<bool> placed(n, false);
    std::size_t done = 0;
    int current = 0;
    while (done < n) {
        ++current;
        std::vector<std::size_t> layer;
        for (std::size_t i = 0; i < n; ++i) {
            if (!placed[i] && indegree[i] == 0) layer.push_back(i);
        }
        if (layer.empty()) {
            fail(ErrorCode::CycleDetected, "recomposition expects an acyclic graph");
        }
        for (std::size_t v : layer) {
            placed[v] = true;
            level[v] = current;
            ++done;
        }
        for (std::size_t v : layer) {
            for (std::size_t j = 0; j < n; ++j) {
                if (dag.has_edge(v, j)) --indegree[j];
            }
        }
    }
    return RankResult("recomposition", dag.nodes(), std::move(level));
}

Rrt3Result run_rrt3(const Decider& decider, const DecisionMatrix& dm,
                    const TieBreakPolicy& tie_policy, int candidates,
                    CycleBreakStrategy strategy, std::uint64_t seed) {
    if (candidates < 1) {
        fail(ErrorCode::InvalidConfig, "candidates must be >= 1");
    }

    Rrt2Result rrt2 = run_rrt2(decider, dm, tie_policy);
    const bool criterion_2 = rrt2.report.test_criterion_2;
    const DominanceGraph& graph = rrt2.report.graph;

    bool criterion_3 = false;
    std::vector<CycleResolution> resolutions;
    std::vector<std::pair<std::string, RankResult>> entries;
    entries.emplace_back("Original", rrt2.baseline);

    if (graph.is_acyclic()) {
        RankResult recomposed = recompose_ranking(graph);
        bool identical = true;
        for (const auto& name : dm.alternatives()) {
            if (recomposed.rank_of(name) != rrt2.baseline.rank_of(name)) {
                identical = false;
                break;
            }
        }
        criterion_3 = criterion_2 && identical;
        entries.emplace_back("Recomposed", std::move(recomposed));
    } else {
        for (int k = 0; k < candidates; ++k) {
            CycleResolution resolution =
                break_cycles(graph, strategy, seed + static_cast<std::uint64_t>(k));
            resolution.missing = rrt2.report.missing;

            RankResult recomposed = recompose_ranking(resolution.acyclic_graph);
            nlohmann::json removed = nlohmann::json::array();
            for (const auto& [winner, loser] : resolution.removed_edges) {
                removed.push_back(nlohmann::json::array({winner, loser}));
            }
            recomposed.extra().set(
                "transitivity_check",
                nlohmann::json{{"acyclic_graph_edges", edges_to_json(resolution.acyclic_graph)},
                               {"removed_edges", std::move(removed)},
                               {"strategy", to_string(resolution.strategy)},
                               {"seed", resolution.seed},
                               {"missing", resolution.missing}});
            entries.emplace_back("Recomposed." + std::to_string(k + 1),
                                 std::move(recomposed));
            resolutions.push_back(std::move(resolution));
        }
    }

    Extra comparator_extra;
    comparator_extra.set("test_criterion_3", criterion_3);
    RanksComparator comparator(std::move(entries), std::move(comparator_extra));

    std::map<std::string, std::vector<int>> rank_distribution;
    for (const auto& name : dm.alternatives()) {
        auto& distribution = rank_distribution[name];
        for (std::size_t e = 1; e < comparator.size(); ++e) {
            distribution.push_back(comparator.entry(e).second.rank_of(name));
        }
    }
    return Rrt3Result{criterion_2,
                      criterion_3,
                      std::move(rrt2),
                      std::move(resolutions),
                      std::move(comparator),
                      std::move(rank_distribution)};
}

} // namespace rankaudit
