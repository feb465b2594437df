#include "rankaudit/rank_invariant.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "rankaudit/error.hpp"
#include "rankaudit/parallel.hpp"

namespace rankaudit {

namespace {

// Alternative names in untied baseline order (best first).
std::vector<std::string> untied_order(const RankResult& baseline) {
    const auto untied = baseline.untied_rank();
    std::vector<std::string> order(untied.size());
    for (std::size_t i = 0; i < untied.size(); ++i) {
        order[static_cast<std::size_t>(untied[i]) - 1] = baseline.alternatives()[i];
    }
    return order;
}

double aggregate_gap(std::vector<double> gaps, GapAggregator aggregator) {
    if (aggregator == GapAggregator::Mean) {
        double s = 0.0;
        for (double g : gaps) s += g;
        return s / static_cast<double>(gaps.size());
    }
    std::sort(gaps.begin(), gaps.end());
    const std::size_t n = gaps.size();
    return n % 2 == 1 ? gaps[n / 2] : 0.5 * (gaps[n / 2 - 1] + gaps[n / 2]);
}

nlohmann::json record_to_json(const MutationRecord& record) {
    nlohmann::json noise = nlohmann::json::object();
    for (const auto& [criterion, delta] : record.noise) noise[criterion] = delta;
    return nlohmann::json{{"iteration", record.iteration},
                          {"mutated", record.mutated},
                          {"noise", std::move(noise)},
                          {"missing", record.missing}};
}

} // namespace

std::map<std::string, double> noise_bounds(const DecisionMatrix& dm,
                                           const RankResult& baseline,
                                           const std::string& target,
                                           GapAggregator aggregator) {
    for (const auto& name : dm.alternatives()) {
        if (!baseline.has_alternative(name)) {
            fail(ErrorCode::MismatchedAlternatives,
                 "baseline does not cover alternative " + name);
        }
    }
    if (baseline.rank_of(target) == 1) {
        fail(ErrorCode::TargetIsOptimal, "cannot degrade optimal alternative " + target);
    }

    const auto order = untied_order(baseline);
    const std::size_t n = order.size();
    std::size_t position = 0;
    while (order[position] != target) ++position;

    std::map<std::string, double> bounds;
    if (position + 1 < n) {
        const std::size_t a = dm.alternative_index(target);
        const std::size_t b = dm.alternative_index(order[position + 1]);
        for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
            bounds[dm.criteria()[c]] = std::abs(dm.value(a, c) - dm.value(b, c));
        }
    } else {
        // Worst alternative: no natural lower neighbor. Aggregate the
        // adjacent gaps of the whole untied order, criterion by criterion.
        for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
            std::vector<double> gaps;
            gaps.reserve(n - 1);
            for (std::size_t j = 0; j + 1 < n; ++j) {
                const std::size_t a = dm.alternative_index(order[j]);
                const std::size_t b = dm.alternative_index(order[j + 1]);
                gaps.push_back(std::abs(dm.value(a, c) - dm.value(b, c)));
            }
            bounds[dm.criteria()[c]] = aggregate_gap(std::move(gaps), aggregator);
        }
    }
    return bounds;
}

DegradedRow degrade(const DecisionMatrix& dm, const std::string& target,
                    const std::map<std::string, double>& bounds, SplitMix64& rng) {
    const std::size_t row_index = dm.alternative_index(target);
    DegradedRow out;
    out.row.resize(dm.n_criteria());
    for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
        const double bound = bounds.at(dm.criteria()[c]);
        const double epsilon = rng.uniform(bound);
        const double delta =
            dm.objective(c) == Objective::Maximize ? -epsilon : epsilon;
        out.row[c] = dm.value(row_index, c) + delta;
        out.noise[dm.criteria()[c]] = delta;
    }
    return out;
}

std::pair<std::vector<std::string>, std::vector<int>> pad_missing(
    std::vector<std::string> alternatives, std::vector<int> values,
    const std::vector<std::string>& full_alternatives, bool allow_missing) {
    for (const auto& name : alternatives) {
        if (std::find(full_alternatives.begin(), full_alternatives.end(), name) ==
            full_alternatives.end()) {
            fail(ErrorCode::UnknownAlternative,
                 "ranked alternative not in the full set: " + name);
        }
    }
    std::vector<std::string> missing;
    for (const auto& name : full_alternatives) {
        if (std::find(alternatives.begin(), alternatives.end(), name) ==
            alternatives.end()) {
            missing.push_back(name);
        }
    }
    if (missing.empty()) return {std::move(alternatives), std::move(values)};
    if (!allow_missing) {
        fail(ErrorCode::PipelineEliminatedAlternatives,
             "Pipeline eliminated alternatives");
    }
    const int worst = *std::max_element(values.begin(), values.end());
    for (auto& name : missing) {
        alternatives.push_back(std::move(name));
        values.push_back(worst + 1);
    }
    return {std::move(alternatives), std::move(values)};
}

RankResult pad_missing_rank(const RankResult& rank,
                            const std::vector<std::string>& full_alternatives,
                            bool allow_missing) {
    auto [alternatives, values] = pad_missing(rank.alternatives(), rank.values(),
                                              full_alternatives, allow_missing);
    return RankResult(rank.method(), std::move(alternatives), std::move(values),
                      rank.extra());
}

RanksComparator run_rrt1(const Decider& decider, const DecisionMatrix& dm,
                         const Rrt1Config& config) {
    if (dm.n_alternatives() < 2) {
        fail(ErrorCode::DimensionMismatch, "RRT1 needs at least two alternatives");
    }
    if (config.repeats < 1) {
        fail(ErrorCode::InvalidConfig, "repeats must be >= 1");
    }

    const RankResult baseline = pad_missing_rank(
        decider(dm), dm.alternatives(), config.allow_missing);

    // Suboptimal alternatives in untied baseline order; tied optima are
    // optima, so nothing in the rank-1 group is ever mutated.
    const auto order = untied_order(baseline);
    std::vector<std::pair<std::string, std::uint64_t>> targets;
    for (std::size_t pos = 0; pos < order.size(); ++pos) {
        if (baseline.rank_of(order[pos]) > 1) {
            targets.emplace_back(order[pos], static_cast<std::uint64_t>(pos) + 1);
        }
    }

    const std::size_t per_repeat = targets.size();
    const std::size_t total = per_repeat * static_cast<std::size_t>(config.repeats);

    auto evaluate_cell = [&](std::size_t cell) {
        const int iteration = static_cast<int>(cell / per_repeat) + 1;
        const auto& [target, position] = targets[cell % per_repeat];

        SplitMix64 rng = SplitMix64::substream(
            config.seed, static_cast<std::uint64_t>(iteration), position);
        const auto bounds = noise_bounds(dm, baseline, target,
                                         config.last_alternative_aggregator);
        DegradedRow degraded = degrade(dm, target, bounds, rng);
        const DecisionMatrix mutated = dm.replace_alternative(target, degraded.row);

        const RankResult raw = decider(mutated);
        MutationRecord record;
        record.iteration = iteration;
        record.mutated = target;
        record.noise = std::move(degraded.noise);
        for (const auto& name : dm.alternatives()) {
            if (!raw.has_alternative(name)) record.missing.push_back(name);
        }

        RankResult padded =
            pad_missing_rank(raw, dm.alternatives(), config.allow_missing);
        padded.extra().set("rank_inv_check", record_to_json(record));

        const std::string label = "M." + target + "." + std::to_string(iteration);
        return std::make_pair(label, std::move(padded));
    };

    auto mutated_entries = parallel_map(total, evaluate_cell);

    std::vector<std::pair<std::string, RankResult>> entries;
    entries.reserve(total + 1);
    entries.emplace_back("Original", baseline);
    for (auto& entry : mutated_entries) entries.push_back(std::move(entry));
    return RanksComparator(std::move(entries));
}

Rrt1Report rrt1_verdict(const RanksComparator& comparator) {
    const auto& entries = comparator.entries();
    const RankResult& baseline = entries.front().second;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        if (!entries[i].second.extra().contains("rank_inv_check")) {
            fail(ErrorCode::NotAnRrt1Comparator,
                 "entry " + entries[i].first + " lacks rank_inv_check metadata");
        }
    }

    std::vector<std::string> optima;
    for (std::size_t i = 0; i < baseline.size(); ++i) {
        if (baseline.values()[i] == 1) optima.push_back(baseline.alternatives()[i]);
    }

    Rrt1Report report;
    std::size_t passes = 0;
    for (std::size_t i = 1; i < entries.size(); ++i) {
        const auto& [label, rank] = entries[i];
        bool preserved = true;
        for (const auto& name : optima) {
            if (rank.rank_of(name) != 1) {
                preserved = false;
                break;
            }
        }
        const auto& record = rank.extra().at("rank_inv_check");
        report.mutations.push_back({label, record.at("mutated").get<std::string>(),
                                    record.at("iteration").get<int>(), preserved});
        if (preserved) ++passes;
    }
    report.aggregate_pass_rate =
        report.mutations.empty()
            ? 1.0
            : static_cast<double>(passes) / static_cast<double>(report.mutations.size());
    report.passed = report.aggregate_pass_rate == 1.0;
    return report;
}

} // namespace rankaudit
