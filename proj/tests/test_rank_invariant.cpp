#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "rankaudit/rank_invariant.hpp"
#include "rankaudit/report.hpp"
#include "support/oracles.hpp"

using namespace rankaudit;

namespace {

Decider plain_weighted_sum() {
    return [](const DecisionMatrix& dm) { return weighted_sum(dm); };
}

Decider filtering_pipeline(double threshold) {
    return [threshold](const DecisionMatrix& dm) {
        const Pipeline pipeline(
            {{"filter_gt",
              [threshold](const DecisionMatrix& d) {
                  return filter_gt(d, {{"c1", threshold}});
              }}},
            "weighted_sum", [](const DecisionMatrix& d) { return weighted_sum(d); });
        return run_pipeline(pipeline, dm);
    };
}

} // namespace

TEST_CASE("noise_bounds: adjacent gap for interior targets") {
    const auto dm = oracles::m1();
    const auto baseline = weighted_sum(dm);
    const auto bounds = noise_bounds(dm, baseline, "B", GapAggregator::Median);
    CHECK(bounds.at("c1") == doctest::Approx(3.0)); // |8-5|
    CHECK(bounds.at("c2") == doctest::Approx(5.0)); // |9-4|

    CHECK_THROWS_AS(noise_bounds(dm, baseline, "A", GapAggregator::Median), Error);
}

TEST_CASE("noise_bounds: aggregated gaps for the worst target") {
    const auto dm = oracles::m1();
    const auto baseline = weighted_sum(dm);
    // Gaps per criterion: c1 {|10-8|, |8-5|} = {2,3}; c2 {|10-9|, |9-4|} = {1,5}.
    const auto median = noise_bounds(dm, baseline, "C", GapAggregator::Median);
    CHECK(median.at("c1") == doctest::Approx(2.5));
    CHECK(median.at("c2") == doctest::Approx(3.0));

    // Four rows where median and mean differ: gaps c1 {1, 1, 10}.
    const auto skewed = DecisionMatrix::build(
        {"A", "B", "C", "D"}, {"c1"}, {{20}, {19}, {18}, {8}},
        {Objective::Maximize}, {1.0});
    const auto base4 = weighted_sum(skewed);
    CHECK(noise_bounds(skewed, base4, "D", GapAggregator::Median).at("c1") ==
          doctest::Approx(1.0));
    CHECK(noise_bounds(skewed, base4, "D", GapAggregator::Mean).at("c1") ==
          doctest::Approx(4.0));

    // Oracle agreement on a random matrix, every suboptimal target.
    SplitMix64 rng(404);
    const auto random_dm = oracles::random_max_matrix(6, 4, rng);
    const auto base = weighted_sum(random_dm);
    const auto untied = base.untied_rank();
    std::vector<std::string> order(untied.size());
    for (std::size_t i = 0; i < untied.size(); ++i) {
        order[static_cast<std::size_t>(untied[i]) - 1] = base.alternatives()[i];
    }
    for (std::size_t k = 1; k < order.size(); ++k) {
        const auto got = noise_bounds(random_dm, base, order[k], GapAggregator::Median);
        const auto want = oracles::recompute_noise_bound(random_dm, order, order[k]);
        for (const auto& [criterion, bound] : want) {
            CHECK(got.at(criterion) == doctest::Approx(bound).epsilon(1e-12));
        }
    }
}

TEST_CASE("noise_bounds: identical adjacent rows give zero bounds") {
    const auto dm = DecisionMatrix::build(
        {"A", "B", "C"}, {"c1"}, {{9}, {5}, {5}}, {Objective::Maximize}, {1.0});
    const auto baseline = weighted_sum(dm); // B and C tie; untied order A,B,C
    const auto bounds = noise_bounds(dm, baseline, "B", GapAggregator::Median);
    CHECK(bounds.at("c1") == 0.0);

    SplitMix64 rng(1);
    const auto mutated = degrade(dm, "B", bounds, rng);
    CHECK(mutated.row == std::vector<double>{5.0});
    CHECK(mutated.noise.at("c1") == 0.0);
}

TEST_CASE("degrade worsens every criterion within its bound") {
    const auto dm = DecisionMatrix::build(
        {"A", "B"}, {"up", "down"}, {{10, 2}, {6, 5}},
        {Objective::Maximize, Objective::Minimize}, {0.5, 0.5});
    const std::map<std::string, double> bounds{{"up", 4.0}, {"down", 2.0}};

    for (std::uint64_t seed = 0; seed < 1200; ++seed) {
        SplitMix64 rng(seed);
        const auto mutated = degrade(dm, "B", bounds, rng);
        const double delta_up = mutated.noise.at("up");
        const double delta_down = mutated.noise.at("down");
        CHECK(delta_up <= 0.0);
        CHECK(delta_up >= -4.0);
        CHECK(delta_down >= 0.0);           // Minimize gets positive noise
        CHECK(delta_down <= 2.0);
        CHECK(mutated.row[0] == 6.0 + delta_up);
        CHECK(mutated.row[1] == 5.0 + delta_down);
    }
}

TEST_CASE("pad_missing appends the shared worst rank") {
    const std::vector<std::string> full{"A", "B", "C"};

    auto [names1, values1] = pad_missing({"A", "B"}, {1, 2}, full, true);
    CHECK(names1 == std::vector<std::string>{"A", "B", "C"});
    CHECK(values1 == std::vector<int>{1, 2, 3});

    auto [names2, values2] = pad_missing({"A", "B", "C"}, {1, 2, 3}, full, true);
    CHECK(names2 == std::vector<std::string>{"A", "B", "C"});
    CHECK(values2 == std::vector<int>{1, 2, 3});

    auto [names3, values3] = pad_missing({"A"}, {1}, full, true);
    CHECK(names3 == std::vector<std::string>{"A", "B", "C"});
    CHECK(values3 == std::vector<int>{1, 2, 2}); // eliminated share the worst rank

    try {
        pad_missing({"A"}, {1}, full, false);
        FAIL_CHECK("expected PipelineEliminatedAlternatives");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::PipelineEliminatedAlternatives);
        CHECK(std::string(err.what()) == "Pipeline eliminated alternatives");
    }
}

TEST_CASE("pad_missing output always satisfies the rank invariants") {
    SplitMix64 rng(11);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 2 + rng.below(7);
        const auto full = oracles::node_names(n);
        std::vector<std::string> survivors;
        for (const auto& name : full) {
            if (rng.next() & 1ull) survivors.push_back(name);
        }
        if (survivors.empty()) survivors.push_back(full[0]);
        // Nondecreasing ranks from 1 with steps of 0/1 are dense by build.
        std::vector<int> values;
        int rank = 1;
        for (std::size_t i = 0; i < survivors.size(); ++i) {
            values.push_back(rank);
            if (rng.next() & 1ull) ++rank;
        }
        auto [names, padded] = pad_missing(survivors, values, full, true);
        CHECK_NOTHROW(RankResult("pad", names, padded));
    }
}

TEST_CASE("run_rrt1 produces (n-1)R+1 entries with a unique optimum") {
    const auto comparator = run_rrt1(plain_weighted_sum(), oracles::m1(), {});
    REQUIRE(comparator.size() == 3);
    CHECK(comparator.entry(0).first == "Original");
    CHECK(comparator.entry(1).first == "M.B.1");
    CHECK(comparator.entry(2).first == "M.C.1");

    Rrt1Config two_repeats;
    two_repeats.repeats = 2;
    two_repeats.seed = 42;
    CHECK(run_rrt1(plain_weighted_sum(), oracles::m1(), two_repeats).size() == 5);

    // Tied optima are not mutated: two identical best rows over 4 rows
    // leave 2 suboptimal alternatives -> 3 entries.
    const auto tied = DecisionMatrix::build(
        {"A", "B", "C", "D"}, {"c1", "c2"}, {{9, 9}, {9, 9}, {5, 6}, {2, 1}},
        {Objective::Maximize, Objective::Maximize}, {0.5, 0.5});
    const auto tied_comparator = run_rrt1(plain_weighted_sum(), tied, {});
    CHECK(tied_comparator.size() == 3);
    const auto verdict = rrt1_verdict(tied_comparator);
    CHECK(verdict.mutations.size() == 2);
}

TEST_CASE("baseline plus one mutated ranking tabulates as 2x3") {
    const auto comparator = run_rrt1(plain_weighted_sum(), oracles::m1(), {});
    const RanksComparator slice(
        {comparator.entry(0), comparator.entry(1)});
    const auto table = slice.to_rank_table();
    CHECK(table.columns == std::vector<std::string>{"A", "B", "C"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0] == std::vector<int>{1, 2, 3});
    // Degrading B cannot promote it; A stays on top.
    CHECK(table.rows[1][0] == 1);
}

TEST_CASE("run_rrt1 mutation metadata is complete") {
    Rrt1Config config;
    config.seed = 7;
    const auto comparator = run_rrt1(plain_weighted_sum(), oracles::m1(), config);
    const auto& mutated = comparator.at("M.B.1");
    const auto& record = mutated.extra().at("rank_inv_check");
    CHECK(record.at("iteration") == 1);
    CHECK(record.at("mutated") == "B");
    CHECK(record.at("missing").empty());
    // Deltas respect the hand-computed bounds for B: c1 in [-3,0], c2 in [-5,0].
    const double d1 = record.at("noise").at("c1").get<double>();
    const double d2 = record.at("noise").at("c2").get<double>();
    CHECK(d1 <= 0.0);
    CHECK(d1 >= -3.0);
    CHECK(d2 <= 0.0);
    CHECK(d2 >= -5.0);
}

TEST_CASE("rrt1_verdict: stable method passes, adversarial stub fails") {
    const auto comparator = run_rrt1(plain_weighted_sum(), oracles::m1(), {});
    const auto verdict = rrt1_verdict(comparator);
    CHECK(verdict.aggregate_pass_rate == 1.0);
    CHECK(verdict.passed);
    CHECK(verdict.mutations.size() == 2);

    // A decider that reverses its ranking on any matrix other than M1.
    const auto m1 = oracles::m1();
    const Decider adversarial = [m1](const DecisionMatrix& dm) {
        if (dm == m1) return weighted_sum(dm);
        return RankResult("adversarial", dm.alternatives(), {3, 2, 1});
    };
    const auto bad = rrt1_verdict(run_rrt1(adversarial, m1, {}));
    CHECK(bad.aggregate_pass_rate == 0.0);
    CHECK_FALSE(bad.passed);

    // Smallest case: 2 alternatives, 1 mutation evaluated.
    const auto pair = DecisionMatrix::build(
        {"A", "B"}, {"c1"}, {{9}, {4}}, {Objective::Maximize}, {1.0});
    CHECK(rrt1_verdict(run_rrt1(plain_weighted_sum(), pair, {})).mutations.size() == 1);

    // A comparator that did not come from run_rrt1 is rejected.
    const RankResult plain = weighted_sum(m1);
    CHECK_THROWS_AS(
        rrt1_verdict(RanksComparator({{"a", plain}, {"b", plain}})), Error);
}

TEST_CASE("run_rrt1 is deterministic per seed, parallelism included") {
    Rrt1Config config;
    config.repeats = 3;
    config.seed = 20240808;
    SplitMix64 rng(5);
    const auto dm = oracles::random_max_matrix(7, 3, rng);

    const auto first = run_rrt1(plain_weighted_sum(), dm, config);
    const auto second = run_rrt1(plain_weighted_sum(), dm, config);
    CHECK(comparator_to_json(first).dump() == comparator_to_json(second).dump());

    config.seed = 20240809;
    const auto other_seed = run_rrt1(plain_weighted_sum(), dm, config);
    CHECK(comparator_to_json(first).dump() != comparator_to_json(other_seed).dump());
}

TEST_CASE("entry count formula holds across the (n, R) grid") {
    SplitMix64 rng(66);
    for (std::size_t n : {3u, 4u, 6u, 9u}) {
        for (int repeats : {1, 2, 4}) {
            auto dm = oracles::random_max_matrix(n, 3, rng);
            // Force a unique optimum with a dominator row.
            std::vector<double> top(dm.n_criteria(), 1000.0);
            dm = dm.replace_alternative(dm.alternatives()[0], top);

            Rrt1Config config;
            config.repeats = repeats;
            config.seed = rng.next();
            const auto comparator = run_rrt1(plain_weighted_sum(), dm, config);
            CHECK(comparator.size() == (n - 1) * static_cast<std::size_t>(repeats) + 1);
        }
    }
}

TEST_CASE("pipeline elimination: padding on, error when off") {
    // filter_gt(c1 > 6) removes C from M1 (c1 = 5).
    const auto decider = filtering_pipeline(6.0);

    Rrt1Config allow;
    allow.seed = 3;
    const auto comparator = run_rrt1(decider, oracles::m1(), allow);
    const auto& baseline = comparator.entry(0).second;
    CHECK(baseline.rank_of("C") == 3); // padded with max_rank + 1
    const auto& c_record = comparator.at("M.C.1").extra().at("rank_inv_check");
    const auto missing = c_record.at("missing").get<std::vector<std::string>>();
    CHECK(std::find(missing.begin(), missing.end(), "C") != missing.end());
    CHECK(rrt1_verdict(comparator).passed);

    Rrt1Config forbid;
    forbid.allow_missing = false;
    try {
        run_rrt1(decider, oracles::m1(), forbid);
        FAIL_CHECK("expected PipelineEliminatedAlternatives");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::PipelineEliminatedAlternatives);
        CHECK(std::string(err.what()) == "Pipeline eliminated alternatives");
    }
}
