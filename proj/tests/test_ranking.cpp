#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include "rankaudit/ranks_comparator.hpp"
#include "rankaudit/rng.hpp"
#include "support/oracles.hpp"

using namespace rankaudit;

namespace {

RankResult make_rank(std::vector<std::string> names, std::vector<int> values) {
    return RankResult("test", std::move(names), std::move(values));
}

// Random dense ranking over n alternatives: sample group sizes, assign.
RankResult random_rank(std::size_t n, SplitMix64& rng) {
    std::vector<int> values;
    int rank = 1;
    while (values.size() < n) {
        const std::size_t group = 1 + rng.below(3);
        for (std::size_t i = 0; i < group && values.size() < n; ++i) {
            values.push_back(rank);
        }
        ++rank;
    }
    // Shuffle so tie groups are interleaved across positions.
    for (std::size_t i = n; i > 1; --i) {
        std::swap(values[i - 1], values[rng.below(i)]);
    }
    // Re-densify after the shuffle (shuffle keeps the multiset, still dense).
    return make_rank(oracles::node_names(n), values);
}

} // namespace

TEST_CASE("RankResult enforces dense positive ranks") {
    CHECK_THROWS_AS(make_rank({"A", "B"}, {2, 3}), Error);    // min != 1
    CHECK_THROWS_AS(make_rank({"A", "B"}, {1, 3}), Error);    // gap
    CHECK_THROWS_AS(make_rank({"A", "A"}, {1, 2}), Error);    // dup name
    CHECK_THROWS_AS(make_rank({"A"}, {1, 2}), Error);         // length
    CHECK_NOTHROW(make_rank({"A", "B", "C"}, {1, 1, 2}));
}

TEST_CASE("untied_rank resolves ties by listed order") {
    CHECK(make_rank({"A", "B", "C"}, {1, 1, 2}).untied_rank() ==
          std::vector<int>{1, 2, 3});
    CHECK(make_rank({"A", "B", "C"}, {1, 2, 3}).untied_rank() ==
          std::vector<int>{1, 2, 3});
    CHECK(make_rank({"A", "B", "C"}, {2, 1, 1}).untied_rank() ==
          std::vector<int>{3, 1, 2});
}

TEST_CASE("untied_rank is an order-compatible bijection") {
    SplitMix64 rng(7);
    for (int round = 0; round < 200; ++round) {
        const auto rank = random_rank(2 + rng.below(8), rng);
        const auto untied = rank.untied_rank();

        std::vector<int> sorted = untied;
        std::sort(sorted.begin(), sorted.end());
        std::vector<int> expected(untied.size());
        std::iota(expected.begin(), expected.end(), 1);
        CHECK(sorted == expected);

        for (std::size_t i = 0; i < untied.size(); ++i) {
            for (std::size_t j = 0; j < untied.size(); ++j) {
                if (rank.values()[i] < rank.values()[j]) {
                    CHECK(untied[i] < untied[j]);
                }
            }
        }
        // Identity on already-untied rankings.
        const bool no_ties =
            std::set<int>(rank.values().begin(), rank.values().end()).size() ==
            rank.values().size();
        if (no_ties) CHECK(untied == rank.values());
    }
}

TEST_CASE("extra refuses silent overwrites and merges additively") {
    Extra extra;
    extra.set("weighted_sum.scores", 1.0);
    CHECK_THROWS_AS(extra.set("weighted_sum.scores", 2.0), Error);

    Extra other;
    other.set("pipeline.steps", nlohmann::json::array({"a", "b"}));
    extra.merge(other);
    CHECK(extra.contains("pipeline.steps"));
    CHECK_THROWS_AS(extra.merge(other), Error);
}

TEST_CASE("comparator rejects bad entry collections") {
    const auto r1 = make_rank({"A", "B", "C"}, {1, 2, 3});
    const auto r2 = make_rank({"C", "B", "A"}, {1, 2, 3});
    const auto r_other = make_rank({"A", "B", "D"}, {1, 2, 3});

    CHECK_NOTHROW(RanksComparator({{"one", r1}}));
    CHECK_THROWS_AS(RanksComparator({{"one", r1}, {"one", r2}}), Error);
    try {
        RanksComparator({{"one", r1}, {"two", r_other}});
        FAIL_CHECK("mismatched alternative sets accepted");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::MismatchedAlternatives);
    }
    // Different listing order of the same set is fine.
    CHECK_NOTHROW(RanksComparator({{"one", r1}, {"two", r2}}));
}

TEST_CASE("to_rank_table aligns columns by name") {
    const auto r1 = make_rank({"A", "B", "C"}, {1, 2, 3});
    const auto r2 = make_rank({"C", "B", "A"}, {3, 2, 1}); // same ranking, reordered
    const RanksComparator rc({{"first", r1}, {"second", r2}});
    const auto table = rc.to_rank_table();
    CHECK(table.columns == std::vector<std::string>{"A", "B", "C"});
    REQUIRE(table.rows.size() == 2);
    CHECK(table.rows[0] == std::vector<int>{1, 2, 3});
    CHECK(table.rows[1] == std::vector<int>{1, 2, 3});
}

TEST_CASE("rank_correlation matches hand-checked fixtures") {
    const auto identity = make_rank({"A", "B", "C"}, {1, 2, 3});
    const auto reversed = make_rank({"A", "B", "C"}, {3, 2, 1});
    const auto swapped = make_rank({"A", "B", "C"}, {1, 3, 2});

    const RanksComparator same({{"x", identity}, {"y", identity}});
    CHECK(same.rank_correlation(RankStatistic::Spearman)[0][1] == doctest::Approx(1.0));

    const RanksComparator opposite({{"x", identity}, {"y", reversed}});
    CHECK(opposite.rank_correlation(RankStatistic::Spearman)[0][1] ==
          doctest::Approx(-1.0));

    // Brute-force pair count: 2 concordant, 1 discordant -> 1/3.
    const RanksComparator near({{"x", identity}, {"y", swapped}});
    CHECK(near.rank_correlation(RankStatistic::Kendall)[0][1] ==
          doctest::Approx(1.0 / 3.0));
    CHECK(oracles::kendall_tau({1, 2, 3}, {1, 3, 2}) == doctest::Approx(1.0 / 3.0));

    // Untied ranks (1,2,3) vs (3,2,1): |1-3| + 0 + |3-1| = 4.
    CHECK(opposite.rank_correlation(RankStatistic::ManhattanDistance)[0][1] ==
          doctest::Approx(4.0));
    CHECK(opposite.rank_correlation(RankStatistic::R2)[0][1] == doctest::Approx(1.0));

    CHECK_THROWS_AS(RanksComparator({{"only", identity}})
                        .rank_correlation(RankStatistic::Spearman),
                    Error);
}

TEST_CASE("correlation matrices are symmetric with the right diagonal") {
    SplitMix64 rng(99);
    for (int round = 0; round < 30; ++round) {
        const std::size_t n = 3 + rng.below(5);
        std::vector<std::pair<std::string, RankResult>> entries;
        const std::size_t k = 2 + rng.below(3);
        for (std::size_t e = 0; e < k; ++e) {
            entries.emplace_back("r" + std::to_string(e), random_rank(n, rng));
        }
        const RanksComparator rc(std::move(entries));

        for (const auto statistic :
             {RankStatistic::Spearman, RankStatistic::Kendall, RankStatistic::Covariance,
              RankStatistic::R2, RankStatistic::ManhattanDistance}) {
            const auto matrix = rc.rank_correlation(statistic);
            for (std::size_t i = 0; i < matrix.size(); ++i) {
                for (std::size_t j = 0; j < matrix.size(); ++j) {
                    CHECK(matrix[i][j] == doctest::Approx(matrix[j][i]).epsilon(1e-12));
                }
                if (statistic == RankStatistic::ManhattanDistance) {
                    CHECK(matrix[i][i] == 0.0);
                } else if (statistic == RankStatistic::Covariance) {
                    // Sample variance of a permutation of 1..n is n(n+1)/12.
                    const double expected =
                        static_cast<double>(n) * static_cast<double>(n + 1) / 12.0;
                    CHECK(matrix[i][i] == doctest::Approx(expected));
                } else {
                    CHECK(matrix[i][i] == doctest::Approx(1.0));
                }
            }
        }

        // Spearman agrees with the classic formula on untied ranks.
        const auto spearman = rc.rank_correlation(RankStatistic::Spearman);
        std::vector<std::string> columns = rc.entry(0).second.alternatives();
        std::sort(columns.begin(), columns.end());
        auto aligned = [&](const RankResult& r) {
            std::map<std::string, int> pos;
            const auto untied = r.untied_rank();
            for (std::size_t i = 0; i < untied.size(); ++i) {
                pos[r.alternatives()[i]] = untied[i];
            }
            std::vector<int> v;
            for (const auto& c : columns) v.push_back(pos[c]);
            return v;
        };
        const auto v0 = aligned(rc.entry(0).second);
        const auto v1 = aligned(rc.entry(1).second);
        CHECK(spearman[0][1] ==
              doctest::Approx(oracles::spearman_rho(v0, v1)).epsilon(1e-12));
    }
}
