#include "rankaudit/rank_result.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <unordered_set>

#include "rankaudit/error.hpp"

namespace rankaudit {

RankResult::RankResult(std::string method, std::vector<std::string> alternatives,
                       std::vector<int> values, Extra extra)
    : method_(std::move(method)),
      alternatives_(std::move(alternatives)),
      values_(std::move(values)),
      extra_(std::move(extra)) {
    if (alternatives_.empty()) {
        fail(ErrorCode::InvalidRank, "ranking needs at least one alternative");
    }
    if (alternatives_.size() != values_.size()) {
        fail(ErrorCode::InvalidRank, "alternatives/values length mismatch");
    }
    std::unordered_set<std::string> seen;
    for (const auto& name : alternatives_) {
        if (name.empty() || !seen.insert(name).second) {
            fail(ErrorCode::InvalidRank, "alternative names must be unique and non-empty");
        }
    }
    // Dense check: distinct values must be exactly {1, ..., k}.
    std::set<int> distinct(values_.begin(), values_.end());
    if (*distinct.begin() != 1) {
        fail(ErrorCode::InvalidRank, "minimum rank value must be 1");
    }
    int expected = 1;
    for (int v : distinct) {
        if (v != expected++) {
            fail(ErrorCode::InvalidRank, "rank values must be dense (no gaps)");
        }
    }
}

bool RankResult::has_alternative(const std::string& name) const {
    return std::find(alternatives_.begin(), alternatives_.end(), name) !=
           alternatives_.end();
}

int RankResult::rank_of(const std::string& name) const {
    for (std::size_t i = 0; i < alternatives_.size(); ++i) {
        if (alternatives_[i] == name) return values_[i];
    }
    fail(ErrorCode::UnknownAlternative, "ranking has no alternative: " + name);
}

std::vector<int> RankResult::untied_rank() const {
    const std::size_t n = values_.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return values_[a] < values_[b];
    });
    std::vector<int> untied(n);
    for (std::size_t pos = 0; pos < n; ++pos) {
        untied[order[pos]] = static_cast<int>(pos) + 1;
    }
    return untied;
}

bool RankResult::same_ranking(const RankResult& other) const {
    return method_ == other.method_ && alternatives_ == other.alternatives_ &&
           values_ == other.values_;
}

std::vector<int> dense_ranks_from_scores(const std::vector<double>& scores,
                                         double tie_tolerance) {
    const std::size_t n = scores.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return scores[a] > scores[b];
    });
    std::vector<int> ranks(n);
    int rank = 0;
    double group_leader = 0.0;
    for (std::size_t pos = 0; pos < n; ++pos) {
        const double s = scores[order[pos]];
        // Ties are measured against the group leader, not the neighbor, so a
        // chain of sub-tolerance steps cannot smear distinct scores together.
        if (pos == 0 || std::abs(group_leader - s) > tie_tolerance) {
            ++rank;
            group_leader = s;
        }
        ranks[order[pos]] = rank;
    }
    return ranks;
}

} // namespace rankaudit
