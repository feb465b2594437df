#ifndef RANKAUDIT_RANK_RESULT_HPP
#define RANKAUDIT_RANK_RESULT_HPP

#include <string>
#include <vector>

#include "rankaudit/extra.hpp"

namespace rankaudit {

/**
 * RankResult — tie-aware ordinal ranking of alternatives.
 *
 * Rank values are dense: the distinct values form {1, ..., k} with 1 the most
 * preferred, and ties share a value. The `extra` container accumulates
 * whatever the producing method and the audit layers want to report.
 */
class RankResult {
public:
    /// Throws InvalidRank unless values are dense positive ranks starting at 1
    /// and names are unique and as many as the values.
    RankResult(std::string method, std::vector<std::string> alternatives,
               std::vector<int> values, Extra extra = {});

    const std::string& method() const { return method_; }
    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<int>& values() const { return values_; }

    std::size_t size() const { return alternatives_.size(); }

    /// Rank value of one alternative; throws UnknownAlternative.
    int rank_of(const std::string& name) const;
    bool has_alternative(const std::string& name) const;

    /// Resolves ties into a permutation of 1..n. Order-compatible with the
    /// tied values; inside a tie group, listed order wins.
    std::vector<int> untied_rank() const;

    const Extra& extra() const { return extra_; }
    Extra& extra() { return extra_; }

    /// Equal ranking content (method, alternatives, values); extra ignored.
    bool same_ranking(const RankResult& other) const;

private:
    std::string method_;
    std::vector<std::string> alternatives_;
    std::vector<int> values_;
    Extra extra_;
};

/// Dense ranks (descending score order) with an absolute score-tie tolerance.
std::vector<int> dense_ranks_from_scores(const std::vector<double>& scores,
                                         double tie_tolerance = 1e-12);

} // namespace rankaudit

#endif // RANKAUDIT_RANK_RESULT_HPP
