#ifndef RANKAUDIT_RANKS_COMPARATOR_HPP
#define RANKAUDIT_RANKS_COMPARATOR_HPP

#include <string>
#include <utility>
#include <vector>

#include "rankaudit/rank_result.hpp"

namespace rankaudit {

/// Pairwise statistics offered over a comparator's rankings.
enum class RankStatistic {
    Spearman,
    Kendall,
    Covariance,
    R2,
    ManhattanDistance,
};

const char* to_string(RankStatistic statistic);

/// Tabular export: one row per labeled ranking, one column per alternative
/// (lexicographic order), cells are the dense rank values.
struct RankTable {
    std::vector<std::string> columns;
    std::vector<std::string> labels;
    std::vector<std::vector<int>> rows;
};

/**
 * RanksComparator — an ordered collection of labeled rankings over one
 * alternative universe, plus the statistics to compare them.
 *
 * All entries must rank the same alternative *set* (listing order is free).
 * One entry is enough to construct; the pairwise statistics need two.
 */
class RanksComparator {
public:
    explicit RanksComparator(std::vector<std::pair<std::string, RankResult>> entries,
                             Extra extra = {});

    std::size_t size() const { return entries_.size(); }
    const std::vector<std::pair<std::string, RankResult>>& entries() const {
        return entries_;
    }
    const RankResult& at(const std::string& label) const;
    const std::pair<std::string, RankResult>& entry(std::size_t i) const {
        return entries_[i];
    }

    RankTable to_rank_table() const;

    /// Symmetric entries x entries matrix of the requested statistic,
    /// computed on untied ranks aligned by alternative name.
    std::vector<std::vector<double>> rank_correlation(RankStatistic statistic) const;

    const Extra& extra() const { return extra_; }
    Extra& extra() { return extra_; }

private:
    std::vector<std::pair<std::string, RankResult>> entries_;
    Extra extra_;
};

} // namespace rankaudit

#endif // RANKAUDIT_RANKS_COMPARATOR_HPP
