#include "rankaudit/ranks_comparator.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <unordered_set>

#include "rankaudit/error.hpp"

namespace rankaudit {

const char* to_string(RankStatistic statistic) {
    switch (statistic) {
    case RankStatistic::Spearman: return "spearman";
    case RankStatistic::Kendall: return "kendall";
    case RankStatistic::Covariance: return "covariance";
    case RankStatistic::R2: return "r2";
    case RankStatistic::ManhattanDistance: return "manhattan_distance";
    }
    return "unknown";
}

RanksComparator::RanksComparator(
    std::vector<std::pair<std::string, RankResult>> entries, Extra extra)
    : entries_(std::move(entries)), extra_(std::move(extra)) {
    if (entries_.empty()) {
        fail(ErrorCode::TooFewEntries, "comparator needs at least one ranking");
    }
    std::unordered_set<std::string> labels;
    for (const auto& [label, rank] : entries_) {
        if (label.empty() || !labels.insert(label).second) {
            fail(ErrorCode::DuplicateLabel, "duplicate or empty label: " + label);
        }
    }
    const auto& first = entries_.front().second;
    std::set<std::string> universe(first.alternatives().begin(),
                                   first.alternatives().end());
    for (const auto& [label, rank] : entries_) {
        std::set<std::string> names(rank.alternatives().begin(),
                                    rank.alternatives().end());
        if (names != universe) {
            fail(ErrorCode::MismatchedAlternatives,
                 "entry " + label + " ranks a different alternative set");
        }
    }
}

const RankResult& RanksComparator::at(const std::string& label) const {
    for (const auto& [l, rank] : entries_) {
        if (l == label) return rank;
    }
    fail(ErrorCode::UnknownAlternative, "no entry labeled " + label);
}

RankTable RanksComparator::to_rank_table() const {
    RankTable table;
    table.columns.assign(entries_.front().second.alternatives().begin(),
                         entries_.front().second.alternatives().end());
    std::sort(table.columns.begin(), table.columns.end());
    for (const auto& [label, rank] : entries_) {
        table.labels.push_back(label);
        std::vector<int> row;
        row.reserve(table.columns.size());
        for (const auto& name : table.columns) {
            row.push_back(rank.rank_of(name));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

namespace {

// Untied ranks of one entry, aligned to the canonical (sorted) column order.
std::vector<double> aligned_untied(const RankResult& rank,
                                   const std::vector<std::string>& columns) {
    std::map<std::string, int> by_name;
    const auto untied = rank.untied_rank();
    for (std::size_t i = 0; i < untied.size(); ++i) {
        by_name[rank.alternatives()[i]] = untied[i];
    }
    std::vector<double> out;
    out.reserve(columns.size());
    for (const auto& name : columns) {
        out.push_back(static_cast<double>(by_name.at(name)));
    }
    return out;
}

double mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / static_cast<double>(xs.size());
}

// Sample covariance (n-1 denominator); 0 for a single observation.
double sample_cov(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (n < 2) return 0.0;
    const double ma = mean(a), mb = mean(b);
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += (a[i] - ma) * (b[i] - mb);
    return s / static_cast<double>(n - 1);
}

// Pearson on untied ranks; both vectors are permutations of 1..n, so equal
// variances. A degenerate single-alternative ranking counts as agreement.
double pearson(const std::vector<double>& a, const std::vector<double>& b) {
    const double va = sample_cov(a, a);
    const double vb = sample_cov(b, b);
    if (va == 0.0 || vb == 0.0) return 1.0;
    return sample_cov(a, b) / std::sqrt(va * vb);
}

double kendall(const std::vector<double>& a, const std::vector<double>& b) {
    const std::size_t n = a.size();
    if (n < 2) return 1.0;
    long concordant = 0, discordant = 0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double prod = (a[i] - a[j]) * (b[i] - b[j]);
            if (prod > 0) ++concordant;
            else if (prod < 0) ++discordant;
        }
    }
    const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
    return static_cast<double>(concordant - discordant) / pairs;
}

double manhattan(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
    return s;
}

} // namespace

std::vector<std::vector<double>> RanksComparator::rank_correlation(
    RankStatistic statistic) const {
    if (entries_.size() < 2) {
        fail(ErrorCode::TooFewEntries, "pairwise statistics need >= 2 rankings");
    }
    std::vector<std::string> columns(entries_.front().second.alternatives());
    std::sort(columns.begin(), columns.end());

    std::vector<std::vector<double>> vectors;
    vectors.reserve(entries_.size());
    for (const auto& [label, rank] : entries_) {
        vectors.push_back(aligned_untied(rank, columns));
    }

    const std::size_t k = entries_.size();
    std::vector<std::vector<double>> matrix(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i; j < k; ++j) {
            double v = 0.0;
            switch (statistic) {
            case RankStatistic::Spearman:
                v = pearson(vectors[i], vectors[j]);
                break;
            case RankStatistic::Kendall:
                v = kendall(vectors[i], vectors[j]);
                break;
            case RankStatistic::Covariance:
                v = sample_cov(vectors[i], vectors[j]);
                break;
            case RankStatistic::R2: {
                const double r = pearson(vectors[i], vectors[j]);
                v = r * r;
                break;
            }
            case RankStatistic::ManhattanDistance:
                v = manhattan(vectors[i], vectors[j]);
                break;
            }
            matrix[i][j] = v;
            matrix[j][i] = v;
        }
    }
    return matrix;
}

} // namespace rankaudit
