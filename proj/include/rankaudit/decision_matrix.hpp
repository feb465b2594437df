#ifndef RANKAUDIT_DECISION_MATRIX_HPP
#define RANKAUDIT_DECISION_MATRIX_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "rankaudit/error.hpp"

namespace rankaudit {

/// Direction of a criterion: higher-is-better or lower-is-better.
enum class Objective { Maximize, Minimize };

const char* to_string(Objective objective);

/**
 * DecisionMatrix — the immutable decision problem.
 *
 * Rows are alternatives, columns are criteria; every column carries an
 * objective direction and a positive weight. All mutating operations return
 * a new matrix so a baseline survives any number of audit mutations.
 * Alternatives and criteria are addressed by name at the public boundary;
 * indices are an internal detail (pipelines drop rows, so indices drift).
 */
class DecisionMatrix {
public:
    /// Validates and builds. Throws DimensionMismatch, DuplicateName,
    /// NonFiniteValue or NonPositiveWeight.
    static DecisionMatrix build(std::vector<std::string> alternatives,
                                std::vector<std::string> criteria,
                                std::vector<std::vector<double>> values,
                                std::vector<Objective> objectives,
                                std::vector<double> weights);

    std::size_t n_alternatives() const { return alternatives_.size(); }
    std::size_t n_criteria() const { return criteria_.size(); }

    const std::vector<std::string>& alternatives() const { return alternatives_; }
    const std::vector<std::string>& criteria() const { return criteria_; }
    const std::vector<Objective>& objectives() const { return objectives_; }
    const std::vector<double>& weights() const { return weights_; }

    double value(std::size_t row, std::size_t col) const {
        return values_[row * n_criteria() + col];
    }
    std::span<const double> row(std::size_t r) const {
        return {values_.data() + r * n_criteria(), n_criteria()};
    }

    Objective objective(std::size_t col) const { return objectives_[col]; }
    double weight(std::size_t col) const { return weights_[col]; }

    bool has_alternative(const std::string& name) const;
    /// Throws UnknownAlternative / UnknownCriterion.
    std::size_t alternative_index(const std::string& name) const;
    std::size_t criterion_index(const std::string& name) const;

    /// Rows restricted to `keep` (a set; original row order preserved).
    DecisionMatrix sub_matrix(const std::vector<std::string>& keep) const;

    /// New matrix with one row substituted; everything else untouched.
    DecisionMatrix replace_alternative(const std::string& name,
                                       const std::vector<double>& new_row) const;

    bool operator==(const DecisionMatrix& other) const = default;

private:
    DecisionMatrix() = default;

    std::vector<std::string> alternatives_;
    std::vector<std::string> criteria_;
    std::vector<double> values_; // row-major, n_alternatives x n_criteria
    std::vector<Objective> objectives_;
    std::vector<double> weights_;
};

} // namespace rankaudit

#endif // RANKAUDIT_DECISION_MATRIX_HPP
