#include "rankaudit/decision_matrix.hpp"

#include <cmath>
#include <unordered_set>

namespace rankaudit {

const char* to_string(Objective objective) {
    return objective == Objective::Maximize ? "max" : "min";
}

const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DuplicateName: return "DuplicateName";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::NonPositiveWeight: return "NonPositiveWeight";
    case ErrorCode::UnknownAlternative: return "UnknownAlternative";
    case ErrorCode::UnknownCriterion: return "UnknownCriterion";
    case ErrorCode::InvalidRank: return "InvalidRank";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::MismatchedAlternatives: return "MismatchedAlternatives";
    case ErrorCode::TooFewEntries: return "TooFewEntries";
    case ErrorCode::ExtraKeyConflict: return "ExtraKeyConflict";
    case ErrorCode::MinimizeNotInverted: return "MinimizeNotInverted";
    case ErrorCode::ZeroColumnNorm: return "ZeroColumnNorm";
    case ErrorCode::DegenerateIdeal: return "DegenerateIdeal";
    case ErrorCode::ZeroInMinimizeColumn: return "ZeroInMinimizeColumn";
    case ErrorCode::AllFiltered: return "AllFiltered";
    case ErrorCode::TargetIsOptimal: return "TargetIsOptimal";
    case ErrorCode::PipelineEliminatedAlternatives: return "PipelineEliminatedAlternatives";
    case ErrorCode::NotAnRrt1Comparator: return "NotAnRrt1Comparator";
    case ErrorCode::NTooSmall: return "NTooSmall";
    case ErrorCode::NotATournament: return "NotATournament";
    case ErrorCode::AlreadyAcyclic: return "AlreadyAcyclic";
    case ErrorCode::CycleDetected: return "CycleDetected";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::MissingObjective: return "MissingObjective";
    case ErrorCode::MissingWeight: return "MissingWeight";
    case ErrorCode::UnknownStage: return "UnknownStage";
    case ErrorCode::InvalidConfig: return "InvalidConfig";
    }
    return "UnknownError";
}

namespace {

void check_unique_nonempty(const std::vector<std::string>& names, const char* what) {
    std::unordered_set<std::string> seen;
    for (const auto& name : names) {
        if (name.empty()) {
            fail(ErrorCode::DuplicateName,
                 std::string("empty ") + what + " name");
        }
        if (!seen.insert(name).second) {
            fail(ErrorCode::DuplicateName,
                 std::string("duplicate ") + what + " name: " + name);
        }
    }
}

void check_finite_row(const std::vector<double>& row, const std::string& name) {
    for (double v : row) {
        if (!std::isfinite(v)) {
            fail(ErrorCode::NonFiniteValue,
                 "non-finite value in row of alternative " + name);
        }
    }
}

} // namespace

DecisionMatrix DecisionMatrix::build(std::vector<std::string> alternatives,
                                     std::vector<std::string> criteria,
                                     std::vector<std::vector<double>> values,
                                     std::vector<Objective> objectives,
                                     std::vector<double> weights) {
    if (alternatives.empty() || criteria.empty()) {
        fail(ErrorCode::DimensionMismatch,
             "matrix needs at least one alternative and one criterion");
    }
    if (values.size() != alternatives.size()) {
        fail(ErrorCode::DimensionMismatch,
             "row count does not match alternative count");
    }
    if (objectives.size() != criteria.size() || weights.size() != criteria.size()) {
        fail(ErrorCode::DimensionMismatch,
             "objectives/weights length does not match criterion count");
    }
    check_unique_nonempty(alternatives, "alternative");
    check_unique_nonempty(criteria, "criterion");

    DecisionMatrix dm;
    dm.values_.reserve(alternatives.size() * criteria.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (values[i].size() != criteria.size()) {
            fail(ErrorCode::DimensionMismatch,
                 "row " + alternatives[i] + " has wrong length");
        }
        check_finite_row(values[i], alternatives[i]);
        dm.values_.insert(dm.values_.end(), values[i].begin(), values[i].end());
    }
    for (std::size_t c = 0; c < weights.size(); ++c) {
        if (!std::isfinite(weights[c]) || weights[c] <= 0.0) {
            fail(ErrorCode::NonPositiveWeight,
                 "weight of criterion " + criteria[c] + " must be positive and finite");
        }
    }

    dm.alternatives_ = std::move(alternatives);
    dm.criteria_ = std::move(criteria);
    dm.objectives_ = std::move(objectives);
    dm.weights_ = std::move(weights);
    return dm;
}

bool DecisionMatrix::has_alternative(const std::string& name) const {
    for (const auto& a : alternatives_) {
        if (a == name) return true;
    }
    return false;
}

std::size_t DecisionMatrix::alternative_index(const std::string& name) const {
    for (std::size_t i = 0; i < alternatives_.size(); ++i) {
        if (alternatives_[i] == name) return i;
    }
    fail(ErrorCode::UnknownAlternative, "unknown alternative: " + name);
}

std::size_t DecisionMatrix::criterion_index(const std::string& name) const {
    for (std::size_t c = 0; c < criteria_.size(); ++c) {
        if (criteria_[c] == name) return c;
    }
    fail(ErrorCode::UnknownCriterion, "unknown criterion: " + name);
}

DecisionMatrix DecisionMatrix::sub_matrix(const std::vector<std::string>& keep) const {
    if (keep.empty()) {
        fail(ErrorCode::DimensionMismatch, "sub_matrix needs a non-empty set");
    }
    std::unordered_set<std::string> wanted;
    for (const auto& name : keep) {
        alternative_index(name); // raises UnknownAlternative
        wanted.insert(name);
    }
    std::vector<std::string> kept_names;
    std::vector<std::vector<double>> kept_rows;
    for (std::size_t i = 0; i < alternatives_.size(); ++i) {
        if (wanted.count(alternatives_[i]) == 0) continue;
        kept_names.push_back(alternatives_[i]);
        auto r = row(i);
        kept_rows.emplace_back(r.begin(), r.end());
    }
    return build(std::move(kept_names), criteria_, std::move(kept_rows),
                 objectives_, weights_);
}

DecisionMatrix DecisionMatrix::replace_alternative(
    const std::string& name, const std::vector<double>& new_row) const {
    const std::size_t target = alternative_index(name);
    if (new_row.size() != n_criteria()) {
        fail(ErrorCode::DimensionMismatch,
             "replacement row for " + name + " has wrong length");
    }
    check_finite_row(new_row, name);

    DecisionMatrix dm = *this;
    std::copy(new_row.begin(), new_row.end(),
              dm.values_.begin() + static_cast<std::ptrdiff_t>(target * n_criteria()));
    return dm;
}

} // namespace rankaudit
