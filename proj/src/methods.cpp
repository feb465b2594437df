#include "rankaudit/methods.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

#include "rankaudit/error.hpp"

namespace rankaudit {

namespace {

nlohmann::json score_map(const DecisionMatrix& dm, const std::vector<double>& scores) {
    nlohmann::json m = nlohmann::json::object();
    for (std::size_t i = 0; i < scores.size(); ++i) {
        m[dm.alternatives()[i]] = scores[i];
    }
    return m;
}

std::vector<double> column_norms(const DecisionMatrix& dm) {
    std::vector<double> norms(dm.n_criteria(), 0.0);
    for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
        double s = 0.0;
        for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
            s += dm.value(i, c) * dm.value(i, c);
        }
        norms[c] = std::sqrt(s);
        if (norms[c] == 0.0) {
            fail(ErrorCode::ZeroColumnNorm,
                 "criterion " + dm.criteria()[c] + " has zero column norm");
        }
    }
    return norms;
}

} // namespace

RankResult weighted_sum(const DecisionMatrix& dm) {
    for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
        if (dm.objective(c) == Objective::Minimize) {
            fail(ErrorCode::MinimizeNotInverted,
                 "weighted_sum needs Minimize criteria inverted upstream (" +
                     dm.criteria()[c] + ")");
        }
    }
    std::vector<double> scores(dm.n_alternatives(), 0.0);
    for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
        for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
            scores[i] += dm.weight(c) * dm.value(i, c);
        }
    }
    Extra extra;
    extra.set("weighted_sum.scores", score_map(dm, scores));
    return RankResult("weighted_sum", dm.alternatives(),
                      dense_ranks_from_scores(scores), std::move(extra));
}

RankResult topsis(const DecisionMatrix& dm) {
    const std::size_t n = dm.n_alternatives();
    const std::size_t m = dm.n_criteria();
    const auto norms = column_norms(dm);

    // Weighted normalized matrix.
    std::vector<double> w(n * m);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t c = 0; c < m; ++c) {
            w[i * m + c] = dm.weight(c) * dm.value(i, c) / norms[c];
        }
    }

    std::vector<double> ideal(m), anti(m);
    for (std::size_t c = 0; c < m; ++c) {
        double lo = w[c], hi = w[c];
        for (std::size_t i = 1; i < n; ++i) {
            lo = std::min(lo, w[i * m + c]);
            hi = std::max(hi, w[i * m + c]);
        }
        const bool maximize = dm.objective(c) == Objective::Maximize;
        ideal[c] = maximize ? hi : lo;
        anti[c] = maximize ? lo : hi;
    }

    std::vector<double> closeness(n);
    for (std::size_t i = 0; i < n; ++i) {
        double dp = 0.0, dn = 0.0;
        for (std::size_t c = 0; c < m; ++c) {
            const double v = w[i * m + c];
            dp += (v - ideal[c]) * (v - ideal[c]);
            dn += (v - anti[c]) * (v - anti[c]);
        }
        dp = std::sqrt(dp);
        dn = std::sqrt(dn);
        if (dp + dn == 0.0) {
            // Ideal and anti-ideal coincide for this alternative; only the
            // alternative sitting exactly on the ideal earns closeness 1.
            if (dp == 0.0) {
                closeness[i] = 1.0;
            } else {
                fail(ErrorCode::DegenerateIdeal,
                     "degenerate ideal for alternative " + dm.alternatives()[i]);
            }
        } else {
            closeness[i] = dn / (dp + dn);
        }
    }

    Extra extra;
    extra.set("topsis.similarity", score_map(dm, closeness));
    return RankResult("topsis", dm.alternatives(),
                      dense_ranks_from_scores(closeness), std::move(extra));
}

DecisionMatrix invert_minimize(const DecisionMatrix& dm) {
    std::vector<std::vector<double>> values;
    values.reserve(dm.n_alternatives());
    for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
        auto r = dm.row(i);
        values.emplace_back(r.begin(), r.end());
    }
    std::vector<Objective> objectives = dm.objectives();
    for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
        if (objectives[c] != Objective::Minimize) continue;
        for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
            if (dm.value(i, c) == 0.0) {
                fail(ErrorCode::ZeroInMinimizeColumn,
                     "cannot invert zero in Minimize criterion " + dm.criteria()[c]);
            }
            values[i][c] = 1.0 / dm.value(i, c);
        }
        objectives[c] = Objective::Maximize;
    }
    return DecisionMatrix::build(dm.alternatives(), dm.criteria(), std::move(values),
                                 std::move(objectives), dm.weights());
}

DecisionMatrix filter_gt(const DecisionMatrix& dm,
                         const std::map<std::string, double>& thresholds) {
    std::vector<std::pair<std::size_t, double>> checks;
    checks.reserve(thresholds.size());
    for (const auto& [criterion, threshold] : thresholds) {
        checks.emplace_back(dm.criterion_index(criterion), threshold);
    }
    std::vector<std::string> kept;
    for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
        bool pass = true;
        for (const auto& [c, threshold] : checks) {
            if (!(dm.value(i, c) > threshold)) {
                pass = false;
                break;
            }
        }
        if (pass) kept.push_back(dm.alternatives()[i]);
    }
    if (kept.empty()) {
        fail(ErrorCode::AllFiltered, "filter_gt removed every alternative");
    }
    return dm.sub_matrix(kept);
}

DecisionMatrix filter_non_dominated(const DecisionMatrix& dm) {
    const std::size_t n = dm.n_alternatives();
    const std::size_t m = dm.n_criteria();

    auto better = [&](double a, double b, Objective obj) {
        return obj == Objective::Maximize ? a > b : a < b;
    };
    auto at_least = [&](double a, double b, Objective obj) {
        return obj == Objective::Maximize ? a >= b : a <= b;
    };

    std::vector<std::string> kept;
    for (std::size_t x = 0; x < n; ++x) {
        bool dominated = false;
        for (std::size_t y = 0; y < n && !dominated; ++y) {
            if (x == y) continue;
            bool weak = true, strict = false;
            for (std::size_t c = 0; c < m; ++c) {
                const Objective obj = dm.objective(c);
                if (!at_least(dm.value(y, c), dm.value(x, c), obj)) {
                    weak = false;
                    break;
                }
                if (better(dm.value(y, c), dm.value(x, c), obj)) strict = true;
            }
            dominated = weak && strict;
        }
        if (!dominated) kept.push_back(dm.alternatives()[x]);
    }
    // A maximal element always exists, so kept is never empty.
    return dm.sub_matrix(kept);
}

DecisionMatrix sum_scaler_weights(const DecisionMatrix& dm) {
    double total = 0.0;
    for (double w : dm.weights()) total += w;
    std::vector<double> weights = dm.weights();
    for (double& w : weights) w /= total;
    std::vector<std::vector<double>> values;
    values.reserve(dm.n_alternatives());
    for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
        auto r = dm.row(i);
        values.emplace_back(r.begin(), r.end());
    }
    return DecisionMatrix::build(dm.alternatives(), dm.criteria(), std::move(values),
                                 dm.objectives(), std::move(weights));
}

DecisionMatrix vector_scaler_matrix(const DecisionMatrix& dm) {
    const auto norms = column_norms(dm);
    std::vector<std::vector<double>> values;
    values.reserve(dm.n_alternatives());
    for (std::size_t i = 0; i < dm.n_alternatives(); ++i) {
        std::vector<double> row(dm.n_criteria());
        for (std::size_t c = 0; c < dm.n_criteria(); ++c) {
            row[c] = dm.value(i, c) / norms[c];
        }
        values.push_back(std::move(row));
    }
    return DecisionMatrix::build(dm.alternatives(), dm.criteria(), std::move(values),
                                 dm.objectives(), dm.weights());
}

Pipeline::Pipeline(std::vector<PipelineStage> transformers, std::string decider_name,
                   Decider decider)
    : transformers_(std::move(transformers)),
      decider_name_(std::move(decider_name)),
      decider_(std::move(decider)) {}

std::string Pipeline::name() const {
    std::string joined;
    for (const auto& stage : transformers_) {
        joined += stage.name;
        joined += '>';
    }
    joined += decider_name_;
    return joined;
}

RankResult run_pipeline(const Pipeline& pipeline, const DecisionMatrix& dm) {
    DecisionMatrix current = dm;
    std::size_t index = 0;
    auto tag = [&](const std::string& stage_name, const Error& err) -> Error {
        return Error(err.code(), "stage " + std::to_string(index) + " (" +
                                     stage_name + "): " + err.what());
    };
    for (const auto& stage : pipeline.transformers()) {
        try {
            current = stage.apply(current);
        } catch (const Error& err) {
            throw tag(stage.name, err);
        }
        ++index;
    }
    RankResult result = [&] {
        try {
            return pipeline.decider()(current);
        } catch (const Error& err) {
            throw tag(pipeline.decider_name(), err);
        }
    }();

    nlohmann::json steps = nlohmann::json::array();
    for (const auto& stage : pipeline.transformers()) steps.push_back(stage.name);
    steps.push_back(pipeline.decider_name());

    Extra extra = result.extra();
    extra.set("pipeline.steps", std::move(steps));
    return RankResult(pipeline.name(), result.alternatives(), result.values(),
                      std::move(extra));
}

std::optional<std::string> break_tie(const std::string& x, const std::string& y,
                                     const RankResult& primary,
                                     const TieBreakPolicy& policy,
                                     const DecisionMatrix& sub) {
    const int rx = primary.rank_of(x);
    const int ry = primary.rank_of(y);
    if (rx != ry) return rx < ry ? x : y;

    if (policy.fallback) {
        const RankResult fb = policy.fallback(sub);
        const bool has_x = fb.has_alternative(x);
        const bool has_y = fb.has_alternative(y);
        if (has_x && has_y) {
            const int fx = fb.rank_of(x);
            const int fy = fb.rank_of(y);
            if (fx != fy) return fx < fy ? x : y;
        } else if (has_x != has_y) {
            // The fallback filtered one of the pair; the survivor wins.
            return has_x ? x : y;
        }
    }

    if (policy.force_untie) {
        // First position in the matrix's predefined alternative sequence.
        return sub.alternative_index(x) < sub.alternative_index(y) ? x : y;
    }
    return std::nullopt;
}

} // namespace rankaudit
