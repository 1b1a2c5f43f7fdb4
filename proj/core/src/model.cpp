#include "isocov/model.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "isocov/errors.hpp"

namespace isocov {

std::vector<double> Matrix::column(std::size_t j) const {
    std::vector<double> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
        out[i] = (*this)(i, j);
    }
    return out;
}

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != cols) {
            throw ContractError("Matrix::from_rows: ragged row " + std::to_string(i));
        }
        std::copy(rows[i].begin(), rows[i].end(), m.data_.begin() + i * cols);
    }
    return m;
}

double ResolvedCriterion::spread() const noexcept {
    return std::max(a - col_min, col_max - b);
}

const char* to_string(Nature nature) noexcept {
    return nature == Nature::Benefit ? "benefit" : "cost";
}

namespace {

struct ColumnRange {
    double min;
    double max;
};

ColumnRange column_range(const Matrix& ratings, std::size_t j) {
    ColumnRange r{ratings(0, j), ratings(0, j)};
    for (std::size_t i = 1; i < ratings.rows(); ++i) {
        r.min = std::min(r.min, ratings(i, j));
        r.max = std::max(r.max, ratings(i, j));
    }
    return r;
}

ResolvedCriterion resolve_one(const DecisionProblem& problem, std::size_t j, BoundsPolicy policy) {
    const CriterionSpec& spec = problem.criteria[j];
    const ColumnRange range = column_range(problem.ratings, j);
    ResolvedCriterion rc{spec, range.min, range.max, spec.lower_bound.value_or(range.min),
                         spec.upper_bound.value_or(range.max)};
    if (policy == BoundsPolicy::Clamp) {
        rc.a = std::clamp(rc.a, range.min, range.max);
        rc.b = std::clamp(rc.b, range.min, range.max);
    }
    return rc;
}

std::string fmt_double(double v) {
    std::ostringstream os;
    os.precision(10);
    os << v;
    return os.str();
}

}  // namespace

std::vector<ValidationIssue> validate(const DecisionProblem& problem, BoundsPolicy policy) {
    std::vector<ValidationIssue> issues;
    auto add = [&](std::string subject, std::string rule, std::string message) {
        issues.push_back({std::move(subject), std::move(rule), std::move(message)});
    };

    const std::size_t m = problem.num_alternatives();
    const std::size_t n = problem.num_criteria();
    if (m == 0) {
        add("problem", "nonempty", "at least one alternative is required");
    }
    if (n == 0) {
        add("problem", "nonempty", "at least one criterion is required");
    }
    if (problem.ratings.rows() != m || problem.ratings.cols() != n) {
        add("problem", "shape",
            "ratings matrix is " + std::to_string(problem.ratings.rows()) + "x" +
                std::to_string(problem.ratings.cols()) + ", expected " + std::to_string(m) + "x" +
                std::to_string(n));
    }

    std::set<std::string> seen;
    for (const auto& id : problem.alternatives) {
        if (!seen.insert(id).second) {
            add(id, "unique_alternative", "duplicate alternative id '" + id + "'");
        }
    }
    seen.clear();
    double weight_sum = 0.0;
    for (const auto& c : problem.criteria) {
        if (!seen.insert(c.name).second) {
            add(c.name, "unique_criterion", "duplicate criterion name '" + c.name + "'");
        }
        if (!std::isfinite(c.weight) || c.weight < 0.0 || c.weight > 1.0) {
            add(c.name, "weight_range", "weight " + fmt_double(c.weight) + " is outside [0,1]");
        }
        weight_sum += c.weight;
        if ((c.lower_bound && !std::isfinite(*c.lower_bound)) ||
            (c.upper_bound && !std::isfinite(*c.upper_bound))) {
            add(c.name, "finite", "constraint bounds must be finite");
        } else if (c.lower_bound && c.upper_bound && *c.lower_bound > *c.upper_bound) {
            add(c.name, "bound_order",
                "lower_bound > upper_bound (" + fmt_double(*c.lower_bound) + " > " +
                    fmt_double(*c.upper_bound) + ")");
        }
    }
    if (n > 0 && !(std::abs(weight_sum - 1.0) <= kWeightSumTolerance)) {
        add("problem", "weight_sum", "weights sum to " + fmt_double(weight_sum) + ", expected 1");
    }

    // Range checks need a well-shaped, finite matrix.
    if (!issues.empty() && std::any_of(issues.begin(), issues.end(), [](const ValidationIssue& v) {
            return v.rule == "shape" || v.rule == "nonempty";
        })) {
        return issues;
    }
    bool finite = true;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (!std::isfinite(problem.ratings(i, j))) {
                add(problem.alternatives[i], "finite",
                    "rating for criterion '" + problem.criteria[j].name + "' is not finite");
                finite = false;
            }
        }
    }
    if (!finite || policy == BoundsPolicy::Clamp) {
        return issues;
    }
    for (std::size_t j = 0; j < n; ++j) {
        const CriterionSpec& c = problem.criteria[j];
        if ((c.lower_bound && !std::isfinite(*c.lower_bound)) ||
            (c.upper_bound && !std::isfinite(*c.upper_bound))) {
            continue;
        }
        const ResolvedCriterion rc = resolve_one(problem, j, policy);
        const bool a_ok = rc.col_min <= rc.a && rc.a <= rc.col_max;
        const bool b_ok = rc.col_min <= rc.b && rc.b <= rc.col_max;
        if (!a_ok || !b_ok) {
            add(c.name, "bound_range",
                "constraint [" + fmt_double(rc.a) + ", " + fmt_double(rc.b) +
                    "] is outside the data range [" + fmt_double(rc.col_min) + ", " +
                    fmt_double(rc.col_max) + "]");
        }
    }
    return issues;
}

std::vector<ResolvedCriterion> resolve(const DecisionProblem& problem, BoundsPolicy policy) {
    const auto issues = validate(problem, policy);
    if (!issues.empty()) {
        throw ValidationError(describe(issues));
    }
    std::vector<ResolvedCriterion> out;
    out.reserve(problem.num_criteria());
    for (std::size_t j = 0; j < problem.num_criteria(); ++j) {
        out.push_back(resolve_one(problem, j, policy));
    }
    return out;
}

std::string describe(std::span<const ValidationIssue> issues) {
    std::string out;
    for (const auto& issue : issues) {
        if (!out.empty()) {
            out += '\n';
        }
        out += issue.subject + ": " + issue.message + " [" + issue.rule + "]";
    }
    return out;
}

}  // namespace isocov
