#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace isocov {

enum class Nature { Benefit, Cost };

/// Dense row-major matrix of doubles.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const {
        return {data_.data() + i * cols_, cols_};
    }
    std::vector<double> column(std::size_t j) const;

    static Matrix from_rows(const std::vector<std::vector<double>>& rows);

    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// One QoS metric with its weight and preferred value interval.
/// An absent bound is the open bound: it resolves to the column extremum.
struct CriterionSpec {
    std::string name;
    Nature nature = Nature::Benefit;
    double weight = 0.0;
    std::optional<double> lower_bound;
    std::optional<double> upper_bound;

    bool operator==(const CriterionSpec&) const = default;
};

struct DecisionProblem {
    std::vector<std::string> alternatives;
    std::vector<CriterionSpec> criteria;
    Matrix ratings;  // alternatives.size() x criteria.size()
    bool hard = true;

    std::size_t num_alternatives() const noexcept { return alternatives.size(); }
    std::size_t num_criteria() const noexcept { return criteria.size(); }

    bool operator==(const DecisionProblem&) const = default;
};

/// How constraint intervals lying outside a column's data range are handled.
enum class BoundsPolicy {
    Strict,  // reported as a validation issue
    Clamp,   // clamped into [col_min, col_max]
};

struct ValidationIssue {
    std::string subject;  // criterion name, alternative id, or "problem"
    std::string rule;
    std::string message;
};

/// A criterion with its open bounds replaced by the column extrema.
struct ResolvedCriterion {
    CriterionSpec spec;
    double col_min = 0.0;
    double col_max = 0.0;
    double a = 0.0;
    double b = 0.0;

    bool contains(double d) const noexcept { return a <= d && d <= b; }

    /// Largest distance from the interval to either end of the data range.
    double spread() const noexcept;
};

inline constexpr double kWeightSumTolerance = 1e-9;

std::vector<ValidationIssue> validate(const DecisionProblem& problem,
                                      BoundsPolicy policy = BoundsPolicy::Strict);

/// Throws ValidationError if the problem does not validate under `policy`.
std::vector<ResolvedCriterion> resolve(const DecisionProblem& problem,
                                       BoundsPolicy policy = BoundsPolicy::Strict);

/// Joins issues into a single human-readable message, one per line.
std::string describe(std::span<const ValidationIssue> issues);

const char* to_string(Nature nature) noexcept;

}  // namespace isocov
