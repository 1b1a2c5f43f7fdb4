#pragma once

// Ideal-solution distance machinery shared by the ISOCOV and TOPSIS pipelines.

#include <span>
#include <string>
#include <vector>

#include "isocov/model.hpp"
#include "isocov/ranking.hpp"

namespace isocov::detail {

struct IdealSolutions {
    std::vector<double> pis;
    std::vector<double> nis;
};

/// Column max/min of `weighted` for benefit criteria, min/max for cost criteria.
IdealSolutions ideal_solutions(const Matrix& weighted, std::span<const CriterionSpec> criteria);

/// S+, S-, and closeness per row. Scores are left equal to closeness; ranks are unset.
std::vector<ScoreRow> closeness_rows(std::span<const std::string> alternatives,
                                     const Matrix& weighted, std::span<const double> pis,
                                     std::span<const double> nis);

/// Stable descending sort on score; ties keep input order.
void assign_ranks(std::vector<ScoreRow>& rows);

RankingReport make_report(Method method, const DecisionProblem& problem,
                          std::vector<ScoreRow> rows_in_input_order);

}  // namespace isocov::detail
