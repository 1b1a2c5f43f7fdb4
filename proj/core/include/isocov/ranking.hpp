#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isocov/model.hpp"

namespace isocov {

enum class Method { IsocovHard, IsocovSoft, Topsis };

const char* to_string(Method method) noexcept;

struct ScoreRow {
    std::string alternative;
    double s_plus = 0.0;
    double s_minus = 0.0;
    double closeness = 0.0;
    double score = 0.0;
    bool v_flag = true;
    int rank = 0;
};

/// Degrees of constraint satisfaction f_ij and the all-constraints-met flags V(i).
struct SatisfactionMatrix {
    Matrix degrees;
    std::vector<bool> v_flags;
};

struct WeightedMatrix {
    Matrix normalized;
    Matrix weighted;
    std::vector<double> pis;  // positive ideal solution
    std::vector<double> nis;  // negative ideal solution
};

/// Every intermediate of one ranking run, rows in input order.
struct Intermediates {
    SatisfactionMatrix satisfaction;
    WeightedMatrix weighted;
};

struct RankingReport {
    Method method = Method::IsocovHard;
    std::vector<std::string> criteria;      // column names of the intermediates
    std::vector<std::string> alternatives;  // input order
    std::vector<ScoreRow> rows;             // ascending by rank
    std::optional<Intermediates> intermediates;

    /// Row for `alternative`, or nullptr.
    const ScoreRow* find(const std::string& alternative) const;
};

/// Throws ContractError unless ranks are a permutation of 1..m and rows are sorted by rank.
void check_report(const RankingReport& report);

}  // namespace isocov
