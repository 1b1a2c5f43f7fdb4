#include "closeness.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "isocov/errors.hpp"

namespace isocov::detail {

IdealSolutions ideal_solutions(const Matrix& weighted, std::span<const CriterionSpec> criteria) {
    IdealSolutions out;
    out.pis.resize(weighted.cols());
    out.nis.resize(weighted.cols());
    for (std::size_t j = 0; j < weighted.cols(); ++j) {
        double lo = weighted(0, j);
        double hi = weighted(0, j);
        for (std::size_t i = 1; i < weighted.rows(); ++i) {
            lo = std::min(lo, weighted(i, j));
            hi = std::max(hi, weighted(i, j));
        }
        const bool benefit = criteria[j].nature == Nature::Benefit;
        out.pis[j] = benefit ? hi : lo;
        out.nis[j] = benefit ? lo : hi;
    }
    return out;
}

std::vector<ScoreRow> closeness_rows(std::span<const std::string> alternatives,
                                     const Matrix& weighted, std::span<const double> pis,
                                     std::span<const double> nis) {
    std::vector<ScoreRow> rows(weighted.rows());
    for (std::size_t i = 0; i < weighted.rows(); ++i) {
        double plus = 0.0;
        double minus = 0.0;
        for (std::size_t j = 0; j < weighted.cols(); ++j) {
            const double p = weighted(i, j);
            plus += (pis[j] - p) * (pis[j] - p);
            minus += (p - nis[j]) * (p - nis[j]);
        }
        ScoreRow& row = rows[i];
        row.alternative = alternatives[i];
        row.s_plus = std::sqrt(plus);
        row.s_minus = std::sqrt(minus);
        const double total = row.s_plus + row.s_minus;
        row.closeness = total == 0.0 ? 0.5 : row.s_minus / total;
        row.score = row.closeness;
    }
    return rows;
}

void assign_ranks(std::vector<ScoreRow>& rows) {
    std::vector<std::size_t> order(rows.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return rows[x].score > rows[y].score;
    });
    for (std::size_t r = 0; r < order.size(); ++r) {
        rows[order[r]].rank = static_cast<int>(r + 1);
    }
}

RankingReport make_report(Method method, const DecisionProblem& problem,
                          std::vector<ScoreRow> rows_in_input_order) {
    RankingReport report;
    report.method = method;
    report.alternatives = problem.alternatives;
    report.criteria.reserve(problem.num_criteria());
    for (const auto& c : problem.criteria) {
        report.criteria.push_back(c.name);
    }
    report.rows = std::move(rows_in_input_order);
    std::stable_sort(report.rows.begin(), report.rows.end(),
                     [](const ScoreRow& x, const ScoreRow& y) { return x.rank < y.rank; });
    return report;
}

}  // namespace isocov::detail

namespace isocov {

const char* to_string(Method method) noexcept {
    switch (method) {
        case Method::IsocovHard:
            return "isocov-hard";
        case Method::IsocovSoft:
            return "isocov-soft";
        case Method::Topsis:
            return "topsis";
    }
    return "unknown";
}

const ScoreRow* RankingReport::find(const std::string& alternative) const {
    auto it = std::find_if(rows.begin(), rows.end(),
                           [&](const ScoreRow& r) { return r.alternative == alternative; });
    return it == rows.end() ? nullptr : &*it;
}

void check_report(const RankingReport& report) {
    for (std::size_t k = 0; k < report.rows.size(); ++k) {
        if (report.rows[k].rank != static_cast<int>(k + 1)) {
            throw ContractError("report ranks are not a sorted permutation of 1..m (position " +
                                std::to_string(k + 1) + " has rank " +
                                std::to_string(report.rows[k].rank) + ")");
        }
    }
    if (report.rows.size() != report.alternatives.size()) {
        throw ContractError("report row count does not match the alternative count");
    }
}

}  // namespace isocov
