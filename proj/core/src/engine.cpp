#include "isocov/engine.hpp"

#include <cmath>

#include "closeness.hpp"
#include "isocov/errors.hpp"

namespace isocov {

double satisfaction_degree(double d, const ResolvedCriterion& crit) {
    if (!(crit.col_min <= d && d <= crit.col_max)) {
        throw ContractError("satisfaction_degree: rating outside the data range of '" +
                            crit.spec.name + "'");
    }
    const double spread = crit.spread();
    if (crit.spec.nature == Nature::Benefit) {
        if (d < crit.a) {
            return 1.0 - (crit.a - d) / (spread + 1.0);
        }
        if (d > crit.b) {
            return 1.0 - (d - crit.b) / (spread + 1.0);
        }
        return 1.0;
    }
    if (crit.contains(d)) {
        return 1.0 / (spread + 1.0);
    }
    // Outside the interval implies a nonzero gap to the range; anything else is a bug.
    if (!(spread > 0.0)) {
        throw ContractError("satisfaction_degree: zero spread with rating outside the interval");
    }
    return d < crit.a ? (crit.a - d) / spread : (d - crit.b) / spread;
}

SatisfactionMatrix satisfaction_matrix(const DecisionProblem& problem,
                                       std::span<const ResolvedCriterion> resolved) {
    const std::size_t m = problem.num_alternatives();
    const std::size_t n = problem.num_criteria();
    if (resolved.size() != n) {
        throw ContractError("satisfaction_matrix: resolved criteria do not match the problem");
    }
    SatisfactionMatrix out{Matrix(m, n), std::vector<bool>(m, true)};
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = problem.ratings(i, j);
            out.degrees(i, j) = satisfaction_degree(d, resolved[j]);
            if (!resolved[j].contains(d)) {
                out.v_flags[i] = false;
            }
        }
    }
    return out;
}

Matrix normalize(const DecisionProblem& problem) {
    const Matrix& d = problem.ratings;
    Matrix out(d.rows(), d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j) {
        double sum_sq = 0.0;
        for (std::size_t i = 0; i < d.rows(); ++i) {
            sum_sq += d(i, j) * d(i, j);
        }
        if (sum_sq == 0.0) {
            continue;
        }
        const double norm = std::sqrt(sum_sq);
        for (std::size_t i = 0; i < d.rows(); ++i) {
            out(i, j) = d(i, j) / norm;
        }
    }
    return out;
}

WeightedMatrix weighted_matrix(const DecisionProblem& problem,
                               std::span<const ResolvedCriterion> resolved,
                               const SatisfactionMatrix& satisfaction) {
    const std::size_t m = problem.num_alternatives();
    const std::size_t n = problem.num_criteria();
    if (resolved.size() != n || satisfaction.degrees.rows() != m ||
        satisfaction.degrees.cols() != n) {
        throw ContractError("weighted_matrix: inconsistent input shapes");
    }
    WeightedMatrix out;
    out.normalized = normalize(problem);
    out.weighted = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out.weighted(i, j) =
                out.normalized(i, j) * resolved[j].spec.weight * satisfaction.degrees(i, j);
        }
    }
    auto ideals = detail::ideal_solutions(out.weighted, problem.criteria);
    out.pis = std::move(ideals.pis);
    out.nis = std::move(ideals.nis);
    return out;
}

std::vector<ScoreRow> score(const DecisionProblem& problem, const WeightedMatrix& wm,
                            const SatisfactionMatrix& satisfaction) {
    const std::size_t m = problem.num_alternatives();
    if (wm.weighted.rows() != m || satisfaction.v_flags.size() != m ||
        wm.pis.size() != wm.weighted.cols() || wm.nis.size() != wm.weighted.cols()) {
        throw ContractError("score: inconsistent input shapes");
    }
    auto rows = detail::closeness_rows(problem.alternatives, wm.weighted, wm.pis, wm.nis);
    for (std::size_t i = 0; i < m; ++i) {
        rows[i].v_flag = satisfaction.v_flags[i];
        if (problem.hard && !rows[i].v_flag) {
            rows[i].score = rows[i].closeness - 1.0;
        }
    }
    detail::assign_ranks(rows);
    return rows;
}

RankingReport rank_isocov(const DecisionProblem& problem, BoundsPolicy policy) {
    const auto resolved = resolve(problem, policy);
    auto satisfaction = satisfaction_matrix(problem, resolved);
    auto wm = weighted_matrix(problem, resolved, satisfaction);
    auto rows = score(problem, wm, satisfaction);
    auto report = detail::make_report(problem.hard ? Method::IsocovHard : Method::IsocovSoft,
                                      problem, std::move(rows));
    report.intermediates = Intermediates{std::move(satisfaction), std::move(wm)};
    return report;
}

}  // namespace isocov
