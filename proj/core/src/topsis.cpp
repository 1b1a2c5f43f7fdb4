#include <cmath>

#include "closeness.hpp"
#include "isocov/engine.hpp"
#include "isocov/errors.hpp"
#include "isocov/topsis.hpp"

namespace isocov {

RankingReport rank_topsis(const DecisionProblem& problem) {
    DecisionProblem unconstrained = problem;
    for (auto& c : unconstrained.criteria) {
        c.lower_bound.reset();
        c.upper_bound.reset();
    }
    const auto issues = validate(unconstrained);
    if (!issues.empty()) {
        throw ValidationError(describe(issues));
    }

    const std::size_t m = problem.num_alternatives();
    const std::size_t n = problem.num_criteria();
    WeightedMatrix wm;
    wm.normalized = normalize(problem);
    wm.weighted = Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            wm.weighted(i, j) = wm.normalized(i, j) * problem.criteria[j].weight;
        }
    }
    auto ideals = detail::ideal_solutions(wm.weighted, problem.criteria);
    wm.pis = std::move(ideals.pis);
    wm.nis = std::move(ideals.nis);

    auto rows = detail::closeness_rows(problem.alternatives, wm.weighted, wm.pis, wm.nis);
    detail::assign_ranks(rows);
    auto report = detail::make_report(Method::Topsis, problem, std::move(rows));
    report.intermediates =
        Intermediates{SatisfactionMatrix{Matrix(m, n, 1.0), std::vector<bool>(m, true)},
                      std::move(wm)};
    return report;
}

}  // namespace isocov
