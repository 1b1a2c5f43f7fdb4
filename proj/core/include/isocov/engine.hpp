#pragma once

#include <span>
#include <vector>

#include "isocov/model.hpp"
#include "isocov/ranking.hpp"

namespace isocov {

/// Closeness of rating `d` to the constraint interval of `crit`, in (0,1].
///
/// Benefit: 1 inside [a,b], decreasing linearly with the distance to the
/// interval outside it. Cost: 1/(M+1) inside, distance/M outside, where M is
/// the largest gap between the interval and the data range. Interval tests are
/// closed on both ends. Throws ContractError if `d` lies outside
/// [col_min, col_max].
double satisfaction_degree(double d, const ResolvedCriterion& crit);

SatisfactionMatrix satisfaction_matrix(const DecisionProblem& problem,
                                       std::span<const ResolvedCriterion> resolved);

/// Column-wise vector normalization; an all-zero column stays all zero.
Matrix normalize(const DecisionProblem& problem);

WeightedMatrix weighted_matrix(const DecisionProblem& problem,
                               std::span<const ResolvedCriterion> resolved,
                               const SatisfactionMatrix& satisfaction);

/// Distances to the ideal solutions, closeness, and scores, one row per
/// alternative in input order. Scores are closeness in soft mode; in hard mode
/// alternatives with V(i)=0 are shifted down by 1. Ranks follow descending
/// score with ties kept in input order. When S+ = S- = 0, closeness is 0.5.
std::vector<ScoreRow> score(const DecisionProblem& problem, const WeightedMatrix& wm,
                            const SatisfactionMatrix& satisfaction);

/// The full pipeline. Hard or soft per `problem.hard`.
RankingReport rank_isocov(const DecisionProblem& problem,
                          BoundsPolicy policy = BoundsPolicy::Strict);

}  // namespace isocov
