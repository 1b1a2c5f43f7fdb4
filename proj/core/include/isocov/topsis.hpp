#pragma once

#include "isocov/model.hpp"
#include "isocov/ranking.hpp"

namespace isocov {

/// Unconstrained TOPSIS: vector normalization and Euclidean distances, bounds
/// and the hard flag ignored.
RankingReport rank_topsis(const DecisionProblem& problem);

}  // namespace isocov
