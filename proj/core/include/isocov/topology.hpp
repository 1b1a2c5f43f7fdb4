#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "isocov/model.hpp"

namespace isocov {

/// How per-link values combine into a per-route value.
enum class AggregationRule { Sum, Min, Max, Mean, HopCount };

struct MetricRule {
    AggregationRule rule = AggregationRule::Sum;
    std::optional<double> cap;  // upper clamp applied after aggregation

    bool operator==(const MetricRule&) const = default;
};

struct Link {
    std::string from;
    std::string to;
    std::map<std::string, double> metrics;

    bool operator==(const Link&) const = default;
};

struct Topology {
    std::vector<std::string> nodes;
    std::vector<Link> links;  // directed
    std::string source;
    std::string destination;
    std::map<std::string, MetricRule> rules;

    bool operator==(const Topology&) const = default;
};

/// A route as its node sequence, source first.
using Route = std::vector<std::string>;

inline constexpr std::size_t kDefaultMaxRoutes = 100000;

const char* to_string(AggregationRule rule) noexcept;
std::optional<AggregationRule> parse_aggregation_rule(std::string_view name);

/// Rule used for a metric the topology file does not declare, chosen by name:
/// delay/jitter -> sum, hop -> hop count, rate -> mean, loss -> sum capped at
/// 100, throughput/bandwidth -> min. Anything else -> sum.
MetricRule default_rule(std::string_view metric_name);

/// Throws ValidationError on the first broken topology invariant.
void validate(const Topology& topo);

/// All simple directed paths from source to destination, in lexicographic
/// order of node-id sequences. Throws ValidationError if more than
/// `max_routes` exist; an unreachable destination yields an empty list.
std::vector<Route> enumerate_routes(const Topology& topo,
                                    std::size_t max_routes = kDefaultMaxRoutes);

/// Route id used as the alternative name: node ids joined by '-'.
std::string route_id(const Route& route);

/// One alternative per enumerated route, rated by aggregating link metrics.
/// Criterion names must be link metrics, declared rules, or hop-count metrics.
DecisionProblem build_problem(const Topology& topo, std::vector<CriterionSpec> criteria,
                              bool hard, std::size_t max_routes = kDefaultMaxRoutes);

}  // namespace isocov
