#include "isocov/topology.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <set>

#include "isocov/errors.hpp"

namespace isocov {

const char* to_string(AggregationRule rule) noexcept {
    switch (rule) {
        case AggregationRule::Sum:
            return "sum";
        case AggregationRule::Min:
            return "min";
        case AggregationRule::Max:
            return "max";
        case AggregationRule::Mean:
            return "mean";
        case AggregationRule::HopCount:
            return "hop_count";
    }
    return "unknown";
}

std::optional<AggregationRule> parse_aggregation_rule(std::string_view name) {
    static constexpr AggregationRule kAll[] = {AggregationRule::Sum, AggregationRule::Min,
                                               AggregationRule::Max, AggregationRule::Mean,
                                               AggregationRule::HopCount};
    for (auto rule : kAll) {
        if (name == to_string(rule)) {
            return rule;
        }
    }
    return std::nullopt;
}

namespace {

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool mentions(const std::string& haystack, std::string_view needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

MetricRule default_rule(std::string_view metric_name) {
    const std::string name = lower(metric_name);
    if (mentions(name, "hop")) {
        return {AggregationRule::HopCount, std::nullopt};
    }
    if (mentions(name, "loss")) {
        return {AggregationRule::Sum, 100.0};
    }
    if (mentions(name, "throughput") || mentions(name, "bandwidth")) {
        return {AggregationRule::Min, std::nullopt};
    }
    if (mentions(name, "rate")) {
        return {AggregationRule::Mean, std::nullopt};
    }
    return {AggregationRule::Sum, std::nullopt};
}

void validate(const Topology& topo) {
    std::set<std::string> nodes;
    for (const auto& id : topo.nodes) {
        if (!nodes.insert(id).second) {
            throw ValidationError("duplicate node id '" + id + "'");
        }
    }
    if (topo.source == topo.destination) {
        throw ValidationError("source and destination are the same node '" + topo.source + "'");
    }
    if (!nodes.contains(topo.source)) {
        throw ValidationError("source '" + topo.source + "' is not a declared node");
    }
    if (!nodes.contains(topo.destination)) {
        throw ValidationError("destination '" + topo.destination + "' is not a declared node");
    }

    std::set<std::string> metrics;
    for (const auto& link : topo.links) {
        for (const auto& [name, value] : link.metrics) {
            metrics.insert(name);
        }
    }
    for (const auto& [name, rule] : topo.rules) {
        if (rule.rule != AggregationRule::HopCount) {
            metrics.insert(name);
        }
    }

    std::set<std::pair<std::string, std::string>> edges;
    for (std::size_t k = 0; k < topo.links.size(); ++k) {
        const Link& link = topo.links[k];
        const std::string label =
            "link #" + std::to_string(k) + " (" + link.from + " -> " + link.to + ")";
        if (!nodes.contains(link.from) || !nodes.contains(link.to)) {
            throw ValidationError(label + " references an undeclared node");
        }
        if (link.from == link.to) {
            throw ValidationError(label + " is a self-loop");
        }
        if (!edges.emplace(link.from, link.to).second) {
            throw ValidationError(label + " duplicates an earlier link");
        }
        for (const auto& name : metrics) {
            auto it = link.metrics.find(name);
            if (it == link.metrics.end()) {
                throw ValidationError(label + " has no value for metric '" + name + "'");
            }
            if (!std::isfinite(it->second)) {
                throw ValidationError(label + " has a non-finite value for metric '" + name + "'");
            }
        }
    }
}

namespace {

struct Graph {
    std::vector<std::string> ids;                 // sorted
    std::vector<std::vector<std::size_t>> succ;   // ascending id order
    std::vector<std::vector<const Link*>> edge;   // parallel to succ
};

Graph make_graph(const Topology& topo) {
    Graph g;
    g.ids = topo.nodes;
    std::sort(g.ids.begin(), g.ids.end());
    auto index = [&](const std::string& id) {
        return static_cast<std::size_t>(std::lower_bound(g.ids.begin(), g.ids.end(), id) -
                                        g.ids.begin());
    };
    g.succ.resize(g.ids.size());
    g.edge.resize(g.ids.size());
    std::vector<std::vector<std::pair<std::size_t, const Link*>>> adj(g.ids.size());
    for (const auto& link : topo.links) {
        adj[index(link.from)].emplace_back(index(link.to), &link);
    }
    for (std::size_t u = 0; u < adj.size(); ++u) {
        std::sort(adj[u].begin(), adj[u].end(),
                  [](const auto& x, const auto& y) { return x.first < y.first; });
        for (const auto& [v, link] : adj[u]) {
            g.succ[u].push_back(v);
            g.edge[u].push_back(link);
        }
    }
    return g;
}

// Depth-first search over successors in ascending id order. Since every
// route ends at the destination, no route is a prefix of another, so DFS
// order is lexicographic order.
class RouteSearch {
public:
    RouteSearch(const Graph& g, std::size_t target, std::size_t max_routes)
        : g_(g), target_(target), max_routes_(max_routes), on_path_(g.ids.size(), false) {}

    std::vector<std::vector<const Link*>> run(std::size_t start) {
        visit(start);
        return std::move(found_);
    }

private:
    void visit(std::size_t u) {
        if (u == target_) {
            if (found_.size() == max_routes_) {
                throw ValidationError("more than " + std::to_string(max_routes_) +
                                      " routes between source and destination");
            }
            found_.push_back(links_);
            return;
        }
        on_path_[u] = true;
        for (std::size_t k = 0; k < g_.succ[u].size(); ++k) {
            const std::size_t v = g_.succ[u][k];
            if (on_path_[v]) {
                continue;
            }
            links_.push_back(g_.edge[u][k]);
            visit(v);
            links_.pop_back();
        }
        on_path_[u] = false;
    }

    const Graph& g_;
    std::size_t target_;
    std::size_t max_routes_;
    std::vector<bool> on_path_;
    std::vector<const Link*> links_;
    std::vector<std::vector<const Link*>> found_;
};

std::vector<std::vector<const Link*>> route_links(const Topology& topo, const Graph& g,
                                                  std::size_t max_routes) {
    auto index = [&](const std::string& id) {
        return static_cast<std::size_t>(std::lower_bound(g.ids.begin(), g.ids.end(), id) -
                                        g.ids.begin());
    };
    return RouteSearch(g, index(topo.destination), max_routes).run(index(topo.source));
}

double aggregate(const std::vector<const Link*>& links, const std::string& metric,
                 const MetricRule& rule) {
    double value = 0.0;
    switch (rule.rule) {
        case AggregationRule::HopCount:
            value = static_cast<double>(links.size());
            break;
        case AggregationRule::Sum:
        case AggregationRule::Mean:
            for (const Link* l : links) {
                value += l->metrics.at(metric);
            }
            if (rule.rule == AggregationRule::Mean) {
                value /= static_cast<double>(links.size());
            }
            break;
        case AggregationRule::Min:
            value = std::numeric_limits<double>::infinity();
            for (const Link* l : links) {
                value = std::min(value, l->metrics.at(metric));
            }
            break;
        case AggregationRule::Max:
            value = -std::numeric_limits<double>::infinity();
            for (const Link* l : links) {
                value = std::max(value, l->metrics.at(metric));
            }
            break;
    }
    if (rule.cap) {
        value = std::min(value, *rule.cap);
    }
    return value;
}

}  // namespace

std::vector<Route> enumerate_routes(const Topology& topo, std::size_t max_routes) {
    validate(topo);
    const Graph g = make_graph(topo);
    std::vector<Route> routes;
    for (const auto& links : route_links(topo, g, max_routes)) {
        Route r{topo.source};
        for (const Link* l : links) {
            r.push_back(l->to);
        }
        routes.push_back(std::move(r));
    }
    return routes;
}

std::string route_id(const Route& route) {
    std::string out;
    for (const auto& node : route) {
        if (!out.empty()) {
            out += '-';
        }
        out += node;
    }
    return out;
}

DecisionProblem build_problem(const Topology& topo, std::vector<CriterionSpec> criteria,
                              bool hard, std::size_t max_routes) {
    validate(topo);
    std::set<std::string> link_metrics;
    for (const auto& link : topo.links) {
        for (const auto& [name, value] : link.metrics) {
            link_metrics.insert(name);
        }
    }
    std::vector<MetricRule> rules;
    for (const auto& c : criteria) {
        auto it = topo.rules.find(c.name);
        MetricRule rule = it != topo.rules.end() ? it->second : default_rule(c.name);
        if (rule.rule != AggregationRule::HopCount && !link_metrics.contains(c.name)) {
            throw ValidationError("criterion '" + c.name + "' is not a metric of the topology");
        }
        rules.push_back(rule);
    }

    const Graph g = make_graph(topo);
    const auto routes = route_links(topo, g, max_routes);
    if (routes.empty()) {
        throw ValidationError("no route from '" + topo.source + "' to '" + topo.destination + "'");
    }

    DecisionProblem problem;
    problem.hard = hard;
    problem.ratings = Matrix(routes.size(), criteria.size());
    for (std::size_t i = 0; i < routes.size(); ++i) {
        Route r{topo.source};
        for (const Link* l : routes[i]) {
            r.push_back(l->to);
        }
        problem.alternatives.push_back(route_id(r));
        for (std::size_t j = 0; j < criteria.size(); ++j) {
            problem.ratings(i, j) = aggregate(routes[i], criteria[j].name, rules[j]);
        }
    }
    problem.criteria = std::move(criteria);
    return problem;
}

}  // namespace isocov
