#pragma once

// Test-only reference computations, written directly from the formulas and
// sharing no code with the library's pipeline. Also hosts the seeded random
// generators used by the property and acceptance suites.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isocov/model.hpp"
#include "isocov/topology.hpp"

namespace oracle {

/// Straight transcription of the benefit/cost satisfaction-degree cases.
/// `lo`/`hi` are the resolved constraint bounds, `dmin`/`dmax` the column range.
inline double degree(bool benefit, double d, double lo, double hi, double dmin, double dmax) {
    const double big_m = std::max(lo - dmin, dmax - hi);
    if (benefit) {
        if (d >= lo && d <= hi) return 1.0;
        if (d < lo) return 1.0 - (lo - d) / (big_m + 1.0);
        return 1.0 - (d - hi) / (big_m + 1.0);
    }
    if (d >= lo && d <= hi) return 1.0 / (big_m + 1.0);
    if (d < lo) return (lo - d) / big_m;
    return (d - hi) / big_m;
}

struct Scores {
    std::vector<double> closeness;
    std::vector<double> score;
    std::vector<int> rank;
    std::vector<bool> v;
};

/// Brute-force ISOCOV / TOPSIS on raw arrays. With `use_constraints` false it
/// is plain TOPSIS. Ranks: descending score, earlier index wins ties.
inline Scores brute_force(const std::vector<std::vector<double>>& d,
                          const std::vector<bool>& benefit, const std::vector<double>& w,
                          const std::vector<std::optional<double>>& lower,
                          const std::vector<std::optional<double>>& upper, bool use_constraints,
                          bool hard) {
    const std::size_t m = d.size();
    const std::size_t n = w.size();
    std::vector<std::vector<double>> p(m, std::vector<double>(n));
    std::vector<bool> v(m, true);
    for (std::size_t j = 0; j < n; ++j) {
        double dmin = d[0][j], dmax = d[0][j], ss = 0;
        for (std::size_t i = 0; i < m; ++i) {
            dmin = std::min(dmin, d[i][j]);
            dmax = std::max(dmax, d[i][j]);
            ss += d[i][j] * d[i][j];
        }
        const double lo = lower[j] ? *lower[j] : dmin;
        const double hi = upper[j] ? *upper[j] : dmax;
        for (std::size_t i = 0; i < m; ++i) {
            double f = 1.0;
            if (use_constraints) {
                f = degree(benefit[j], d[i][j], lo, hi, dmin, dmax);
                if (d[i][j] < lo || d[i][j] > hi) v[i] = false;
            }
            const double nij = ss == 0 ? 0.0 : d[i][j] / std::sqrt(ss);
            p[i][j] = nij * w[j] * f;
        }
    }
    std::vector<double> best(n), worst(n);
    for (std::size_t j = 0; j < n; ++j) {
        double mx = p[0][j], mn = p[0][j];
        for (std::size_t i = 0; i < m; ++i) {
            mx = std::max(mx, p[i][j]);
            mn = std::min(mn, p[i][j]);
        }
        best[j] = benefit[j] ? mx : mn;
        worst[j] = benefit[j] ? mn : mx;
    }
    Scores s;
    s.v = v;
    for (std::size_t i = 0; i < m; ++i) {
        double sp = 0, sm = 0;
        for (std::size_t j = 0; j < n; ++j) {
            sp += (best[j] - p[i][j]) * (best[j] - p[i][j]);
            sm += (p[i][j] - worst[j]) * (p[i][j] - worst[j]);
        }
        sp = std::sqrt(sp);
        sm = std::sqrt(sm);
        const double c = (sp + sm) == 0 ? 0.5 : sm / (sp + sm);
        s.closeness.push_back(c);
        s.score.push_back(use_constraints && hard && !v[i] ? c - 1.0 : c);
    }
    s.rank.assign(m, 0);
    for (std::size_t i = 0; i < m; ++i) {
        int r = 1;
        for (std::size_t k = 0; k < m; ++k) {
            if (s.score[k] > s.score[i] || (s.score[k] == s.score[i] && k < i)) ++r;
        }
        s.rank[i] = r;
    }
    return s;
}

inline Scores brute_force(const isocov::DecisionProblem& p, bool use_constraints) {
    std::vector<std::vector<double>> d(p.num_alternatives());
    for (std::size_t i = 0; i < d.size(); ++i) {
        auto row = p.ratings.row(i);
        d[i].assign(row.begin(), row.end());
    }
    std::vector<bool> benefit;
    std::vector<double> w;
    std::vector<std::optional<double>> lo, hi;
    for (const auto& c : p.criteria) {
        benefit.push_back(c.nature == isocov::Nature::Benefit);
        w.push_back(c.weight);
        lo.push_back(c.lower_bound);
        hi.push_back(c.upper_bound);
    }
    return brute_force(d, benefit, w, lo, hi, use_constraints, p.hard);
}

/// Every sequence of distinct nodes from source to destination whose
/// consecutive pairs are links. Generated by growing all injective sequences
/// level by level, with no pruning on reachability.
inline std::set<std::vector<std::string>> all_simple_paths(const isocov::Topology& t) {
    std::set<std::pair<std::string, std::string>> edges;
    for (const auto& l : t.links) edges.emplace(l.from, l.to);
    std::set<std::vector<std::string>> out;
    std::vector<std::vector<std::string>> frontier{{t.source}};
    while (!frontier.empty()) {
        std::vector<std::vector<std::string>> next;
        for (const auto& seq : frontier) {
            if (seq.back() == t.destination) {
                out.insert(seq);
                continue;
            }
            for (const auto& node : t.nodes) {
                if (std::find(seq.begin(), seq.end(), node) != seq.end()) continue;
                auto grown = seq;
                grown.push_back(node);
                next.push_back(std::move(grown));
            }
        }
        // keep only sequences whose every hop is an edge
        frontier.clear();
        for (auto& seq : next) {
            bool ok = true;
            for (std::size_t k = 0; k + 1 < seq.size(); ++k) {
                if (!edges.contains({seq[k], seq[k + 1]})) ok = false;
            }
            if (ok) frontier.push_back(std::move(seq));
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Seeded generators

struct RandomProblemOptions {
    std::size_t min_m = 2, max_m = 30;
    std::size_t min_n = 2, max_n = 8;
    bool constrained = true;
};

/// Random decision problem; ratings are positive with occasional duplicates.
inline isocov::DecisionProblem random_problem(std::mt19937_64& rng,
                                              const RandomProblemOptions& opt = {}) {
    std::uniform_int_distribution<std::size_t> pick_m(opt.min_m, opt.max_m);
    std::uniform_int_distribution<std::size_t> pick_n(opt.min_n, opt.max_n);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t m = pick_m(rng);
    const std::size_t n = pick_n(rng);

    isocov::DecisionProblem p;
    p.hard = unit(rng) < 0.5;
    p.ratings = isocov::Matrix(m, n);
    for (std::size_t i = 0; i < m; ++i) p.alternatives.push_back("r" + std::to_string(i + 1));

    std::vector<double> raw(n);
    double total = 0;
    for (auto& x : raw) {
        x = unit(rng) < 0.1 ? 0.0 : unit(rng);
        total += x;
    }
    if (total == 0) {
        raw[0] = 1;
        total = 1;
    }
    for (std::size_t j = 0; j < n; ++j) {
        isocov::CriterionSpec c;
        c.name = "q" + std::to_string(j + 1);
        c.nature = unit(rng) < 0.5 ? isocov::Nature::Benefit : isocov::Nature::Cost;
        c.weight = raw[j] / total;
        const double scale = std::pow(10.0, std::uniform_int_distribution<int>(-3, 3)(rng));
        for (std::size_t i = 0; i < m; ++i) {
            p.ratings(i, j) = (i > 0 && unit(rng) < 0.1) ? p.ratings(i - 1, j)
                                                         : scale * (0.1 + unit(rng));
        }
        if (opt.constrained) {
            auto col = p.ratings.column(j);
            const auto [mn, mx] = std::minmax_element(col.begin(), col.end());
            double a = *mn + unit(rng) * (*mx - *mn);
            double b = *mn + unit(rng) * (*mx - *mn);
            if (a > b) std::swap(a, b);
            // sometimes snap a bound to an actual rating to exercise closed ends
            if (unit(rng) < 0.2) a = col[std::uniform_int_distribution<std::size_t>(0, m - 1)(rng)];
            if (a > b) b = a;
            if (unit(rng) > 0.2) c.lower_bound = a;
            if (unit(rng) > 0.2) c.upper_bound = b;
        }
        p.criteria.push_back(c);
    }
    double sum = 0;
    for (const auto& c : p.criteria) sum += c.weight;
    p.criteria.back().weight += 1.0 - sum;
    if (p.criteria.back().weight < 0) p.criteria.back().weight = 0;
    return p;
}

/// Random digraph on `n` nodes without self-loops; source "n0", destination "n{n-1}".
inline isocov::Topology random_topology(std::mt19937_64& rng, std::size_t n, double density) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    isocov::Topology t;
    for (std::size_t k = 0; k < n; ++k) t.nodes.push_back("n" + std::to_string(k));
    std::shuffle(t.nodes.begin(), t.nodes.end(), rng);
    t.source = "n0";
    t.destination = "n" + std::to_string(n - 1);
    for (const auto& u : t.nodes) {
        for (const auto& v : t.nodes) {
            if (u != v && unit(rng) < density) {
                t.links.push_back({u, v, {{"delay", unit(rng)}}});
            }
        }
    }
    return t;
}

}  // namespace oracle
