// isocov: rank routes under value constraints from CSV/JSON inputs.
//
// Exit codes: 0 success, 1 usage error, 2 validation error, 3 parse error,
// 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "isocov/engine.hpp"
#include "isocov/errors.hpp"
#include "isocov/io.hpp"
#include "isocov/topology.hpp"
#include "isocov/topsis.hpp"

namespace {

enum ExitCode : int {
    kOk = 0,
    kUsage = 1,
    kValidation = 2,
    kParse = 3,
    kInvariant = 4,
};

struct ProblemArgs {
    std::string matrix;
    std::string criteria;
    std::string problem;
    std::string constraints = "hard";
    bool clamp_bounds = false;
    CLI::Option* constraints_opt = nullptr;

    void attach(CLI::App* cmd, bool with_constraints) {
        auto* m = cmd->add_option("--matrix", matrix, "Decision matrix CSV")->check(CLI::ExistingFile);
        auto* c = cmd->add_option("--criteria", criteria, "Criteria JSON")->check(CLI::ExistingFile);
        auto* p = cmd->add_option("--problem", problem, "Decision problem JSON (instead of --matrix/--criteria)")
                      ->check(CLI::ExistingFile);
        m->needs(c);
        c->needs(m);
        p->excludes(m)->excludes(c);
        if (with_constraints) {
            constraints_opt =
                cmd->add_option("--constraints", constraints, "Treat value constraints as hard or soft")
                    ->check(CLI::IsMember({"hard", "soft"}));
        }
        cmd->add_flag("--clamp-bounds", clamp_bounds,
                      "Clamp constraint bounds into the data range instead of rejecting them");
    }

    isocov::BoundsPolicy policy() const {
        return clamp_bounds ? isocov::BoundsPolicy::Clamp : isocov::BoundsPolicy::Strict;
    }

    // A problem file carries its own hard flag; --constraints overrides it when given.
    isocov::DecisionProblem load() const {
        isocov::DecisionProblem p;
        if (!problem.empty()) {
            p = isocov::io::load_problem_json(problem);
        } else if (!matrix.empty()) {
            p = isocov::io::load_problem(matrix, criteria, true);
        } else {
            throw CLI::RequiredError("--matrix and --criteria, or --problem,");
        }
        if (problem.empty() || (constraints_opt && constraints_opt->count() > 0)) {
            p.hard = constraints == "hard";
        }
        const auto issues = isocov::validate(p, policy());
        if (!issues.empty()) {
            throw isocov::ValidationError(isocov::describe(issues));
        }
        return p;
    }
};

struct OutputArgs {
    std::string format = "table";
    int precision = isocov::io::kDefaultPrecision;

    void attach(CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"json", "csv", "table"}));
        cmd->add_option("--precision", precision, "Decimal places for csv/table output")
            ->check(CLI::Range(0, 17));
    }

    isocov::io::Format fmt() const { return *isocov::io::parse_format(format); }
};

isocov::RankingReport run_method(const std::string& method, const isocov::DecisionProblem& p,
                                 isocov::BoundsPolicy policy) {
    if (method == "topsis") {
        return isocov::rank_topsis(p);
    }
    return isocov::rank_isocov(p, policy);
}

std::string compare(const isocov::DecisionProblem& problem, isocov::BoundsPolicy policy,
                    const OutputArgs& out) {
    isocov::DecisionProblem hard = problem;
    hard.hard = true;
    isocov::DecisionProblem soft = problem;
    soft.hard = false;
    std::vector<isocov::RankingReport> reports{isocov::rank_isocov(hard, policy),
                                               isocov::rank_isocov(soft, policy),
                                               isocov::rank_topsis(problem)};
    for (const auto& r : reports) isocov::check_report(r);
    return isocov::io::emit_comparison(reports, out.fmt(), out.precision);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constraint-aware multi-criteria route ranking (ISOCOV and TOPSIS)"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "isocov 0.1.0");

    // rank
    ProblemArgs rank_in;
    OutputArgs rank_out;
    std::string method = "isocov";
    bool intermediates = false;
    std::string export_problem;
    auto* rank = app.add_subcommand("rank", "Score and rank alternatives");
    rank_in.attach(rank, true);
    rank_out.attach(rank);
    rank->add_option("--method", method, "Ranking method")->check(CLI::IsMember({"isocov", "topsis"}));
    rank->add_flag("--intermediates", intermediates, "Also emit F, N, P, R+ and R-");
    rank->add_option("--export-problem", export_problem,
                     "Write the loaded problem as JSON to this path");

    // degrees
    ProblemArgs deg_in;
    OutputArgs deg_out;
    deg_out.format = "csv";
    auto* degrees = app.add_subcommand("degrees", "Emit constraint-satisfaction degrees and V flags");
    deg_in.attach(degrees, false);
    deg_out.attach(degrees);

    // compare
    ProblemArgs cmp_in;
    OutputArgs cmp_out;
    auto* cmp = app.add_subcommand("compare", "ISOCOV hard, ISOCOV soft and TOPSIS side by side");
    cmp_in.attach(cmp, false);
    cmp_out.attach(cmp);

    // paths
    std::string topology_path;
    std::string paths_criteria;
    bool paths_rank = false;
    std::string paths_method = "isocov";
    std::string paths_constraints = "hard";
    std::size_t max_routes = isocov::kDefaultMaxRoutes;
    std::string paths_export;
    OutputArgs paths_out;
    bool paths_clamp = false;
    auto* paths = app.add_subcommand("paths", "Enumerate routes of a topology and optionally rank them");
    paths->add_option("--topology", topology_path, "Topology JSON")->required()->check(CLI::ExistingFile);
    paths->add_option("--criteria", paths_criteria, "Criteria JSON; builds the route decision matrix")
        ->check(CLI::ExistingFile);
    auto* rank_flag = paths->add_flag("--rank", paths_rank, "Rank the enumerated routes");
    paths->add_option("--method", paths_method, "Ranking method")->check(CLI::IsMember({"isocov", "topsis"}));
    paths->add_option("--constraints", paths_constraints, "Treat value constraints as hard or soft")
        ->check(CLI::IsMember({"hard", "soft"}));
    paths->add_option("--max-routes", max_routes, "Fail if more routes than this exist");
    paths->add_option("--export-problem", paths_export, "Write the built problem as JSON to this path");
    paths->add_flag("--clamp-bounds", paths_clamp,
                    "Clamp constraint bounds into the data range instead of rejecting them");
    paths_out.attach(paths);
    rank_flag->needs("--criteria");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (rank->parsed()) {
            const auto problem = rank_in.load();
            if (!export_problem.empty()) {
                std::ofstream(export_problem) << isocov::io::problem_to_json(problem);
            }
            const auto report = run_method(method, problem, rank_in.policy());
            isocov::check_report(report);
            std::cout << isocov::io::emit_report(report, rank_out.fmt(), rank_out.precision,
                                                 intermediates);
        } else if (degrees->parsed()) {
            const auto problem = deg_in.load();
            const auto resolved = isocov::resolve(problem, deg_in.policy());
            const auto f = isocov::satisfaction_matrix(problem, resolved);
            std::vector<std::string> names;
            for (const auto& c : problem.criteria) names.push_back(c.name);
            std::cout << isocov::io::emit_degrees(problem.alternatives, names, f, deg_out.fmt(),
                                                  deg_out.precision);
        } else if (cmp->parsed()) {
            const auto problem = cmp_in.load();
            std::cout << compare(problem, cmp_in.policy(), cmp_out);
        } else if (paths->parsed()) {
            const auto topo = isocov::io::load_topology(topology_path);
            if (paths_criteria.empty()) {
                const auto routes = isocov::enumerate_routes(topo, max_routes);
                std::cout << isocov::io::emit_routes(routes, paths_out.fmt());
                return kOk;
            }
            auto criteria = isocov::io::parse_criteria_json(isocov::io::read_file(paths_criteria));
            const auto problem = isocov::build_problem(topo, std::move(criteria),
                                                       paths_constraints == "hard", max_routes);
            if (!paths_export.empty()) {
                std::ofstream(paths_export) << isocov::io::problem_to_json(problem);
            }
            if (!paths_rank) {
                std::cout << isocov::io::emit_matrix_csv(problem);
                return kOk;
            }
            const auto policy = paths_clamp ? isocov::BoundsPolicy::Clamp : isocov::BoundsPolicy::Strict;
            const auto issues = isocov::validate(problem, policy);
            if (!issues.empty()) {
                throw isocov::ValidationError(isocov::describe(issues));
            }
            const auto report = run_method(paths_method, problem, policy);
            isocov::check_report(report);
            std::cout << isocov::io::emit_report(report, paths_out.fmt(), paths_out.precision);
        }
    } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const isocov::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const isocov::ValidationError& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return kValidation;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInvariant;
    }
    return kOk;
}
