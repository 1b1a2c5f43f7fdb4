#pragma once

#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isocov/model.hpp"
#include "isocov/ranking.hpp"
#include "isocov/topology.hpp"

namespace isocov::io {

enum class Format { Json, Csv, Table };

std::optional<Format> parse_format(std::string_view name);

/// CSV decision matrix: header row of criterion names (first cell labels the
/// id column), then one row per alternative with its id and decimal ratings.
struct MatrixTable {
    std::vector<std::string> columns;
    std::vector<std::string> alternatives;
    Matrix ratings;
};

MatrixTable parse_matrix_csv(std::string_view text);

/// Writes the ratings in the CSV matrix form, values at full precision.
std::string emit_matrix_csv(const DecisionProblem& problem, std::string_view id_header = "route");

/// JSON array of {name, nature, weight, lower_bound, upper_bound}; a null
/// bound is open.
std::vector<CriterionSpec> parse_criteria_json(std::string_view text);

/// Combines a matrix and a criteria list. Column names must match criteria
/// names in order.
DecisionProblem make_problem(MatrixTable table, std::vector<CriterionSpec> criteria, bool hard);

DecisionProblem load_problem(const std::filesystem::path& matrix_path,
                             const std::filesystem::path& criteria_path, bool hard);

/// Lossless JSON form: {alternatives, criteria, ratings, hard}.
std::string problem_to_json(const DecisionProblem& problem);
DecisionProblem parse_problem_json(std::string_view text);
DecisionProblem load_problem_json(const std::filesystem::path& path);

/// {nodes, links:[{from,to,metrics}], source, destination, rules}. A rule is a
/// name ("sum", "min", "max", "mean", "hop_count") or {"rule": name, "cap": x}.
Topology parse_topology_json(std::string_view text);
Topology load_topology(const std::filesystem::path& path);

std::string read_file(const std::filesystem::path& path);

/// Rounds half away from zero to `precision` decimals and prints fixed-point.
std::string format_decimal(double value, int precision);

inline constexpr int kDefaultPrecision = 4;

/// JSON output is unrounded; `precision` applies to csv and table.
std::string emit_report(const RankingReport& report, Format format,
                        int precision = kDefaultPrecision, bool intermediates = false);

/// The satisfaction-degree matrix with V flags, rows in input order.
std::string emit_degrees(std::span<const std::string> alternatives,
                         std::span<const std::string> criteria,
                         const SatisfactionMatrix& satisfaction, Format format,
                         int precision = kDefaultPrecision);

/// Side-by-side scores and ranks of several reports over the same
/// alternatives, rows in input order.
std::string emit_comparison(std::span<const RankingReport> reports, Format format,
                            int precision = kDefaultPrecision);

std::string emit_routes(std::span<const Route> routes, Format format);

}  // namespace isocov::io
