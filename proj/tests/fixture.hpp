#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "isocov/io.hpp"

#ifndef ISOCOV_FIXTURE_DIR
#error "ISOCOV_FIXTURE_DIR must point at the fixtures directory"
#endif

namespace fixture {

inline std::filesystem::path path(const std::string& name) {
    return std::filesystem::path(ISOCOV_FIXTURE_DIR) / name;
}

/// The bundled 27-route dataset with its criteria.
inline isocov::DecisionProblem routes(bool hard = true) {
    return isocov::io::load_problem(path("table1.csv"), path("table2.json"), hard);
}

/// A printed expected-values table: row label -> numbers, in file order.
struct Expected {
    std::vector<std::string> header;
    std::vector<std::string> labels;
    std::vector<std::vector<double>> values;

    const std::vector<double>& at(const std::string& label) const {
        for (std::size_t k = 0; k < labels.size(); ++k) {
            if (labels[k] == label) return values[k];
        }
        throw std::out_of_range("no expected row '" + label + "'");
    }
};

inline Expected expected(const std::string& name) {
    const auto table = isocov::io::parse_matrix_csv(isocov::io::read_file(path(name)));
    Expected e;
    e.header = table.columns;
    e.labels = table.alternatives;
    for (std::size_t i = 0; i < table.ratings.rows(); ++i) {
        auto row = table.ratings.row(i);
        e.values.emplace_back(row.begin(), row.end());
    }
    return e;
}

}  // namespace fixture
