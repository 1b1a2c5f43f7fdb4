#include "isocov/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "isocov/errors.hpp"

namespace isocov::io {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
    if (name == "json") return Format::Json;
    if (name == "csv") return Format::Csv;
    if (name == "table") return Format::Table;
    return std::nullopt;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open '" + path.string() + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// ---------------------------------------------------------------------------
// CSV

namespace {

struct CsvCell {
    std::string text;
    std::size_t column;  // 1-based character column
};

struct CsvRecord {
    std::vector<CsvCell> cells;
    std::size_t line;
};

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

// RFC 4180-ish: quoted fields may contain commas and doubled quotes, but not newlines.
std::vector<CsvRecord> split_csv(std::string_view text) {
    std::vector<CsvRecord> records;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (trim(line).empty()) continue;

        CsvRecord rec{{}, line_no};
        std::size_t k = 0;
        while (true) {
            CsvCell cell{{}, k + 1};
            if (k < line.size() && line[k] == '"') {
                ++k;
                bool closed = false;
                while (k < line.size()) {
                    if (line[k] == '"') {
                        if (k + 1 < line.size() && line[k + 1] == '"') {
                            cell.text += '"';
                            k += 2;
                            continue;
                        }
                        closed = true;
                        ++k;
                        break;
                    }
                    cell.text += line[k++];
                }
                if (!closed) throw ParseError("unterminated quoted field", line_no, cell.column);
                if (k < line.size() && line[k] != ',') {
                    throw ParseError("unexpected character after quoted field", line_no, k + 1);
                }
            } else {
                std::size_t comma = line.find(',', k);
                if (comma == std::string_view::npos) comma = line.size();
                cell.text = std::string(trim(line.substr(k, comma - k)));
                k = comma;
            }
            rec.cells.push_back(std::move(cell));
            if (k >= line.size()) break;
            ++k;  // skip comma
            if (k == line.size()) {
                rec.cells.push_back({{}, k + 1});
                break;
            }
        }
        records.push_back(std::move(rec));
    }
    return records;
}

std::optional<double> parse_number(std::string_view s) {
    s = trim(s);
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    if (s.empty()) return std::nullopt;
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

}  // namespace

MatrixTable parse_matrix_csv(std::string_view text) {
    const auto records = split_csv(text);
    if (records.empty()) {
        throw ParseError("matrix file is empty");
    }
    const CsvRecord& header = records.front();
    if (header.cells.size() < 2) {
        throw ParseError("header needs an id column and at least one criterion", header.line, 1);
    }
    MatrixTable table;
    for (std::size_t c = 1; c < header.cells.size(); ++c) {
        if (header.cells[c].text.empty()) {
            throw ParseError("empty criterion name in header", header.line, header.cells[c].column);
        }
        table.columns.push_back(header.cells[c].text);
    }
    const std::size_t n = table.columns.size();
    std::vector<std::vector<double>> rows;
    std::set<std::string> ids;
    for (std::size_t r = 1; r < records.size(); ++r) {
        const CsvRecord& rec = records[r];
        if (rec.cells.size() != n + 1) {
            throw ParseError("expected " + std::to_string(n + 1) + " fields, found " +
                                 std::to_string(rec.cells.size()),
                             rec.line, 1);
        }
        const std::string& id = rec.cells[0].text;
        if (id.empty()) {
            throw ParseError("empty alternative id", rec.line, 1);
        }
        if (!ids.insert(id).second) {
            throw ParseError("duplicate alternative id '" + id + "'", rec.line, 1);
        }
        std::vector<double> row;
        for (std::size_t c = 1; c <= n; ++c) {
            const CsvCell& cell = rec.cells[c];
            const std::string where =
                " for alternative '" + id + "', criterion '" + table.columns[c - 1] + "'";
            if (cell.text.empty()) {
                throw ParseError("empty cell" + where, rec.line, cell.column);
            }
            auto value = parse_number(cell.text);
            if (!value) {
                throw ParseError("non-numeric cell '" + cell.text + "'" + where, rec.line,
                                 cell.column);
            }
            row.push_back(*value);
        }
        table.alternatives.push_back(id);
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw ParseError("matrix file has no alternatives");
    }
    table.ratings = Matrix::from_rows(rows);
    return table;
}

// ---------------------------------------------------------------------------
// JSON inputs

namespace {

json parse_json(std::string_view text, const char* what) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        std::size_t col = 1;
        const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
        for (std::size_t k = 0; k < stop; ++k) {
            if (text[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(std::string("invalid JSON in ") + what, line, col);
    }
}

const json& require(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw ParseError(where + ": missing field '" + key + "'");
    }
    return *it;
}

std::string require_string(const json& obj, const char* key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

double require_number(const json& v, const std::string& where) {
    if (!v.is_number()) throw ParseError(where + " must be a number");
    return v.get<double>();
}

std::optional<double> optional_number(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    return require_number(*it, where + ": field '" + key + "'");
}

CriterionSpec criterion_from_json(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw ParseError(where + " must be an object");
    CriterionSpec c;
    c.name = require_string(obj, "name", where);
    const std::string nature = require_string(obj, "nature", where);
    if (nature == "benefit") {
        c.nature = Nature::Benefit;
    } else if (nature == "cost") {
        c.nature = Nature::Cost;
    } else {
        throw ParseError(where + ": field 'nature' has invalid value '" + nature +
                         "' (expected \"benefit\" or \"cost\")");
    }
    c.weight = require_number(require(obj, "weight", where), where + ": field 'weight'");
    c.lower_bound = optional_number(obj, "lower_bound", where);
    c.upper_bound = optional_number(obj, "upper_bound", where);
    return c;
}

json criterion_to_json(const CriterionSpec& c) {
    json obj;
    obj["name"] = c.name;
    obj["nature"] = to_string(c.nature);
    obj["weight"] = c.weight;
    obj["lower_bound"] = c.lower_bound ? json(*c.lower_bound) : json(nullptr);
    obj["upper_bound"] = c.upper_bound ? json(*c.upper_bound) : json(nullptr);
    return obj;
}

std::vector<CriterionSpec> criteria_from_json(const json& doc) {
    if (!doc.is_array()) throw ParseError("criteria must be a JSON array");
    std::vector<CriterionSpec> out;
    for (std::size_t k = 0; k < doc.size(); ++k) {
        out.push_back(criterion_from_json(doc[k], "criterion #" + std::to_string(k)));
    }
    return out;
}

}  // namespace

std::vector<CriterionSpec> parse_criteria_json(std::string_view text) {
    return criteria_from_json(parse_json(text, "criteria file"));
}

DecisionProblem make_problem(MatrixTable table, std::vector<CriterionSpec> criteria, bool hard) {
    if (table.columns.size() != criteria.size()) {
        throw ParseError("matrix has " + std::to_string(table.columns.size()) +
                         " criterion columns but the criteria file declares " +
                         std::to_string(criteria.size()));
    }
    for (std::size_t j = 0; j < criteria.size(); ++j) {
        if (table.columns[j] != criteria[j].name) {
            throw ParseError("matrix column " + std::to_string(j + 2) + " is '" + table.columns[j] +
                             "' but criterion #" + std::to_string(j) + " is '" + criteria[j].name +
                             "'");
        }
    }
    return DecisionProblem{std::move(table.alternatives), std::move(criteria),
                           std::move(table.ratings), hard};
}

DecisionProblem load_problem(const std::filesystem::path& matrix_path,
                             const std::filesystem::path& criteria_path, bool hard) {
    MatrixTable table;
    try {
        table = parse_matrix_csv(read_file(matrix_path));
    } catch (const ParseError& e) {
        throw ParseError(matrix_path.string() + ": " + e.what(), e.line(), e.column());
    }
    std::vector<CriterionSpec> criteria;
    try {
        criteria = parse_criteria_json(read_file(criteria_path));
    } catch (const ParseError& e) {
        throw ParseError(criteria_path.string() + ": " + e.what(), e.line(), e.column());
    }
    return make_problem(std::move(table), std::move(criteria), hard);
}

std::string problem_to_json(const DecisionProblem& problem) {
    json doc;
    doc["alternatives"] = problem.alternatives;
    doc["criteria"] = json::array();
    for (const auto& c : problem.criteria) doc["criteria"].push_back(criterion_to_json(c));
    doc["ratings"] = json::array();
    for (std::size_t i = 0; i < problem.ratings.rows(); ++i) {
        auto row = problem.ratings.row(i);
        doc["ratings"].push_back(std::vector<double>(row.begin(), row.end()));
    }
    doc["hard"] = problem.hard;
    return doc.dump(2) + "\n";
}

DecisionProblem parse_problem_json(std::string_view text) {
    const json doc = parse_json(text, "problem file");
    if (!doc.is_object()) throw ParseError("problem must be a JSON object");
    DecisionProblem p;
    const json& alts = require(doc, "alternatives", "problem");
    if (!alts.is_array()) throw ParseError("problem: 'alternatives' must be an array");
    for (const auto& a : alts) {
        if (!a.is_string()) throw ParseError("problem: alternative ids must be strings");
        p.alternatives.push_back(a.get<std::string>());
    }
    p.criteria = criteria_from_json(require(doc, "criteria", "problem"));
    const json& ratings = require(doc, "ratings", "problem");
    if (!ratings.is_array()) throw ParseError("problem: 'ratings' must be an array of rows");
    std::vector<std::vector<double>> rows;
    for (std::size_t i = 0; i < ratings.size(); ++i) {
        const json& row = ratings[i];
        if (!row.is_array() || row.size() != p.criteria.size()) {
            throw ParseError("problem: ratings row " + std::to_string(i) + " must hold " +
                             std::to_string(p.criteria.size()) + " numbers");
        }
        std::vector<double> values;
        for (std::size_t j = 0; j < row.size(); ++j) {
            values.push_back(require_number(
                row[j], "problem: rating [" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
        rows.push_back(std::move(values));
    }
    if (rows.size() != p.alternatives.size()) {
        throw ParseError("problem: " + std::to_string(rows.size()) + " ratings rows for " +
                         std::to_string(p.alternatives.size()) + " alternatives");
    }
    p.ratings = rows.empty() ? Matrix(0, p.criteria.size()) : Matrix::from_rows(rows);
    auto hard = doc.find("hard");
    if (hard != doc.end()) {
        if (!hard->is_boolean()) throw ParseError("problem: 'hard' must be a boolean");
        p.hard = hard->get<bool>();
    }
    return p;
}

DecisionProblem load_problem_json(const std::filesystem::path& path) {
    try {
        return parse_problem_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    }
}

Topology parse_topology_json(std::string_view text) {
    const json doc = parse_json(text, "topology file");
    if (!doc.is_object()) throw ParseError("topology must be a JSON object");
    Topology t;
    const json& nodes = require(doc, "nodes", "topology");
    if (!nodes.is_array()) throw ParseError("topology: 'nodes' must be an array");
    for (const auto& n : nodes) {
        if (!n.is_string()) throw ParseError("topology: node ids must be strings");
        t.nodes.push_back(n.get<std::string>());
    }
    t.source = require_string(doc, "source", "topology");
    t.destination = require_string(doc, "destination", "topology");

    const json& links = require(doc, "links", "topology");
    if (!links.is_array()) throw ParseError("topology: 'links' must be an array");
    for (std::size_t k = 0; k < links.size(); ++k) {
        const std::string where = "link #" + std::to_string(k);
        const json& l = links[k];
        if (!l.is_object()) throw ParseError(where + " must be an object");
        Link link{require_string(l, "from", where), require_string(l, "to", where), {}};
        auto metrics = l.find("metrics");
        if (metrics != l.end()) {
            if (!metrics->is_object()) throw ParseError(where + ": 'metrics' must be an object");
            for (const auto& [name, value] : metrics->items()) {
                link.metrics[name] = require_number(value, where + ": metric '" + name + "'");
            }
        }
        t.links.push_back(std::move(link));
    }

    auto rules = doc.find("rules");
    if (rules != doc.end()) {
        if (!rules->is_object()) throw ParseError("topology: 'rules' must be an object");
        for (const auto& [metric, spec] : rules->items()) {
            const std::string where = "rule for '" + metric + "'";
            MetricRule rule;
            std::string name;
            if (spec.is_string()) {
                name = spec.get<std::string>();
            } else if (spec.is_object()) {
                name = require_string(spec, "rule", where);
                rule.cap = optional_number(spec, "cap", where);
            } else {
                throw ParseError(where + " must be a rule name or an object");
            }
            auto parsed = parse_aggregation_rule(name);
            if (!parsed) {
                throw ParseError(where + ": unknown aggregation rule '" + name +
                                 "' (expected sum, min, max, mean or hop_count)");
            }
            rule.rule = *parsed;
            t.rules[metric] = rule;
        }
    }
    validate(t);
    return t;
}

Topology load_topology(const std::filesystem::path& path) {
    try {
        return parse_topology_json(read_file(path));
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what(), e.line(), e.column());
    } catch (const ValidationError& e) {
        throw ValidationError(path.string() + ": " + e.what());
    }
}

// ---------------------------------------------------------------------------
// Output

std::string format_decimal(double value, int precision) {
    const double scale = std::pow(10.0, precision);
    double rounded = std::round(value * scale) / scale;
    if (rounded == 0.0) rounded = 0.0;  // drop the sign of negative zero
    return fmt::format("{:.{}f}", rounded, precision);
}

namespace {

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

class TextTable {
public:
    explicit TextTable(std::vector<std::string> header) { rows_.push_back(std::move(header)); }

    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }

    std::string render() const {
        std::vector<std::size_t> width(rows_.front().size(), 0);
        for (const auto& row : rows_) {
            for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
        }
        std::string out;
        auto line = [&](const std::vector<std::string>& row) {
            std::string text;
            for (std::size_t c = 0; c < row.size(); ++c) {
                if (c > 0) text += "  ";
                // first column left-aligned, numbers right-aligned
                text += c == 0 ? fmt::format("{:<{}}", row[c], width[c])
                               : fmt::format("{:>{}}", row[c], width[c]);
            }
            while (!text.empty() && text.back() == ' ') text.pop_back();
            out += text + "\n";
        };
        line(rows_.front());
        std::size_t total = 0;
        for (auto w : width) total += w;
        out += std::string(total + 2 * (width.size() - 1), '-') + "\n";
        for (std::size_t r = 1; r < rows_.size(); ++r) line(rows_[r]);
        return out;
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string render_rows(const std::vector<std::string>& header,
                        const std::vector<std::vector<std::string>>& rows, Format format) {
    if (format == Format::Table) {
        TextTable t(header);
        for (const auto& r : rows) t.add(r);
        return t.render();
    }
    std::string out;
    auto emit = [&](const std::vector<std::string>& r) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            if (c > 0) out += ',';
            out += csv_field(r[c]);
        }
        out += '\n';
    };
    emit(header);
    for (const auto& r : rows) emit(r);
    return out;
}

std::string render_matrix(const char* label, std::span<const std::string> alternatives,
                          std::span<const std::string> criteria, const Matrix& m,
                          const std::vector<bool>* v_flags, Format format, int precision) {
    std::vector<std::string> header{label};
    header.insert(header.end(), criteria.begin(), criteria.end());
    if (v_flags) header.push_back("V");
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < m.rows(); ++i) {
        std::vector<std::string> row{alternatives[i]};
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_decimal(m(i, j), precision));
        if (v_flags) row.push_back((*v_flags)[i] ? "1" : "0");
        rows.push_back(std::move(row));
    }
    return render_rows(header, rows, format);
}

json matrix_json(const Matrix& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        auto row = m.row(i);
        out.push_back(std::vector<double>(row.begin(), row.end()));
    }
    return out;
}

json report_json(const RankingReport& report, bool intermediates) {
    json doc;
    doc["method"] = to_string(report.method);
    doc["rows"] = json::array();
    for (const auto& r : report.rows) {
        doc["rows"].push_back({{"alternative", r.alternative},
                               {"score", r.score},
                               {"rank", r.rank},
                               {"v_flag", r.v_flag},
                               {"closeness", r.closeness},
                               {"s_plus", r.s_plus},
                               {"s_minus", r.s_minus}});
    }
    if (intermediates && report.intermediates) {
        const Intermediates& im = *report.intermediates;
        json inter;
        inter["alternatives"] = report.alternatives;
        inter["criteria"] = report.criteria;
        inter["degrees"] = matrix_json(im.satisfaction.degrees);
        inter["v_flags"] = json::array();
        for (bool v : im.satisfaction.v_flags) inter["v_flags"].push_back(v);
        inter["normalized"] = matrix_json(im.weighted.normalized);
        inter["weighted"] = matrix_json(im.weighted.weighted);
        inter["pis"] = im.weighted.pis;
        inter["nis"] = im.weighted.nis;
        doc["intermediates"] = std::move(inter);
    }
    return doc;
}

}  // namespace

std::string emit_report(const RankingReport& report, Format format, int precision,
                        bool intermediates) {
    if (format == Format::Json) {
        return report_json(report, intermediates).dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : report.rows) {
        rows.push_back({r.alternative, format_decimal(r.score, precision), std::to_string(r.rank),
                        r.v_flag ? "1" : "0"});
    }
    std::string out = render_rows({"alternative", "score", "rank", "v_flag"}, rows, format);
    if (!intermediates || !report.intermediates) {
        return out;
    }

    const Intermediates& im = *report.intermediates;
    auto section = [&](const char* title) {
        out += format == Format::Csv ? fmt::format("\n# {}\n", title) : fmt::format("\n{}\n", title);
    };
    section("satisfaction degrees (F)");
    out += render_matrix("alternative", report.alternatives, report.criteria, im.satisfaction.degrees,
                         &im.satisfaction.v_flags, format, precision);
    section("normalized (N)");
    out += render_matrix("alternative", report.alternatives, report.criteria,
                         im.weighted.normalized, nullptr, format, precision);
    section("weighted (P)");
    out += render_matrix("alternative", report.alternatives, report.criteria, im.weighted.weighted,
                         nullptr, format, precision);
    section("ideal solutions");
    std::vector<std::string> header{"ideal"};
    header.insert(header.end(), report.criteria.begin(), report.criteria.end());
    std::vector<std::string> plus{"R+"};
    std::vector<std::string> minus{"R-"};
    for (std::size_t j = 0; j < im.weighted.pis.size(); ++j) {
        plus.push_back(format_decimal(im.weighted.pis[j], precision));
        minus.push_back(format_decimal(im.weighted.nis[j], precision));
    }
    out += render_rows(header, {plus, minus}, format);
    return out;
}

std::string emit_degrees(std::span<const std::string> alternatives,
                         std::span<const std::string> criteria,
                         const SatisfactionMatrix& satisfaction, Format format, int precision) {
    if (format == Format::Json) {
        json doc;
        doc["alternatives"] = std::vector<std::string>(alternatives.begin(), alternatives.end());
        doc["criteria"] = std::vector<std::string>(criteria.begin(), criteria.end());
        doc["degrees"] = matrix_json(satisfaction.degrees);
        doc["v_flags"] = json::array();
        for (bool v : satisfaction.v_flags) doc["v_flags"].push_back(v);
        return doc.dump(2) + "\n";
    }
    return render_matrix("alternative", alternatives, criteria, satisfaction.degrees,
                         &satisfaction.v_flags, format, precision);
}

std::string emit_comparison(std::span<const RankingReport> reports, Format format, int precision) {
    if (reports.empty()) return {};
    const auto& alternatives = reports.front().alternatives;
    for (const auto& r : reports) {
        if (r.alternatives != alternatives) {
            throw ContractError("emit_comparison: reports cover different alternatives");
        }
    }
    if (format == Format::Json) {
        json doc;
        doc["alternatives"] = json::array();
        for (const auto& id : alternatives) {
            json entry{{"alternative", id}};
            for (const auto& r : reports) {
                const ScoreRow* row = r.find(id);
                entry[to_string(r.method)] = {{"score", row->score}, {"rank", row->rank}};
            }
            doc["alternatives"].push_back(std::move(entry));
        }
        return doc.dump(2) + "\n";
    }
    std::vector<std::string> header{"alternative"};
    for (const auto& r : reports) {
        header.push_back(fmt::format("{}_score", to_string(r.method)));
        header.push_back(fmt::format("{}_rank", to_string(r.method)));
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& id : alternatives) {
        std::vector<std::string> row{id};
        for (const auto& r : reports) {
            const ScoreRow* s = r.find(id);
            row.push_back(format_decimal(s->score, precision));
            row.push_back(std::to_string(s->rank));
        }
        rows.push_back(std::move(row));
    }
    return render_rows(header, rows, format);
}

std::string emit_matrix_csv(const DecisionProblem& problem, std::string_view id_header) {
    std::vector<std::string> header{std::string(id_header)};
    for (const auto& c : problem.criteria) header.push_back(c.name);
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < problem.ratings.rows(); ++i) {
        std::vector<std::string> row{problem.alternatives[i]};
        for (std::size_t j = 0; j < problem.ratings.cols(); ++j) {
            row.push_back(fmt::format("{}", problem.ratings(i, j)));
        }
        rows.push_back(std::move(row));
    }
    return render_rows(header, rows, Format::Csv);
}

std::string emit_routes(std::span<const Route> routes, Format format) {
    if (format == Format::Json) {
        json doc = json::array();
        for (const auto& r : routes) doc.push_back({{"id", route_id(r)}, {"nodes", r}, {"hops", r.size() - 1}});
        return doc.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    for (const auto& r : routes) {
        rows.push_back({route_id(r), std::to_string(r.size() - 1)});
    }
    return render_rows({"route", "hops"}, rows, format);
}

}  // namespace isocov::io
