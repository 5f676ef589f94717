#include "causalmoments/observation_table.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "causalmoments/errors.hpp"

namespace causalmoments {

void DomainBounds::validate() const {
    if (!std::isfinite(lower) || !std::isfinite(upper)) {
        throw ConfigError("integration bounds must be finite, got [" +
                          std::to_string(lower) + ", " + std::to_string(upper) + "]");
    }
    if (lower > upper) {
        throw ConfigError("invalid integration bounds: lower " + std::to_string(lower) +
                          " exceeds upper " + std::to_string(upper));
    }
}

ObservationTable::ObservationTable(std::vector<Observation> rows)
    : rows_(std::move(rows)) {
    for (const auto& row : rows_) {
        if (!std::isfinite(row.outcome)) {
            throw ValidationError("non-finite outcome for arm " + std::to_string(row.arm));
        }
    }
    index_arms();
}

ObservationTable::ObservationTable(std::vector<Observation> rows, std::vector<int> covariates)
    : ObservationTable(std::move(rows)) {
    if (covariates.size() != rows_.size()) {
        throw ValidationError("covariate column must cover every row (" +
                              std::to_string(covariates.size()) + " covariates for " +
                              std::to_string(rows_.size()) + " rows)");
    }
    covariates_ = std::move(covariates);
}

void ObservationTable::index_arms() {
    arm_counts_.clear();
    for (const auto& row : rows_) ++arm_counts_[row.arm];
}

std::vector<int> ObservationTable::arms() const {
    std::vector<int> out;
    out.reserve(arm_counts_.size());
    for (const auto& [arm, count] : arm_counts_) out.push_back(arm);
    return out;
}

std::vector<double> ObservationTable::arm_outcomes(int arm) const {
    if (!has_arm(arm)) {
        throw NoDataError("no observations for arm " + std::to_string(arm));
    }
    std::vector<double> out;
    out.reserve(arm_counts_.at(arm));
    for (const auto& row : rows_) {
        if (row.arm == arm) out.push_back(row.outcome);
    }
    return out;
}

std::vector<int> ObservationTable::covariate_levels() const {
    std::vector<int> levels(covariates_);
    std::sort(levels.begin(), levels.end());
    levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
    return levels;
}

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::stringstream ss(line);
    while (std::getline(ss, field, ',')) fields.push_back(trim(field));
    if (!line.empty() && line.back() == ',') fields.emplace_back();
    return fields;
}

int parse_int(const std::string& cell, const std::string& column, std::size_t row) {
    std::size_t consumed = 0;
    int value = 0;
    try {
        value = std::stoi(cell, &consumed);
    } catch (const std::exception&) {
        consumed = std::string::npos;
    }
    if (consumed != cell.size() || cell.empty()) {
        throw ParseError("row " + std::to_string(row) + ": cannot parse '" + cell +
                         "' as integer for column '" + column + "'");
    }
    return value;
}

double parse_double(const std::string& cell, const std::string& column, std::size_t row) {
    std::size_t consumed = 0;
    double value = 0.0;
    try {
        value = std::stod(cell, &consumed);
    } catch (const std::exception&) {
        consumed = std::string::npos;
    }
    if (consumed != cell.size() || cell.empty()) {
        throw ParseError("row " + std::to_string(row) + ": cannot parse '" + cell +
                         "' as number for column '" + column + "'");
    }
    return value;
}

} // namespace

ObservationTable parse_csv(const std::string& content, const CsvSchema& schema,
                           const std::string& origin) {
    std::stringstream stream(content);
    std::string line;

    if (!std::getline(stream, line)) {
        throw SchemaError(origin + ": empty input, expected a header row");
    }
    const auto header = split_fields(line);

    auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
        for (std::size_t c = 0; c < header.size(); ++c) {
            if (header[c] == name) return c;
        }
        return std::nullopt;
    };

    const auto arm_col = find_column(schema.arm_column);
    const auto outcome_col = find_column(schema.outcome_column);
    const auto covariate_col = find_column(schema.covariate_column);
    if (!arm_col) {
        throw SchemaError(origin + ": missing required column '" + schema.arm_column + "'");
    }
    if (!outcome_col) {
        throw SchemaError(origin + ": missing required column '" + schema.outcome_column + "'");
    }

    std::vector<Observation> rows;
    std::vector<int> covariates;
    std::size_t data_row = 0;
    while (std::getline(stream, line)) {
        if (trim(line).empty()) continue;
        ++data_row;
        const auto fields = split_fields(line);
        const std::size_t needed =
            std::max(*arm_col, covariate_col ? std::max(*outcome_col, *covariate_col)
                                             : *outcome_col);
        if (fields.size() <= needed) {
            throw ParseError("row " + std::to_string(data_row) + ": expected at least " +
                             std::to_string(needed + 1) + " fields, got " +
                             std::to_string(fields.size()));
        }
        Observation row;
        row.arm = parse_int(fields[*arm_col], schema.arm_column, data_row);
        row.outcome = parse_double(fields[*outcome_col], schema.outcome_column, data_row);
        if (!std::isfinite(row.outcome)) {
            throw ValidationError("row " + std::to_string(data_row) +
                                  ": non-finite outcome value");
        }
        rows.push_back(row);
        if (covariate_col) {
            covariates.push_back(parse_int(fields[*covariate_col], schema.covariate_column,
                                           data_row));
        }
    }

    if (covariate_col) return ObservationTable(std::move(rows), std::move(covariates));
    return ObservationTable(std::move(rows));
}

ObservationTable ingest_csv(const std::string& path, const CsvSchema& schema) {
    std::ifstream file(path);
    if (!file) {
        throw ParseError("cannot open input file '" + path + "'");
    }
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_csv(buffer.str(), schema, path);
}

std::string to_csv(const ObservationTable& table, const CsvSchema& schema) {
    std::ostringstream out;
    out.precision(17);
    out << schema.arm_column << ',' << schema.outcome_column;
    if (table.has_covariates()) out << ',' << schema.covariate_column;
    out << '\n';
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << table.rows()[i].arm << ',' << table.rows()[i].outcome;
        if (table.has_covariates()) out << ',' << table.covariates()[i];
        out << '\n';
    }
    return out.str();
}

double conditional_mean(const ObservationTable& table, int arm) {
    if (!table.has_arm(arm)) {
        throw NoDataError("no observations for arm " + std::to_string(arm));
    }
    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& row : table.rows()) {
        if (row.arm == arm) {
            sum += row.outcome;
            ++count;
        }
    }
    return sum / static_cast<double>(count);
}

DomainBounds domain_bounds(const ObservationTable& table, bool centered) {
    if (table.empty()) {
        throw NoDataError("cannot derive outcome bounds from an empty table");
    }
    std::map<int, double> centers;
    if (centered) {
        for (int arm : table.arms()) centers[arm] = conditional_mean(table, arm);
    }
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (const auto& row : table.rows()) {
        const double y = centered ? row.outcome - centers[row.arm] : row.outcome;
        lo = std::min(lo, y);
        hi = std::max(hi, y);
    }
    return DomainBounds{lo, hi};
}

} // namespace causalmoments
