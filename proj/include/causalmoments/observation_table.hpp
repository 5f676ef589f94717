#ifndef CAUSALMOMENTS_OBSERVATION_TABLE_HPP
#define CAUSALMOMENTS_OBSERVATION_TABLE_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace causalmoments {

// Closed interval [lower, upper] containing the outcome values an estimator
// integrates over.
struct DomainBounds {
    double lower = 0.0;
    double upper = 0.0;

    double width() const { return upper - lower; }
    void validate() const; // throws ConfigError on NaN/inf or lower > upper
};

// One observational record: treatment arm label and real-valued outcome.
struct Observation {
    int arm = 0;
    double outcome = 0.0;
};

// Immutable observational sample. Rows keep their ingestion order; the
// covariate column is either present for every row or absent entirely.
class ObservationTable {
public:
    ObservationTable() = default;
    explicit ObservationTable(std::vector<Observation> rows);
    ObservationTable(std::vector<Observation> rows, std::vector<int> covariates);

    const std::vector<Observation>& rows() const { return rows_; }
    std::size_t size() const { return rows_.size(); }
    bool empty() const { return rows_.empty(); }

    bool has_covariates() const { return !covariates_.empty(); }
    const std::vector<int>& covariates() const { return covariates_; }

    // Distinct arm labels with their row counts, ascending by label.
    const std::map<int, std::size_t>& arm_counts() const { return arm_counts_; }
    bool has_arm(int arm) const { return arm_counts_.count(arm) != 0; }
    std::vector<int> arms() const;

    // Outcomes of one arm in row order; throws NoDataError if the arm is absent.
    std::vector<double> arm_outcomes(int arm) const;

    // Distinct covariate levels present, ascending.
    std::vector<int> covariate_levels() const;

private:
    void index_arms();

    std::vector<Observation> rows_;
    std::vector<int> covariates_;
    std::map<int, std::size_t> arm_counts_;
};

// Column naming for CSV ingestion. Columns are located by header name;
// unknown extra columns are ignored.
struct CsvSchema {
    std::string arm_column = "x";
    std::string outcome_column = "y";
    std::string covariate_column = "w";
};

// Reads a comma-separated file with a header row. Rows that are entirely
// whitespace are skipped. Errors carry 1-based data-row numbers.
ObservationTable ingest_csv(const std::string& path, const CsvSchema& schema = {});
ObservationTable parse_csv(const std::string& content, const CsvSchema& schema = {},
                           const std::string& origin = "<string>");

// Writes a table back out in the ingestion format.
std::string to_csv(const ObservationTable& table, const CsvSchema& schema = {});

// Arithmetic mean of the outcomes in one arm, accumulated in row order.
double conditional_mean(const ObservationTable& table, int arm);

// Pooled [min, max] of outcomes over all arms. In centered mode each arm is
// shifted by its own mean before pooling.
DomainBounds domain_bounds(const ObservationTable& table, bool centered);

} // namespace causalmoments

#endif
