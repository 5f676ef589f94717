#ifndef CAUSALMOMENTS_REPORT_HPP
#define CAUSALMOMENTS_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "causalmoments/bounds.hpp"

namespace causalmoments {

struct CiBlock {
    double lower = 0.0;
    double upper = 0.0;
    double level = 0.95;
    double mean = 0.0;
};

// One estimated quantity, carrying either a point value or an interval, plus
// every guard/clip event and the full configuration needed to reproduce it.
struct Report {
    std::string quantity;
    std::vector<int> arms;
    std::optional<int> order;
    std::optional<double> estimate;
    std::optional<double> mc_std_error;
    std::optional<Interval> interval;
    std::optional<CiBlock> ci;
    std::optional<CiBlock> ci_lower;
    std::optional<CiBlock> ci_upper;
    std::vector<std::string> flags;
    nlohmann::json config = nlohmann::json::object();
};

nlohmann::json to_json(const Report& report);
Report report_from_json(const nlohmann::json& j);
bool operator==(const Report& a, const Report& b);

// One-line rendering for the table output format.
std::string to_table_line(const Report& report);

} // namespace causalmoments

#endif
