#include "causalmoments/report.hpp"

#include <sstream>

namespace causalmoments {

namespace {

nlohmann::json ci_to_json(const CiBlock& ci) {
    return nlohmann::json{
        {"lower", ci.lower}, {"upper", ci.upper}, {"level", ci.level}, {"mean", ci.mean}};
}

CiBlock ci_from_json(const nlohmann::json& j) {
    CiBlock ci;
    ci.lower = j.at("lower").get<double>();
    ci.upper = j.at("upper").get<double>();
    ci.level = j.at("level").get<double>();
    ci.mean = j.at("mean").get<double>();
    return ci;
}

} // namespace

nlohmann::json to_json(const Report& report) {
    nlohmann::json j;
    j["quantity"] = report.quantity;
    j["arms"] = report.arms;
    j["order"] = report.order ? nlohmann::json(*report.order) : nlohmann::json(nullptr);
    j["estimate"] = report.estimate ? nlohmann::json(*report.estimate) : nlohmann::json(nullptr);
    j["mc_std_error"] =
        report.mc_std_error ? nlohmann::json(*report.mc_std_error) : nlohmann::json(nullptr);
    j["interval"] = report.interval
                        ? nlohmann::json{{"lower", report.interval->lower},
                                         {"upper", report.interval->upper}}
                        : nlohmann::json(nullptr);
    j["ci"] = report.ci ? ci_to_json(*report.ci) : nlohmann::json(nullptr);
    j["ci_lower"] = report.ci_lower ? ci_to_json(*report.ci_lower) : nlohmann::json(nullptr);
    j["ci_upper"] = report.ci_upper ? ci_to_json(*report.ci_upper) : nlohmann::json(nullptr);
    j["flags"] = report.flags;
    j["config"] = report.config;
    return j;
}

Report report_from_json(const nlohmann::json& j) {
    Report report;
    report.quantity = j.at("quantity").get<std::string>();
    report.arms = j.at("arms").get<std::vector<int>>();
    if (!j.at("order").is_null()) report.order = j.at("order").get<int>();
    if (!j.at("estimate").is_null()) report.estimate = j.at("estimate").get<double>();
    if (!j.at("mc_std_error").is_null()) {
        report.mc_std_error = j.at("mc_std_error").get<double>();
    }
    if (!j.at("interval").is_null()) {
        report.interval = Interval{j.at("interval").at("lower").get<double>(),
                                   j.at("interval").at("upper").get<double>()};
    }
    if (!j.at("ci").is_null()) report.ci = ci_from_json(j.at("ci"));
    if (!j.at("ci_lower").is_null()) report.ci_lower = ci_from_json(j.at("ci_lower"));
    if (!j.at("ci_upper").is_null()) report.ci_upper = ci_from_json(j.at("ci_upper"));
    report.flags = j.at("flags").get<std::vector<std::string>>();
    report.config = j.at("config");
    return report;
}

bool operator==(const Report& a, const Report& b) { return to_json(a) == to_json(b); }

std::string to_table_line(const Report& report) {
    std::ostringstream out;
    out.precision(6);
    out << report.quantity;
    if (report.order) out << " m=" << *report.order;
    out << " arms=(";
    for (std::size_t i = 0; i < report.arms.size(); ++i) {
        out << (i > 0 ? "," : "") << report.arms[i];
    }
    out << ")";
    if (report.estimate) out << "  estimate=" << *report.estimate;
    if (report.interval) {
        out << "  interval=[" << report.interval->lower << ", " << report.interval->upper
            << "]";
    }
    if (report.ci) out << "  ci=[" << report.ci->lower << ", " << report.ci->upper << "]";
    if (report.ci_lower) {
        out << "  ci_lower=[" << report.ci_lower->lower << ", " << report.ci_lower->upper
            << "]";
    }
    if (report.ci_upper) {
        out << "  ci_upper=[" << report.ci_upper->lower << ", " << report.ci_upper->upper
            << "]";
    }
    if (!report.flags.empty()) {
        out << "  flags=";
        for (std::size_t i = 0; i < report.flags.size(); ++i) {
            out << (i > 0 ? "," : "") << report.flags[i];
        }
    }
    return out.str();
}

} // namespace causalmoments
