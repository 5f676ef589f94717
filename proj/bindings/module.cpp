#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "causalmoments/bootstrap.hpp"
#include "causalmoments/bounds.hpp"
#include "causalmoments/conditional.hpp"
#include "causalmoments/identify.hpp"
#include "causalmoments/oracle.hpp"
#include "causalmoments/scm.hpp"

namespace py = pybind11;
namespace cm = causalmoments;

namespace {

cm::IntegrationConfig make_config(int dimension, std::int64_t mc_points, std::uint64_t seed,
                                  std::optional<std::pair<double, double>> bounds) {
    cm::IntegrationConfig config;
    config.dimension = dimension;
    config.joint_points = mc_points;
    config.seed = seed;
    if (bounds) config.bounds = cm::DomainBounds{bounds->first, bounds->second};
    return config;
}

py::dict scalar_dict(const cm::ScalarEstimate& estimate) {
    py::dict out;
    out["value"] = estimate.value;
    out["mc_std_error"] = estimate.mc_std_error;
    out["flags"] = estimate.flags;
    return out;
}

py::dict interval_dict(const cm::IntervalEstimate& estimate) {
    py::dict out;
    out["lower"] = estimate.interval.lower;
    out["upper"] = estimate.interval.upper;
    out["flags"] = estimate.flags;
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Moments, covariances and correlations of causal effects from "
              "observational samples: point identification and distribution-free bounds.";

    py::class_<cm::ObservationTable>(m, "ObservationTable")
        .def(py::init([](const std::vector<std::pair<int, double>>& rows) {
                 std::vector<cm::Observation> observations;
                 observations.reserve(rows.size());
                 for (const auto& [x, y] : rows) observations.push_back(cm::Observation{x, y});
                 return cm::ObservationTable(std::move(observations));
             }),
             py::arg("rows"))
        .def_static("from_csv",
                    [](const std::string& path) { return cm::ingest_csv(path); },
                    py::arg("path"))
        .def("__len__", &cm::ObservationTable::size)
        .def("arms", &cm::ObservationTable::arms)
        .def("arm_outcomes", &cm::ObservationTable::arm_outcomes, py::arg("arm"))
        .def("to_csv", [](const cm::ObservationTable& t) { return cm::to_csv(t); });

    m.def("simulate",
          [](const std::string& preset_name, std::int64_t n, std::uint64_t seed) {
              return cm::simulate(cm::preset(preset_name), n, seed);
          },
          py::arg("preset"), py::arg("n"), py::arg("seed") = 0,
          "Draw a synthetic sample from a named preset model.");

    m.def("preset_names", &cm::preset_names);

    m.def("ate",
          [](const cm::ObservationTable& table, int treated, int control) {
              return cm::ate(table, cm::ArmPair{treated, control});
          },
          py::arg("table"), py::arg("treated") = 1, py::arg("control") = 0);

    m.def("moment",
          [](const cm::ObservationTable& table, int order, int treated, int control,
             bool centered, std::int64_t mc_points, std::uint64_t seed,
             std::optional<std::pair<double, double>> bounds) {
              const cm::MomentRequest request{
                  order, cm::ArmPair{treated, control}, centered,
                  make_config(order, mc_points, seed, bounds)};
              return scalar_dict(cm::moment_identified(table, request));
          },
          py::arg("table"), py::arg("order"), py::arg("treated") = 1, py::arg("control") = 0,
          py::arg("centered") = false, py::arg("mc_points") = 0, py::arg("seed") = 0,
          py::arg("bounds") = std::nullopt,
          "Plug-in m-th (central) moment of the effect Y_treated - Y_control.");

    m.def("moment_bounds",
          [](const cm::ObservationTable& table, int order, int treated, int control,
             bool centered, std::int64_t mc_points, std::uint64_t seed,
             std::optional<std::pair<double, double>> bounds) {
              return interval_dict(
                  cm::moment_bounds(table, order, cm::ArmPair{treated, control}, centered,
                                    make_config(order, mc_points, seed, bounds)));
          },
          py::arg("table"), py::arg("order"), py::arg("treated") = 1, py::arg("control") = 0,
          py::arg("centered") = false, py::arg("mc_points") = 0, py::arg("seed") = 0,
          py::arg("bounds") = std::nullopt,
          "Distribution-free bounds on the m-th (central) moment.");

    m.def("product_moment",
          [](const cm::ObservationTable& table, std::pair<int, int> left,
             std::pair<int, int> right, bool centered, std::int64_t mc_points,
             std::uint64_t seed, std::optional<std::pair<double, double>> bounds) {
              return scalar_dict(cm::product_moment_identified(
                  table, cm::ArmPair{left.first, left.second},
                  cm::ArmPair{right.first, right.second},
                  make_config(2, mc_points, seed, bounds), centered));
          },
          py::arg("table"), py::arg("left"), py::arg("right"), py::arg("centered") = false,
          py::arg("mc_points") = 0, py::arg("seed") = 0, py::arg("bounds") = std::nullopt,
          "Plug-in (central) product moment of two effects.");

    m.def("product_bounds",
          [](const cm::ObservationTable& table, std::pair<int, int> left,
             std::pair<int, int> right, bool centered, std::int64_t mc_points,
             std::uint64_t seed, std::optional<std::pair<double, double>> bounds) {
              return interval_dict(cm::product_bounds(
                  table, cm::ArmPair{left.first, left.second},
                  cm::ArmPair{right.first, right.second}, centered,
                  make_config(2, mc_points, seed, bounds)));
          },
          py::arg("table"), py::arg("left"), py::arg("right"), py::arg("centered") = false,
          py::arg("mc_points") = 0, py::arg("seed") = 0, py::arg("bounds") = std::nullopt);

    m.def("correlation",
          [](const cm::ObservationTable& table, std::pair<int, int> left,
             std::pair<int, int> right, std::int64_t mc_points, std::uint64_t seed,
             std::optional<std::pair<double, double>> bounds) {
              return scalar_dict(cm::correlation_identified(
                  table, cm::ArmPair{left.first, left.second},
                  cm::ArmPair{right.first, right.second},
                  make_config(2, mc_points, seed, bounds)));
          },
          py::arg("table"), py::arg("left"), py::arg("right"), py::arg("mc_points") = 0,
          py::arg("seed") = 0, py::arg("bounds") = std::nullopt,
          "Correlation of two effects, guarded and clipped into [-1, 1].");

    m.def("correlation_bounds",
          [](const cm::ObservationTable& table, std::pair<int, int> left,
             std::pair<int, int> right, std::int64_t mc_points, std::uint64_t seed,
             std::optional<std::pair<double, double>> bounds) {
              return interval_dict(cm::correlation_bounds(
                  table, cm::ArmPair{left.first, left.second},
                  cm::ArmPair{right.first, right.second},
                  make_config(2, mc_points, seed, bounds)));
          },
          py::arg("table"), py::arg("left"), py::arg("right"), py::arg("mc_points") = 0,
          py::arg("seed") = 0, py::arg("bounds") = std::nullopt);

    m.def("derived_stats",
          [](const cm::ObservationTable& table, int treated, int control,
             std::int64_t mc_points, std::uint64_t seed,
             std::optional<std::pair<double, double>> bounds) {
              const auto stats = cm::derived_stats(table, cm::ArmPair{treated, control},
                                                   make_config(2, mc_points, seed, bounds));
              py::dict out;
              out["variance"] = stats.variance;
              out["std_dev"] = stats.std_dev;
              out["skewness"] = stats.skewness;
              out["kurtosis"] = stats.kurtosis;
              out["flags"] = stats.flags;
              return out;
          },
          py::arg("table"), py::arg("treated") = 1, py::arg("control") = 0,
          py::arg("mc_points") = 0, py::arg("seed") = 0, py::arg("bounds") = std::nullopt);

    m.def("stratify", &cm::stratify, py::arg("table"), py::arg("level"),
          "Sub-table of the rows with covariate == level.");

    m.def("bootstrap_ate",
          [](const cm::ObservationTable& table, int treated, int control, int replicates,
             double level, std::uint64_t seed, const std::string& mode) {
              cm::BootstrapConfig config;
              config.replicates = replicates;
              config.level = level;
              config.seed = seed;
              config.mode = mode == "within-arm" ? cm::ResampleMode::WithinArm
                                                 : cm::ResampleMode::Pooled;
              const auto result = cm::bootstrap_ci(
                  [&](const cm::ObservationTable& t, std::uint64_t) {
                      return cm::ate(t, cm::ArmPair{treated, control});
                  },
                  table, config);
              py::dict out;
              out["mean"] = result.mean;
              out["lower"] = result.lower;
              out["upper"] = result.upper;
              out["failed_replicates"] = result.failed_replicates;
              return out;
          },
          py::arg("table"), py::arg("treated") = 1, py::arg("control") = 0,
          py::arg("replicates") = 1000, py::arg("level") = 0.95, py::arg("seed") = 0,
          py::arg("mode") = "pooled",
          "Percentile bootstrap confidence interval for the difference of arm means.");
}
