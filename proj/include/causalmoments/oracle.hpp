#ifndef CAUSALMOMENTS_ORACLE_HPP
#define CAUSALMOMENTS_ORACLE_HPP

#include <vector>

#include "causalmoments/bounds.hpp"
#include "causalmoments/integrands.hpp"
#include "causalmoments/scm.hpp"

namespace causalmoments {

// Exact population quantities of a finite-support model, by direct
// enumeration of the joint potential outcomes. These are the references the
// estimators are verified against; they never touch the estimation path.

double exact_arm_mean(const DiscreteScm& scm, int arm);

// E[(Y_treated - Y_control)^order], centering subtracts the exact arm means
// inside the power.
double exact_moment(const DiscreteScm& scm, ArmPair arms, int order, bool centered);

// E[(Y_i - Y_j)(Y_k - Y_h)], with optional exact centering per factor.
double exact_product_moment(const DiscreteScm& scm, ArmPair left, ArmPair right,
                            bool centered);

// Exact population CDF P(Y < y | X = arm) (strict), optionally centered by
// the exact arm mean.
CdfFn exact_cdf(const DiscreteScm& scm, int arm, bool centered);

// Pooled outcome values over all arms (centered per mode), sorted and
// deduplicated. Every CDF involved is constant between consecutive values,
// so integrating any estimator integrand over cells of this mesh is exact.
std::vector<double> outcome_mesh(const DiscreteScm& scm, bool centered);

// Deterministic exact integral of a piecewise-constant integrand over the
// `dimension`-fold product of the mesh cells.
double mesh_integrate(const Integrand& integrand, const std::vector<double>& mesh,
                      int dimension);

// The identification formulas evaluated with exact population CDFs and exact
// integration: separates identification error from estimation error.
double exact_plugin_moment(const DiscreteScm& scm, ArmPair arms, int order, bool centered);
double exact_plugin_product(const DiscreteScm& scm, ArmPair left, ArmPair right,
                            bool centered);

// The bound formulas evaluated the same way.
Interval exact_moment_bound_interval(const DiscreteScm& scm, ArmPair arms, int order,
                                     bool centered);
Interval exact_product_bound_interval(const DiscreteScm& scm, ArmPair left, ArmPair right,
                                      bool centered);

} // namespace causalmoments

#endif
