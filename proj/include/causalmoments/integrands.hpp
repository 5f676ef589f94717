#ifndef CAUSALMOMENTS_INTEGRANDS_HPP
#define CAUSALMOMENTS_INTEGRANDS_HPP

#include <functional>
#include <utility>

#include "causalmoments/empirical_cdf.hpp"
#include "causalmoments/quadrature.hpp"

namespace causalmoments {

// Conditional CDF as a plain callable so the same integrand builders serve
// empirical CDFs and exact population CDFs alike.
using CdfFn = std::function<double(double)>;

CdfFn cdf_fn(EmpiricalCdf cdf);

// Comonotone plug-in integrand for the m-th moment of the effect
// (Y_treated - Y_control). Both signed halves are folded in: for even m they
// add (the integrand is nonnegative pointwise), for odd m the mirrored half
// is subtracted. CDF monotonicity lets min/max over coordinates collapse to
// the CDF at the coordinate min/max.
Integrand make_moment_plugin_integrand(CdfFn treated, CdfFn control, int order);

// Frechet envelope (lower, upper) for the joint overlap probability
// P(Y_control < y_p <= Y_treated for all p). Both map the cube into [0, 1]
// with upper >= lower pointwise.
std::pair<Integrand, Integrand> make_frechet_pair_integrands(CdfFn treated, CdfFn control,
                                                             int order);

// Per-point {lower, upper} integrands of the moment bounds: the two ordered
// arm pairs are combined according to the parity of the order, sharing CDF
// evaluations.
MultiIntegrand make_moment_bounds_integrand(CdfFn treated, CdfFn control, int order);

// Four-term plug-in integrand for the product of effects
// (Y_i - Y_j)(Y_k - Y_h), signs (+, -, -, +) over the arm permutations.
Integrand make_product_plugin_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh);

// Frechet envelope (lower, upper) for P(Y_j < y1 <= Y_i, Y_h < y2 <= Y_k).
std::pair<Integrand, Integrand> make_product_frechet_pair_integrands(CdfFn fi, CdfFn fj,
                                                                     CdfFn fk, CdfFn fh);

// Per-point {lower, upper} integrands of the product-moment bounds (the
// four-fold signed combination of pair envelopes).
MultiIntegrand make_product_bounds_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh);

// Fused per-point {plug-in, lower bound, upper bound} for the moment of one
// effect, sharing the CDF evaluations across all three outputs. Used by
// replication protocols that need every estimator on the same draws.
MultiIntegrand make_moment_combined_integrand(CdfFn treated, CdfFn control, int order);
MultiIntegrand make_product_combined_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh);

} // namespace causalmoments

#endif
