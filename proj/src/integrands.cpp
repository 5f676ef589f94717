#include "causalmoments/integrands.hpp"

#include <algorithm>
#include <cmath>

namespace causalmoments {

namespace {

struct MinMax {
    double lo;
    double hi;
};

MinMax coord_range(std::span<const double> point) {
    MinMax r{point[0], point[0]};
    for (std::size_t p = 1; p < point.size(); ++p) {
        r.lo = std::min(r.lo, point[p]);
        r.hi = std::max(r.hi, point[p]);
    }
    return r;
}

double clip0(double v) { return v > 0.0 ? v : 0.0; }

} // namespace

CdfFn cdf_fn(EmpiricalCdf cdf) {
    return [cdf = std::move(cdf)](double y) { return cdf(y); };
}

Integrand make_moment_plugin_integrand(CdfFn treated, CdfFn control, int order) {
    const double mirror_sign = (order % 2 == 0) ? 1.0 : -1.0;
    return [treated = std::move(treated), control = std::move(control),
            mirror_sign](std::span<const double> point) {
        const auto [lo, hi] = coord_range(point);
        const double control_lo = control(lo);
        const double control_hi = control(hi);
        const double treated_lo = treated(lo);
        const double treated_hi = treated(hi);
        return clip0(control_lo - treated_hi) + mirror_sign * clip0(treated_lo - control_hi);
    };
}

std::pair<Integrand, Integrand> make_frechet_pair_integrands(CdfFn treated, CdfFn control,
                                                             int order) {
    auto lower = [treated, control, order](std::span<const double> point) {
        double sum = 0.0;
        for (double y : point) sum += control(y) - treated(y);
        return clip0(sum - static_cast<double>(order - 1));
    };
    auto upper = [treated = std::move(treated),
                  control = std::move(control)](std::span<const double> point) {
        const auto [lo, hi] = coord_range(point);
        return std::min(control(lo), 1.0 - treated(hi));
    };
    return {Integrand(std::move(lower)), Integrand(std::move(upper))};
}

MultiIntegrand make_moment_bounds_integrand(CdfFn treated, CdfFn control, int order) {
    const bool even = (order % 2 == 0);
    return [treated = std::move(treated), control = std::move(control), order,
            even](std::span<const double> point, std::span<double> out) {
        double sum_treated = 0.0;
        double sum_control = 0.0;
        double min_treated = 1.0, max_treated = 0.0;
        double min_control = 1.0, max_control = 0.0;
        for (double y : point) {
            const double ft = treated(y);
            const double fc = control(y);
            sum_treated += ft;
            sum_control += fc;
            min_treated = std::min(min_treated, ft);
            max_treated = std::max(max_treated, ft);
            min_control = std::min(min_control, fc);
            max_control = std::max(max_control, fc);
        }
        const double excess = static_cast<double>(order - 1);
        const double l_pos = clip0(sum_control - sum_treated - excess);
        const double u_pos = std::min(min_control, 1.0 - max_treated);
        const double l_neg = clip0(sum_treated - sum_control - excess);
        const double u_neg = std::min(min_treated, 1.0 - max_control);
        if (even) {
            out[0] = l_pos + l_neg;
            out[1] = u_pos + u_neg;
        } else {
            out[0] = l_pos - u_neg;
            out[1] = u_pos - l_neg;
        }
    };
}

namespace {

// Overlap probability of (effect i over j at y1) and (effect k over h at y2)
// under the comonotone plug-in.
double plugin_pair(double fj1, double fh2, double fi1, double fk2) {
    return clip0(std::min(fj1, fh2) - std::max(fi1, fk2));
}

double frechet_pair_lower(double fj1, double fh2, double fi1, double fk2) {
    return clip0(fj1 - fi1 + fh2 - fk2 - 1.0);
}

double frechet_pair_upper(double fj1, double fh2, double fi1, double fk2) {
    return std::min(std::min(fj1, fh2), 1.0 - std::max(fi1, fk2));
}

} // namespace

Integrand make_product_plugin_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh) {
    return [fi = std::move(fi), fj = std::move(fj), fk = std::move(fk),
            fh = std::move(fh)](std::span<const double> point) {
        const double i1 = fi(point[0]);
        const double j1 = fj(point[0]);
        const double k2 = fk(point[1]);
        const double h2 = fh(point[1]);
        return plugin_pair(j1, h2, i1, k2) - plugin_pair(i1, h2, j1, k2) -
               plugin_pair(j1, k2, i1, h2) + plugin_pair(i1, k2, j1, h2);
    };
}

std::pair<Integrand, Integrand> make_product_frechet_pair_integrands(CdfFn fi, CdfFn fj,
                                                                     CdfFn fk, CdfFn fh) {
    auto lower = [fi, fj, fk, fh](std::span<const double> point) {
        return frechet_pair_lower(fj(point[0]), fh(point[1]), fi(point[0]), fk(point[1]));
    };
    auto upper = [fi = std::move(fi), fj = std::move(fj), fk = std::move(fk),
                  fh = std::move(fh)](std::span<const double> point) {
        return frechet_pair_upper(fj(point[0]), fh(point[1]), fi(point[0]), fk(point[1]));
    };
    return {Integrand(std::move(lower)), Integrand(std::move(upper))};
}

MultiIntegrand make_product_bounds_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh) {
    return [fi = std::move(fi), fj = std::move(fj), fk = std::move(fk),
            fh = std::move(fh)](std::span<const double> point, std::span<double> out) {
        const double i1 = fi(point[0]);
        const double j1 = fj(point[0]);
        const double k2 = fk(point[1]);
        const double h2 = fh(point[1]);
        out[0] = frechet_pair_lower(j1, h2, i1, k2) - frechet_pair_upper(i1, h2, j1, k2) -
                 frechet_pair_upper(j1, k2, i1, h2) + frechet_pair_lower(i1, k2, j1, h2);
        out[1] = frechet_pair_upper(j1, h2, i1, k2) - frechet_pair_lower(i1, h2, j1, k2) -
                 frechet_pair_lower(j1, k2, i1, h2) + frechet_pair_upper(i1, k2, j1, h2);
    };
}

MultiIntegrand make_moment_combined_integrand(CdfFn treated, CdfFn control, int order) {
    const bool even = (order % 2 == 0);
    return [treated = std::move(treated), control = std::move(control), order,
            even](std::span<const double> point, std::span<double> out) {
        double sum_treated = 0.0;
        double sum_control = 0.0;
        double min_treated = 1.0, max_treated = 0.0;
        double min_control = 1.0, max_control = 0.0;
        for (double y : point) {
            const double ft = treated(y);
            const double fc = control(y);
            sum_treated += ft;
            sum_control += fc;
            min_treated = std::min(min_treated, ft);
            max_treated = std::max(max_treated, ft);
            min_control = std::min(min_control, fc);
            max_control = std::max(max_control, fc);
        }
        const double plug_pos = clip0(min_control - max_treated);
        const double plug_neg = clip0(min_treated - max_control);
        const double excess = static_cast<double>(order - 1);
        const double l_pos = clip0(sum_control - sum_treated - excess);
        const double u_pos = std::min(min_control, 1.0 - max_treated);
        const double l_neg = clip0(sum_treated - sum_control - excess);
        const double u_neg = std::min(min_treated, 1.0 - max_control);
        if (even) {
            out[0] = plug_pos + plug_neg;
            out[1] = l_pos + l_neg;
            out[2] = u_pos + u_neg;
        } else {
            out[0] = plug_pos - plug_neg;
            out[1] = l_pos - u_neg;
            out[2] = u_pos - l_neg;
        }
    };
}

MultiIntegrand make_product_combined_integrand(CdfFn fi, CdfFn fj, CdfFn fk, CdfFn fh) {
    return [fi = std::move(fi), fj = std::move(fj), fk = std::move(fk),
            fh = std::move(fh)](std::span<const double> point, std::span<double> out) {
        const double i1 = fi(point[0]);
        const double j1 = fj(point[0]);
        const double k2 = fk(point[1]);
        const double h2 = fh(point[1]);
        out[0] = plugin_pair(j1, h2, i1, k2) - plugin_pair(i1, h2, j1, k2) -
                 plugin_pair(j1, k2, i1, h2) + plugin_pair(i1, k2, j1, h2);
        out[1] = frechet_pair_lower(j1, h2, i1, k2) - frechet_pair_upper(i1, h2, j1, k2) -
                 frechet_pair_upper(j1, k2, i1, h2) + frechet_pair_lower(i1, k2, j1, h2);
        out[2] = frechet_pair_upper(j1, h2, i1, k2) - frechet_pair_lower(i1, h2, j1, k2) -
                 frechet_pair_lower(j1, k2, i1, h2) + frechet_pair_upper(i1, k2, j1, h2);
    };
}

} // namespace causalmoments
