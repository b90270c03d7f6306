#pragma once

#include <functional>
#include <vector>

namespace ctl {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    int levels = 0;
    int evaluations = 0;
};

/// Refinement cap for the adaptive rules. Defaults to 24 levels; the
/// CTL_MAX_REFINE environment variable overrides it (read once).
int max_refine_levels();

/// Integrates a 2π-periodic function over one period.
///
/// Nested trapezoid refinement: each level doubles the panel count by adding
/// the midpoints of the previous level, so no sample is evaluated twice. The
/// error of level k is estimated by the Richardson term |T_k - T_{k-1}| / 3;
/// the rule stops once two consecutive estimates fall below `tol`.
///
/// Throws ConvergenceFailure when the refinement cap is reached first.
QuadratureResult integrate_periodic(const std::function<double(double)>& f, double tol,
                                    int max_levels = max_refine_levels());

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

GaussRule gauss_legendre(int n);

}  // namespace ctl
