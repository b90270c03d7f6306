#pragma once

#include <functional>

namespace ctl {

struct OdeOptions {
    double abs_tol = 1e-10;
    double initial_step = 0.0;  // 0 picks (t1 - t0) / 64
    long max_steps = 10'000'000;
};

struct OdeResult {
    double value = 0.0;
    long accepted_steps = 0;
    long rejected_steps = 0;
};

/// Scalar initial value problem y' = f(t, y) on [t0, t1] with the
/// Dormand-Prince 5(4) embedded pair (the fifth-order solution is propagated).
///
/// Steps are controlled on error per unit step, |y5 - y4| <= abs_tol * h / (t1 - t0),
/// so the accumulated local error stays below abs_tol over the whole interval.
/// Throws ConvergenceFailure on step underflow or when max_steps is exceeded.
OdeResult integrate_dopri45(const std::function<double(double, double)>& f, double t0,
                            double t1, double y0, const OdeOptions& options = {});

}  // namespace ctl
