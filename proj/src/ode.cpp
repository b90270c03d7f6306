#include "ctl/ode.hpp"

#include "ctl/error.hpp"

#include <algorithm>
#include <cmath>

namespace ctl {

namespace {

// Dormand-Prince tableau
constexpr double c2 = 1.0 / 5, c3 = 3.0 / 10, c4 = 4.0 / 5, c5 = 8.0 / 9;
constexpr double a21 = 1.0 / 5;
constexpr double a31 = 3.0 / 40, a32 = 9.0 / 40;
constexpr double a41 = 44.0 / 45, a42 = -56.0 / 15, a43 = 32.0 / 9;
constexpr double a51 = 19372.0 / 6561, a52 = -25360.0 / 2187, a53 = 64448.0 / 6561,
                 a54 = -212.0 / 729;
constexpr double a61 = 9017.0 / 3168, a62 = -355.0 / 33, a63 = 46732.0 / 5247,
                 a64 = 49.0 / 176, a65 = -5103.0 / 18656;
constexpr double b1 = 35.0 / 384, b3 = 500.0 / 1113, b4 = 125.0 / 192, b5 = -2187.0 / 6784,
                 b6 = 11.0 / 84;
// b - b* (difference between the fifth- and fourth-order weights)
constexpr double e1 = 71.0 / 57600, e3 = -71.0 / 16695, e4 = 71.0 / 1920,
                 e5 = -17253.0 / 339200, e6 = 22.0 / 525, e7 = -1.0 / 40;

}  // namespace

OdeResult integrate_dopri45(const std::function<double(double, double)>& f, double t0,
                            double t1, double y0, const OdeOptions& options)
{
    if (!(options.abs_tol > 0.0))
        fail(ErrorKind::InvalidInput, "ODE tolerance must be positive");
    const double span = t1 - t0;
    if (!(span > 0.0))
        fail(ErrorKind::InvalidInput, "ODE interval must have positive length");

    const double tol_per_unit = options.abs_tol / span;
    const double min_step = 1e-13 * span;

    double h = options.initial_step > 0.0 ? options.initial_step : span / 64.0;
    double t = t0;
    double y = y0;
    double k1 = f(t, y);

    OdeResult out;
    while (t < t1) {
        if (out.accepted_steps + out.rejected_steps >= options.max_steps)
            fail(ErrorKind::ConvergenceFailure, "ODE integrator exceeded its step budget");
        bool last = false;
        if (t + h >= t1) {
            h = t1 - t;
            last = true;
        }

        double k2 = f(t + c2 * h, y + h * a21 * k1);
        double k3 = f(t + c3 * h, y + h * (a31 * k1 + a32 * k2));
        double k4 = f(t + c4 * h, y + h * (a41 * k1 + a42 * k2 + a43 * k3));
        double k5 = f(t + c5 * h, y + h * (a51 * k1 + a52 * k2 + a53 * k3 + a54 * k4));
        double k6 = f(t + h, y + h * (a61 * k1 + a62 * k2 + a63 * k3 + a64 * k4 + a65 * k5));
        double y_new = y + h * (b1 * k1 + b3 * k3 + b4 * k4 + b5 * k5 + b6 * k6);
        double k7 = f(t + h, y_new);

        double err = std::abs(h * (e1 * k1 + e3 * k3 + e4 * k4 + e5 * k5 + e6 * k6 + e7 * k7));
        if (!std::isfinite(err) || !std::isfinite(y_new))
            fail(ErrorKind::ConvergenceFailure, "non-finite value in ODE integration");

        double allowed = tol_per_unit * h;
        double ratio = err > 0.0 ? allowed / err : 1e10;
        double factor = std::clamp(0.9 * std::pow(ratio, 0.25), 0.2, 5.0);

        if (err <= allowed) {
            t = last ? t1 : t + h;
            y = y_new;
            k1 = k7;  // first-same-as-last
            ++out.accepted_steps;
        } else {
            ++out.rejected_steps;
        }
        h *= factor;
        if (h < min_step && t < t1)
            fail(ErrorKind::ConvergenceFailure, "ODE step size underflow");
    }
    out.value = y;
    return out;
}

}  // namespace ctl
