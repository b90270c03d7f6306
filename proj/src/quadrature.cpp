#include "ctl/quadrature.hpp"

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace ctl {

int max_refine_levels()
{
    static const int levels = [] {
        if (const char* env = std::getenv("CTL_MAX_REFINE")) {
            char* end = nullptr;
            long v = std::strtol(env, &end, 10);
            if (end != env && *end == '\0' && v >= 1 && v <= 30)
                return static_cast<int>(v);
        }
        return 24;
    }();
    return levels;
}

QuadratureResult integrate_periodic(const std::function<double(double)>& f, double tol,
                                    int max_levels)
{
    if (!(tol > 0.0))
        fail(ErrorKind::InvalidInput, "quadrature tolerance must be positive");

    constexpr double period = 2.0 * std::numbers::pi;
    constexpr int initial_panels = 32;

    long panels = initial_panels;
    double sum = 0.0;
    for (long i = 0; i < panels; ++i)
        sum += f(period * static_cast<double>(i) / static_cast<double>(panels));

    QuadratureResult out;
    out.evaluations = static_cast<int>(panels);
    double previous = sum * period / static_cast<double>(panels);
    int below = 0;

    for (int level = 1; level <= max_levels; ++level) {
        // midpoints of the current grid
        double mid = 0.0;
        for (long i = 0; i < panels; ++i)
            mid += f(period * (static_cast<double>(i) + 0.5) / static_cast<double>(panels));
        out.evaluations += static_cast<int>(panels);
        sum += mid;
        panels *= 2;

        double current = sum * period / static_cast<double>(panels);
        double estimate = std::abs(current - previous) / 3.0;
        out.value = current;
        out.error_estimate = estimate;
        out.levels = level;
        if (!std::isfinite(current))
            fail(ErrorKind::ConvergenceFailure, "non-finite integrand value");
        below = estimate <= tol ? below + 1 : 0;
        if (below >= 2)
            return out;
        previous = current;
    }
    fail(ErrorKind::ConvergenceFailure,
         "periodic quadrature did not reach tolerance within " + std::to_string(max_levels) +
             " refinement levels (estimate " + format_real(out.error_estimate) + ")");
}

GaussRule gauss_legendre(int n)
{
    if (n < 1)
        fail(ErrorKind::InvalidInput, "Gauss-Legendre rule needs at least one node");

    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        // Newton iteration on P_n starting from the Chebyshev guess
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16)
                break;
        }
        double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace ctl
