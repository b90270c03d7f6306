#include "ctl/error.hpp"
#include "ctl/ode.hpp"
#include "ctl/quadrature.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ctl;

namespace {

constexpr double pi = std::numbers::pi;

TEST(PeriodicQuadrature, IntegratesTrigonometricPolynomialsExactly)
{
    auto r = integrate_periodic([](double t) { return 3.0 + std::cos(t) + std::sin(7 * t); }, 1e-12);
    EXPECT_NEAR(r.value, 6.0 * pi, 1e-13);
}

TEST(PeriodicQuadrature, AnalyticIntegrandMatchesBesselIdentity)
{
    // ∫ exp(cos t) dt = 2π I0(1)
    auto r = integrate_periodic([](double t) { return std::exp(std::cos(t)); }, 1e-13);
    EXPECT_NEAR(r.value, 2.0 * pi * std::cyl_bessel_i(0.0, 1.0), 1e-12);
    EXPECT_LE(r.error_estimate, 1e-13);
}

TEST(PeriodicQuadrature, RefinementCapRaisesConvergenceFailure)
{
    // |sin t|^0.5 has a kink the trapezoid rule converges slowly on
    auto f = [](double t) { return std::sqrt(std::abs(std::sin(t))); };
    try {
        integrate_periodic(f, 1e-14, 3);
        FAIL() << "expected ConvergenceFailure";
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::ConvergenceFailure);
    }
}

TEST(PeriodicQuadrature, RejectsNonPositiveTolerance)
{
    EXPECT_THROW(integrate_periodic([](double) { return 1.0; }, 0.0), Error);
}

TEST(GaussLegendre, WeightsSumToTwoAndIntegratePolynomialsExactly)
{
    for (int n : {1, 2, 5, 16}) {
        auto rule = gauss_legendre(n);
        double wsum = 0.0, moment = 0.0;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            wsum += rule.weights[i];
            moment += rule.weights[i] * std::pow(rule.nodes[i], 2 * n - 2);
        }
        EXPECT_NEAR(wsum, 2.0, 1e-14) << n;
        EXPECT_NEAR(moment, 2.0 / (2 * n - 1), 1e-14) << n;
    }
}

TEST(DormandPrince, ExponentialGrowth)
{
    OdeOptions opt;
    opt.abs_tol = 1e-10;
    auto r = integrate_dopri45([](double, double y) { return y; }, 0.0, 1.0, 1.0, opt);
    EXPECT_NEAR(r.value, std::exp(1.0), 1e-9);
    EXPECT_GT(r.accepted_steps, 0);
}

TEST(DormandPrince, QuadratureOfPeriodicRightHandSide)
{
    OdeOptions opt;
    opt.abs_tol = 1e-11;
    auto r = integrate_dopri45([](double t, double) { return std::exp(std::cos(t)); }, 0.0, 2.0 * pi, 0.0, opt);
    EXPECT_NEAR(r.value, 2.0 * pi * std::cyl_bessel_i(0.0, 1.0), 1e-10);
}

TEST(DormandPrince, StepBudgetExhaustionIsAConvergenceFailure)
{
    OdeOptions opt;
    opt.abs_tol = 1e-12;
    opt.max_steps = 5;
    EXPECT_THROW(integrate_dopri45([](double t, double) { return std::sin(50 * t); }, 0.0, 10.0, 0.0, opt),
                 Error);
}

}  // namespace
