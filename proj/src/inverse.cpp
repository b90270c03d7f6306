#include "ctl/inverse.hpp"

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace ctl {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double two_pi = 2.0 * pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

void require_target(const SolveTarget& target)
{
    if (!std::isfinite(target.tau.real()) || !std::isfinite(target.tau.imag()) ||
        !(target.tau.imag() > 0.0))
        fail(ErrorKind::InvalidInput, "target must lie in the upper half-plane");
    if (!(target.tolerance > 0.0))
        fail(ErrorKind::InvalidInput, "target tolerance must be positive");
}

}  // namespace

JordanCurve solve_plane_example3(const SolveTarget& target)
{
    require_target(target);
    const double x = target.tau.real();
    const double y = target.tau.imag();
    const double shift = -x / (2.0 * y * y);
    return JordanCurve{Circle{{shift, shift}, y}};
}

bool isoperimetric_check(double area, double length, BaseSpace space, double slack)
{
    if (!(length > 0.0) || !std::isfinite(area))
        return false;
    const double a = std::abs(area);
    const double lhs = length * length;
    switch (space) {
    case BaseSpace::EuclideanPlane:
        return lhs >= 4.0 * pi * a - slack;
    case BaseSpace::UnitSphere:
        if (a > 4.0 * pi)
            return false;
        return lhs >= a * (4.0 * pi - a) - slack;
    case BaseSpace::EuclideanSpace3:
        break;
    }
    fail(ErrorKind::Unsupported, "no isoperimetric inequality for curves in R^3");
}

namespace {

class WavyFamilySolver {
public:
    WavyFamilySolver(double area, int mode, double quad_tol)
        : area_(area), mode_(mode), quad_tol_(quad_tol) {}

    JordanCurve curve(double theta0, double eps) const
    {
        if (eps == 0.0)
            return JordanCurve{Latitude{theta0}};
        return JordanCurve{WavyLatitude{theta0, eps, mode_}};
    }

    /// Polar angle θ0 giving the target area at wave amplitude eps, by
    /// bisection (the enclosed area grows monotonically with θ0).
    std::optional<double> theta_for(double eps) const
    {
        double lo = eps + pole_margin;
        double hi = pi - eps - pole_margin;
        if (!(lo < hi))
            return std::nullopt;
        const double a_lo = area_at(lo, eps);
        const double a_hi = area_at(hi, eps);
        if (area_ < a_lo || area_ > a_hi)
            return std::nullopt;
        for (int i = 0; i < 200 && hi - lo > 1e-15; ++i) {
            double mid = 0.5 * (lo + hi);
            (area_at(mid, eps) < area_ ? lo : hi) = mid;
        }
        return 0.5 * (lo + hi);
    }

    double length_at(double theta0, double eps) const
    {
        return curve_length(curve(theta0, eps), quad_tol_);
    }

    static constexpr double pole_margin = 1e-6;

private:
    double area_at(double theta0, double eps) const
    {
        return spherical_signed_area(curve(theta0, eps), quad_tol_);
    }

    double area_;
    int mode_;
    double quad_tol_;
};

}  // namespace

JordanCurve solve_sphere_hopf(const SolveTarget& target, int k, const SphereSolveOptions& options)
{
    require_target(target);
    if (k < 1)
        fail(ErrorKind::InvalidInput, "Hopf tensor power must be at least 1");
    if (options.mode < 1)
        fail(ErrorKind::InvalidInput, "wave mode must be at least 1");

    const double re = target.tau.real();
    if (re == 0.0)
        fail(ErrorKind::NotExactlyReachable,
             "Re(tau) = 0 needs zero enclosed area, which no embedded sphere curve has");
    const bool flip = re > 0.0;

    const double alpha = two_pi * std::abs(re);
    const double area = 2.0 * alpha / k;
    const double length = two_pi * target.tau.imag();
    if (!(area > 0.0 && area < 4.0 * pi))
        fail(ErrorKind::Infeasible, "required area " + format_real(area) + " is outside (0, 4pi)");
    if (!isoperimetric_check(area, length, BaseSpace::UnitSphere, 1e-12 * length * length))
        fail(ErrorKind::Infeasible, "(A, L) violates the spherical isoperimetric inequality");

    WavyFamilySolver solver(area, options.mode, options.quad_tol);

    auto finish = [&](double theta0, double eps) {
        JordanCurve c = solver.curve(theta0, eps);
        if (flip)
            c = c.reverse();
        const ModuliPoint forward = moduli_point(hopf_connection(k), c, 1e-11);
        if (!(reduced_distance(forward.tau, target.tau) <= target.tolerance))
            fail(ErrorKind::ConvergenceFailure, "solved curve does not reproduce the target");
        return c;
    };

    const auto theta_flat = solver.theta_for(0.0);
    if (!theta_flat)
        fail(ErrorKind::Infeasible, "no latitude circle encloses the required area");
    const double flat_length = solver.length_at(*theta_flat, 0.0);
    // The latitude circle is the shortest curve enclosing its area.
    if (length <= flat_length * (1.0 + 1e-12)) {
        if (length < flat_length * (1.0 - 1e-9))
            fail(ErrorKind::Infeasible, "target length is below the isoperimetric minimum");
        return finish(*theta_flat, 0.0);
    }

    // Bracket the amplitude: length grows with eps at fixed area.
    constexpr double scan_step = 0.05;
    double eps_lo = 0.0;
    double eps_hi = 0.0;
    bool bracketed = false;
    for (double eps = scan_step; eps < pi / 2.0; eps += scan_step) {
        auto theta = solver.theta_for(eps);
        if (!theta)
            break;
        if (solver.length_at(*theta, eps) >= length) {
            eps_hi = eps;
            bracketed = true;
            break;
        }
        eps_lo = eps;
    }
    if (!bracketed) {
        // refine towards the feasibility edge before giving up
        double lo = eps_lo, hi = eps_lo + scan_step;
        for (int i = 0; i < 60; ++i) {
            double mid = 0.5 * (lo + hi);
            (solver.theta_for(mid) ? lo : hi) = mid;
        }
        auto theta = solver.theta_for(lo);
        if (!theta || solver.length_at(*theta, lo) < length)
            fail(ErrorKind::Infeasible, "target length is beyond the reach of the wavy-latitude family (mode " +
                                            std::to_string(options.mode) + ")");
        eps_hi = lo;
    }

    for (int i = 0; i < 200 && eps_hi - eps_lo > 1e-15; ++i) {
        double mid = 0.5 * (eps_lo + eps_hi);
        auto theta = solver.theta_for(mid);
        if (!theta || solver.length_at(*theta, mid) >= length)
            eps_hi = mid;
        else
            eps_lo = mid;
    }
    const double eps = 0.5 * (eps_lo + eps_hi);
    const auto theta = solver.theta_for(eps);
    if (!theta)
        fail(ErrorKind::ConvergenceFailure, "amplitude bisection left the feasible range");
    return finish(*theta, eps);
}

std::vector<std::string> family_parameter_names(const CurveFamily& family)
{
    return std::visit(
        overloaded{
            [](const CircleFamily&) -> std::vector<std::string> { return {"radius", "center_x", "center_y"}; },
            [](const TrigLoopFamily& f) {
                std::vector<std::string> names{"center_x", "center_y", "radius_x", "radius_y"};
                for (int k = 2; k <= f.harmonics; ++k)
                    for (const char* c : {"xc", "xs", "yc", "ys"})
                        names.push_back(std::string(c) + std::to_string(k));
                return names;
            },
            [](const LatitudeFamily&) -> std::vector<std::string> { return {"theta0"}; },
            [](const WavyFamily&) -> std::vector<std::string> { return {"theta0", "eps", "mode"}; },
        },
        family);
}

namespace {

double uniform(std::mt19937_64& rng, double lo, double hi)
{
    // 53 random bits, so the draw does not depend on the library's distributions
    const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
}

}  // namespace

std::vector<double> draw_family_parameters(const CurveFamily& family, std::mt19937_64& rng)
{
    return std::visit(
        overloaded{
            [&](const CircleFamily& f) -> std::vector<double> {
                // (min, max]: reflect the half-open draw
                double r = f.radius_max - uniform(rng, 0.0, f.radius_max - f.radius_min);
                double cx = uniform(rng, f.center_min, f.center_max);
                double cy = uniform(rng, f.center_min, f.center_max);
                return {r, cx, cy};
            },
            [&](const TrigLoopFamily& f) {
                std::vector<double> p;
                p.push_back(uniform(rng, -1.0, 1.0));
                p.push_back(uniform(rng, -1.0, 1.0));
                double rx = uniform(rng, f.radius_min, f.radius_max);
                double ry = uniform(rng, f.radius_min, f.radius_max);
                p.push_back(rx);
                p.push_back(ry);
                double base = std::min(rx, ry);
                for (int k = 2; k <= f.harmonics; ++k) {
                    double amp = f.perturbation * base / (k * k);
                    for (int c = 0; c < 4; ++c)
                        p.push_back(uniform(rng, -amp, amp));
                }
                return p;
            },
            [&](const LatitudeFamily& f) -> std::vector<double> {
                return {uniform(rng, f.theta_min, f.theta_max)};
            },
            [&](const WavyFamily& f) -> std::vector<double> {
                double theta0 = uniform(rng, f.theta_min, f.theta_max);
                double eps = uniform(rng, 0.0, f.eps_max);
                return {theta0, eps, static_cast<double>(f.mode)};
            },
        },
        family);
}

JordanCurve curve_from_parameters(const CurveFamily& family, const std::vector<double>& p)
{
    return std::visit(
        overloaded{
            [&](const CircleFamily&) { return JordanCurve{Circle{{p.at(1), p.at(2)}, p.at(0)}}; },
            [&](const TrigLoopFamily& f) {
                TrigLoop l;
                const auto h = static_cast<std::size_t>(f.harmonics) + 1;
                l.xc.assign(h, 0.0);
                l.xs.assign(h, 0.0);
                l.yc.assign(h, 0.0);
                l.ys.assign(h, 0.0);
                l.xc[0] = p.at(0);
                l.yc[0] = p.at(1);
                l.xc[1] = p.at(2);
                l.ys[1] = p.at(3);
                std::size_t i = 4;
                for (std::size_t k = 2; k < h; ++k) {
                    l.xc[k] = p.at(i++);
                    l.xs[k] = p.at(i++);
                    l.yc[k] = p.at(i++);
                    l.ys[k] = p.at(i++);
                }
                return JordanCurve{l};
            },
            [&](const LatitudeFamily&) { return JordanCurve{Latitude{p.at(0)}}; },
            [&](const WavyFamily&) {
                return JordanCurve{WavyLatitude{p.at(0), p.at(1), static_cast<int>(p.at(2))}};
            },
        },
        family);
}

CoverageReport coverage_sample(const ConnectionSpec& conn, const CurveFamily& family, int n,
                               std::uint64_t seed, double tol)
{
    if (n < 1)
        fail(ErrorKind::InvalidInput, "sample count must be positive");

    CoverageReport report;
    report.param_names = family_parameter_names(family);
    std::mt19937_64 rng(seed);
    bool first = true;

    for (int i = 0; i < n; ++i) {
        CoverageRecord rec;
        rec.index = static_cast<std::size_t>(i);
        rec.params = draw_family_parameters(family, rng);
        const double nan = std::numeric_limits<double>::quiet_NaN();
        rec.alpha = rec.length = nan;
        rec.tau = rec.tau_reduced = Complex(nan, nan);
        try {
            const JordanCurve curve = curve_from_parameters(family, rec.params);
            rec.simple = is_simple(curve);
            if (rec.simple) {
                const ModuliPoint mp = moduli_point(conn, curve, tol);
                rec.alpha = mp.holonomy.alpha;
                rec.length = mp.holonomy.length;
                rec.tau = mp.tau;
                rec.tau_reduced = mp.tau_reduced;
            }
        } catch (const Error& e) {
            rec.error = e.what();
        }

        if (!rec.ok()) {
            ++report.skipped;
        } else {
            const Complex z = rec.tau_reduced;
            if (std::abs(z.real()) <= 0.5 && std::norm(z) >= 1.0 - 1e-12)
                ++report.in_domain;
            if (first) {
                report.re_min = report.re_max = z.real();
                report.im_min = report.im_max = z.imag();
                first = false;
            } else {
                report.re_min = std::min(report.re_min, z.real());
                report.re_max = std::max(report.re_max, z.real());
                report.im_min = std::min(report.im_min, z.imag());
                report.im_max = std::max(report.im_max, z.imag());
            }
        }
        report.records.push_back(std::move(rec));
    }
    return report;
}

}  // namespace ctl
