#include "ctl/curves.hpp"

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"
#include "ctl/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ctl {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

double trig_sum(const std::vector<double>& c, const std::vector<double>& s, double t)
{
    double v = 0.0;
    for (std::size_t k = 0; k < c.size(); ++k)
        v += c[k] * std::cos(static_cast<double>(k) * t);
    for (std::size_t k = 1; k < s.size(); ++k)
        v += s[k] * std::sin(static_cast<double>(k) * t);
    return v;
}

double trig_sum_derivative(const std::vector<double>& c, const std::vector<double>& s, double t)
{
    double v = 0.0;
    for (std::size_t k = 1; k < c.size(); ++k)
        v -= static_cast<double>(k) * c[k] * std::sin(static_cast<double>(k) * t);
    for (std::size_t k = 1; k < s.size(); ++k)
        v += static_cast<double>(k) * s[k] * std::cos(static_cast<double>(k) * t);
    return v;
}

struct PolarAngle {
    double theta;
    double dtheta;
};

PolarAngle polar_angle(const CurveShape& shape, double s)
{
    if (const auto* lat = std::get_if<Latitude>(&shape))
        return {lat->theta0, 0.0};
    const auto& w = std::get<WavyLatitude>(shape);
    return {w.theta0 + w.eps * std::sin(w.mode * s), w.eps * w.mode * std::cos(w.mode * s)};
}

Vec3 shape_position(const CurveShape& shape, double s)
{
    return std::visit(
        overloaded{
            [&](const Circle& c) -> Vec3 {
                return {c.center[0] + c.radius * std::cos(s), c.center[1] + c.radius * std::sin(s), 0.0};
            },
            [&](const TrigLoop& l) -> Vec3 {
                return {trig_sum(l.xc, l.xs, s), trig_sum(l.yc, l.ys, s), 0.0};
            },
            [&](const auto&) -> Vec3 {
                auto [theta, dtheta] = polar_angle(shape, s);
                (void)dtheta;
                return {std::sin(theta) * std::cos(s), std::sin(theta) * std::sin(s), std::cos(theta)};
            },
        },
        shape);
}

Vec3 shape_velocity(const CurveShape& shape, double s)
{
    return std::visit(
        overloaded{
            [&](const Circle& c) -> Vec3 {
                return {-c.radius * std::sin(s), c.radius * std::cos(s), 0.0};
            },
            [&](const TrigLoop& l) -> Vec3 {
                return {trig_sum_derivative(l.xc, l.xs, s), trig_sum_derivative(l.yc, l.ys, s), 0.0};
            },
            [&](const auto&) -> Vec3 {
                auto [theta, dtheta] = polar_angle(shape, s);
                double st = std::sin(theta), ct = std::cos(theta);
                double sp = std::sin(s), cp = std::cos(s);
                return {dtheta * ct * cp - st * sp, dtheta * ct * sp + st * cp, -dtheta * st};
            },
        },
        shape);
}

double norm(const Vec3& v)
{
    return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

}  // namespace

Surface JordanCurve::surface() const
{
    return std::holds_alternative<Circle>(shape) || std::holds_alternative<TrigLoop>(shape)
               ? Surface::Plane
               : Surface::Sphere;
}

int JordanCurve::ambient_dim() const
{
    return surface() == Surface::Plane ? 2 : 3;
}

Vec3 JordanCurve::position(double t) const
{
    return shape_position(shape, reversed ? phase - t : phase + t);
}

Vec3 JordanCurve::velocity(double t) const
{
    Vec3 v = shape_velocity(shape, reversed ? phase - t : phase + t);
    if (reversed)
        for (auto& c : v)
            c = -c;
    return v;
}

JordanCurve JordanCurve::reverse() const
{
    JordanCurve out = *this;
    out.reversed = !reversed;
    return out;
}

JordanCurve JordanCurve::shifted(double t0) const
{
    JordanCurve out = *this;
    out.phase = reversed ? phase - t0 : phase + t0;
    return out;
}

void validate(const JordanCurve& curve)
{
    if (!std::isfinite(curve.phase))
        fail(ErrorKind::InvalidInput, "curve phase must be finite");
    std::visit(overloaded{
                   [](const Circle& c) {
                       if (!(c.radius > 0.0) || !std::isfinite(c.radius))
                           fail(ErrorKind::InvalidInput, "circle radius must be positive");
                       if (!std::isfinite(c.center[0]) || !std::isfinite(c.center[1]))
                           fail(ErrorKind::InvalidInput, "circle center must be finite");
                   },
                   [](const TrigLoop& l) {
                       for (const auto* v : {&l.xc, &l.xs, &l.yc, &l.ys})
                           for (double c : *v)
                               if (!std::isfinite(c))
                                   fail(ErrorKind::InvalidInput, "trigonometric coefficients must be finite");
                   },
                   [](const Latitude& l) {
                       if (!(l.theta0 > 0.0 && l.theta0 < std::numbers::pi))
                           fail(ErrorKind::InvalidInput, "latitude polar angle must lie in (0, pi)");
                   },
                   [](const WavyLatitude& w) {
                       if (!(w.theta0 > 0.0 && w.theta0 < std::numbers::pi))
                           fail(ErrorKind::InvalidInput, "latitude polar angle must lie in (0, pi)");
                       if (!(w.eps >= 0.0) || !std::isfinite(w.eps))
                           fail(ErrorKind::InvalidInput, "wave amplitude must be non-negative");
                       if (w.mode < 1)
                           fail(ErrorKind::InvalidInput, "wave mode must be at least 1");
                       if (!(w.theta0 - w.eps > 0.0 && w.theta0 + w.eps < std::numbers::pi))
                           fail(ErrorKind::DegenerateCurve, "wavy latitude reaches a pole");
                   },
               },
               curve.shape);
}

std::array<double, 2> polar_range(const JordanCurve& curve)
{
    if (const auto* lat = std::get_if<Latitude>(&curve.shape))
        return {lat->theta0, lat->theta0};
    if (const auto* w = std::get_if<WavyLatitude>(&curve.shape))
        return {w->theta0 - w->eps, w->theta0 + w->eps};
    fail(ErrorKind::InvalidInput, "polar range requested for a planar curve");
}

CurveSamples sample_curve(const JordanCurve& curve, int n)
{
    if (n < 16)
        fail(ErrorKind::InvalidInput, "at least 16 samples are required, got " + std::to_string(n));
    validate(curve);

    CurveSamples out;
    out.dim = curve.ambient_dim();
    out.t.reserve(static_cast<std::size_t>(n));
    out.points.reserve(static_cast<std::size_t>(n));
    out.velocities.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = two_pi * i / n;
        Vec3 v = curve.velocity(t);
        if (!(norm(v) > 0.0))
            fail(ErrorKind::DegenerateCurve, "curve is not regular at t = " + format_real(t));
        out.t.push_back(t);
        out.points.push_back(curve.position(t));
        out.velocities.push_back(v);
    }
    return out;
}

double curve_length(const JordanCurve& curve, double tol)
{
    validate(curve);
    return integrate_periodic([&](double t) { return norm(curve.velocity(t)); }, tol).value;
}

double planar_signed_area(const JordanCurve& curve, double tol)
{
    validate(curve);
    if (curve.surface() != Surface::Plane)
        fail(ErrorKind::InvalidInput, "planar area requested for a spherical curve");
    return integrate_periodic(
               [&](double t) {
                   Vec3 p = curve.position(t);
                   Vec3 v = curve.velocity(t);
                   return 0.5 * (p[0] * v[1] - p[1] * v[0]);
               },
               tol)
        .value;
}

double spherical_signed_area(const JordanCurve& curve, double tol)
{
    validate(curve);
    if (curve.surface() != Surface::Sphere)
        fail(ErrorKind::InvalidInput, "spherical area requested for a planar curve");
    // azimuth advances at unit rate along the shape parameter
    const double dphi = curve.reversed ? -1.0 : 1.0;
    return integrate_periodic(
               [&](double t) {
                   double s = curve.reversed ? curve.phase - t : curve.phase + t;
                   return (1.0 - std::cos(polar_angle(curve.shape, s).theta)) * dphi;
               },
               tol)
        .value;
}

namespace {

using P2 = std::array<double, 2>;

double cross(const P2& o, const P2& a, const P2& b)
{
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

int sign_with_tol(double v, double eps)
{
    return v > eps ? 1 : (v < -eps ? -1 : 0);
}

bool on_box(const P2& a, const P2& b, const P2& p, double eps)
{
    return p[0] <= std::max(a[0], b[0]) + eps && p[0] >= std::min(a[0], b[0]) - eps &&
           p[1] <= std::max(a[1], b[1]) + eps && p[1] >= std::min(a[1], b[1]) - eps;
}

bool segments_meet(const P2& p1, const P2& p2, const P2& q1, const P2& q2, double eps,
                   double area_eps)
{
    int d1 = sign_with_tol(cross(q1, q2, p1), area_eps);
    int d2 = sign_with_tol(cross(q1, q2, p2), area_eps);
    int d3 = sign_with_tol(cross(p1, p2, q1), area_eps);
    int d4 = sign_with_tol(cross(p1, p2, q2), area_eps);
    if (d1 * d2 < 0 && d3 * d4 < 0)
        return true;
    if (d1 == 0 && on_box(q1, q2, p1, eps)) return true;
    if (d2 == 0 && on_box(q1, q2, p2, eps)) return true;
    if (d3 == 0 && on_box(p1, p2, q1, eps)) return true;
    if (d4 == 0 && on_box(p1, p2, q2, eps)) return true;
    return false;
}

}  // namespace

bool is_simple(const JordanCurve& curve, int n)
{
    n = std::max(n, 64);
    validate(curve);

    std::vector<P2> pts;
    pts.reserve(static_cast<std::size_t>(n));
    double scale = 0.0;
    for (int i = 0; i < n; ++i) {
        Vec3 p = curve.position(two_pi * i / n);
        P2 q = curve.surface() == Surface::Plane ? P2{p[0], p[1]}
                                                  : P2{p[0] / (1.0 - p[2]), p[1] / (1.0 - p[2])};
        scale = std::max({scale, std::abs(q[0]), std::abs(q[1])});
        pts.push_back(q);
    }
    const double eps = 1e-12 * std::max(scale, 1.0);
    const double area_eps = eps * std::max(scale, 1.0);

    auto at = [&](int i) -> const P2& { return pts[static_cast<std::size_t>(i % n)]; };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1)
                continue;  // closing chord is adjacent to the first
            if (segments_meet(at(i), at(i + 1), at(j), at(j + 1), eps, area_eps))
                return false;
        }
    }
    return true;
}

}  // namespace ctl
