#include "ctl/holonomy.hpp"

#include "ctl/complex_format.hpp"
#include "ctl/error.hpp"
#include "ctl/ode.hpp"
#include "ctl/quadrature.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

namespace ctl {

std::string_view to_string(HolonomyMethod method)
{
    switch (method) {
    case HolonomyMethod::Lift: return "lift";
    case HolonomyMethod::Flux: return "flux";
    case HolonomyMethod::Both: return "both";
    }
    return "both";
}

HolonomyMethod parse_holonomy_method(std::string_view text)
{
    if (text == "lift") return HolonomyMethod::Lift;
    if (text == "flux") return HolonomyMethod::Flux;
    if (text == "both") return HolonomyMethod::Both;
    fail(ErrorKind::InvalidInput, "unknown holonomy mode '" + std::string(text) + "'");
}

double holonomy_via_lift(const ConnectionSpec& conn, const JordanCurve& curve, double tol)
{
    if (conn.is_hopf())
        fail(ErrorKind::Unsupported,
             "the Hopf connection has no coordinate potential; use the flux method");
    if (!(tol > 0.0))
        fail(ErrorKind::InvalidInput, "tolerance must be positive");
    validate(curve);

    const auto& pot = conn.potential();
    const int n = pot.dim();
    if (n == 2 && curve.surface() != Surface::Plane)
        fail(ErrorKind::InvalidInput, "planar potential paired with a spherical curve");

    auto rhs = [&](double t, double) {
        Vec3 p = curve.position(t);
        Vec3 v = curve.velocity(t);
        std::span<const double> point(p.data(), static_cast<std::size_t>(n));
        double sum = 0.0;
        for (int i = 0; i < n; ++i)
            sum += pot.component(i)(point) * v[static_cast<std::size_t>(i)];
        return sum;
    };
    OdeOptions options;
    options.abs_tol = tol;
    return integrate_dopri45(rhs, 0.0, 2.0 * std::numbers::pi, 0.0, options).value;
}

namespace {

double disk_flux(const Polynomial& density, const Circle& c)
{
    const int deg = density.degree();
    const GaussRule radial = gauss_legendre(deg / 2 + 2);
    const int angular = 2 * deg + 4;
    double total = 0.0;
    for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
        double r = 0.5 * c.radius * (radial.nodes[i] + 1.0);
        double ring = 0.0;
        for (int j = 0; j < angular; ++j) {
            double phi = 2.0 * std::numbers::pi * j / angular;
            std::array<double, 2> p{c.center[0] + r * std::cos(phi), c.center[1] + r * std::sin(phi)};
            ring += density(p);
        }
        ring *= 2.0 * std::numbers::pi / angular;
        total += radial.weights[i] * ring * r;
    }
    return total * 0.5 * c.radius;
}

}  // namespace

double holonomy_via_flux(const ConnectionSpec& conn, const JordanCurve& curve, double tol,
                         FluxRoute route)
{
    if (!(tol > 0.0))
        fail(ErrorKind::InvalidInput, "tolerance must be positive");
    validate(curve);

    if (conn.is_hopf()) {
        if (curve.surface() != Surface::Sphere)
            fail(ErrorKind::InvalidInput, "the Hopf connection needs a curve on the sphere");
        if (route != FluxRoute::Boundary)
            fail(ErrorKind::Unsupported, "disk quadrature is only available for planar circles");
        if (!is_simple(curve))
            fail(ErrorKind::NotSimpleCurve, "enclosed region is undefined for a self-intersecting curve");
        const int k = conn.hopf().tensor_power;
        return k * spherical_signed_area(curve, tol / k) / 2.0;
    }

    if (conn.space() != BaseSpace::EuclideanPlane)
        fail(ErrorKind::Unsupported,
             "no spanning surface is chosen for curves in R^3; use the lift method");
    if (curve.surface() != Surface::Plane)
        fail(ErrorKind::InvalidInput, "planar potential paired with a spherical curve");
    if (!is_simple(curve))
        fail(ErrorKind::NotSimpleCurve, "enclosed region is undefined for a self-intersecting curve");

    const Polynomial density = conn.potential().curl();

    if (route == FluxRoute::Disk) {
        const auto* circle = std::get_if<Circle>(&curve.shape);
        if (!circle)
            fail(ErrorKind::Unsupported, "disk quadrature is only available for circles");
        double flux = disk_flux(density, *circle);
        return curve.reversed ? -flux : flux;
    }

    // ∂F/∂x = density, so ∮ F dy is the enclosed flux by Green's theorem.
    const Polynomial primitive = density.antiderivative(0);
    return integrate_periodic(
               [&](double t) {
                   Vec3 p = curve.position(t);
                   Vec3 v = curve.velocity(t);
                   return primitive(std::span<const double>(p.data(), 2)) * v[1];
               },
               tol)
        .value;
}

HolonomyMethod default_method(const ConnectionSpec& conn)
{
    if (conn.is_hopf())
        return HolonomyMethod::Flux;
    if (conn.space() == BaseSpace::EuclideanSpace3)
        return HolonomyMethod::Lift;
    return HolonomyMethod::Both;
}

HolonomyResult holonomy(const ConnectionSpec& conn, const JordanCurve& curve, double tol,
                        HolonomyMethod mode)
{
    HolonomyResult out;
    out.method = mode;
    if (mode == HolonomyMethod::Lift || mode == HolonomyMethod::Both)
        out.alpha_lift = holonomy_via_lift(conn, curve, tol);
    if (mode == HolonomyMethod::Flux || mode == HolonomyMethod::Both)
        out.alpha_flux = holonomy_via_flux(conn, curve, tol);

    if (mode == HolonomyMethod::Both) {
        out.discrepancy = std::abs(*out.alpha_lift - *out.alpha_flux);
        if (!(out.discrepancy <= 100.0 * tol))
            fail(ErrorKind::CrossCheckFailure,
                 "lift and flux holonomy disagree by " + format_real(out.discrepancy) +
                     " (allowed " + format_real(100.0 * tol) + ")");
        out.alpha = *out.alpha_flux;
    } else {
        out.alpha = out.alpha_lift ? *out.alpha_lift : *out.alpha_flux;
    }

    out.length = curve_length(curve, tol);
    if (!(out.length > 0.0))
        fail(ErrorKind::DegenerateCurve, "curve has zero length");
    return out;
}

}  // namespace ctl
