#pragma once

#include "ctl/connections.hpp"
#include "ctl/curves.hpp"

#include <optional>
#include <string_view>

namespace ctl {

enum class HolonomyMethod { Lift, Flux, Both };

std::string_view to_string(HolonomyMethod method);
HolonomyMethod parse_holonomy_method(std::string_view text);

/// Angle of holonomy of a closed curve, not reduced mod 2π.
struct HolonomyResult {
    double alpha = 0.0;
    double length = 0.0;
    std::optional<double> alpha_lift;
    std::optional<double> alpha_flux;
    double discrepancy = 0.0;
    HolonomyMethod method = HolonomyMethod::Both;
};

/// Integrates the horizontal-lift equation θ'(t) = Σ a_i(c(t)) c_i'(t) over one
/// period and returns θ(2π) − θ(0) = ∮ X·ds. Planar curves are placed in the
/// z = 0 plane and spherical curves are taken in their R³ embedding when the
/// potential lives on R³.
double holonomy_via_lift(const ConnectionSpec& conn, const JordanCurve& curve, double tol);

enum class FluxRoute {
    Boundary,  // Green's theorem with a primitive built from the curvature alone
    Disk,      // direct polar-grid quadrature over the enclosed disk (circles only)
};

/// Integral of the curvature over the region bounded by the curve, signed by
/// the curve's orientation. The planar routes use only the curvature density,
/// never the potential itself. Hopf connections give k·A/2 from the
/// spherical signed area.
double holonomy_via_flux(const ConnectionSpec& conn, const JordanCurve& curve, double tol,
                         FluxRoute route = FluxRoute::Boundary);

/// Runs the requested method(s) plus the curve length. In mode Both the two
/// values must agree within 100·tol, otherwise CrossCheckFailure is thrown.
HolonomyResult holonomy(const ConnectionSpec& conn, const JordanCurve& curve, double tol,
                        HolonomyMethod mode);

/// Mode used by the full pipeline for a given connection/curve pair.
HolonomyMethod default_method(const ConnectionSpec& conn);

}  // namespace ctl
