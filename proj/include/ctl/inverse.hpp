#pragma once

#include "ctl/moduli.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace ctl {

struct SolveTarget {
    Complex tau;
    double tolerance = 1e-6;
};

/// Circle whose holonomy under −y² dx + x² dy and whose length give
/// τ = x + iy exactly: radius y, center a = b = −x / (2y²).
JordanCurve solve_plane_example3(const SolveTarget& target);

struct SphereSolveOptions {
    int mode = 5;            // wave mode of the WavyLatitude family
    double quad_tol = 1e-12; // quadrature tolerance used inside the bisections
};

/// Latitude / wavy-latitude curve whose Hopf^k holonomy and length realise the
/// target: k·A/2 = −2π Re τ and L = 2π Im τ. Targets with Re τ > 0 are met by
/// traversing the curve for −Re τ in the opposite direction.
///
/// Throws Infeasible when (A, L) violates the spherical isoperimetric bound or
/// lies beyond the reach of the family, NotExactlyReachable for Re τ = 0.
JordanCurve solve_sphere_hopf(const SolveTarget& target, int k, const SphereSolveOptions& options = {});

/// Plane: L² >= 4π|A|. Sphere: |A| <= 4π and L² >= |A|(4π − |A|). `slack`
/// absorbs rounding in the equality cases.
bool isoperimetric_check(double area, double length, BaseSpace space, double slack = 1e-9);

// Curve families for coverage sampling.
struct CircleFamily {
    double radius_min = 0.0, radius_max = 3.0;  // radius drawn from (min, max]
    double center_min = -2.0, center_max = 2.0;
};

/// Perturbed ellipse: x = r cos t + Σ small harmonics, likewise y.
struct TrigLoopFamily {
    int harmonics = 3;
    double radius_min = 0.5, radius_max = 2.0;
    double perturbation = 0.2;  // amplitude bound of the higher harmonics, relative to the radius
};

struct LatitudeFamily {
    double theta_min = 0.1, theta_max = 3.04;
};

struct WavyFamily {
    double theta_min = 0.5, theta_max = 2.6;
    double eps_max = 0.3;
    int mode = 5;
};

using CurveFamily = std::variant<CircleFamily, TrigLoopFamily, LatitudeFamily, WavyFamily>;

std::vector<std::string> family_parameter_names(const CurveFamily& family);

struct CoverageRecord {
    std::size_t index = 0;
    std::vector<double> params;
    double alpha = 0.0;
    double length = 0.0;
    Complex tau;
    Complex tau_reduced;
    bool simple = false;
    std::string error;  // non-empty when the sample failed

    bool ok() const { return simple && error.empty(); }
};

struct CoverageReport {
    std::vector<std::string> param_names;
    std::vector<CoverageRecord> records;
    std::size_t skipped = 0;  // non-simple or failed samples
    std::size_t in_domain = 0;
    double re_min = 0.0, re_max = 0.0, im_min = 0.0, im_max = 0.0;  // over reduced points
};

/// Deterministic sample of curve parameters for a family (exposed for tests).
std::vector<double> draw_family_parameters(const CurveFamily& family, std::mt19937_64& rng);
JordanCurve curve_from_parameters(const CurveFamily& family, const std::vector<double>& params);

/// Draws n curves from the family (deterministic in `seed`), runs the moduli
/// pipeline on each and records the reduced points. Per-sample failures are
/// recorded, never thrown.
CoverageReport coverage_sample(const ConnectionSpec& conn, const CurveFamily& family, int n,
                               std::uint64_t seed, double tol = 1e-10);

}  // namespace ctl
