#pragma once

#include <array>
#include <variant>
#include <vector>

namespace ctl {

using Vec3 = std::array<double, 3>;

// Planar families
struct Circle {
    std::array<double, 2> center{0.0, 0.0};
    double radius = 1.0;
};

/// x(t) = Σ_k xc[k] cos(kt) + xs[k] sin(kt), likewise y. Index k is the
/// harmonic number, so xc[0] is the constant term and xs[0] is ignored.
struct TrigLoop {
    std::vector<double> xc, xs, yc, ys;
};

// Spherical families, in polar angle θ and azimuth φ = t.
struct Latitude {
    double theta0 = 0.0;
};

/// θ(t) = θ0 + eps * sin(mode * t), φ(t) = t.
struct WavyLatitude {
    double theta0 = 0.0;
    double eps = 0.0;
    int mode = 5;
};

using CurveShape = std::variant<Circle, TrigLoop, Latitude, WavyLatitude>;

enum class Surface { Plane, Sphere };

/// A closed parametric curve on [0, 2π): a shape evaluated at parameter
/// s = phase ± t, the minus sign when the traversal is reversed.
struct JordanCurve {
    CurveShape shape;
    bool reversed = false;
    double phase = 0.0;

    Surface surface() const;
    /// Ambient coordinate count of positions: 2 on the plane, 3 on the sphere.
    int ambient_dim() const;

    Vec3 position(double t) const;
    Vec3 velocity(double t) const;

    JordanCurve reverse() const;
    JordanCurve shifted(double t0) const;
};

/// Throws InvalidInput for malformed parameters and DegenerateCurve when a
/// spherical curve reaches a pole.
void validate(const JordanCurve& curve);

/// Polar angle range covered by a spherical curve.
std::array<double, 2> polar_range(const JordanCurve& curve);

struct CurveSamples {
    std::vector<double> t;
    std::vector<Vec3> points;
    std::vector<Vec3> velocities;
    int dim = 2;

    std::size_t count() const { return t.size(); }
};

CurveSamples sample_curve(const JordanCurve& curve, int n);

double curve_length(const JordanCurve& curve, double tol);
double planar_signed_area(const JordanCurve& curve, double tol);
/// Area on the north-pole side, counterclockwise (increasing azimuth) positive.
double spherical_signed_area(const JordanCurve& curve, double tol);

/// Approximate simplicity test on an n-gon inscribed in the curve: no two
/// non-adjacent chords may meet. Spherical curves are tested after
/// stereographic projection from the north pole.
bool is_simple(const JordanCurve& curve, int n = 256);

}  // namespace ctl
