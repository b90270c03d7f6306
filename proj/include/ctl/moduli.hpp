#pragma once

#include "ctl/holonomy.hpp"

#include <complex>
#include <optional>
#include <vector>

namespace ctl {

using Complex = std::complex<double>;

/// Element (p q; r s) of SL(2, Z) acting on the upper half-plane by
/// τ ↦ (pτ + q) / (rτ + s).
struct ModularMatrix {
    long long p = 1, q = 0, r = 0, s = 1;

    long long det() const { return p * s - q * r; }

    static ModularMatrix identity() { return {1, 0, 0, 1}; }
    static ModularMatrix T() { return {1, 1, 0, 1}; }
    static ModularMatrix T_inverse() { return {1, -1, 0, 1}; }
    static ModularMatrix S() { return {0, -1, 1, 0}; }

    /// Matrix product; throws ConvergenceFailure on 64-bit overflow.
    ModularMatrix operator*(const ModularMatrix& rhs) const;
    bool operator==(const ModularMatrix&) const = default;
};

Complex apply_modular(const ModularMatrix& m, Complex tau);

/// Lattice parameter of C/(2πZ + (−α + iL)Z), normalised to τ = (−α + iL) / 2π.
Complex tau_from(double alpha, double length);

struct Reduction {
    Complex tau;
    ModularMatrix matrix;  // apply_modular(matrix, input) == tau
};

/// Reduces τ into the closed fundamental domain |Re τ| <= 1/2, |τ| >= 1.
/// Representatives are unique: Re τ ∈ [−1/2, 1/2), and on the unit arc Re τ <= 0.
Reduction reduce_to_fundamental_domain(Complex tau);

/// Coefficients s_n of q·j(q) = Σ s_n qⁿ (s_0 = 1, s_1 = 744, s_2 = 196884, ...),
/// built from the Eisenstein series E4 and E6. At most 128 are tabulated;
/// beyond that |q|ⁿ s_n underflows for any reduced τ.
const std::vector<double>& j_series_coefficients();

Complex j_invariant(Complex tau, int terms = 64);

/// Euclidean distance between the reduced representatives,
/// taking the boundary identifications (Re = ±1/2 edges, the unit arc) into account.
double reduced_distance(Complex tau1, Complex tau2);

/// Decides equivalence by reduced distance and cross-checks the answer against
/// the j-invariant. A hard disagreement throws CrossCheckFailure.
bool same_conformal_class(Complex tau1, Complex tau2, double tol);

bool is_rectangular(Complex tau, double tol);

struct ModuliPoint {
    HolonomyResult holonomy;
    Complex tau;
    Complex tau_reduced;
    ModularMatrix reducing_matrix;
    std::optional<Complex> j;
};

/// Holonomy → τ → reduction → j for one connection/curve pair.
ModuliPoint moduli_point(const ConnectionSpec& conn, const JordanCurve& curve, double tol);

}  // namespace ctl
