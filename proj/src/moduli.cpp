#include "ctl/moduli.hpp"

#include "ctl/error.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace ctl {

namespace {

constexpr int max_reduction_steps = 10'000;
constexpr int tabulated_terms = 128;
// Width of the band around |τ| = 1 treated as the arc itself.
constexpr double arc_band = 1e-12;

long long checked_mul(long long a, long long b)
{
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        fail(ErrorKind::ConvergenceFailure, "modular matrix entries overflow");
    return out;
}

long long checked_add(long long a, long long b)
{
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        fail(ErrorKind::ConvergenceFailure, "modular matrix entries overflow");
    return out;
}

void require_upper_half_plane(Complex tau)
{
    if (!std::isfinite(tau.real()) || !std::isfinite(tau.imag()))
        fail(ErrorKind::InvalidInput, "tau must be finite");
    if (!(tau.imag() > 0.0))
        fail(ErrorKind::InvalidInput, "tau must lie in the upper half-plane");
}

}  // namespace

ModularMatrix ModularMatrix::operator*(const ModularMatrix& b) const
{
    return {checked_add(checked_mul(p, b.p), checked_mul(q, b.r)),
            checked_add(checked_mul(p, b.q), checked_mul(q, b.s)),
            checked_add(checked_mul(r, b.p), checked_mul(s, b.r)),
            checked_add(checked_mul(r, b.q), checked_mul(s, b.s))};
}

Complex apply_modular(const ModularMatrix& m, Complex tau)
{
    if (m.det() != 1)
        fail(ErrorKind::InvalidInput, "modular matrix must have determinant 1");
    require_upper_half_plane(tau);
    Complex num = static_cast<double>(m.p) * tau + static_cast<double>(m.q);
    Complex den = static_cast<double>(m.r) * tau + static_cast<double>(m.s);
    // Im((pτ+q)/(rτ+s)) = Im τ / |rτ+s|², computed directly to keep the sign exact
    double im = tau.imag() / std::norm(den);
    return {(num * std::conj(den)).real() / std::norm(den), im};
}

Complex tau_from(double alpha, double length)
{
    if (!std::isfinite(alpha) || !std::isfinite(length))
        fail(ErrorKind::InvalidInput, "holonomy and length must be finite");
    if (!(length > 0.0))
        fail(ErrorKind::InvalidInput, "curve length must be positive");
    return Complex(-alpha, length) / (2.0 * std::numbers::pi);
}

Reduction reduce_to_fundamental_domain(Complex tau)
{
    require_upper_half_plane(tau);
    if (std::abs(tau.real()) > 1e15)
        fail(ErrorKind::InvalidInput, "real part of tau is too large to reduce");

    Reduction out{tau, ModularMatrix::identity()};
    for (int step = 0;; ++step) {
        if (step >= max_reduction_steps)
            fail(ErrorKind::ConvergenceFailure, "fundamental-domain reduction did not terminate");
        double shift = std::floor(out.tau.real() + 0.5);
        if (shift != 0.0) {
            auto n = static_cast<long long>(shift);
            out.tau = Complex(out.tau.real() - shift, out.tau.imag());
            out.matrix = ModularMatrix{1, -n, 0, 1} * out.matrix;
        }
        if (std::norm(out.tau) < 1.0 - arc_band) {
            out.tau = -1.0 / out.tau;
            out.matrix = ModularMatrix::S() * out.matrix;
            continue;
        }
        break;
    }
    // On the arc, τ and −1/τ = −conj(τ) are identified; keep the left half.
    if (std::abs(std::norm(out.tau) - 1.0) <= arc_band && out.tau.real() > 0.0) {
        out.tau = -1.0 / out.tau;
        out.matrix = ModularMatrix::S() * out.matrix;
    }
    return out;
}

const std::vector<double>& j_series_coefficients()
{
    static const std::vector<double> table = [] {
        using i128 = __int128;
        const int n_max = tabulated_terms + 1;
        auto sigma = [](int n, int k) {
            i128 total = 0;
            for (int d = 1; d <= n; ++d)
                if (n % d == 0) {
                    i128 p = 1;
                    for (int e = 0; e < k; ++e)
                        p *= d;
                    total += p;
                }
            return total;
        };
        std::vector<i128> e4(n_max), e6(n_max);
        e4[0] = e6[0] = 1;
        for (int n = 1; n < n_max; ++n) {
            e4[static_cast<std::size_t>(n)] = 240 * sigma(n, 3);
            e6[static_cast<std::size_t>(n)] = -504 * sigma(n, 5);
        }
        auto mul = [n_max](const std::vector<i128>& a, const std::vector<i128>& b) {
            std::vector<i128> c(static_cast<std::size_t>(n_max), 0);
            for (int i = 0; i < n_max; ++i)
                for (int k = 0; i + k < n_max; ++k)
                    c[static_cast<std::size_t>(i + k)] += a[static_cast<std::size_t>(i)] * b[static_cast<std::size_t>(k)];
            return c;
        };
        const auto e4_cubed = mul(mul(e4, e4), e4);
        const auto e6_squared = mul(e6, e6);

        // Δ = (E4³ − E6²) / 1728 = q − 24q² + ...; divide out the leading q.
        std::vector<double> delta_over_q(static_cast<std::size_t>(tabulated_terms));
        for (int n = 0; n < tabulated_terms; ++n)
            delta_over_q[static_cast<std::size_t>(n)] = static_cast<double>(
                (e4_cubed[static_cast<std::size_t>(n + 1)] - e6_squared[static_cast<std::size_t>(n + 1)]) / 1728);

        // q·j = E4³ / (Δ/q), by series division (Δ/q has leading coefficient 1)
        std::vector<double> s(static_cast<std::size_t>(tabulated_terms));
        for (int n = 0; n < tabulated_terms; ++n) {
            long double v = static_cast<long double>(e4_cubed[static_cast<std::size_t>(n)]);
            for (int k = 1; k <= n; ++k)
                v -= static_cast<long double>(delta_over_q[static_cast<std::size_t>(k)]) *
                     s[static_cast<std::size_t>(n - k)];
            s[static_cast<std::size_t>(n)] = static_cast<double>(v);
        }
        return s;
    }();
    return table;
}

Complex j_invariant(Complex tau, int terms)
{
    if (terms < 16)
        fail(ErrorKind::InvalidInput, "j-invariant needs at least 16 series terms");
    const Complex reduced = reduce_to_fundamental_domain(tau).tau;
    const Complex q = std::exp(Complex(0.0, 2.0 * std::numbers::pi) * reduced);
    const auto& coeffs = j_series_coefficients();
    const int used = std::min<int>(terms, static_cast<int>(coeffs.size()));
    Complex acc = 0.0;
    for (int n = used - 1; n >= 0; --n)
        acc = acc * q + coeffs[static_cast<std::size_t>(n)];
    return acc / q;
}

double reduced_distance(Complex tau1, Complex tau2)
{
    const Complex a = reduce_to_fundamental_domain(tau1).tau;
    const Complex b = reduce_to_fundamental_domain(tau2).tau;
    const Complex sb = -1.0 / b;
    double best = std::abs(a - b);
    for (Complex candidate : {b + 1.0, b - 1.0, sb, sb + 1.0, sb - 1.0})
        best = std::min(best, std::abs(a - candidate));
    return best;
}

bool same_conformal_class(Complex tau1, Complex tau2, double tol)
{
    const double d = reduced_distance(tau1, tau2);
    const bool same = d <= tol;

    const Complex j1 = j_invariant(tau1);
    const Complex j2 = j_invariant(tau2);
    const double rel = std::abs(j1 - j2) / (1.0 + std::abs(j1));
    if (same && d <= 1e-9 && rel > 1e-5)
        fail(ErrorKind::CrossCheckFailure, "reduced points coincide but j-invariants differ");
    if (!same && d > 1e-3 && rel <= 1e-9)
        fail(ErrorKind::CrossCheckFailure, "reduced points differ but j-invariants coincide");
    return same;
}

bool is_rectangular(Complex tau, double tol)
{
    return std::abs(reduce_to_fundamental_domain(tau).tau.real()) <= tol;
}

ModuliPoint moduli_point(const ConnectionSpec& conn, const JordanCurve& curve, double tol)
{
    ModuliPoint out;
    out.holonomy = holonomy(conn, curve, tol, default_method(conn));
    out.tau = tau_from(out.holonomy.alpha, out.holonomy.length);
    auto red = reduce_to_fundamental_domain(out.tau);
    out.tau_reduced = red.tau;
    out.reducing_matrix = red.matrix;
    out.j = j_invariant(out.tau_reduced);
    return out;
}

}  // namespace ctl
