#pragma once

// Random generators and independent oracles shared by the test suites. The
// oracles here deliberately avoid the library's integration and series code.

#include "ctl/connections.hpp"
#include "ctl/curves.hpp"
#include "ctl/moduli.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <random>
#include <vector>

namespace ctl::testkit {

inline double uniform(std::mt19937_64& rng, double lo, double hi)
{
    return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, int dim, int max_degree, double scale = 1.0)
{
    std::vector<Monomial> terms;
    int count = std::uniform_int_distribution<int>(1, 6)(rng);
    for (int i = 0; i < count; ++i) {
        Monomial m;
        int budget = max_degree;
        for (int d = 0; d < dim; ++d) {
            int e = std::uniform_int_distribution<int>(0, budget)(rng);
            m.exponents.push_back(e);
            budget -= e;
        }
        m.coef = uniform(rng, -scale, scale);
        terms.push_back(m);
    }
    return Polynomial(dim, std::move(terms));
}

inline ConnectionSpec random_planar_connection(std::mt19937_64& rng, int max_degree = 3)
{
    return {BaseSpace::EuclideanPlane,
            PolynomialPotential({random_polynomial(rng, 2, max_degree), random_polynomial(rng, 2, max_degree)})};
}

/// Perturbed ellipse; resampled until the polygon test calls it simple.
inline JordanCurve random_simple_trigloop(std::mt19937_64& rng, int harmonics = 3)
{
    for (;;) {
        TrigLoop l;
        const auto h = static_cast<std::size_t>(harmonics) + 1;
        l.xc.assign(h, 0.0);
        l.xs.assign(h, 0.0);
        l.yc.assign(h, 0.0);
        l.ys.assign(h, 0.0);
        l.xc[0] = uniform(rng, -1.0, 1.0);
        l.yc[0] = uniform(rng, -1.0, 1.0);
        double rx = uniform(rng, 0.4, 1.5);
        double ry = uniform(rng, 0.4, 1.5);
        l.xc[1] = rx;
        l.ys[1] = ry;
        for (std::size_t k = 2; k < h; ++k) {
            double amp = 0.25 * std::min(rx, ry) / static_cast<double>(k * k);
            l.xc[k] = uniform(rng, -amp, amp);
            l.xs[k] = uniform(rng, -amp, amp);
            l.yc[k] = uniform(rng, -amp, amp);
            l.ys[k] = uniform(rng, -amp, amp);
        }
        JordanCurve c{l};
        if (std::uniform_int_distribution<int>(0, 1)(rng))
            c = c.reverse();
        if (is_simple(c, 512))
            return c;
    }
}

/// Plain trapezoid sum with n points over one period.
inline double dense_trapezoid(const std::function<double(double)>& f, long n)
{
    const double h = 2.0 * std::numbers::pi / static_cast<double>(n);
    long double sum = 0.0L;
    for (long i = 0; i < n; ++i)
        sum += f(h * static_cast<double>(i));
    return static_cast<double>(sum * h);
}

/// Shoelace area of the n-gon inscribed in a planar curve.
inline double shoelace_area(const JordanCurve& c, long n)
{
    long double sum = 0.0L;
    Vec3 prev = c.position(0.0);
    for (long i = 1; i <= n; ++i) {
        Vec3 p = c.position(2.0 * std::numbers::pi * static_cast<double>(i % n) / static_cast<double>(n));
        sum += static_cast<long double>(prev[0]) * p[1] - static_cast<long double>(p[0]) * prev[1];
        prev = p;
    }
    return static_cast<double>(sum / 2.0L);
}

/// j(τ) = 1728 E4³ / (E4³ − E6²), with E4 and E6 summed numerically from
/// divisor sums at q = exp(2πiτ). Valid for Im τ large enough that the sums
/// converge in `terms` steps (Im τ >= ~0.5 with 400 terms).
inline std::complex<double> j_direct(std::complex<double> tau, int terms = 400)
{
    using C = std::complex<double>;
    const C q = std::exp(C(0.0, 2.0 * std::numbers::pi) * tau);
    C e4 = 1.0, e6 = 1.0, qn = 1.0;
    for (int n = 1; n <= terms; ++n) {
        qn *= q;
        double s3 = 0.0, s5 = 0.0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) {
                s3 += std::pow(d, 3);
                s5 += std::pow(d, 5);
            }
        e4 += 240.0 * s3 * qn;
        e6 -= 504.0 * s5 * qn;
    }
    const C e43 = e4 * e4 * e4;
    return 1728.0 * e43 / (e43 - e6 * e6);
}

/// Random SL(2,Z) word in S, T, T⁻¹ of the given length.
inline ModularMatrix random_word(std::mt19937_64& rng, int length)
{
    ModularMatrix m = ModularMatrix::identity();
    std::uniform_int_distribution<int> pick(0, 2);
    for (int i = 0; i < length; ++i) {
        switch (pick(rng)) {
        case 0: m = ModularMatrix::S() * m; break;
        case 1: m = ModularMatrix::T() * m; break;
        default: m = ModularMatrix::T_inverse() * m; break;
        }
    }
    return m;
}

/// Random point of the closed fundamental domain with Im <= im_max.
inline std::complex<double> random_reduced(std::mt19937_64& rng, double im_max = 4.0)
{
    for (;;) {
        std::complex<double> z(uniform(rng, -0.5, 0.5), uniform(rng, 0.8, im_max));
        if (std::norm(z) >= 1.0)
            return z;
    }
}

}  // namespace ctl::testkit
