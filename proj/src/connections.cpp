#include "ctl/connections.hpp"

#include "ctl/error.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace ctl {

int dimension(BaseSpace space)
{
    switch (space) {
    case BaseSpace::EuclideanPlane: return 2;
    case BaseSpace::EuclideanSpace3: return 3;
    case BaseSpace::UnitSphere: return 3;  // embedded in R^3
    }
    return 0;
}

namespace {

std::vector<Monomial> canonical(int dim, std::vector<Monomial> terms)
{
    std::map<std::vector<int>, double> merged;
    for (auto& t : terms) {
        if (static_cast<int>(t.exponents.size()) != dim)
            fail(ErrorKind::InvalidInput, "monomial has " + std::to_string(t.exponents.size()) +
                                              " exponents, expected " + std::to_string(dim));
        for (int e : t.exponents)
            if (e < 0)
                fail(ErrorKind::InvalidInput, "negative exponent in monomial");
        if (!std::isfinite(t.coef))
            fail(ErrorKind::InvalidInput, "non-finite polynomial coefficient");
        merged[t.exponents] += t.coef;
    }
    std::vector<Monomial> out;
    for (auto& [exps, coef] : merged)
        if (coef != 0.0)
            out.push_back({exps, coef});
    return out;
}

}  // namespace

Polynomial::Polynomial(int dim, std::vector<Monomial> terms)
    : dim_(dim), terms_(canonical(dim, std::move(terms)))
{
    if (dim < 1 || dim > 3)
        fail(ErrorKind::InvalidInput, "polynomial dimension must be 1, 2 or 3");
}

Polynomial Polynomial::constant(int dim, double value)
{
    return Polynomial(dim, {Monomial{std::vector<int>(static_cast<std::size_t>(dim), 0), value}});
}

int Polynomial::degree() const
{
    int deg = 0;
    for (const auto& t : terms_) {
        int d = 0;
        for (int e : t.exponents)
            d += e;
        deg = std::max(deg, d);
    }
    return deg;
}

double Polynomial::operator()(std::span<const double> point) const
{
    if (static_cast<int>(point.size()) != dim_)
        fail(ErrorKind::InvalidInput, "point dimension does not match polynomial");
    double sum = 0.0;
    for (const auto& t : terms_) {
        double v = t.coef;
        for (int i = 0; i < dim_; ++i)
            for (int e = 0; e < t.exponents[static_cast<std::size_t>(i)]; ++e)
                v *= point[static_cast<std::size_t>(i)];
        sum += v;
    }
    return sum;
}

Polynomial Polynomial::derivative(int var) const
{
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        int e = t.exponents[static_cast<std::size_t>(var)];
        if (e == 0)
            continue;
        Monomial m = t;
        m.coef *= e;
        m.exponents[static_cast<std::size_t>(var)] = e - 1;
        out.push_back(std::move(m));
    }
    return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::antiderivative(int var) const
{
    std::vector<Monomial> out;
    for (const auto& t : terms_) {
        Monomial m = t;
        int e = ++m.exponents[static_cast<std::size_t>(var)];
        m.coef /= e;
        out.push_back(std::move(m));
    }
    return Polynomial(dim_, std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const
{
    if (other.dim_ != dim_)
        fail(ErrorKind::InvalidInput, "adding polynomials of different dimension");
    auto terms = terms_;
    terms.insert(terms.end(), other.terms_.begin(), other.terms_.end());
    return Polynomial(dim_, std::move(terms));
}

Polynomial Polynomial::operator-(const Polynomial& other) const
{
    return *this + other.scaled(-1.0);
}

Polynomial Polynomial::scaled(double factor) const
{
    auto terms = terms_;
    for (auto& t : terms)
        t.coef *= factor;
    return Polynomial(dim_, std::move(terms));
}

PolynomialPotential::PolynomialPotential(std::vector<Polynomial> components)
    : components_(std::move(components))
{
    int n = dim();
    if (n != 2 && n != 3)
        fail(ErrorKind::InvalidInput, "vector potential needs 2 or 3 components");
    for (const auto& c : components_)
        if (c.dim() != n)
            fail(ErrorKind::InvalidInput, "potential component dimension mismatch");
}

int PolynomialPotential::degree() const
{
    int deg = 0;
    for (const auto& c : components_)
        deg = std::max(deg, c.degree());
    return deg;
}

Polynomial PolynomialPotential::curl() const
{
    if (dim() != 2)
        fail(ErrorKind::Unsupported, "curvature density is only defined for planar potentials");
    return components_[1].derivative(0) - components_[0].derivative(1);
}

PolynomialPotential PolynomialPotential::operator+(const PolynomialPotential& other) const
{
    if (other.dim() != dim())
        fail(ErrorKind::InvalidInput, "adding potentials of different dimension");
    std::vector<Polynomial> sum;
    for (int i = 0; i < dim(); ++i)
        sum.push_back(component(i) + other.component(i));
    return PolynomialPotential(std::move(sum));
}

PolynomialPotential PolynomialPotential::reversed_sign() const
{
    std::vector<Polynomial> neg;
    for (const auto& c : components_)
        neg.push_back(c.scaled(-1.0));
    return PolynomialPotential(std::move(neg));
}

ConnectionSpec::ConnectionSpec(BaseSpace space, ConnectionForm form)
    : space_(space), form_(std::move(form))
{
    if (const auto* p = std::get_if<PolynomialPotential>(&form_)) {
        if (space_ == BaseSpace::UnitSphere)
            fail(ErrorKind::InvalidInput, "polynomial potentials live on Euclidean spaces");
        if (p->dim() != dimension(space_))
            fail(ErrorKind::InvalidInput, "potential dimension does not match base space");
    } else {
        if (space_ != BaseSpace::UnitSphere)
            fail(ErrorKind::InvalidInput, "the Hopf connection lives over the unit sphere");
        if (std::get<HopfConnection>(form_).tensor_power < 1)
            fail(ErrorKind::InvalidInput, "Hopf tensor power must be at least 1");
    }
}

const PolynomialPotential& ConnectionSpec::potential() const
{
    if (!is_polynomial())
        fail(ErrorKind::Unsupported, "connection has no coordinate potential");
    return std::get<PolynomialPotential>(form_);
}

const HopfConnection& ConnectionSpec::hopf() const
{
    if (!is_hopf())
        fail(ErrorKind::Unsupported, "connection is not a Hopf connection");
    return std::get<HopfConnection>(form_);
}

ConnectionSpec constant_connection(double a, double b)
{
    return {BaseSpace::EuclideanPlane,
            PolynomialPotential({Polynomial::constant(2, a), Polynomial::constant(2, b)})};
}

ConnectionSpec example2_connection()
{
    return {BaseSpace::EuclideanPlane,
            PolynomialPotential({Polynomial(2, {{{0, 1}, -1.0}}), Polynomial(2, {{{1, 0}, 1.0}})})};
}

ConnectionSpec example3_connection()
{
    return {BaseSpace::EuclideanPlane,
            PolynomialPotential({Polynomial(2, {{{0, 2}, -1.0}}), Polynomial(2, {{{2, 0}, 1.0}})})};
}

ConnectionSpec hopf_connection(int k)
{
    return {BaseSpace::UnitSphere, HopfConnection{k}};
}

std::vector<double> evaluate_potential(const ConnectionSpec& conn, std::span<const double> point)
{
    if (conn.is_hopf())
        fail(ErrorKind::Unsupported, "the Hopf connection exposes no global potential");
    const auto& pot = conn.potential();
    if (static_cast<int>(point.size()) != pot.dim())
        fail(ErrorKind::InvalidInput, "point dimension " + std::to_string(point.size()) +
                                          " does not match potential dimension " +
                                          std::to_string(pot.dim()));
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(pot.dim()));
    for (const auto& c : pot.components())
        out.push_back(c(point));
    return out;
}

double curvature_density(const ConnectionSpec& conn, std::span<const double> point)
{
    if (conn.is_hopf()) {
        if (point.size() != 3)
            fail(ErrorKind::InvalidInput, "sphere points have three coordinates");
        double r2 = point[0] * point[0] + point[1] * point[1] + point[2] * point[2];
        if (std::abs(r2 - 1.0) > 1e-9)
            fail(ErrorKind::InvalidInput, "point is not on the unit sphere");
        return conn.hopf().tensor_power / 2.0;
    }
    if (conn.space() != BaseSpace::EuclideanPlane)
        fail(ErrorKind::Unsupported, "curvature density requires a surface base");
    if (point.size() != 2)
        fail(ErrorKind::InvalidInput, "planar points have two coordinates");
    return conn.potential().curl()(point);
}

HopfConnection tensor_power(const HopfConnection& conn, int m)
{
    if (m < 1)
        fail(ErrorKind::InvalidInput, "tensor power exponent must be positive");
    return HopfConnection{conn.tensor_power * m};
}

}  // namespace ctl
