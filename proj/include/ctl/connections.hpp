#pragma once

#include <span>
#include <variant>
#include <vector>

namespace ctl {

enum class BaseSpace { EuclideanPlane, EuclideanSpace3, UnitSphere };

int dimension(BaseSpace space);

/// c * x^e0 * y^e1 (* z^e2)
struct Monomial {
    std::vector<int> exponents;
    double coef = 0.0;
};

/// Sum of monomials in `dim` variables.
class Polynomial {
public:
    Polynomial() = default;
    Polynomial(int dim, std::vector<Monomial> terms);

    static Polynomial constant(int dim, double value);

    int dim() const { return dim_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    int degree() const;

    double operator()(std::span<const double> point) const;

    /// Exact partial derivative with respect to variable `var`.
    Polynomial derivative(int var) const;
    /// Antiderivative in `var` vanishing on the hyperplane x_var = 0.
    Polynomial antiderivative(int var) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial scaled(double factor) const;

private:
    int dim_ = 2;
    std::vector<Monomial> terms_;
};

/// Vector potential (a_1, ..., a_n) of the connection dθ + Σ a_i dx_i on the
/// trivial circle bundle over R^n, n ∈ {2, 3}.
class PolynomialPotential {
public:
    explicit PolynomialPotential(std::vector<Polynomial> components);

    int dim() const { return static_cast<int>(components_.size()); }
    const std::vector<Polynomial>& components() const { return components_; }
    const Polynomial& component(int i) const { return components_[static_cast<std::size_t>(i)]; }
    int degree() const;

    /// Planar curvature coefficient ∂x B − ∂y A as a polynomial.
    Polynomial curl() const;

    PolynomialPotential operator+(const PolynomialPotential& other) const;
    PolynomialPotential reversed_sign() const;

private:
    std::vector<Polynomial> components_;
};

/// Natural connection of the Hopf fibration S³ → S², raised to tensor power k.
/// Only its curvature density k/2 and holonomy law α = kA/2 are modelled.
struct HopfConnection {
    int tensor_power = 1;
};

using ConnectionForm = std::variant<PolynomialPotential, HopfConnection>;

class ConnectionSpec {
public:
    ConnectionSpec(BaseSpace space, ConnectionForm form);

    BaseSpace space() const { return space_; }
    const ConnectionForm& form() const { return form_; }

    bool is_polynomial() const { return std::holds_alternative<PolynomialPotential>(form_); }
    bool is_hopf() const { return std::holds_alternative<HopfConnection>(form_); }
    const PolynomialPotential& potential() const;
    const HopfConnection& hopf() const;

private:
    BaseSpace space_;
    ConnectionForm form_;
};

// The connections worked out by hand for the plane.
ConnectionSpec constant_connection(double a, double b);
ConnectionSpec example2_connection();  // -y dx + x dy
ConnectionSpec example3_connection();  // -y² dx + x² dy
ConnectionSpec hopf_connection(int k);

std::vector<double> evaluate_potential(const ConnectionSpec& conn, std::span<const double> point);

/// Curvature 2-form coefficient against the metric area form.
double curvature_density(const ConnectionSpec& conn, std::span<const double> point);

HopfConnection tensor_power(const HopfConnection& conn, int m);

}  // namespace ctl
