#include "ctl/error.hpp"
#include "ctl/holonomy.hpp"

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace ctl;

namespace {

constexpr double pi = std::numbers::pi;

ErrorKind kind_of(auto&& fn)
{
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an ctl::Error";
    return ErrorKind::InvalidInput;
}

TEST(HolonomyLift, Examples)
{
    JordanCurve unit{Circle{}};
    EXPECT_NEAR(holonomy_via_lift(constant_connection(3, 0), unit, 1e-12), 0.0, 1e-10);
    EXPECT_NEAR(holonomy_via_lift(example2_connection(), unit, 1e-12), 2 * pi, 1e-10);
    EXPECT_NEAR(holonomy_via_lift(example3_connection(), JordanCurve{Circle{{1, 1}, 1}}, 1e-12), 4 * pi, 1e-10);
}

TEST(HolonomyLift, HopfIsUnsupported)
{
    EXPECT_EQ(kind_of([] { holonomy_via_lift(hopf_connection(1), JordanCurve{Latitude{1.0}}, 1e-10); }),
              ErrorKind::Unsupported);
}

TEST(HolonomyLift, PlanarPotentialRejectsSphericalCurve)
{
    EXPECT_EQ(kind_of([] { holonomy_via_lift(example2_connection(), JordanCurve{Latitude{1.0}}, 1e-10); }),
              ErrorKind::InvalidInput);
}

TEST(HolonomyLift, SpacePotentialOnEmbeddedCurves)
{
    // X = (−y, x, 0) on R³ restricts to −y dx + x dy in the z = 0 plane.
    Polynomial mx(3, {{{0, 1, 0}, -1.0}}), px(3, {{{1, 0, 0}, 1.0}}), zero(3, {});
    ConnectionSpec rot{BaseSpace::EuclideanSpace3, PolynomialPotential({mx, px, zero})};
    EXPECT_NEAR(holonomy_via_lift(rot, JordanCurve{Circle{}}, 1e-12), 2 * pi, 1e-10);
    // latitude circle at polar angle θ0 has radius sin θ0, so ∮ = 2π sin²θ0
    EXPECT_NEAR(holonomy_via_lift(rot, JordanCurve{Latitude{pi / 3}}, 1e-12), 2 * pi * 0.75, 1e-10);
}

TEST(HolonomyFlux, Examples)
{
    EXPECT_NEAR(holonomy_via_flux(hopf_connection(1), JordanCurve{Latitude{pi / 2}}, 1e-12), pi, 1e-12);
    EXPECT_NEAR(holonomy_via_flux(hopf_connection(2), JordanCurve{Latitude{pi / 2}}, 1e-12), 2 * pi, 1e-12);
    std::mt19937_64 rng(3);
    for (int i = 0; i < 10; ++i) {
        JordanCurve loop = testkit::random_simple_trigloop(rng);
        EXPECT_NEAR(holonomy_via_flux(constant_connection(testkit::uniform(rng, -3, 3), 1.5), loop, 1e-12), 0.0,
                    1e-12);
    }
    for (int i = 0; i < 10; ++i) {
        double R = testkit::uniform(rng, 0.2, 2), a = testkit::uniform(rng, -2, 2), b = testkit::uniform(rng, -2, 2);
        double expected = 2 * pi * R * R * (a + b);
        JordanCurve c{Circle{{a, b}, R}};
        EXPECT_NEAR(holonomy_via_flux(example3_connection(), c, 1e-12), expected, 1e-10 * (1 + std::abs(expected)));
        EXPECT_NEAR(holonomy_via_flux(example3_connection(), c, 1e-12, FluxRoute::Disk), expected,
                    1e-10 * (1 + std::abs(expected)));
    }
}

TEST(HolonomyFlux, ErrorKinds)
{
    TrigLoop eight;
    eight.xs = {0, 0, 1};
    eight.ys = {0, 1};
    EXPECT_EQ(kind_of([&] { holonomy_via_flux(example2_connection(), JordanCurve{eight}, 1e-10); }),
              ErrorKind::NotSimpleCurve);
    Polynomial zero(3, {});
    ConnectionSpec space{BaseSpace::EuclideanSpace3, PolynomialPotential({zero, zero, zero})};
    EXPECT_EQ(kind_of([&] { holonomy_via_flux(space, JordanCurve{Circle{}}, 1e-10); }), ErrorKind::Unsupported);
}

TEST(Holonomy, RotationPotentialCircleBothModes)
{
    auto r = holonomy(example2_connection(), JordanCurve{Circle{{0, 0}, 2}}, 1e-10, HolonomyMethod::Both);
    EXPECT_NEAR(r.alpha, 8 * pi, 1e-9);
    EXPECT_LE(r.discrepancy, 1e-8);
    EXPECT_NEAR(r.length, 4 * pi, 1e-10);
    ASSERT_TRUE(r.alpha_lift && r.alpha_flux);
    EXPECT_EQ(r.alpha, *r.alpha_flux);
    EXPECT_EQ(r.discrepancy, std::abs(*r.alpha_lift - *r.alpha_flux));
    EXPECT_EQ(r.method, HolonomyMethod::Both);
}

TEST(Holonomy, ConstantPotentialBothModes)
{
    std::mt19937_64 rng(7);
    JordanCurve loop = testkit::random_simple_trigloop(rng);
    auto r = holonomy(constant_connection(0.7, -2.1), loop, 1e-10, HolonomyMethod::Both);
    EXPECT_NEAR(*r.alpha_lift, 0.0, 1e-10);
    EXPECT_NEAR(*r.alpha_flux, 0.0, 1e-10);
    EXPECT_GT(r.length, 0.0);
}

TEST(Holonomy, HopfLatitudeFlux)
{
    auto r = holonomy(hopf_connection(1), JordanCurve{Latitude{pi / 3}}, 1e-12, HolonomyMethod::Flux);
    EXPECT_NEAR(r.alpha, pi / 2, 1e-12);
    EXPECT_NEAR(r.length, 2 * pi * std::sin(pi / 3), 1e-12);
    EXPECT_FALSE(r.alpha_lift.has_value());
}

TEST(Holonomy, DefaultMethods)
{
    EXPECT_EQ(default_method(hopf_connection(2)), HolonomyMethod::Flux);
    EXPECT_EQ(default_method(example2_connection()), HolonomyMethod::Both);
    Polynomial zero(3, {});
    EXPECT_EQ(default_method({BaseSpace::EuclideanSpace3, PolynomialPotential({zero, zero, zero})}),
              HolonomyMethod::Lift);
}

TEST(Holonomy, MethodNamesRoundTrip)
{
    for (auto m : {HolonomyMethod::Lift, HolonomyMethod::Flux, HolonomyMethod::Both})
        EXPECT_EQ(parse_holonomy_method(to_string(m)), m);
    EXPECT_THROW(parse_holonomy_method("stokes"), Error);
}

TEST(HolonomyProperties, StokesIdentityOnRandomPairs)
{
    std::mt19937_64 rng(2024);
    double worst = 0.0;
    for (int i = 0; i < 200; ++i) {
        ConnectionSpec conn = testkit::random_planar_connection(rng);
        JordanCurve loop = testkit::random_simple_trigloop(rng);
        double lift = holonomy_via_lift(conn, loop, 1e-10);
        double flux = holonomy_via_flux(conn, loop, 1e-10);
        worst = std::max(worst, std::abs(lift - flux));
        ASSERT_LE(std::abs(lift - flux), 1e-7) << "pair " << i;
    }
    RecordProperty("worst_discrepancy", std::to_string(worst));
}

TEST(HolonomyProperties, LinearInThePotential)
{
    std::mt19937_64 rng(99);
    for (int i = 0; i < 30; ++i) {
        auto p1 = testkit::random_planar_connection(rng).potential();
        auto p2 = testkit::random_planar_connection(rng).potential();
        double s = testkit::uniform(rng, -2, 2);
        JordanCurve loop = testkit::random_simple_trigloop(rng);
        auto lift = [&](const PolynomialPotential& p) {
            return holonomy_via_lift({BaseSpace::EuclideanPlane, p}, loop, 1e-12);
        };
        PolynomialPotential scaled({p2.component(0).scaled(s), p2.component(1).scaled(s)});
        EXPECT_NEAR(lift(p1 + scaled), lift(p1) + s * lift(p2), 1e-9);
    }
}

TEST(HolonomyProperties, ReversalNegatesBothPaths)
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 20; ++i) {
        ConnectionSpec conn = testkit::random_planar_connection(rng);
        JordanCurve loop = testkit::random_simple_trigloop(rng);
        EXPECT_NEAR(holonomy_via_lift(conn, loop.reverse(), 1e-11), -holonomy_via_lift(conn, loop, 1e-11), 1e-9);
        EXPECT_NEAR(holonomy_via_flux(conn, loop.reverse(), 1e-11), -holonomy_via_flux(conn, loop, 1e-11), 1e-9);
    }
    JordanCurve w{WavyLatitude{1.1, 0.2, 5}};
    EXPECT_NEAR(holonomy_via_flux(hopf_connection(1), w.reverse(), 1e-12),
                -holonomy_via_flux(hopf_connection(1), w, 1e-12), 1e-11);
}

TEST(HolonomyProperties, HopfTensorScaling)
{
    std::mt19937_64 rng(13);
    for (int i = 0; i < 20; ++i) {
        JordanCurve w{WavyLatitude{testkit::uniform(rng, 0.6, 2.5), testkit::uniform(rng, 0, 0.4), 5}};
        int k = 1 + i % 3, m = 1 + i % 4;
        double base = holonomy_via_flux(hopf_connection(k), w, 1e-12);
        double powered = holonomy_via_flux(hopf_connection(tensor_power(HopfConnection{k}, m).tensor_power), w, 1e-12);
        EXPECT_NEAR(powered, m * base, 1e-12 * std::abs(m * base));
    }
}

TEST(HolonomyProperties, ZeroCurvatureGivesZero)
{
    std::mt19937_64 rng(17);
    for (int i = 0; i < 50; ++i) {
        ConnectionSpec conn = constant_connection(testkit::uniform(rng, -5, 5), testkit::uniform(rng, -5, 5));
        JordanCurve loop = testkit::random_simple_trigloop(rng);
        auto r = holonomy(conn, loop, 1e-10, HolonomyMethod::Both);
        EXPECT_LE(std::abs(*r.alpha_lift), 1e-9);
        EXPECT_LE(std::abs(*r.alpha_flux), 1e-9);
    }
}

TEST(HolonomyProperties, DiskRouteAgreesWithBoundaryRoute)
{
    std::mt19937_64 rng(19);
    for (int i = 0; i < 30; ++i) {
        ConnectionSpec conn = testkit::random_planar_connection(rng, 4);
        JordanCurve c{Circle{{testkit::uniform(rng, -1, 1), testkit::uniform(rng, -1, 1)},
                             testkit::uniform(rng, 0.2, 2)},
                      i % 2 == 0};
        EXPECT_NEAR(holonomy_via_flux(conn, c, 1e-12, FluxRoute::Disk),
                    holonomy_via_flux(conn, c, 1e-12, FluxRoute::Boundary), 1e-9);
    }
}

}  // namespace
