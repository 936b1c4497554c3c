#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "dicke/errors.hpp"
#include "dicke/variational.hpp"
#include "oracles.hpp"

using namespace dicke;

namespace {

ModelParams at(double x12, double chi, double eta = 0.0) {
    return from_dimensionless({x12, chi, chi - 2.0 * eta, eta, 1.0}, 1.0, 0.0, 10);
}

// Minimum over r in [0, 3] and rho in [0, 8] along theta = phi = 0, nested golden sections.
double numeric_min(const ModelParams& p) {
    auto inner = [&](double rho) {
        return oracle::golden_min([&](double r) { return energy_surface(p, {r, 0.0, rho, 0.0}); }, 0.0, 3.0,
                                  1e-10);
    };
    return oracle::golden_min(inner, 0.0, 8.0, 1e-10);
}

} // namespace

TEST(Variational, SurfaceExamples) {
    ModelParams p;
    p.mu = 0.7;
    EXPECT_EQ(energy_surface(p, {}), 0.0);
    EXPECT_EQ(energy_surface(p, {1.0, 0.0, 0.0, 0.0}), 1.0);

    // zeta = -2 eta with real xi at phi = 0 is the chi = 0 surface.
    ModelParams q = p;
    q.zeta = -1.4;
    q.xi = 0.7;
    for (double r : {0.0, 0.4, 1.1})
        for (double rho : {0.2, 1.0, 2.5})
            EXPECT_NEAR(energy_surface(q, {r, 0.0, rho, 0.0}), energy_surface(p, {r, 0.0, rho, 0.0}), 1e-14);
}

TEST(Variational, RwaSurfaceIsHalvedCoupling) {
    ModelParams p;
    p.mu = 0.9;
    p.zeta = 0.3;
    p.xi = 0.4;
    ModelParams q = p;
    q.mu = 0.45;
    q.xi = 0.0;
    for (double th : {0.0, 1.0})
        for (double ph : {0.0, 2.0})
            EXPECT_NEAR(energy_surface(p, {0.6, th, 0.8, ph}, true), energy_surface(q, {0.6, th, 0.8, ph}), 1e-14);
}

TEST(Variational, CriticalPointExample) {
    const auto c = critical_point(at(std::sqrt(2.0), 0.0));
    EXPECT_EQ(c.region, Region::Collective);
    EXPECT_NEAR(c.rho_c * c.rho_c, 1.0 / 3.0, 1e-14);
    EXPECT_NEAR(c.r_c, 0.75 * std::sqrt(2.0 / 3.0), 1e-14);
    EXPECT_NEAR(c.r_c, 0.61237, 1e-5);
    EXPECT_EQ(c.theta_c, 0.0);
    EXPECT_EQ(c.phi_c, 0.0);
}

TEST(Variational, NormalRegion) {
    for (double x : {0.0, 0.5, 1.0}) {
        const auto c = critical_point(at(x, x * x - 1.0 + 0.1));
        EXPECT_EQ(c.region, Region::Normal);
        EXPECT_EQ(c.r_c, 0.0);
        EXPECT_EQ(c.rho_c, 0.0);
    }
    // chi = -1: only x12 = 0 stays normal.
    EXPECT_EQ(critical_point(at(0.0, -1.0)).region, Region::Normal);
    EXPECT_EQ(critical_point(at(1e-3, -1.0)).region, Region::Collective);
}

TEST(Variational, ComplexXiRejected) {
    ModelParams p;
    p.xi = {0.1, 0.2};
    EXPECT_THROW(critical_point(p), InvalidArgument);
}

TEST(Variational, MinEnergyExamples) {
    EXPECT_NEAR(min_energy({std::sqrt(2.0), 0.0, 0.0, 0.0, 1.0}, 0.0), -0.125, 1e-15);
    EXPECT_EQ(min_energy({std::sqrt(1.5), 0.5, 0.5, 0.0, 1.0}, 0.0), 0.0);
    EXPECT_EQ(min_energy({0.3, 0.2, 0.2, 0.0, 1.0}, -0.4), -0.4);
}

TEST(Variational, MinEnergyMatchesNumericalMinimum) {
    for (double x : {0.2, 0.9, 1.4, 2.0})
        for (double chi : {-0.8, 0.0, 0.6}) {
            const auto p = at(x, chi);
            EXPECT_NEAR(min_energy(to_dimensionless(p), p.omega1), numeric_min(p), 1e-9) << x << " " << chi;
        }
}

TEST(Variational, CriticalPointIsStationaryAndMinimal) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rr(0.0, 3.0), rh(0.0, 5.0);
    for (double x : {1.2, 1.7, 2.0})
        for (double chi : {-0.5, 0.3}) {
            const auto p = at(x, chi, 0.2);
            const auto c = critical_point(p);
            ASSERT_EQ(c.region, Region::Collective);
            const VariationalPoint v{c.r_c, c.theta_c, c.rho_c, c.phi_c};
            const double h = 1e-6;
            auto e = [&](double r, double rho) { return energy_surface(p, {r, 0.0, rho, 0.0}); };
            EXPECT_NEAR((e(v.r + h, v.rho) - e(v.r - h, v.rho)) / (2 * h), 0.0, 1e-5);
            EXPECT_NEAR((e(v.r, v.rho + h) - e(v.r, v.rho - h)) / (2 * h), 0.0, 1e-5);
            const double e0 = energy_surface(p, v);
            for (int i = 0; i < 1000; ++i) {
                const double th = (i % 2) * std::numbers::pi, ph = ((i / 2) % 2) * std::numbers::pi;
                EXPECT_LE(e0, energy_surface(p, {rr(rng), th, rh(rng), ph}) + 1e-14);
            }
        }
}

TEST(Variational, NegativeMuFlipsFieldPhase) {
    auto p = at(1.5, 0.0);
    const auto c = critical_point(p);
    p.mu = -p.mu;
    const auto d = critical_point(p);
    EXPECT_EQ(d.theta_c, std::numbers::pi);
    EXPECT_NEAR(energy_surface(p, {d.r_c, d.theta_c, d.rho_c, d.phi_c}),
                energy_surface(at(1.5, 0.0), {c.r_c, c.theta_c, c.rho_c, c.phi_c}), 1e-14);
}

TEST(Variational, DependsOnlyOnChi) {
    for (double t : {-0.7, 0.0, 0.9}) {
        DimensionlessControls d{1.6, 0.4, 0.4 - 2.0 * t, t, 1.0};
        EXPECT_NEAR(min_energy(d, 0.0), min_energy({1.6, 0.4, 0.4, 0.0, 1.0}, 0.0), 1e-15);
        EXPECT_NEAR(energy_surface(from_dimensionless(d, 1.0, 0.0, 3), {0.5, 0.0, 0.7, 0.0}),
                    energy_surface(from_dimensionless({1.6, 0.4, 0.4, 0.0, 1.0}, 1.0, 0.0, 3), {0.5, 0.0, 0.7, 0.0}),
                    1e-14);
    }
}

TEST(Variational, ContinuousAcrossSeparatrix) {
    for (double x : {0.0, 0.5, 1.5, 2.0}) {
        const double chi = x * x - 1.0;
        const double lo = min_energy({x, chi - 1e-9, chi - 1e-9, 0.0, 1.0}, 0.0);
        const double hi = min_energy({x, chi + 1e-9, chi + 1e-9, 0.0, 1.0}, 0.0);
        EXPECT_LT(std::abs(lo - hi), 1e-9);
    }
}

TEST(Variational, Separatrix) {
    const std::vector<double> xs{0.0, 1.0, 2.0};
    const auto s = variational_separatrix(xs);
    ASSERT_EQ(s.size(), 3u);
    EXPECT_EQ(s[0].chi, -1.0);
    EXPECT_EQ(s[1].chi, 0.0);
    EXPECT_EQ(s[2].chi, 3.0);
}
