#include <gtest/gtest.h>

#include <cmath>

#include "dicke/analytic.hpp"
#include "dicke/errors.hpp"
#include "dicke/spectrum.hpp"

using namespace dicke;
using namespace dicke::analytic;

TEST(Analytic, BlockZero) {
    const auto l = na2_rwa_spectrum(0, 0.7, -0.3);
    ASSERT_EQ(l.size(), 1u);
    EXPECT_EQ(l[0].energy, 0.0);
    EXPECT_EQ(l[0].states, (std::vector<FockState>{{0, 0}}));
}

TEST(Analytic, MiddleLevelIsM) {
    for (double x : {0.0, 0.4, 1.9})
        for (double z : {-2.0, 0.5})
            EXPECT_DOUBLE_EQ(na2_rwa_spectrum(3, x, z)[1].energy, 3.0);
}

TEST(Analytic, BlockOneValue) {
    EXPECT_NEAR(na2_rwa_spectrum(1, 1.0, 0.5)[0].energy, 0.21922, 1e-5);
    EXPECT_NEAR(zeta12(1, 1.0, 0.5), std::sqrt(4.25), 1e-15);
}

TEST(Analytic, KetsAreEigenvectorsOfAssembledBlock) {
    // Independent check: apply the assembled block to the closed-form ket.
    for (int m = 1; m <= 6; ++m)
        for (double x : {0.0, 0.35, 1.2})
            for (double z : {-2.5, 0.0, 0.9}) {
                ModelParams p;
                p.mu = coupling_from_x12(x, 1.0, 1.0, CouplingConvention::Rwa);
                p.zeta = z;
                const auto basis = build_sector(2, SectorLabel::rwa_block(m));
                const auto h = assemble(p, basis, true);
                for (const auto& lv : na2_rwa_spectrum(m, x, z)) {
                    std::vector<cplx> v(basis->size());
                    double n2 = 0.0;
                    for (std::size_t i = 0; i < lv.states.size(); ++i) {
                        v[*basis->index_of(lv.states[i])] = lv.unnormalized_amplitudes[i];
                        n2 += lv.unnormalized_amplitudes[i] * lv.unnormalized_amplitudes[i];
                    }
                    ASSERT_GT(n2, 0.0);
                    double res = 0.0;
                    for (std::size_t i = 0; i < basis->size(); ++i) {
                        cplx hv{};
                        for (std::size_t j = 0; j < basis->size(); ++j)
                            hv += h.at(i, j) * v[j];
                        res += std::norm(hv - lv.energy * v[i]);
                    }
                    EXPECT_LT(std::sqrt(res / n2), 1e-12) << "m=" << m << " x=" << x << " z=" << z;
                }
            }
}

TEST(Analytic, LevelsAscend) {
    for (int m = 0; m <= 6; ++m) {
        const auto l = na2_rwa_spectrum(m, 0.8, -1.1);
        for (std::size_t j = 1; j < l.size(); ++j)
            EXPECT_LE(l[j - 1].energy, l[j].energy);
        EXPECT_EQ(l.size(), static_cast<std::size_t>(std::min(m, 2) + 1));
    }
    EXPECT_THROW(na2_rwa_spectrum(-1, 0.0, 0.0), InvalidArgument);
}

TEST(Analytic, TransitionPoints) {
    EXPECT_EQ(zeta_transition_points(2), std::vector<double>{-1.0});
    EXPECT_EQ(zeta_transition_points(5), (std::vector<double>{-1.0, -2.0}));
    const auto z7 = zeta_transition_points(7);
    ASSERT_EQ(z7.size(), 3u);
    EXPECT_DOUBLE_EQ(z7[0], -1.0);
    EXPECT_DOUBLE_EQ(z7[1], -1.5);
    EXPECT_DOUBLE_EQ(z7[2], -3.0);
    for (int n = 2; n <= 12; ++n) {
        const auto z = zeta_transition_points(n);
        EXPECT_EQ(z.size(), static_cast<std::size_t>(n / 2));
        for (std::size_t m = 0; m < z.size(); ++m) {
            EXPECT_LT(z[m], 0.0);
            if (m > 0)
                EXPECT_LT(z[m], z[m - 1]);
            const int mi = static_cast<int>(m);
            EXPECT_NEAR(decoupled_rwa_energy(n, mi, z[m]), decoupled_rwa_energy(n, mi + 1, z[m]), 1e-12);
        }
    }
}

TEST(Analytic, CrossingTransitionPointStepsRwaArgmin) {
    for (int n : {2, 5, 7}) {
        const auto z = zeta_transition_points(n);
        for (std::size_t m = 0; m < z.size(); ++m) {
            ModelParams p;
            p.n_atoms = n;
            p.zeta = z[m] + 1e-6;
            const int above = rwa_ground(p).excitation();
            p.zeta = z[m] - 1e-6;
            EXPECT_EQ(rwa_ground(p).excitation(), above + 1);
            EXPECT_EQ(above, static_cast<int>(m));
        }
    }
}

TEST(Analytic, DecoupledGroundNa2) {
    const auto g0 = decoupled_ground(2, 0.0, 0.0);
    EXPECT_EQ(g0.ground().parity, 1);
    EXPECT_EQ(g0.ground().energy, 0.0);
    const auto g1 = decoupled_ground(2, 0.0, 1.0);
    EXPECT_NEAR(g1.even.energy, 1.0 - std::sqrt(2.0), 1e-15);
    EXPECT_NEAR(g1.odd.energy, 1.0, 1e-15);
    EXPECT_EQ(decoupled_ground(2, -std::sqrt(2.0) + 1e-9, 1.0).ground().parity, 1);
    EXPECT_EQ(decoupled_ground(2, -std::sqrt(2.0) - 1e-9, 1.0).ground().parity, -1);
    for (double zb : {-0.99, -0.5, 2.0})
        EXPECT_EQ(decoupled_ground(2, zb, 0.1).ground().parity, 1);
    EXPECT_THROW(decoupled_ground(4, 0.0, 0.0), InvalidArgument);
}

TEST(Analytic, DecoupledGroundNa3) {
    const auto g = decoupled_ground(3, 0.0, 1.0);
    EXPECT_NEAR(g.even.energy, 0.5 * (2.0 - std::sqrt(7.0)), 1e-15);
    EXPECT_NEAR(g.odd.energy, 0.5 * (4.0 - std::sqrt(7.0)), 1e-15);
}

TEST(Analytic, DecoupledGroundMatchesFullSolver) {
    for (int n : {2, 3})
        for (double zb : {-2.6, -1.3, -0.2, 0.8})
            for (double eb : {-1.2, -0.4, 0.0, 0.7}) {
                ModelParams p;
                p.n_atoms = n;
                p.zeta = zb;
                p.xi = hamiltonian_eta(eb);
                const auto dg = decoupled_ground(n, zb, eb);
                const auto g = full_ground(p);
                EXPECT_NEAR(g.energy(), dg.ground().energy, 1e-10);
                if (!g.degenerate)
                    EXPECT_EQ(g.parity, dg.ground().parity);
            }
}
