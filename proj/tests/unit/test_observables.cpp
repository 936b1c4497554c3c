#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "dicke/errors.hpp"
#include "dicke/observables.hpp"
#include "oracles.hpp"

using namespace dicke;

namespace {

GroundState basis_state(int n, int cutoff, FockState s) {
    const auto b = build_sector(n, SectorLabel::full(cutoff));
    std::vector<cplx> v(b->size());
    v[*b->index_of(s)] = 1.0;
    return make_state(b, v);
}

double total(const std::map<int, double>& m) {
    return std::accumulate(m.begin(), m.end(), 0.0, [](double a, const auto& kv) { return a + kv.second; });
}

ModelParams point(int n, double mu, double zeta, double eta = 0.0) {
    ModelParams p;
    p.n_atoms = n;
    p.mu = mu;
    p.zeta = zeta;
    p.xi = eta;
    return p;
}

} // namespace

TEST(Observables, BasisStateHasNoFluctuations) {
    const auto g = basis_state(5, 3, {0, 0});
    for (auto op : {NumberOperator::Photons, NumberOperator::Level1, NumberOperator::Level2, NumberOperator::Excitation})
        EXPECT_EQ(number_stats(g, op).variance, 0.0);
    EXPECT_EQ(number_stats(g, NumberOperator::Level1).mean, 5.0);
    const auto d = excitation_distribution(g);
    EXPECT_EQ(d.p_of_m.at(0), 1.0);
    ASSERT_TRUE(d.p_n2_given_nu0);
    EXPECT_EQ(d.p_n2_given_nu0->at(0), 1.0);
    EXPECT_EQ(parity_expectation(g), 1.0);
}

TEST(Observables, HandBuiltSuperposition) {
    // 0.6 |0;3,1> + 0.8 |2;1,3>: photons {0, 2}, n2 {1, 3}.
    const auto b = build_sector(4, SectorLabel::full(2));
    std::vector<cplx> v(b->size());
    v[*b->index_of({0, 1})] = 0.6;
    v[*b->index_of({2, 3})] = cplx(0.0, 0.8);
    const auto g = make_state(b, v);
    const auto ph = number_stats(g, NumberOperator::Photons);
    EXPECT_NEAR(ph.mean, 0.64 * 2, 1e-15);
    EXPECT_NEAR(ph.variance, 0.64 * 4 - 1.28 * 1.28, 1e-15);
    const auto n2 = number_stats(g, NumberOperator::Level2);
    EXPECT_NEAR(n2.mean, 0.36 + 0.64 * 3, 1e-15);
    EXPECT_NEAR(n2.variance, number_stats(g, NumberOperator::Level1).variance, 1e-15);
    const auto d = excitation_distribution(g);
    EXPECT_NEAR(d.p_of_m.at(1), 0.36, 1e-15);
    EXPECT_NEAR(d.p_of_m.at(5), 0.64, 1e-15);
    EXPECT_NEAR(d.p_nu0, 0.36, 1e-15);
    EXPECT_NEAR(d.p_n2_given_nu0->at(1), 1.0, 1e-15);
    EXPECT_NEAR(parity_expectation(g), -1.0, 1e-15);
}

TEST(Observables, MixedParityVector) {
    const auto b = build_sector(3, SectorLabel::full(1));
    std::vector<cplx> v(b->size());
    v[*b->index_of({0, 0})] = std::sqrt(0.5);
    v[*b->index_of({1, 0})] = std::sqrt(0.5);
    EXPECT_NEAR(parity_expectation(make_state(b, v)), 0.0, 1e-15);
}

TEST(Observables, ConditionalUndefinedWithoutVacuum) {
    const auto d = excitation_distribution(basis_state(3, 4, {2, 1}));
    EXPECT_FALSE(d.p_n2_given_nu0.has_value());
    EXPECT_EQ(d.p_nu0, 0.0);
}

TEST(Observables, RwaGroundFluctuationIdentity) {
    for (double mu : {0.3, 0.8, 1.4})
        for (double z : {-2.0, -0.5, 0.7}) {
            const auto g = rwa_ground(point(7, mu, z));
            const double v2 = number_stats(g, NumberOperator::Level2).variance;
            EXPECT_NEAR(number_stats(g, NumberOperator::Level1).variance, v2, 1e-12);
            EXPECT_NEAR(number_stats(g, NumberOperator::Photons).variance, v2, 1e-12);
            EXPECT_NEAR(number_stats(g, NumberOperator::Excitation).variance, 0.0, 1e-12);
            const auto d = excitation_distribution(g);
            EXPECT_EQ(d.p_of_m.size(), 1u);
            EXPECT_NEAR(total(d.p_of_m), 1.0, 1e-10);
        }
}

TEST(Observables, FullGroundDistributions) {
    const auto g = full_ground(point(5, 0.6, -1.3, 0.3));
    const auto d = excitation_distribution(g);
    EXPECT_NEAR(total(d.p_of_m), 1.0, 1e-10);
    ASSERT_TRUE(d.p_n2_given_nu0);
    EXPECT_NEAR(total(*d.p_n2_given_nu0), 1.0, 1e-10);
    for (const auto& [m, pm] : d.p_of_m)
        if ((m % 2 == 0 ? 1 : -1) != g.parity)
            EXPECT_EQ(pm, 0.0);
    EXPECT_NEAR(parity_expectation(g), g.parity, 1e-12);
    EXPECT_NEAR(number_stats(g, NumberOperator::Level1).variance,
                number_stats(g, NumberOperator::Level2).variance, 1e-12);
}

TEST(Observables, PhotonVarianceMatchesKroneckerOracle) {
    for (double eta : {-1.0, 1.0}) {
        const ModelParams p = point(3, coupling_from_x12(0.3, 1.0, 1.0), 0.0, eta);
        const int c = 30, d = p.n_atoms + 1;
        Eigen::SelfAdjointEigenSolver<oracle::Mat> es(oracle::brute_force_hamiltonian(p, c));
        const Eigen::VectorXcd v = es.eigenvectors().col(0);
        double m1 = 0.0, m2 = 0.0;
        for (int nu = 0; nu <= c; ++nu)
            for (int n2 = 0; n2 < d; ++n2) {
                const double w = std::norm(v(nu * d + n2));
                m1 += w * nu;
                m2 += w * nu * nu;
            }
        const auto st = number_stats(full_ground(p), NumberOperator::Photons);
        EXPECT_NEAR(st.mean, m1, 1e-9);
        EXPECT_NEAR(st.variance, m2 - m1 * m1, 1e-9);
    }
}

TEST(Observables, DipolarGroundSpreadsOverEvenN2) {
    const auto g = full_ground(point(7, coupling_from_x12(0.1, 1.0, 1.0), -0.5, 1.0));
    const auto d = excitation_distribution(g);
    int significant = 0;
    for (const auto& [n2, p] : *d.p_n2_given_nu0) {
        if (p > 1e-3)
            ++significant;
        if (n2 % 2 == 1)
            EXPECT_LT(p, 1e-20);
    }
    EXPECT_GE(significant, 2);
}

TEST(Observables, FidelityProperties) {
    const auto a = full_ground(point(4, 0.5, -0.6, 0.2));
    const auto b = full_ground(point(4, 0.55, -0.6, 0.2));
    EXPECT_NEAR(fidelity(a, a), 1.0, 1e-12);
    EXPECT_NEAR(fidelity(a, b), fidelity(b, a), 1e-15);
    EXPECT_LT(fidelity(a, b), 1.0);
    EXPECT_GT(fidelity(a, b), 0.9);

    auto rotated = a.amplitudes();
    for (auto& x : rotated)
        x *= std::polar(1.0, 0.7);
    EXPECT_NEAR(fidelity(make_state(a.basis, rotated), b), fidelity(a, b), 1e-14);
}

TEST(Observables, FidelityZeroAcrossSymmetrySectors) {
    const auto even = full_ground(point(2, 0.0, -1.0 + 1e-3));
    const auto odd = full_ground(point(2, 0.0, -1.0 - 1e-3));
    ASSERT_NE(even.parity, odd.parity);
    EXPECT_EQ(fidelity(even, odd), 0.0);

    const auto r0 = rwa_ground(point(3, 0.4, 0.5));
    const auto r1 = rwa_ground(point(3, 0.4, -3.0));
    ASSERT_NE(r0.excitation(), r1.excitation());
    EXPECT_EQ(fidelity(r0, r1), 0.0);
}

TEST(Observables, FidelityRejectsAtomMismatch) {
    EXPECT_THROW(fidelity(basis_state(2, 2, {0, 0}), basis_state(3, 2, {0, 0})), InvalidArgument);
}
