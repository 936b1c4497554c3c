// Analytic-vs-numeric cross-checks behind `dicke oracle-check`.

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "cli.hpp"
#include "dicke/analytic.hpp"
#include "dicke/observables.hpp"
#include "dicke/spectrum.hpp"
#include "dicke/variational.hpp"

namespace dicke::cli {

namespace {

struct Tally {
    std::ostream& os;
    int failed = 0;

    void report(bool ok, const std::string& name, double worst, double tol) {
        fmt::print(os, "{} {} worst={:.3e} tol={:.0e}\n", ok ? "PASS" : "FAIL", name, worst, tol);
        failed += ok ? 0 : 1;
    }
};

/// Weight of a normalised closed-form ket inside the numerical eigenspace
/// at energy e.
double eigenspace_weight(const SectorBasis& basis, const std::vector<EigenPair>& pairs, double e,
                         const std::vector<FockState>& states, const std::vector<double>& amps) {
    double norm2 = 0.0;
    for (double a : amps)
        norm2 += a * a;
    double w = 0.0;
    for (const auto& pr : pairs) {
        if (std::abs(pr.energy - e) > kDegeneracyTol)
            continue;
        cplx s{};
        for (std::size_t i = 0; i < states.size(); ++i)
            s += pr.vector[*basis.index_of(states[i])] * amps[i];
        w += std::norm(s);
    }
    return w / norm2;
}

void check_na2_blocks(Tally& t) {
    double worst_e = 0.0, worst_f = 0.0;
    for (int m = 0; m <= 6; ++m)
        for (int i = 0; i < 5; ++i)
            for (int j = 0; j < 5; ++j) {
                const double x = 0.5 * i, zeta = -3.0 + j;
                ModelParams p;
                p.mu = coupling_from_x12(x, 1.0, 1.0, CouplingConvention::Rwa);
                p.zeta = zeta;
                auto basis = build_sector(2, SectorLabel::rwa_block(m));
                const auto pairs = lowest_eigenpair(assemble(p, basis, true), static_cast<int>(basis->size()));
                const auto levels = analytic::na2_rwa_spectrum(m, x, zeta);
                for (std::size_t k = 0; k < levels.size(); ++k) {
                    worst_e = std::max(worst_e, std::abs(levels[k].energy - pairs[k].energy));
                    const double w = eigenspace_weight(*basis, pairs, levels[k].energy, levels[k].states,
                                                       levels[k].unnormalized_amplitudes);
                    worst_f = std::max(worst_f, 1.0 - w);
                }
            }
    t.report(worst_e <= 1e-10, "na2-rwa-energies", worst_e, 1e-10);
    t.report(worst_f <= 1e-10, "na2-rwa-vectors", worst_f, 1e-10);
}

void check_transition_points(Tally& t) {
    double worst = 0.0;
    bool flips = true;
    for (int n = 2; n <= 8; ++n) {
        const auto z = analytic::zeta_transition_points(n);
        for (std::size_t m = 0; m < z.size(); ++m) {
            const int mi = static_cast<int>(m);
            worst = std::max(worst, std::abs(analytic::decoupled_rwa_energy(n, mi, z[m]) -
                                             analytic::decoupled_rwa_energy(n, mi + 1, z[m])));
            ModelParams p;
            p.n_atoms = n;
            p.zeta = z[m] + 1e-6;
            const int above = full_ground(p).parity;
            p.zeta = z[m] - 1e-6;
            const int below = full_ground(p).parity;
            flips = flips && above == (mi % 2 == 0 ? 1 : -1) && below == -above;
        }
    }
    t.report(worst <= 1e-12, "decoupled-crossings", worst, 1e-12);
    t.report(flips, "full-parity-flips", flips ? 0.0 : 1.0, 0.0);
}

void check_decoupled_ground(Tally& t) {
    double worst_e = 0.0, worst_f = 0.0;
    for (int n : {2, 3})
        for (double zb : {-3.0, -1.7, -0.4, 0.5})
            for (double eb : {-1.0, -0.3, 0.0, 0.6, 1.0}) {
                const auto dg = analytic::decoupled_ground(n, zb, eb);
                ModelParams p;
                p.n_atoms = n;
                p.zeta = zb;
                p.xi = analytic::hamiltonian_eta(eb);
                const auto g = full_ground(p);
                worst_e = std::max(worst_e, std::abs(g.energy() - dg.ground().energy));
                if (g.degenerate)
                    continue;
                const auto& c = dg.ground();
                double norm2 = 0.0;
                cplx s{};
                for (std::size_t i = 0; i < c.states.size(); ++i) {
                    norm2 += c.unnormalized_amplitudes[i] * c.unnormalized_amplitudes[i];
                    s += g.amplitudes()[*g.basis->index_of(c.states[i])] * c.unnormalized_amplitudes[i];
                }
                worst_f = std::max(worst_f, 1.0 - std::norm(s) / norm2);
            }
    t.report(worst_e <= 1e-10, "decoupled-ground-energy", worst_e, 1e-10);
    t.report(worst_f <= 1e-10, "decoupled-ground-vector", worst_f, 1e-10);
}

void check_variational(Tally& t) {
    double worst = 0.0;
    for (double x : {0.0, 0.4, 0.9, 1.3, 2.0})
        for (double chi : {-1.5, -0.5, 0.0, 0.7, 2.0})
            for (double eta : {-0.5, 0.0, 0.5}) {
                DimensionlessControls d{x, chi, chi - 2.0 * eta, eta, 1.0};
                const auto p = from_dimensionless(d, 1.0, 0.0, 4);
                const auto c = critical_point(p);
                const double e = energy_surface(p, {c.r_c, c.theta_c, c.rho_c, c.phi_c});
                worst = std::max(worst, std::abs(e - min_energy(d, p.omega1)));
            }
    t.report(worst <= 1e-12, "variational-critical-energy", worst, 1e-12);
}

void check_rwa_vs_truncated_full(Tally& t) {
    double worst = 0.0;
    AssemblyOptions opts;
    opts.counter_rotating = false;
    for (int n : {2, 3, 5})
        for (double mu : {0.2, 0.6})
            for (double zeta : {-2.0, 0.0, 1.0}) {
                ModelParams p;
                p.n_atoms = n;
                p.mu = mu;
                p.zeta = zeta;
                worst = std::max(worst, std::abs(full_ground(p, {}, opts).energy() - rwa_ground(p).energy()));
            }
    t.report(worst <= 1e-9, "rwa-vs-rotating-full", worst, 1e-9);
}

} // namespace

int run_oracle_suite(std::ostream& os) {
    Tally t{os};
    check_na2_blocks(t);
    check_transition_points(t);
    check_decoupled_ground(t);
    check_variational(t);
    check_rwa_vs_truncated_full(t);
    return t.failed;
}

} // namespace dicke::cli
