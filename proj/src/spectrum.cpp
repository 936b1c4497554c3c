#include "dicke/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

double excitation_mean_of(const SectorBasis& basis, const std::vector<cplx>& v) {
    double m = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        m += std::norm(v[i]) * basis[i].excitation();
    return m;
}

int parity_of(const SectorBasis& basis, const std::vector<cplx>& v) {
    bool even = false, odd = false;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (std::norm(v[i]) == 0.0)
            continue;
        (basis[i].excitation() % 2 == 0 ? even : odd) = true;
    }
    if (even && odd)
        return 0;
    return odd ? -1 : 1;
}

struct SectorSolution {
    SectorBasisPtr basis;
    EigenPair pair;
};

SectorSolution solve_parity(const ModelParams& p, int sign, int cutoff, const AssemblyOptions& assembly) {
    auto basis = build_sector(p.n_atoms, SectorLabel::parity(sign, cutoff));
    const auto h = assemble(p, basis, assembly);
    auto pairs = lowest_eigenpair(h, 1);
    return {std::move(basis), std::move(pairs.front())};
}

double fidelity_between(const SectorSolution& a, const SectorSolution& b) {
    return std::norm(inner_product_on_union(*a.basis, a.pair.vector, *b.basis, b.pair.vector));
}

} // namespace

GroundState make_state(SectorBasisPtr basis, std::vector<cplx> amplitudes, double energy) {
    if (!basis)
        throw InvalidArgument("null basis");
    if (amplitudes.size() != basis->size())
        throw InvalidArgument("amplitude vector does not match its basis");
    GroundState g;
    g.pair.energy = energy;
    g.pair.sector = basis->label();
    g.pair.vector = std::move(amplitudes);
    g.excitation_mean = excitation_mean_of(*basis, g.pair.vector);
    g.parity = parity_of(*basis, g.pair.vector);
    g.cutoff_used = basis->max_photons();
    g.basis = std::move(basis);
    return g;
}

int default_rwa_m_max(const ModelParams& p) {
    const auto d = to_dimensionless(p, CouplingConvention::Rwa);
    return 4 * static_cast<int>(std::ceil(d.x12 * d.x12 * p.n_atoms)) + p.n_atoms + 8;
}

std::vector<double> rwa_block_energies(const ModelParams& p, int m_max) {
    if (m_max < 0)
        throw InvalidArgument("m_max must be non-negative");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(m_max) + 1);
    for (int m = 0; m <= m_max; ++m) {
        const auto basis = build_sector(p.n_atoms, SectorLabel::rwa_block(m));
        out.push_back(lowest_eigenpair(assemble(p, basis, true), 1).front().energy);
    }
    return out;
}

GroundState rwa_ground(const ModelParams& p) { return rwa_ground(p, default_rwa_m_max(p)); }

GroundState rwa_ground(const ModelParams& p, int m_max) {
    p.validate();
    if (p.xi != cplx(0.0, 0.0))
        throw InvalidArgument("RWA ground state requires xi = 0");
    if (m_max < 1)
        throw InvalidArgument("m_max must be at least 1");

    int best_m = -1;
    SectorBasisPtr best_basis;
    EigenPair best;
    std::vector<double> energies;
    for (int m = 0; m <= m_max; ++m) {
        auto basis = build_sector(p.n_atoms, SectorLabel::rwa_block(m));
        auto pair = lowest_eigenpair(assemble(p, basis, true), 1).front();
        energies.push_back(pair.energy);
        if (best_m < 0 || pair.energy < best.energy - kDegeneracyTol) {
            best_m = m;
            best = std::move(pair);
            best_basis = std::move(basis);
        }
    }
    double runner_up_gap = std::numeric_limits<double>::infinity();
    for (int m = 0; m <= m_max; ++m)
        if (m != best_m)
            runner_up_gap = std::min(runner_up_gap, energies[static_cast<std::size_t>(m)] - best.energy);
    if (best_m == m_max)
        throw ConvergenceError(fmt::format("m_max too small: RWA minimum sits at m_max = {}", m_max),
                               static_cast<double>(m_max));

    GroundState g;
    g.pair = std::move(best);
    g.basis = std::move(best_basis);
    g.excitation_mean = static_cast<double>(best_m);
    g.parity = best_m % 2 == 0 ? 1 : -1;
    g.cutoff_used = best_m;
    g.convergence_overlap = 1.0;
    g.degenerate = runner_up_gap < kDegeneracyTol;
    return g;
}

GroundState full_ground(const ModelParams& p, const ConvergencePolicy& policy,
                        const AssemblyOptions& assembly) {
    p.validate();
    if (!p.xi_is_real())
        throw InvalidArgument("full-model ground states require a real xi");
    if (policy.step < 1)
        throw InvalidArgument("cutoff step must be positive");

    const double per_particle = 1.0 / static_cast<double>(p.n_atoms);
    int cutoff = policy.start_cutoff(p.n_atoms);
    if (cutoff > policy.max_cutoff)
        throw InvalidArgument("initial cutoff exceeds the cutoff ceiling");

    std::vector<CutoffStep> history;
    auto even = solve_parity(p, +1, cutoff, assembly);
    auto odd = solve_parity(p, -1, cutoff, assembly);
    history.push_back({cutoff, even.pair.energy, odd.pair.energy, 0.0, 0.0});

    for (;;) {
        const int next = cutoff + policy.step;
        if (next > policy.max_cutoff) {
            const auto& h = history.back();
            throw ConvergenceError(
                fmt::format("photon cutoff ceiling {} reached (last overlaps {:.12f} / {:.12f})",
                            policy.max_cutoff, h.overlap_even, h.overlap_odd),
                std::min(h.overlap_even, h.overlap_odd));
        }
        auto even_next = solve_parity(p, +1, next, assembly);
        auto odd_next = solve_parity(p, -1, next, assembly);
        const double ov_e = fidelity_between(even, even_next);
        const double ov_o = fidelity_between(odd, odd_next);
        history.push_back({next, even_next.pair.energy, odd_next.pair.energy, ov_e, ov_o});

        const double de = even.pair.energy - even_next.pair.energy;
        const double dodd = odd.pair.energy - odd_next.pair.energy;
        if (de < -policy.monotonic_slack || dodd < -policy.monotonic_slack)
            throw ConvergenceError(
                fmt::format("ground energy increased with cutoff {} -> {} ({:.3e}, {:.3e})", cutoff, next,
                            -de, -dodd),
                std::min(de, dodd));

        even = std::move(even_next);
        odd = std::move(odd_next);
        cutoff = next;

        const bool done = ov_e >= policy.overlap_threshold && ov_o >= policy.overlap_threshold &&
                          std::abs(de) * per_particle <= policy.energy_tol &&
                          std::abs(dodd) * per_particle <= policy.energy_tol;
        if (done)
            break;
    }

    // Ties within the degeneracy tolerance go to the even sector.
    const bool odd_wins = odd.pair.energy < even.pair.energy - kDegeneracyTol;
    auto& win = odd_wins ? odd : even;
    const auto& step = history.back();

    GroundState g;
    g.degenerate = std::abs(odd.pair.energy - even.pair.energy) < kDegeneracyTol;
    g.excitation_mean = excitation_mean_of(*win.basis, win.pair.vector);
    g.parity = odd_wins ? -1 : 1;
    g.cutoff_used = cutoff;
    g.convergence_overlap = odd_wins ? step.overlap_odd : step.overlap_even;
    g.pair = std::move(win.pair);
    g.basis = std::move(win.basis);
    g.history = std::move(history);
    return g;
}

} // namespace dicke
