#pragma once

#include <cstddef>
#include <vector>

#include "dicke/fock.hpp"
#include "dicke/hamiltonian.hpp"
#include "dicke/model.hpp"

namespace dicke {

struct EigenPair {
    double energy = 0.0;
    /// Unit-norm amplitudes in the basis ordering. The largest-magnitude
    /// amplitude is real and positive.
    std::vector<cplx> vector;
    SectorLabel sector = SectorLabel::rwa_block(0);
    double residual = 0.0; // ||H v - E v||_2
};

struct SolverOptions {
    double residual_tol = 1e-10;
    /// Dense diagonalisation up to this dimension, Lanczos above.
    std::size_t dense_threshold = 64;
    /// Tridiagonal re-solve interval inside Lanczos.
    std::size_t check_every = 4;
};

/// The k lowest eigenpairs, ascending. Throws ConvergenceError when the
/// residual tolerance cannot be met.
std::vector<EigenPair> lowest_eigenpair(const SparseHamiltonian& h, int k,
                                        const SolverOptions& opts = {});

inline constexpr double kDegeneracyTol = 1e-9;

struct ConvergencePolicy {
    int initial_cutoff = -1;    // -1: N_a + 10
    int step = 2;
    double overlap_threshold = 1.0 - 1e-8;
    double energy_tol = 1e-9;   // per particle
    int max_cutoff = 512;
    /// Slack for the energy monotonicity check between successive cutoffs.
    double monotonic_slack = 1e-10;

    int start_cutoff(int n_atoms) const { return initial_cutoff >= 0 ? initial_cutoff : n_atoms + 10; }
};

/// One rung of the photon-cutoff ladder, both parity sectors.
struct CutoffStep {
    int cutoff = 0;
    double energy_even = 0.0;
    double energy_odd = 0.0;
    double overlap_even = 0.0; // fidelity with the previous rung, 0 on the first rung
    double overlap_odd = 0.0;
};

struct GroundState {
    EigenPair pair;
    SectorBasisPtr basis;
    double excitation_mean = 0.0;
    int parity = 1;          // +1 even, -1 odd, 0 mixed
    int cutoff_used = 0;     // photon cutoff (max photon number for RWA blocks)
    double convergence_overlap = 1.0;
    bool degenerate = false; // competing sector within kDegeneracyTol
    std::vector<CutoffStep> history;

    double energy() const noexcept { return pair.energy; }
    const std::vector<cplx>& amplitudes() const noexcept { return pair.vector; }
    /// RWA block index; throws for parity sectors.
    int excitation() const { return pair.sector.excitation(); }
};

/// Wraps an arbitrary normalised vector as a GroundState (parity and
/// excitation mean are computed from the amplitudes).
GroundState make_state(SectorBasisPtr basis, std::vector<cplx> amplitudes, double energy = 0.0);

/// Lowest energies E_m^(0) of the RWA blocks m = 0..m_max.
std::vector<double> rwa_block_energies(const ModelParams& p, int m_max);

/// m_max heuristic 4 ceil(x12^2 N_a) + N_a + 8 (x12 in the RWA convention).
int default_rwa_m_max(const ModelParams& p);

/// Global RWA ground state, minimising over blocks m = 0..m_max. Ties go to
/// the smaller m. Throws ConvergenceError when the minimum sits at m_max.
GroundState rwa_ground(const ModelParams& p, int m_max);
GroundState rwa_ground(const ModelParams& p);

/// Ground state of the full Hamiltonian. Both parity sectors are solved on a
/// growing photon cutoff until successive ground vectors overlap above the
/// threshold and the energy per particle has settled; the lower sector wins.
GroundState full_ground(const ModelParams& p, const ConvergencePolicy& policy = {},
                        const AssemblyOptions& assembly = {});

} // namespace dicke
