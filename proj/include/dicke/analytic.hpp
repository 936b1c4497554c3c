#pragma once

#include <vector>

#include "dicke/fock.hpp"

namespace dicke::analytic {

// Closed-form results for the resonant case omega1 = 0, omega2 = Omega =
// omega_a. They serve as oracles for the numerical solvers.
//
// Conventions: x12 is the RWA control (mu = x12 sqrt(Omega omega_a)); eta_bar
// follows the closed forms below, which describe the Hamiltonian with
// xi = eta_bar * omega_a / 2.

struct Na2RwaLevel {
    int m = 0;
    int j = 0;
    double energy = 0.0;
    /// Block states |m;2,0>, |m-1;1,1>, |m-2;0,2> (those that exist).
    std::vector<FockState> states;
    std::vector<double> unnormalized_amplitudes;
};

/// zeta12^(m) = sqrt(4 (2m - 1) x12^2 + zeta^2), m >= 1 (dimensionless).
double zeta12(int m, double x12, double zeta_bar);

/// All levels of the N_a = 2 RWA block with m excitations, ascending in j.
/// zeta is in energy units. At x12 = 0 the kets are the continuous limits
/// of the general expressions (basis states where those degenerate).
std::vector<Na2RwaLevel> na2_rwa_spectrum(int m, double x12, double zeta, double omega_a = 1.0);

/// Values of zeta where the decoupled (mu = 0, eta = 0) ground state goes
/// from m to m + 1 excitations: -(N_a - 1) omega_a / (N_a - 1 - 2m) for
/// every m with N_a - 1 - 2m > 0.
std::vector<double> zeta_transition_points(int n_atoms, double omega_a = 1.0);

/// Decoupled energy E_m = omega1 (N_a - m) + (omega2 + zeta (N_a - m)/(N_a - 1)) m.
double decoupled_rwa_energy(int n_atoms, int m, double zeta, double omega1 = 0.0, double omega2 = 1.0);

struct ParityCandidate {
    int parity = 1;
    double energy = 0.0;
    std::vector<FockState> states;
    std::vector<double> unnormalized_amplitudes;
};

struct DecoupledGround {
    ParityCandidate even;
    ParityCandidate odd;
    /// Lower of the two; even on exact ties.
    const ParityCandidate& ground() const noexcept { return odd.energy < even.energy ? odd : even; }
};

/// mu = 0 ground states for N_a in {2, 3} in both parity sectors.
DecoupledGround decoupled_ground(int n_atoms, double zeta_bar, double eta_bar, double omega_a = 1.0);

/// Hamiltonian dipolar strength matching the closed forms' eta_bar.
inline double hamiltonian_eta(double eta_bar, double omega_a = 1.0) { return 0.5 * eta_bar * omega_a; }

} // namespace dicke::analytic
