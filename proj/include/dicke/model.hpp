#pragma once

#include <complex>

namespace dicke {

/// Physical couplings of the extended two-level Dicke Hamiltonian.
///
/// Energies are in arbitrary units; the defaults are the resonant values
/// Omega = 1, omega1 = 0, omega2 = 1 used throughout the phase diagrams.
struct ModelParams {
    double omega_field = 1.0;       // field frequency Omega
    double omega1 = 0.0;            // ground-level energy
    double omega2 = 1.0;            // excited-level energy
    double mu = 0.0;                // matter-field coupling
    double zeta = 0.0;              // diagonal dipole-dipole coupling
    std::complex<double> xi{};      // non-diagonal dipole-dipole coupling |eta| e^{i phi}
    int n_atoms = 2;

    double omega_a() const noexcept { return omega2 - omega1; }
    /// Effective real dipolar strength |xi| cos(arg xi).
    double eta() const noexcept { return xi.real(); }
    bool xi_is_real() const noexcept { return xi.imag() == 0.0; }

    /// Throws InvalidArgument unless Omega > 0, N_a >= 2, omega_a > 0 and
    /// every coupling is finite.
    void validate() const;
};

/// How the dimensionless matter-field control relates to mu.
///
/// The full Hamiltonian uses x12 = 2 mu / sqrt(Omega omega_a). The RWA energy
/// surface is the full one with mu -> mu / 2, so in the RWA the same
/// separatrix chi = x12^2 - 1 is obtained with x12 = mu / sqrt(Omega omega_a).
enum class CouplingConvention { Full, Rwa };

struct DimensionlessControls {
    double x12 = 0.0;
    double chi = 0.0;        // zeta_bar + 2 eta_bar
    double zeta_bar = 0.0;
    double eta_bar = 0.0;
    double omega_a = 1.0;
};

DimensionlessControls to_dimensionless(const ModelParams& p,
                                       CouplingConvention conv = CouplingConvention::Full);

/// Inverse of to_dimensionless. Rejects omega_a <= 0 and controls whose chi
/// disagrees with zeta_bar + 2 eta_bar.
ModelParams from_dimensionless(const DimensionlessControls& d, double omega_field,
                               double omega1, int n_atoms,
                               CouplingConvention conv = CouplingConvention::Full);

/// mu for a given x12 under the chosen convention.
double coupling_from_x12(double x12, double omega_field, double omega_a,
                         CouplingConvention conv = CouplingConvention::Full);

} // namespace dicke
