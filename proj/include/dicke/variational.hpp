#pragma once

#include <span>
#include <vector>

#include "dicke/model.hpp"

namespace dicke {

/// Coherent-state parameters: field alpha = sqrt(N_a) r e^{i theta},
/// matter gamma = (1, rho e^{i phi}).
struct VariationalPoint {
    double r = 0.0;
    double theta = 0.0;
    double rho = 0.0;
    double phi = 0.0;
};

enum class Region { Normal, Collective };

struct CriticalPoint {
    double r_c = 0.0;
    double rho_c = 0.0;
    double theta_c = 0.0;
    double phi_c = 0.0;
    double chi_c = 0.0;   // zeta + 2 eta, energy units
    Region region = Region::Normal;
};

/// Large-N energy per particle of the coherent test state. With rwa=true
/// the surface is the full one with mu -> mu/2 and eta -> 0.
double energy_surface(const ModelParams& p, const VariationalPoint& v, bool rwa = false);

/// Minimising point for real xi. Normal iff x12^2 - 1 - chi <= 0.
CriticalPoint critical_point(const ModelParams& p);

/// Closed-form minimum energy per particle; omega1 in the normal region.
double min_energy(const DimensionlessControls& d, double omega1);

struct SeparatrixPoint {
    double x12;
    double chi;
};

/// chi = x12^2 - 1 on the given abscissae.
std::vector<SeparatrixPoint> variational_separatrix(std::span<const double> x12);

} // namespace dicke
