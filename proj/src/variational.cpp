#include "dicke/variational.hpp"

#include <cmath>
#include <numbers>

#include "dicke/errors.hpp"

namespace dicke {

double energy_surface(const ModelParams& p, const VariationalPoint& v, bool rwa) {
    const double rho2 = v.rho * v.rho;
    const double den = 1.0 + rho2;
    const double mu = rwa ? 0.5 * p.mu : p.mu;
    const double eta_abs = rwa ? 0.0 : std::abs(p.xi);
    const double xi_phase = eta_abs > 0.0 ? std::arg(p.xi) : 0.0;

    return p.omega_field * v.r * v.r + (p.omega1 + rho2 * p.omega2) / den -
           4.0 * mu * v.r * v.rho * std::cos(v.theta) * std::cos(v.phi) / den +
           (p.zeta + 2.0 * eta_abs * std::cos(2.0 * v.phi + xi_phase)) * rho2 / (den * den);
}

CriticalPoint critical_point(const ModelParams& p) {
    p.validate();
    if (!p.xi_is_real())
        throw InvalidArgument("critical point needs a real dipolar strength (phase 0 or pi)");

    const auto d = to_dimensionless(p);
    CriticalPoint c;
    c.chi_c = p.zeta + 2.0 * p.eta();
    const double x2 = d.x12 * d.x12;
    const double excess = x2 - 1.0 - d.chi;
    if (excess <= 0.0)
        return c;

    const double rho2 = excess / (x2 + 1.0 - d.chi);
    c.region = Region::Collective;
    c.rho_c = std::sqrt(rho2);
    c.r_c = 2.0 * std::abs(p.mu) / p.omega_field * c.rho_c / (1.0 + rho2);
    c.theta_c = p.mu < 0.0 ? std::numbers::pi : 0.0;
    c.phi_c = 0.0;
    return c;
}

double min_energy(const DimensionlessControls& d, double omega1) {
    const double x2 = d.x12 * d.x12;
    const double excess = x2 - 1.0 - d.chi;
    if (excess <= 0.0)
        return omega1;
    return omega1 - 0.25 * d.omega_a * excess * excess / (x2 - d.chi);
}

std::vector<SeparatrixPoint> variational_separatrix(std::span<const double> x12) {
    std::vector<SeparatrixPoint> out;
    out.reserve(x12.size());
    for (double x : x12)
        out.push_back({x, x * x - 1.0});
    return out;
}

} // namespace dicke
