#include "dicke/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

double convention_factor(CouplingConvention conv) {
    return conv == CouplingConvention::Full ? 2.0 : 1.0;
}

} // namespace

void ModelParams::validate() const {
    if (!(omega_field > 0.0) || !std::isfinite(omega_field))
        throw InvalidArgument("field frequency must be positive, got " + std::to_string(omega_field));
    if (n_atoms < 2)
        throw InvalidArgument("n_atoms must be at least 2, got " + std::to_string(n_atoms));
    if (!(omega_a() > 0.0))
        throw InvalidArgument("omega2 - omega1 must be positive, got " + std::to_string(omega_a()));
    if (!std::isfinite(omega1) || !std::isfinite(omega2) || !std::isfinite(mu) ||
        !std::isfinite(zeta) || !std::isfinite(xi.real()) || !std::isfinite(xi.imag()))
        throw InvalidArgument("model couplings must be finite");
}

DimensionlessControls to_dimensionless(const ModelParams& p, CouplingConvention conv) {
    p.validate();
    const double wa = p.omega_a();
    DimensionlessControls d;
    d.omega_a = wa;
    d.x12 = convention_factor(conv) * p.mu / std::sqrt(p.omega_field * wa);
    d.zeta_bar = p.zeta / wa;
    d.eta_bar = p.eta() / wa;
    d.chi = (p.zeta + 2.0 * p.eta()) / wa;
    return d;
}

double coupling_from_x12(double x12, double omega_field, double omega_a, CouplingConvention conv) {
    if (!(omega_a > 0.0))
        throw InvalidArgument("omega_a must be positive");
    if (!(omega_field > 0.0))
        throw InvalidArgument("field frequency must be positive");
    return x12 * std::sqrt(omega_field * omega_a) / convention_factor(conv);
}

ModelParams from_dimensionless(const DimensionlessControls& d, double omega_field, double omega1,
                               int n_atoms, CouplingConvention conv) {
    if (!(d.omega_a > 0.0))
        throw InvalidArgument("omega_a must be positive");
    const double expected_chi = d.zeta_bar + 2.0 * d.eta_bar;
    if (std::abs(d.chi - expected_chi) > 1e-12 * std::max(1.0, std::abs(expected_chi)))
        throw InvalidArgument("chi is inconsistent with zeta_bar + 2 eta_bar");

    ModelParams p;
    p.omega_field = omega_field;
    p.omega1 = omega1;
    p.omega2 = omega1 + d.omega_a;
    p.mu = coupling_from_x12(d.x12, omega_field, d.omega_a, conv);
    p.zeta = d.zeta_bar * d.omega_a;
    p.xi = {d.eta_bar * d.omega_a, 0.0};
    p.n_atoms = n_atoms;
    p.validate();
    return p;
}

} // namespace dicke
