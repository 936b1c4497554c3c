#include "dicke/analytic.hpp"

#include <cmath>

#include "dicke/errors.hpp"

namespace dicke::analytic {

double zeta12(int m, double x12, double zeta_bar) {
    return std::sqrt(4.0 * (2.0 * m - 1.0) * x12 * x12 + zeta_bar * zeta_bar);
}

std::vector<Na2RwaLevel> na2_rwa_spectrum(int m, double x12, double zeta, double omega_a) {
    if (m < 0)
        throw InvalidArgument("excitation number must be non-negative");
    if (!(omega_a > 0.0))
        throw InvalidArgument("omega_a must be positive");
    const double zb = zeta / omega_a;
    const double x = x12;

    if (m == 0)
        return {{0, 0, 0.0, {{0, 0}}, {1.0}}};

    if (m == 1) {
        const std::vector<FockState> states{{1, 0}, {0, 1}};
        const double z = zeta12(1, x, zb);
        std::vector<double> low, high;
        if (x != 0.0) {
            low = {(zb + z) / (2.0 * x), 1.0};
            high = {(zb - z) / (2.0 * x), 1.0};
        } else if (zb > 0.0) {
            low = {1.0, 0.0};
            high = {0.0, 1.0};
        } else if (zb < 0.0) {
            low = {0.0, 1.0};
            high = {-1.0, 0.0};
        } else {
            low = {1.0, 1.0};
            high = {-1.0, 1.0};
        }
        return {{1, 0, 0.5 * omega_a * (2.0 + zb - z), states, low},
                {1, 1, 0.5 * omega_a * (2.0 + zb + z), states, high}};
    }

    const std::vector<FockState> states{{m, 0}, {m - 1, 1}, {m - 2, 2}};
    const double md = m;
    const double z = zeta12(m, x, zb);
    const double a = std::sqrt(md / (md - 1.0));
    std::vector<double> low, high;
    if (x != 0.0) {
        low = {a, -(zb - z) / (2.0 * std::sqrt(md - 1.0) * x), 1.0};
        high = {a, -(zb + z) / (2.0 * std::sqrt(md - 1.0) * x), 1.0};
    } else if (zb > 0.0) {
        low = {a, 0.0, 1.0};
        high = {0.0, -1.0, 0.0};
    } else if (zb < 0.0) {
        low = {0.0, 1.0, 0.0};
        high = {a, 0.0, 1.0};
    } else {
        const double c = std::sqrt((2.0 * md - 1.0) / (md - 1.0));
        low = {a, c, 1.0};
        high = {a, -c, 1.0};
    }
    return {{m, 0, 0.5 * omega_a * (2.0 * md + zb - z), states, low},
            {m, 1, omega_a * md, states, {-std::sqrt((md - 1.0) / md), 0.0, 1.0}},
            {m, 2, 0.5 * omega_a * (2.0 * md + zb + z), states, high}};
}

std::vector<double> zeta_transition_points(int n_atoms, double omega_a) {
    if (n_atoms < 2)
        throw InvalidArgument("n_atoms must be at least 2");
    std::vector<double> out;
    for (int m = 0; n_atoms - 1 - 2 * m > 0; ++m)
        out.push_back(-(n_atoms - 1.0) * omega_a / (n_atoms - 1.0 - 2.0 * m));
    return out;
}

double decoupled_rwa_energy(int n_atoms, int m, double zeta, double omega1, double omega2) {
    const double n1 = n_atoms - m;
    return omega1 * n1 + (omega2 + zeta * n1 / (n_atoms - 1.0)) * m;
}

DecoupledGround decoupled_ground(int n_atoms, double zeta_bar, double eta_bar, double omega_a) {
    const double zb = zeta_bar, eb = eta_bar;
    DecoupledGround g;
    g.even.parity = 1;
    g.odd.parity = -1;
    if (n_atoms == 2) {
        const double s = std::sqrt(1.0 + eb * eb);
        g.even.energy = omega_a * (1.0 - s);
        g.even.states = {{0, 0}, {0, 2}};
        g.even.unnormalized_amplitudes = {1.0 + s, -eb};
        g.odd.energy = omega_a * (1.0 + zb);
        g.odd.states = {{0, 1}};
        g.odd.unnormalized_amplitudes = {1.0};
        return g;
    }
    if (n_atoms == 3) {
        const double se = std::sqrt((2.0 + zb) * (2.0 + zb) + 3.0 * eb * eb);
        const double so = std::sqrt((2.0 - zb) * (2.0 - zb) + 3.0 * eb * eb);
        g.even.energy = 0.5 * omega_a * (2.0 + zb - se);
        g.even.states = {{0, 0}, {0, 2}};
        g.even.unnormalized_amplitudes = {2.0 + zb + se, -std::sqrt(3.0) * eb};
        g.odd.energy = 0.5 * omega_a * (4.0 + zb - so);
        g.odd.states = {{0, 1}, {0, 3}};
        g.odd.unnormalized_amplitudes = {2.0 - zb + so, -std::sqrt(3.0) * eb};
        return g;
    }
    throw InvalidArgument("closed-form decoupled ground states exist only for N_a = 2 or 3");
}

} // namespace dicke::analytic
