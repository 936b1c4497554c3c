#pragma once

#include <map>
#include <optional>

#include "dicke/spectrum.hpp"

namespace dicke {

struct ObservableStats {
    double mean = 0.0;
    double variance = 0.0; // clamped at 0
};

enum class NumberOperator { Photons, Level1, Level2, Excitation };

/// Mean and quadratic fluctuation of a diagonal number operator, taken from
/// the amplitudes of `g`.
ObservableStats number_stats(const GroundState& g, NumberOperator which);

struct ExcitationDistribution {
    std::map<int, double> p_of_m;
    /// P(n2 | nu = 0); empty optional when the zero-photon weight is below
    /// kZeroPhotonFloor.
    std::optional<std::map<int, double>> p_n2_given_nu0;
    double p_nu0 = 0.0;
};

inline constexpr double kZeroPhotonFloor = 1e-14;

ExcitationDistribution excitation_distribution(const GroundState& g);

/// <exp(i pi M)>
double parity_expectation(const GroundState& g);

/// |<a|b>|^2 with both states zero-padded onto the union basis.
double fidelity(const GroundState& a, const GroundState& b);

} // namespace dicke
