#include "dicke/observables.hpp"

#include <algorithm>
#include <cmath>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

int value_of(const FockState& s, int n_atoms, NumberOperator which) {
    switch (which) {
    case NumberOperator::Photons:
        return s.nu;
    case NumberOperator::Level1:
        return s.n1(n_atoms);
    case NumberOperator::Level2:
        return s.n2;
    case NumberOperator::Excitation:
        return s.excitation();
    }
    return 0;
}

void check(const GroundState& g) {
    if (!g.basis || g.basis->size() != g.amplitudes().size())
        throw InvalidArgument("ground state amplitudes do not match its basis");
}

} // namespace

ObservableStats number_stats(const GroundState& g, NumberOperator which) {
    check(g);
    const auto& basis = *g.basis;
    const auto& v = g.amplitudes();
    double total = 0.0, mean = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = std::norm(v[i]);
        total += w;
        mean += w * value_of(basis[i], basis.n_atoms(), which);
    }
    mean /= total;
    double var = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double d = value_of(basis[i], basis.n_atoms(), which) - mean;
        var += std::norm(v[i]) * d * d;
    }
    var /= total;
    return {mean, var < 0.0 ? 0.0 : var};
}

ExcitationDistribution excitation_distribution(const GroundState& g) {
    check(g);
    const auto& basis = *g.basis;
    const auto& v = g.amplitudes();
    ExcitationDistribution out;
    std::map<int, double> zero_photon;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double w = std::norm(v[i]);
        out.p_of_m[basis[i].excitation()] += w;
        if (basis[i].nu == 0) {
            zero_photon[basis[i].n2] += w;
            out.p_nu0 += w;
        }
    }
    if (out.p_nu0 >= kZeroPhotonFloor) {
        for (auto& [n2, w] : zero_photon)
            w /= out.p_nu0;
        out.p_n2_given_nu0 = std::move(zero_photon);
    }
    return out;
}

double parity_expectation(const GroundState& g) {
    check(g);
    const auto& basis = *g.basis;
    const auto& v = g.amplitudes();
    double s = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        s += (basis[i].excitation() % 2 == 0 ? 1.0 : -1.0) * std::norm(v[i]);
    return s;
}

double fidelity(const GroundState& a, const GroundState& b) {
    check(a);
    check(b);
    if (a.basis->n_atoms() != b.basis->n_atoms())
        throw InvalidArgument("fidelity between states of different atom numbers");
    const double f = std::norm(inner_product_on_union(*a.basis, a.amplitudes(), *b.basis, b.amplitudes()));
    return std::min(1.0, f);
}

} // namespace dicke
