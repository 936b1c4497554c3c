#include "dicke/fock.hpp"

#include <algorithm>

#include "dicke/errors.hpp"

namespace dicke {

namespace {

void check_atoms(int n_atoms) {
    if (n_atoms < 2)
        throw InvalidArgument("n_atoms must be at least 2, got " + std::to_string(n_atoms));
}

bool belongs(const SectorLabel& label, const FockState& s) {
    switch (label.kind()) {
    case SectorKind::RwaBlock:
        return s.excitation() == label.excitation();
    case SectorKind::ParityEven:
        return s.nu <= label.cutoff() && s.excitation() % 2 == 0;
    case SectorKind::ParityOdd:
        return s.nu <= label.cutoff() && s.excitation() % 2 == 1;
    case SectorKind::Full:
        return s.nu <= label.cutoff();
    }
    return false;
}

} // namespace

SectorLabel SectorLabel::rwa_block(int m) {
    if (m < 0)
        throw InvalidArgument("excitation number must be non-negative, got " + std::to_string(m));
    return {SectorKind::RwaBlock, m};
}

SectorLabel SectorLabel::parity_even(int cutoff) {
    if (cutoff < 0)
        throw InvalidArgument("photon cutoff must be non-negative, got " + std::to_string(cutoff));
    return {SectorKind::ParityEven, cutoff};
}

SectorLabel SectorLabel::parity_odd(int cutoff) {
    if (cutoff < 0)
        throw InvalidArgument("photon cutoff must be non-negative, got " + std::to_string(cutoff));
    return {SectorKind::ParityOdd, cutoff};
}

SectorLabel SectorLabel::parity(int sign, int cutoff) {
    return sign >= 0 ? parity_even(cutoff) : parity_odd(cutoff);
}

SectorLabel SectorLabel::full(int cutoff) {
    if (cutoff < 0)
        throw InvalidArgument("photon cutoff must be non-negative, got " + std::to_string(cutoff));
    return {SectorKind::Full, cutoff};
}

int SectorLabel::excitation() const {
    if (kind_ != SectorKind::RwaBlock)
        throw InvalidArgument("sector " + to_string() + " has no fixed excitation number");
    return value_;
}

int SectorLabel::cutoff() const {
    if (kind_ == SectorKind::RwaBlock)
        throw InvalidArgument("RWA block has no photon cutoff");
    return value_;
}

std::string SectorLabel::to_string() const {
    switch (kind_) {
    case SectorKind::RwaBlock:
        return "rwa(m=" + std::to_string(value_) + ")";
    case SectorKind::ParityEven:
        return "even(cutoff=" + std::to_string(value_) + ")";
    case SectorKind::ParityOdd:
        return "odd(cutoff=" + std::to_string(value_) + ")";
    case SectorKind::Full:
        return "full(cutoff=" + std::to_string(value_) + ")";
    }
    return "?";
}

SectorBasis::SectorBasis(int n_atoms, SectorLabel label) : n_atoms_(n_atoms), label_(label) {
    check_atoms(n_atoms);
    max_nu_ = label.is_rwa_block() ? label.excitation() : label.cutoff();

    states_.reserve(sector_dimension(n_atoms, label));
    for (int nu = 0; nu <= max_nu_; ++nu) {
        for (int n2 = 0; n2 <= n_atoms; ++n2) {
            const FockState s{nu, n2};
            if (belongs(label, s))
                states_.push_back(s);
        }
    }

    const auto width = static_cast<std::size_t>(n_atoms + 1);
    lookup_.assign(static_cast<std::size_t>(max_nu_ + 1) * width, -1);
    for (std::size_t i = 0; i < states_.size(); ++i) {
        const auto& s = states_[i];
        lookup_[static_cast<std::size_t>(s.nu) * width + static_cast<std::size_t>(s.n2)] =
            static_cast<std::int32_t>(i);
    }
}

std::optional<std::size_t> SectorBasis::index_of(const FockState& s) const noexcept {
    if (s.nu < 0 || s.nu > max_nu_ || s.n2 < 0 || s.n2 > n_atoms_)
        return std::nullopt;
    const auto slot = lookup_[static_cast<std::size_t>(s.nu) * static_cast<std::size_t>(n_atoms_ + 1) +
                              static_cast<std::size_t>(s.n2)];
    if (slot < 0)
        return std::nullopt;
    return static_cast<std::size_t>(slot);
}

SectorBasisPtr build_sector(int n_atoms, SectorLabel label) {
    return std::make_shared<const SectorBasis>(n_atoms, label);
}

std::size_t sector_dimension(int n_atoms, SectorLabel label) {
    check_atoms(n_atoms);
    const auto n = static_cast<std::size_t>(n_atoms);
    if (label.is_rwa_block())
        return std::min(static_cast<std::size_t>(label.excitation()), n) + 1;

    const auto c = static_cast<std::size_t>(label.cutoff());
    const std::size_t even_nu = c / 2 + 1, odd_nu = (c + 1) / 2;
    const std::size_t even_n2 = n / 2 + 1, odd_n2 = (n + 1) / 2;
    switch (label.kind()) {
    case SectorKind::ParityEven:
        return even_nu * even_n2 + odd_nu * odd_n2;
    case SectorKind::ParityOdd:
        return even_nu * odd_n2 + odd_nu * even_n2;
    default:
        return (c + 1) * (n + 1);
    }
}

} // namespace dicke

namespace dicke {

std::complex<double> inner_product_on_union(const SectorBasis& basis_a,
                                            std::span<const std::complex<double>> a,
                                            const SectorBasis& basis_b,
                                            std::span<const std::complex<double>> b) {
    if (basis_a.n_atoms() != basis_b.n_atoms())
        throw InvalidArgument("states belong to different atom numbers");
    if (a.size() != basis_a.size() || b.size() != basis_b.size())
        throw InvalidArgument("amplitude vector does not match its basis");
    const auto sa = basis_a.states();
    const auto sb = basis_b.states();
    std::complex<double> acc{};
    std::size_t i = 0, j = 0;
    while (i < sa.size() && j < sb.size()) {
        if (sa[i] < sb[j]) {
            ++i;
        } else if (sb[j] < sa[i]) {
            ++j;
        } else {
            acc += std::conj(a[i]) * b[j];
            ++i;
            ++j;
        }
    }
    return acc;
}

} // namespace dicke
