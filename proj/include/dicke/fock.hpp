#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace dicke {

/// Fock state |nu; N_a - n2, n2>. The ground-level population is derived,
/// so N_a = n1 + n2 holds by construction.
struct FockState {
    int nu = 0;
    int n2 = 0;

    int n1(int n_atoms) const noexcept { return n_atoms - n2; }
    int excitation() const noexcept { return nu + n2; }

    friend auto operator<=>(const FockState&, const FockState&) = default;
};

enum class SectorKind { RwaBlock, ParityEven, ParityOdd, Full };

/// Symmetry sector: an RWA block of fixed excitation number m, or a parity
/// (or unrestricted) space truncated at a photon cutoff.
class SectorLabel {
public:
    static SectorLabel rwa_block(int m);
    static SectorLabel parity_even(int cutoff);
    static SectorLabel parity_odd(int cutoff);
    static SectorLabel parity(int sign, int cutoff);
    static SectorLabel full(int cutoff);

    SectorKind kind() const noexcept { return kind_; }
    /// Excitation number of an RWA block. Throws for other kinds.
    int excitation() const;
    /// Photon cutoff of a truncated sector. Throws for RWA blocks.
    int cutoff() const;
    bool is_rwa_block() const noexcept { return kind_ == SectorKind::RwaBlock; }
    bool is_parity() const noexcept {
        return kind_ == SectorKind::ParityEven || kind_ == SectorKind::ParityOdd;
    }

    std::string to_string() const;

    friend bool operator==(const SectorLabel&, const SectorLabel&) = default;

private:
    SectorLabel(SectorKind kind, int value) : kind_(kind), value_(value) {}

    SectorKind kind_;
    int value_;
};

/// Ordered basis of one sector with a constant-time state -> index map.
/// States are sorted lexicographically in (nu, n2).
class SectorBasis {
public:
    SectorBasis(int n_atoms, SectorLabel label);

    int n_atoms() const noexcept { return n_atoms_; }
    const SectorLabel& label() const noexcept { return label_; }
    std::span<const FockState> states() const noexcept { return states_; }
    std::size_t size() const noexcept { return states_.size(); }
    const FockState& operator[](std::size_t i) const { return states_[i]; }
    int max_photons() const noexcept { return max_nu_; }

    std::optional<std::size_t> index_of(const FockState& s) const noexcept;

private:
    int n_atoms_;
    SectorLabel label_;
    int max_nu_ = 0;
    std::vector<FockState> states_;
    std::vector<std::int32_t> lookup_; // (nu, n2) -> index or -1
};

using SectorBasisPtr = std::shared_ptr<const SectorBasis>;

SectorBasisPtr build_sector(int n_atoms, SectorLabel label);
std::size_t sector_dimension(int n_atoms, SectorLabel label);

} // namespace dicke

#include <complex>

namespace dicke {

/// <a|b> with both vectors zero-padded onto the union of their bases.
/// Bases must describe the same N_a.
std::complex<double> inner_product_on_union(const SectorBasis& basis_a,
                                            std::span<const std::complex<double>> a,
                                            const SectorBasis& basis_b,
                                            std::span<const std::complex<double>> b);

} // namespace dicke
