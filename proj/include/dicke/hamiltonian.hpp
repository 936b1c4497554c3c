#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <vector>

#include "dicke/fock.hpp"
#include "dicke/kernels.hpp"
#include "dicke/model.hpp"

namespace dicke {

using cplx = std::complex<double>;

struct AssemblyOptions {
    /// Keep only the excitation-conserving interaction (A12 a^+ + A21 a) and
    /// drop the xi terms. Requires an RWA block basis and xi == 0.
    bool rwa = false;
    /// Full model only: when false the counter-rotating pieces A21 a^+ and
    /// A12 a are zeroed. Used to cross-check the full solver against the RWA.
    bool counter_rotating = true;
    /// Store a complex matrix even when every element is real.
    bool force_complex = false;
};

/// Calls `sink(target, <target|H|ket>)` for every non-zero matrix element
/// in column `ket`, diagonal included. Targets may lie outside any sector.
void for_each_coupling(const ModelParams& p, const FockState& ket, const AssemblyOptions& opts,
                       const std::function<void(const FockState&, cplx)>& sink);

/// <bra|H|ket> of the full Hamiltonian.
cplx matrix_element_full(const ModelParams& p, const FockState& bra, const FockState& ket);
cplx matrix_element(const ModelParams& p, const FockState& bra, const FockState& ket,
                    const AssemblyOptions& opts);

template <class Scalar>
struct Triplet {
    std::int32_t row;
    std::int32_t col;
    Scalar value;
};

/// Hermitian matrix in compressed-row form with both triangles stored, plus
/// the upper-triangle triplets it was built from (row <= col, column-major
/// order, deterministic).
template <class Scalar>
class HermitianCsr {
public:
    HermitianCsr() = default;
    HermitianCsr(std::size_t dim, std::vector<Triplet<Scalar>> upper);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t nonzeros() const noexcept { return values_.size(); }
    const std::vector<Triplet<Scalar>>& upper() const noexcept { return upper_; }
    const std::vector<std::int64_t>& row_ptr() const noexcept { return row_ptr_; }
    const std::vector<std::int32_t>& cols() const noexcept { return cols_; }
    const std::vector<Scalar>& values() const noexcept { return values_; }

    /// y = H x
    void apply(std::span<const Scalar> x, std::span<Scalar> y) const;
    Scalar at(std::size_t i, std::size_t j) const;

private:
    std::size_t dim_ = 0;
    std::vector<Triplet<Scalar>> upper_;
    std::vector<std::int64_t> row_ptr_;
    std::vector<std::int32_t> cols_;
    std::vector<Scalar> values_;
};

/// Hamiltonian restricted to a sector basis. Real-symmetric storage is used
/// whenever every element is real (Im xi == 0) unless forced complex.
class SparseHamiltonian {
public:
    SparseHamiltonian(SectorBasisPtr basis, HermitianCsr<double> m);
    SparseHamiltonian(SectorBasisPtr basis, HermitianCsr<cplx> m);

    const SectorBasisPtr& basis() const noexcept { return basis_; }
    std::size_t dim() const noexcept { return basis_->size(); }
    bool is_real() const noexcept { return real_; }

    const HermitianCsr<double>& real_matrix() const;
    const HermitianCsr<cplx>& complex_matrix() const;

    cplx at(std::size_t i, std::size_t j) const;
    /// Upper-triangle entries promoted to complex, deterministic order.
    std::vector<Triplet<cplx>> upper_entries() const;

    /// Coordinate dump: "row col value" per stored entry (both triangles),
    /// 0-based, 17 significant digits. Complex values print "re im".
    void write_coordinate(std::ostream& os) const;

private:
    SectorBasisPtr basis_;
    bool real_;
    HermitianCsr<double> rmat_;
    HermitianCsr<cplx> cmat_;
};

SparseHamiltonian assemble(const ModelParams& p, const SectorBasisPtr& basis, bool rwa);
SparseHamiltonian assemble(const ModelParams& p, const SectorBasisPtr& basis,
                           const AssemblyOptions& opts);

/// Photon-number conserving Hamiltonian at mu = 0 (the LMG-type part plus
/// free field). Rejects mu != 0.
SparseHamiltonian assemble_decoupled(const ModelParams& p, const SectorBasisPtr& basis);

} // namespace dicke
