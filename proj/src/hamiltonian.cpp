#include "dicke/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include <fmt/format.h>
#include <fmt/ostream.h>

#include "dicke/errors.hpp"

namespace dicke {

void for_each_coupling(const ModelParams& p, const FockState& ket, const AssemblyOptions& opts,
                       const std::function<void(const FockState&, cplx)>& sink) {
    const int n = p.n_atoms;
    const int nu = ket.nu;
    const int n2 = ket.n2;
    const int n1 = n - n2;
    const double inv_pairs = 1.0 / static_cast<double>(n - 1);

    const double diag = p.omega_field * nu + p.omega1 * n1 + p.omega2 * n2 +
                        p.zeta * static_cast<double>(n1) * static_cast<double>(n2) * inv_pairs;
    sink(ket, cplx(diag, 0.0));

    const double g = -p.mu / std::sqrt(static_cast<double>(n));
    if (g != 0.0) {
        // A21 = b2^+ b1 raises n2, A12 = b1^+ b2 lowers it.
        const double raise = std::sqrt(static_cast<double>(n1) * (n2 + 1));
        const double lower = std::sqrt(static_cast<double>(n1 + 1) * n2);
        const bool keep_counter = !opts.rwa && opts.counter_rotating;
        if (n1 > 0 && nu > 0) // A21 a
            sink({nu - 1, n2 + 1}, cplx(g * std::sqrt(static_cast<double>(nu)) * raise, 0.0));
        if (n2 > 0) // A12 a^+
            sink({nu + 1, n2 - 1}, cplx(g * std::sqrt(static_cast<double>(nu + 1)) * lower, 0.0));
        if (keep_counter) {
            if (n1 > 0) // A21 a^+
                sink({nu + 1, n2 + 1}, cplx(g * std::sqrt(static_cast<double>(nu + 1)) * raise, 0.0));
            if (n2 > 0 && nu > 0) // A12 a
                sink({nu - 1, n2 - 1}, cplx(g * std::sqrt(static_cast<double>(nu)) * lower, 0.0));
        }
    }

    if (!opts.rwa && p.xi != cplx(0.0, 0.0)) {
        if (n2 >= 2) { // xi A12^2
            const double f = std::sqrt(static_cast<double>(n1 + 1) * (n1 + 2) * n2 * (n2 - 1));
            sink({nu, n2 - 2}, p.xi * (f * inv_pairs));
        }
        if (n1 >= 2) { // xi^* A21^2
            const double f = std::sqrt(static_cast<double>(n1) * (n1 - 1) * (n2 + 1) * (n2 + 2));
            sink({nu, n2 + 2}, std::conj(p.xi) * (f * inv_pairs));
        }
    }
}

cplx matrix_element(const ModelParams& p, const FockState& bra, const FockState& ket,
                    const AssemblyOptions& opts) {
    cplx out{};
    for_each_coupling(p, ket, opts, [&](const FockState& target, cplx v) {
        if (target == bra)
            out += v;
    });
    return out;
}

cplx matrix_element_full(const ModelParams& p, const FockState& bra, const FockState& ket) {
    return matrix_element(p, bra, ket, AssemblyOptions{});
}

namespace {

double conj_of(double v) { return v; }
cplx conj_of(cplx v) { return std::conj(v); }

} // namespace

template <class Scalar>
HermitianCsr<Scalar>::HermitianCsr(std::size_t dim, std::vector<Triplet<Scalar>> upper)
    : dim_(dim), upper_(std::move(upper)) {
    std::vector<std::vector<std::pair<std::int32_t, Scalar>>> rows(dim);
    for (const auto& t : upper_) {
        rows[static_cast<std::size_t>(t.row)].emplace_back(t.col, t.value);
        if (t.row != t.col)
            rows[static_cast<std::size_t>(t.col)].emplace_back(t.row, conj_of(t.value));
    }
    row_ptr_.assign(dim + 1, 0);
    for (std::size_t r = 0; r < dim; ++r) {
        auto& row = rows[r];
        std::sort(row.begin(), row.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        row_ptr_[r + 1] = row_ptr_[r] + static_cast<std::int64_t>(row.size());
        for (const auto& [c, v] : row) {
            cols_.push_back(c);
            values_.push_back(v);
        }
    }
}

template <class Scalar>
void HermitianCsr<Scalar>::apply(std::span<const Scalar> x, std::span<Scalar> y) const {
    if constexpr (std::is_same_v<Scalar, double>) {
        kernels::spmv({row_ptr_, cols_, values_}, x, y);
    } else {
        for (std::size_t r = 0; r < dim_; ++r) {
            Scalar s{};
            for (auto k = row_ptr_[r]; k < row_ptr_[r + 1]; ++k)
                s += values_[static_cast<std::size_t>(k)] * x[static_cast<std::size_t>(cols_[static_cast<std::size_t>(k)])];
            y[r] = s;
        }
    }
}

template <class Scalar>
Scalar HermitianCsr<Scalar>::at(std::size_t i, std::size_t j) const {
    for (auto k = row_ptr_[i]; k < row_ptr_[i + 1]; ++k)
        if (static_cast<std::size_t>(cols_[static_cast<std::size_t>(k)]) == j)
            return values_[static_cast<std::size_t>(k)];
    return Scalar{};
}

template class HermitianCsr<double>;
template class HermitianCsr<cplx>;

SparseHamiltonian::SparseHamiltonian(SectorBasisPtr basis, HermitianCsr<double> m)
    : basis_(std::move(basis)), real_(true), rmat_(std::move(m)) {}

SparseHamiltonian::SparseHamiltonian(SectorBasisPtr basis, HermitianCsr<cplx> m)
    : basis_(std::move(basis)), real_(false), cmat_(std::move(m)) {}

const HermitianCsr<double>& SparseHamiltonian::real_matrix() const {
    if (!real_)
        throw InvalidArgument("Hamiltonian is stored as complex");
    return rmat_;
}

const HermitianCsr<cplx>& SparseHamiltonian::complex_matrix() const {
    if (real_)
        throw InvalidArgument("Hamiltonian is stored as real");
    return cmat_;
}

cplx SparseHamiltonian::at(std::size_t i, std::size_t j) const {
    return real_ ? cplx(rmat_.at(i, j), 0.0) : cmat_.at(i, j);
}

std::vector<Triplet<cplx>> SparseHamiltonian::upper_entries() const {
    if (!real_)
        return cmat_.upper();
    std::vector<Triplet<cplx>> out;
    out.reserve(rmat_.upper().size());
    for (const auto& t : rmat_.upper())
        out.push_back({t.row, t.col, cplx(t.value, 0.0)});
    return out;
}

void SparseHamiltonian::write_coordinate(std::ostream& os) const {
    const std::size_t n = dim();
    if (real_) {
        for (std::size_t r = 0; r < n; ++r)
            for (auto k = rmat_.row_ptr()[r]; k < rmat_.row_ptr()[r + 1]; ++k)
                fmt::print(os, "{} {} {:.17g}\n", r, rmat_.cols()[static_cast<std::size_t>(k)],
                           rmat_.values()[static_cast<std::size_t>(k)]);
    } else {
        for (std::size_t r = 0; r < n; ++r)
            for (auto k = cmat_.row_ptr()[r]; k < cmat_.row_ptr()[r + 1]; ++k) {
                const auto v = cmat_.values()[static_cast<std::size_t>(k)];
                fmt::print(os, "{} {} {:.17g} {:.17g}\n", r, cmat_.cols()[static_cast<std::size_t>(k)],
                           v.real(), v.imag());
            }
    }
}

SparseHamiltonian assemble(const ModelParams& p, const SectorBasisPtr& basis, bool rwa) {
    AssemblyOptions opts;
    opts.rwa = rwa;
    return assemble(p, basis, opts);
}

SparseHamiltonian assemble(const ModelParams& p, const SectorBasisPtr& basis,
                           const AssemblyOptions& opts) {
    p.validate();
    if (!basis)
        throw InvalidArgument("null basis");
    if (basis->n_atoms() != p.n_atoms)
        throw InvalidArgument(fmt::format("basis has N_a={} but model has N_a={}", basis->n_atoms(),
                                          p.n_atoms));
    if (opts.rwa) {
        if (!basis->label().is_rwa_block())
            throw InvalidArgument("RWA assembly needs an RWA block basis, got " +
                                  basis->label().to_string());
        if (p.xi != cplx(0.0, 0.0))
            throw InvalidArgument("RWA drops the xi terms; set xi = 0 explicitly");
    } else if (basis->label().is_rwa_block()) {
        throw InvalidArgument("full-model assembly needs a parity or full basis");
    }

    const std::size_t n = basis->size();
    std::vector<Triplet<cplx>> upper;
    std::vector<Triplet<cplx>> column;
    bool all_real = true;
    for (std::size_t j = 0; j < n; ++j) {
        column.clear();
        for_each_coupling(p, (*basis)[j], opts, [&](const FockState& target, cplx v) {
            const auto i = basis->index_of(target);
            if (!i || *i > j || v == cplx(0.0, 0.0))
                return;
            column.push_back({static_cast<std::int32_t>(*i), static_cast<std::int32_t>(j), v});
        });
        std::sort(column.begin(), column.end(),
                  [](const auto& a, const auto& b) { return a.row < b.row; });
        for (const auto& t : column) {
            if (t.value.imag() != 0.0)
                all_real = false;
            upper.push_back(t);
        }
    }

    if (all_real && !opts.force_complex) {
        std::vector<Triplet<double>> real_upper;
        real_upper.reserve(upper.size());
        for (const auto& t : upper)
            real_upper.push_back({t.row, t.col, t.value.real()});
        return {basis, HermitianCsr<double>(n, std::move(real_upper))};
    }
    return {basis, HermitianCsr<cplx>(n, std::move(upper))};
}

SparseHamiltonian assemble_decoupled(const ModelParams& p, const SectorBasisPtr& basis) {
    if (p.mu != 0.0)
        throw InvalidArgument("decoupled Hamiltonian requires mu = 0");
    return assemble(p, basis, AssemblyOptions{});
}

} // namespace dicke
