// Lowest eigenpairs of Hermitian sector Hamiltonians: dense for small
// blocks, Lanczos with full reorthogonalisation above.

#include <algorithm>
#include <cmath>
#include <random>

#include <Eigen/Dense>
#include <fmt/format.h>

#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"
#include "dicke/spectrum.hpp"

namespace dicke {

namespace {

double inner_re(std::span<const double> x, std::span<const double> y) { return kernels::dot(x, y); }

cplx inner(std::span<const cplx> x, std::span<const cplx> y) {
    cplx s{};
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::conj(x[i]) * y[i];
    return s;
}

double inner(std::span<const double> x, std::span<const double> y) { return inner_re(x, y); }

void axpy(double a, std::span<const double> x, std::span<double> y) { kernels::axpy(a, x, y); }

void axpy(cplx a, std::span<const cplx> x, std::span<cplx> y) {
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] += a * x[i];
}

void scale(double a, std::span<double> x) { kernels::scal(a, x); }

void scale(double a, std::span<cplx> x) {
    for (auto& v : x)
        v *= a;
}

template <class S>
S dotc(const std::vector<S>& x, const std::vector<S>& y) {
    return inner(std::span<const S>(x), std::span<const S>(y));
}

template <class S>
double norm(std::span<const S> x) {
    return std::sqrt(std::abs(inner(x, x)));
}

template <class S>
std::vector<S> random_unit(std::size_t n, std::uint64_t salt) {
    std::mt19937_64 rng(0x9e3779b97f4a7c15ULL ^ (n * 1315423911ULL) ^ salt);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    std::vector<S> v(n);
    for (auto& x : v)
        x = S(dist(rng));
    scale(1.0 / norm<S>(v), std::span<S>(v));
    return v;
}

/// Start/reference vector keyed by the Fock states, so that bases sharing
/// states (nested cutoffs) see the same components.
template <class S>
std::vector<S> reference_vector(const SectorBasis& basis) {
    std::vector<S> v(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::uint64_t z = (static_cast<std::uint64_t>(basis[i].nu) << 32) ^
                          static_cast<std::uint64_t>(basis[i].n2) ^ 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL; // splitmix64 finaliser
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        v[i] = S(0.5 + static_cast<double>(z >> 11) * 0x1.0p-53);
    }
    scale(1.0 / norm<S>(v), std::span<S>(v));
    return v;
}

/// Rotates so the largest-magnitude amplitude is real positive.
std::vector<cplx> fix_phase(std::vector<cplx> v) {
    std::size_t best = 0;
    double best_abs = -1.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const double a = std::abs(v[i]);
        if (a > best_abs * (1.0 + 1e-12)) {
            best_abs = a;
            best = i;
        }
    }
    if (best_abs > 0.0) {
        const cplx phase = std::conj(v[best]) / best_abs;
        for (auto& x : v)
            x *= phase;
        v[best] = cplx(v[best].real(), 0.0);
    }
    return v;
}

template <class S>
double residual_of(const HermitianCsr<S>& h, std::span<const S> v, double e) {
    std::vector<S> hv(v.size());
    h.apply(v, hv);
    double r = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i)
        r += std::norm(hv[i] - e * v[i]);
    return std::sqrt(r);
}

template <class S>
std::vector<cplx> to_complex(std::span<const S> v) {
    return {v.begin(), v.end()};
}

template <class S>
std::vector<EigenPair> dense_lowest(const HermitianCsr<S>& h, int k, const SectorBasis& basis,
                                    const SolverOptions& opts) {
    const auto& label = basis.label();
    using Mat = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;
    const auto n = static_cast<Eigen::Index>(h.dim());
    Mat m = Mat::Zero(n, n);
    for (const auto& t : h.upper()) {
        m(t.row, t.col) = t.value;
        if (t.row != t.col) {
            if constexpr (std::is_same_v<S, double>)
                m(t.col, t.row) = t.value;
            else
                m(t.col, t.row) = std::conj(t.value);
        }
    }
    Eigen::SelfAdjointEigenSolver<Mat> es(m);
    if (es.info() != Eigen::Success)
        throw ConvergenceError("dense eigensolver failed", std::numeric_limits<double>::infinity());

    // Inside a degenerate cluster the first vector is the projection of the
    // reference vector, the way Lanczos started from it would see it.
    Mat vecs = es.eigenvectors();
    const auto& vals = es.eigenvalues();
    const auto ref = reference_vector<S>(basis);
    const Eigen::Map<const Eigen::Matrix<S, Eigen::Dynamic, 1>> r(ref.data(), n);
    for (Eigen::Index first = 0; first < k;) {
        Eigen::Index last = first + 1;
        while (last < n && vals(last) - vals(last - 1) < kDegeneracyTol)
            ++last;
        const Eigen::Index size = last - first;
        if (size > 1) {
            const auto block = vecs.middleCols(first, size);
            Eigen::Matrix<S, Eigen::Dynamic, 1> proj = block * (block.adjoint() * r);
            if (proj.norm() > 1e-8) {
                Mat stacked(n, size + 1);
                stacked.col(0) = proj / proj.norm();
                stacked.rightCols(size) = block;
                Eigen::HouseholderQR<Mat> qr(stacked);
                const Mat q = qr.householderQ() * Mat::Identity(n, size);
                vecs.middleCols(first, size) = q;
            }
        }
        first = last;
    }

    std::vector<EigenPair> out;
    for (int i = 0; i < k; ++i) {
        std::vector<S> v(static_cast<std::size_t>(n));
        for (Eigen::Index row = 0; row < n; ++row)
            v[static_cast<std::size_t>(row)] = vecs(row, i);
        const double e = es.eigenvalues()(i);
        const double res = residual_of<S>(h, v, e);
        if (res > opts.residual_tol)
            throw ConvergenceError(fmt::format("dense eigenpair residual {:.3e} above tolerance", res), res);
        out.push_back({e, fix_phase(to_complex<S>(v)), label, res});
    }
    return out;
}

template <class S>
std::vector<EigenPair> lanczos_lowest(const HermitianCsr<S>& h, int k, const SectorBasis& sector,
                                      const SolverOptions& opts) {
    const auto& label = sector.label();
    const std::size_t n = h.dim();
    const auto kk = static_cast<std::size_t>(k);
    std::vector<std::vector<S>> basis;
    std::vector<double> alpha, beta;
    basis.reserve(std::min<std::size_t>(n, 256));

    std::vector<S> q = reference_vector<S>(sector);
    std::vector<S> w(n);
    double scale_est = 1.0;
    double best_residual = std::numeric_limits<double>::infinity();
    std::uint64_t restarts = 0;

    for (std::size_t j = 0; j < n; ++j) {
        basis.push_back(q);
        h.apply(basis.back(), w);
        const double a = std::real(dotc<S>(basis.back(), w));
        alpha.push_back(a);

        // Full reorthogonalisation, two passes.
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& v : basis)
                axpy(-dotc<S>(v, w), std::span<const S>(v), std::span<S>(w));
        const double b = norm<S>(w);
        scale_est = std::max({scale_est, std::abs(a), b});

        const std::size_t m = j + 1;
        const bool last = (m == n);
        const bool breakdown = b <= 1e-12 * scale_est;
        const bool check = m >= kk && (last || breakdown || m % opts.check_every == 0 || m == kk);
        if (check) {
            Eigen::VectorXd diag = Eigen::Map<const Eigen::VectorXd>(alpha.data(), static_cast<Eigen::Index>(m));
            Eigen::VectorXd sub(static_cast<Eigen::Index>(m > 0 ? m - 1 : 0));
            for (std::size_t i = 0; i + 1 < m; ++i)
                sub(static_cast<Eigen::Index>(i)) = beta[i];
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
            es.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);

            bool estimates_ok = true;
            for (std::size_t i = 0; i < kk; ++i) {
                const double est = b * std::abs(es.eigenvectors()(static_cast<Eigen::Index>(m - 1),
                                                                  static_cast<Eigen::Index>(i)));
                if (est > 0.1 * opts.residual_tol && !last)
                    estimates_ok = false;
            }
            if (estimates_ok) {
                std::vector<EigenPair> out;
                double worst = 0.0;
                for (std::size_t i = 0; i < kk; ++i) {
                    std::vector<S> x(n, S{});
                    for (std::size_t c = 0; c < m; ++c)
                        axpy(S(es.eigenvectors()(static_cast<Eigen::Index>(c), static_cast<Eigen::Index>(i))),
                             std::span<const S>(basis[c]), std::span<S>(x));
                    scale(1.0 / norm<S>(x), std::span<S>(x));
                    const double e = es.eigenvalues()(static_cast<Eigen::Index>(i));
                    const double res = residual_of<S>(h, x, e);
                    worst = std::max(worst, res);
                    out.push_back({e, fix_phase(to_complex<S>(x)), label, res});
                }
                best_residual = std::min(best_residual, worst);
                if (worst <= opts.residual_tol)
                    return out;
            }
        }

        if (last)
            break;
        if (breakdown) {
            // Invariant subspace found: continue from a fresh direction.
            q = random_unit<S>(n, ++restarts);
            for (int pass = 0; pass < 2; ++pass)
                for (const auto& v : basis)
                    axpy(-dotc<S>(v, q), std::span<const S>(v), std::span<S>(q));
            const double qn = norm<S>(q);
            if (qn <= 1e-10)
                break;
            scale(1.0 / qn, std::span<S>(q));
            beta.push_back(0.0);
        } else {
            q = w;
            scale(1.0 / b, std::span<S>(q));
            beta.push_back(b);
        }
    }
    throw ConvergenceError(
        fmt::format("Lanczos did not reach residual {:.1e} (best {:.3e})", opts.residual_tol, best_residual),
        best_residual);
}

template <class S>
std::vector<EigenPair> solve(const HermitianCsr<S>& h, int k, const SectorBasis& basis,
                             const SolverOptions& opts) {
    if (h.dim() <= opts.dense_threshold)
        return dense_lowest(h, k, basis, opts);
    return lanczos_lowest(h, k, basis, opts);
}

} // namespace

std::vector<EigenPair> lowest_eigenpair(const SparseHamiltonian& h, int k, const SolverOptions& opts) {
    if (k < 1 || static_cast<std::size_t>(k) > h.dim())
        throw InvalidArgument(fmt::format("requested {} eigenpairs of a {}-dimensional matrix", k, h.dim()));
    if (h.is_real())
        return solve(h.real_matrix(), k, *h.basis(), opts);
    return solve(h.complex_matrix(), k, *h.basis(), opts);
}

} // namespace dicke
