#pragma once

// Dense/sparse real kernels used by the Lanczos inner loop.
//
// Every kernel has a scalar reference implementation and an AVX2/FMA
// variant. The active backend is chosen once at startup from the CPU
// features (overridable with DICKE_KERNELS=scalar|avx2 or set_backend).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace dicke::kernels {

enum class Backend { Scalar, Avx2 };

/// Compressed-row view of a real matrix (full storage, both triangles).
struct CsrView {
    std::span<const std::int64_t> row_ptr;
    std::span<const std::int32_t> cols;
    std::span<const double> values;
    std::size_t rows() const noexcept { return row_ptr.empty() ? 0 : row_ptr.size() - 1; }
};

double dot(std::span<const double> x, std::span<const double> y);
/// y += alpha * x
void axpy(double alpha, std::span<const double> x, std::span<double> y);
/// x *= alpha
void scal(double alpha, std::span<double> x);
/// y = A x
void spmv(const CsrView& a, std::span<const double> x, std::span<double> y);

Backend active_backend() noexcept;
/// Forces a backend. Returns false (and keeps the current one) when the CPU
/// lacks the requested instruction set.
bool set_backend(Backend b) noexcept;
bool backend_available(Backend b) noexcept;
std::string_view backend_name(Backend b) noexcept;

namespace scalar {
double dot(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;
void spmv(const std::int64_t* row_ptr, const std::int32_t* cols, const double* values,
          std::size_t rows, const double* x, double* y) noexcept;
} // namespace scalar

namespace avx2 {
double dot(const double* x, const double* y, std::size_t n) noexcept;
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept;
void scal(double alpha, double* x, std::size_t n) noexcept;
void spmv(const std::int64_t* row_ptr, const std::int32_t* cols, const double* values,
          std::size_t rows, const double* x, double* y) noexcept;
} // namespace avx2

} // namespace dicke::kernels
