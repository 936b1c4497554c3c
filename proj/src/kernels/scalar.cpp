#include "dicke/kernels.hpp"

namespace dicke::kernels::scalar {

double dot(const double* x, const double* y, std::size_t n) noexcept {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) noexcept {
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= alpha;
}

void spmv(const std::int64_t* row_ptr, const std::int32_t* cols, const double* values,
          std::size_t rows, const double* x, double* y) noexcept {
    for (std::size_t r = 0; r < rows; ++r) {
        double s = 0.0;
        for (auto k = row_ptr[r]; k < row_ptr[r + 1]; ++k)
            s += values[k] * x[cols[k]];
        y[r] = s;
    }
}

} // namespace dicke::kernels::scalar
