// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include "dicke/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#include <immintrin.h>
#define DICKE_HAVE_AVX2_TU 1
#endif

namespace dicke::kernels::avx2 {

#ifdef DICKE_HAVE_AVX2_TU

namespace {

inline double hsum(__m256d v) noexcept {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

double dot(const double* x, const double* y, std::size_t n) noexcept {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double s = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        s += x[i] * y[i];
    return s;
}

void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(y + i, _mm256_fmadd_pd(a, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i)));
    for (; i < n; ++i)
        y[i] += alpha * x[i];
}

void scal(double alpha, double* x, std::size_t n) noexcept {
    const __m256d a = _mm256_set1_pd(alpha);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(a, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i)
        x[i] *= alpha;
}

void spmv(const std::int64_t* row_ptr, const std::int32_t* cols, const double* values,
          std::size_t rows, const double* x, double* y) noexcept {
    for (std::size_t r = 0; r < rows; ++r) {
        auto k = row_ptr[r];
        const auto end = row_ptr[r + 1];
        __m256d acc = _mm256_setzero_pd();
        for (; k + 4 <= end; k += 4) {
            const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(cols + k));
            const __m256d xv = _mm256_i32gather_pd(x, idx, 8);
            acc = _mm256_fmadd_pd(_mm256_loadu_pd(values + k), xv, acc);
        }
        double s = hsum(acc);
        for (; k < end; ++k)
            s += values[k] * x[cols[k]];
        y[r] = s;
    }
}

#else

double dot(const double* x, const double* y, std::size_t n) noexcept { return scalar::dot(x, y, n); }
void axpy(double alpha, const double* x, double* y, std::size_t n) noexcept { scalar::axpy(alpha, x, y, n); }
void scal(double alpha, double* x, std::size_t n) noexcept { scalar::scal(alpha, x, n); }
void spmv(const std::int64_t* row_ptr, const std::int32_t* cols, const double* values,
          std::size_t rows, const double* x, double* y) noexcept {
    scalar::spmv(row_ptr, cols, values, rows, x, y);
}

#endif

} // namespace dicke::kernels::avx2
