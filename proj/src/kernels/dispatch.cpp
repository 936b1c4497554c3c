#include <atomic>
#include <cstdlib>
#include <string_view>

#include "dicke/errors.hpp"
#include "dicke/kernels.hpp"

namespace dicke::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if (defined(__x86_64__) || defined(__i386__)) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

Backend initial_backend() noexcept {
    if (const char* env = std::getenv("DICKE_KERNELS")) {
        const std::string_view v(env);
        if (v == "scalar")
            return Backend::Scalar;
    }
    return cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
}

std::atomic<Backend>& backend_slot() noexcept {
    static std::atomic<Backend> slot{initial_backend()};
    return slot;
}

void check_sizes(std::size_t a, std::size_t b) {
    if (a != b)
        throw InvalidArgument("kernel operands have mismatched lengths");
}

} // namespace

Backend active_backend() noexcept { return backend_slot().load(std::memory_order_relaxed); }

bool backend_available(Backend b) noexcept { return b == Backend::Scalar || cpu_has_avx2(); }

bool set_backend(Backend b) noexcept {
    if (!backend_available(b))
        return false;
    backend_slot().store(b, std::memory_order_relaxed);
    return true;
}

std::string_view backend_name(Backend b) noexcept {
    return b == Backend::Avx2 ? "avx2" : "scalar";
}

double dot(std::span<const double> x, std::span<const double> y) {
    check_sizes(x.size(), y.size());
    if (active_backend() == Backend::Avx2)
        return avx2::dot(x.data(), y.data(), x.size());
    return scalar::dot(x.data(), y.data(), x.size());
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    check_sizes(x.size(), y.size());
    if (active_backend() == Backend::Avx2)
        avx2::axpy(alpha, x.data(), y.data(), x.size());
    else
        scalar::axpy(alpha, x.data(), y.data(), x.size());
}

void scal(double alpha, std::span<double> x) {
    if (active_backend() == Backend::Avx2)
        avx2::scal(alpha, x.data(), x.size());
    else
        scalar::scal(alpha, x.data(), x.size());
}

void spmv(const CsrView& a, std::span<const double> x, std::span<double> y) {
    check_sizes(a.rows(), y.size());
    check_sizes(a.rows(), x.size());
    if (active_backend() == Backend::Avx2)
        avx2::spmv(a.row_ptr.data(), a.cols.data(), a.values.data(), a.rows(), x.data(), y.data());
    else
        scalar::spmv(a.row_ptr.data(), a.cols.data(), a.values.data(), a.rows(), x.data(), y.data());
}

} // namespace dicke::kernels
