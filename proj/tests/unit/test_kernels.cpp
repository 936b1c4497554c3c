#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "dicke/kernels.hpp"
#include "oracles.hpp"

using namespace dicke::kernels;

namespace {

bool have_avx2() { return backend_available(Backend::Avx2); }

// Random sparse matrix in CSR form, both triangles, some empty rows.
struct RandomCsr {
    std::vector<std::int64_t> row_ptr{0};
    std::vector<std::int32_t> cols;
    std::vector<double> values;

    RandomCsr(std::size_t n, std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::uniform_real_distribution<double> val(-2.0, 2.0);
        std::uniform_int_distribution<int> len(0, 11);
        std::uniform_int_distribution<std::int32_t> col(0, static_cast<std::int32_t>(n) - 1);
        for (std::size_t r = 0; r < n; ++r) {
            const int k = r % 7 == 3 ? 0 : len(rng);
            for (int i = 0; i < k; ++i) {
                cols.push_back(col(rng));
                values.push_back(val(rng));
            }
            row_ptr.push_back(static_cast<std::int64_t>(cols.size()));
        }
    }
    CsrView view() const { return {row_ptr, cols, values}; }
};

double tol_for(const std::vector<double>& x, const std::vector<double>& y) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        s += std::abs(x[i] * y[i]);
    return 1e-14 * std::max(1.0, s);
}

} // namespace

TEST(Kernels, ScalarDotMatchesNaive) {
    const auto x = oracle::random_vector(37, 1), y = oracle::random_vector(37, 2);
    long double ref = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i)
        ref += static_cast<long double>(x[i]) * y[i];
    EXPECT_NEAR(scalar::dot(x.data(), y.data(), x.size()), static_cast<double>(ref), tol_for(x, y));
}

TEST(Kernels, Avx2MatchesScalarAcrossLengths) {
    if (!have_avx2())
        GTEST_SKIP() << "CPU lacks AVX2/FMA";
    for (std::size_t n : {0u, 1u, 3u, 4u, 5u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u, 1003u}) {
        const auto x = oracle::random_vector(n, 10 + n), y = oracle::random_vector(n, 20 + n);
        EXPECT_NEAR(avx2::dot(x.data(), y.data(), n), scalar::dot(x.data(), y.data(), n), tol_for(x, y)) << n;

        auto ys = y, ya = y;
        scalar::axpy(-0.37, x.data(), ys.data(), n);
        avx2::axpy(-0.37, x.data(), ya.data(), n);
        for (std::size_t i = 0; i < n; ++i)
            EXPECT_NEAR(ya[i], ys[i], 1e-15 * (1.0 + std::abs(ys[i])));

        auto xs = x, xa = x;
        scalar::scal(1.7, xs.data(), n);
        avx2::scal(1.7, xa.data(), n);
        EXPECT_EQ(xs, xa);
    }
}

TEST(Kernels, SpmvAgreesBetweenBackends) {
    for (std::size_t n : {1u, 5u, 17u, 250u}) {
        const RandomCsr a(n, 7 * n + 1);
        const auto x = oracle::random_vector(n, 99);
        std::vector<double> ref(n, 0.0);
        for (std::size_t r = 0; r < n; ++r)
            for (auto k = a.row_ptr[r]; k < a.row_ptr[r + 1]; ++k)
                ref[r] += a.values[k] * x[a.cols[k]];

        std::vector<double> ys(n, 7.0);
        scalar::spmv(a.row_ptr.data(), a.cols.data(), a.values.data(), n, x.data(), ys.data());
        for (std::size_t r = 0; r < n; ++r)
            EXPECT_NEAR(ys[r], ref[r], 1e-13);
        if (!have_avx2())
            continue;
        std::vector<double> ya(n, -3.0);
        avx2::spmv(a.row_ptr.data(), a.cols.data(), a.values.data(), n, x.data(), ya.data());
        for (std::size_t r = 0; r < n; ++r)
            EXPECT_NEAR(ya[r], ys[r], 1e-13);
    }
}

TEST(Kernels, DispatchFollowsSelectedBackend) {
    const auto before = active_backend();
    ASSERT_TRUE(set_backend(Backend::Scalar));
    EXPECT_EQ(active_backend(), Backend::Scalar);
    const auto x = oracle::random_vector(33, 5), y = oracle::random_vector(33, 6);
    EXPECT_EQ(dot(x, y), scalar::dot(x.data(), y.data(), x.size()));
    if (have_avx2()) {
        ASSERT_TRUE(set_backend(Backend::Avx2));
        EXPECT_EQ(dot(x, y), avx2::dot(x.data(), y.data(), x.size()));
    } else {
        EXPECT_FALSE(set_backend(Backend::Avx2));
        EXPECT_EQ(active_backend(), Backend::Scalar);
    }
    set_backend(before);
    EXPECT_EQ(backend_name(Backend::Scalar), "scalar");
    EXPECT_EQ(backend_name(Backend::Avx2), "avx2");
}

TEST(Kernels, SizeMismatchThrows) {
    std::vector<double> x(3), y(4);
    EXPECT_THROW(dot(x, y), std::exception);
    EXPECT_THROW(axpy(1.0, x, y), std::exception);
}
