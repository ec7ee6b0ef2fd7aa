#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solcomp/kernels.hpp"

#include <random>
#include <vector>

using namespace solcomp;

namespace {
std::vector<double> random_vec(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> d(-1.0, 1.0);
    std::vector<double> v(n);
    for (auto& x : v) x = d(rng);
    return v;
}
} // namespace

TEST_CASE("scalar kernels on small hand inputs") {
    const std::vector<double> x{1.0, 2.0, 3.0};
    const std::vector<double> y{4.0, -5.0, 6.0};
    CHECK(kernels::detail::sum_squares_scalar(x.data(), 3) == doctest::Approx(14.0));
    CHECK(kernels::detail::dot_scalar(x.data(), y.data(), 3) == doctest::Approx(12.0));
    // (2-1)^2 + (3-2)^2
    CHECK(kernels::detail::sum_squared_diffs_scalar(x.data(), 3) == doctest::Approx(2.0));
}

TEST_CASE("matvec matches a plain triple loop") {
    const std::size_t rows = 7, cols = 5;
    const auto a = random_vec(rows * cols, 11);
    const auto x = random_vec(cols, 12);
    std::vector<double> expect(rows, 0.0);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) expect[i] += a[i * cols + j] * x[j];
    std::vector<double> got(rows, 0.0);
    kernels::matvec(a.data(), x.data(), got.data(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        CHECK(got[i] == doctest::Approx(expect[i]).epsilon(1e-12));
}

TEST_CASE("avx2 variants agree with scalar to tight tolerance") {
    if (!kernels::avx2_available()) {
        MESSAGE("avx2 not available, dispatch test skipped");
        return;
    }
    for (std::size_t n : {1u, 2u, 3u, 4u, 7u, 8u, 64u, 1000u, 1023u}) {
        const auto x = random_vec(n, n);
        const auto y = random_vec(n, n + 1);
        CHECK(kernels::detail::sum_squares_avx2(x.data(), n) ==
              doctest::Approx(kernels::detail::sum_squares_scalar(x.data(), n))
                  .epsilon(1e-13));
        CHECK(kernels::detail::dot_avx2(x.data(), y.data(), n) ==
              doctest::Approx(kernels::detail::dot_scalar(x.data(), y.data(), n))
                  .epsilon(1e-13));
        CHECK(kernels::detail::sum_squared_diffs_avx2(x.data(), n) ==
              doctest::Approx(kernels::detail::sum_squared_diffs_scalar(x.data(), n))
                  .epsilon(1e-13));
    }
    const std::size_t rows = 33, cols = 129;
    const auto a = random_vec(rows * cols, 5);
    const auto x = random_vec(cols, 6);
    std::vector<double> ys(rows), yv(rows);
    kernels::detail::matvec_scalar(a.data(), x.data(), ys.data(), rows, cols);
    kernels::detail::matvec_avx2(a.data(), x.data(), yv.data(), rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        CHECK(yv[i] == doctest::Approx(ys[i]).epsilon(1e-13));
}

TEST_CASE("force_backend switches the dispatched implementation") {
    const auto x = random_vec(257, 99);
    kernels::force_backend(kernels::Backend::scalar);
    const double s1 = kernels::sum_squares(x.data(), x.size());
    CHECK(kernels::active_backend() == kernels::Backend::scalar);
    kernels::force_backend(kernels::avx2_available() ? kernels::Backend::avx2
                                                     : kernels::Backend::scalar);
    const double s2 = kernels::sum_squares(x.data(), x.size());
    CHECK(s1 == doctest::Approx(s2).epsilon(1e-13));
}

TEST_CASE("scale_inplace") {
    std::vector<double> x{1.0, -2.0, 0.5};
    kernels::scale_inplace(x.data(), x.size(), 2.0);
    CHECK(x[0] == doctest::Approx(2.0));
    CHECK(x[1] == doctest::Approx(-4.0));
    CHECK(x[2] == doctest::Approx(1.0));
}
