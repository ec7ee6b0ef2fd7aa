#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by the field functionals and the linear
// propagator. Every kernel has a scalar reference implementation and, on
// x86-64, an AVX2/FMA variant. The active backend is chosen once at startup
// from CPUID and can be forced for equivalence testing.

namespace solcomp::kernels {

enum class Backend { scalar, avx2 };

Backend active_backend();
void force_backend(Backend b);
bool avx2_available();
std::string_view backend_name(Backend b);

// sum_i x[i]^2
double sum_squares(const double* x, std::size_t n);

// sum_i x[i] * y[i]
double dot(const double* x, const double* y, std::size_t n);

// sum_{i=1}^{n-1} (x[i] - x[i-1])^2, interior differences only
double sum_squared_diffs(const double* x, std::size_t n);

// y = A x, row-major A of shape (rows, cols)
void matvec(const double* a, const double* x, double* y,
            std::size_t rows, std::size_t cols);

// x *= s
void scale_inplace(double* x, std::size_t n, double s);

namespace detail {
double sum_squares_scalar(const double* x, std::size_t n);
double dot_scalar(const double* x, const double* y, std::size_t n);
double sum_squared_diffs_scalar(const double* x, std::size_t n);
void matvec_scalar(const double* a, const double* x, double* y,
                   std::size_t rows, std::size_t cols);
void scale_inplace_scalar(double* x, std::size_t n, double s);

#if defined(__x86_64__)
double sum_squares_avx2(const double* x, std::size_t n);
double dot_avx2(const double* x, const double* y, std::size_t n);
double sum_squared_diffs_avx2(const double* x, std::size_t n);
void matvec_avx2(const double* a, const double* x, double* y,
                 std::size_t rows, std::size_t cols);
void scale_inplace_avx2(double* x, std::size_t n, double s);
#endif
} // namespace detail

} // namespace solcomp::kernels
