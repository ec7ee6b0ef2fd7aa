#include "solcomp/kernels.hpp"

namespace solcomp::kernels {

bool avx2_available() {
#if defined(__x86_64__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

namespace {
Backend g_backend = avx2_available() ? Backend::avx2 : Backend::scalar;
}

Backend active_backend() { return g_backend; }

void force_backend(Backend b) {
    if (b == Backend::avx2 && !avx2_available()) return;
    g_backend = b;
}

std::string_view backend_name(Backend b) {
    return b == Backend::avx2 ? "avx2" : "scalar";
}

double sum_squares(const double* x, std::size_t n) {
#if defined(__x86_64__)
    if (g_backend == Backend::avx2) return detail::sum_squares_avx2(x, n);
#endif
    return detail::sum_squares_scalar(x, n);
}

double dot(const double* x, const double* y, std::size_t n) {
#if defined(__x86_64__)
    if (g_backend == Backend::avx2) return detail::dot_avx2(x, y, n);
#endif
    return detail::dot_scalar(x, y, n);
}

double sum_squared_diffs(const double* x, std::size_t n) {
#if defined(__x86_64__)
    if (g_backend == Backend::avx2) return detail::sum_squared_diffs_avx2(x, n);
#endif
    return detail::sum_squared_diffs_scalar(x, n);
}

void matvec(const double* a, const double* x, double* y,
            std::size_t rows, std::size_t cols) {
#if defined(__x86_64__)
    if (g_backend == Backend::avx2) {
        detail::matvec_avx2(a, x, y, rows, cols);
        return;
    }
#endif
    detail::matvec_scalar(a, x, y, rows, cols);
}

void scale_inplace(double* x, std::size_t n, double s) {
#if defined(__x86_64__)
    if (g_backend == Backend::avx2) {
        detail::scale_inplace_avx2(x, n, s);
        return;
    }
#endif
    detail::scale_inplace_scalar(x, n, s);
}

} // namespace solcomp::kernels
