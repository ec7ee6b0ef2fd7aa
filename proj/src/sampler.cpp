#include "solcomp/sampler.hpp"

#include "solcomp/functionals.hpp"
#include "solcomp/kernels.hpp"
#include "solcomp/macrostate.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace solcomp {

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
    // splitmix64 over master ^ golden-ratio-scrambled stream id
    std::uint64_t z = master ^ (stream * 0x9e3779b97f4a7c15ULL);
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t stream) {
    return std::mt19937_64(split_seed(master, stream));
}

double uniform01(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

double uniform_in(std::mt19937_64& rng, double a, double b) {
    return a + (b - a) * uniform01(rng);
}

long uniform_long(std::mt19937_64& rng, long a, long b) {
    const auto span = static_cast<std::uint64_t>(b - a + 1);
    return a + static_cast<long>(rng() % span);
}

namespace {

void add_bump(ShapeField& u, long center, long width, double height) {
    using std::numbers::pi;
    for (long l = center - width; l <= center + width; ++l) {
        if (!u.in_extent(l)) continue;
        const double x = static_cast<double>(l - center) / static_cast<double>(width);
        const double c = std::cos(0.5 * pi * x);
        u[l] += height * c * c;
    }
}

void rescale_to_charge(ShapeField& u, double sigma_sq) {
    const double c = charge(u);
    if (c <= 0.0) throw FieldError("cannot rescale the zero field");
    kernels::scale_inplace(u.values().data(), u.size(), std::sqrt(sigma_sq / c));
}

} // namespace

ShapeField random_bump_field(const LatticeParams& params, double sigma_sq, int k,
                             double height_lo, double height_hi, long width_lo,
                             long width_hi, std::mt19937_64& rng) {
    const long span = params.hi - params.lo + 1;
    const long margin = std::min<long>(40, std::max<long>(1, span / 10));
    ShapeField u(params);
    long cursor = params.lo + margin;
    for (int i = 0; i < k; ++i) {
        const long w = uniform_long(rng, width_lo, width_hi);
        const long gap = uniform_long(rng, 3, 8);
        const long c = cursor + w + gap;
        if (c + w > params.hi - margin) break;
        add_bump(u, c, w, uniform_in(rng, height_lo, height_hi));
        cursor = c + w;
    }
    if (charge(u) <= 0.0) {
        // window too narrow for the placement walk; center a single bump
        const long w = std::max<long>(1, std::min(width_hi, span / 4));
        add_bump(u, (params.lo + params.hi) / 2, w,
                 uniform_in(rng, height_lo, height_hi));
    }
    rescale_to_charge(u, sigma_sq);
    return u;
}

ShapeField sample_hylomorphic(const LatticeParams& params, double sigma_sq,
                              const Nonlinearity& nl, std::mt19937_64& rng) {
    for (int attempt = 0; attempt < 256; ++attempt) {
        const int k = static_cast<int>(uniform_long(rng, 1, 3));
        auto u = random_bump_field(params, sigma_sq, k, 0.8, 1.4, 3, 8, rng);
        if (is_hylomorphic(u, nl)) return u;
    }
    throw FieldError("sample_hylomorphic: rejection sampling exhausted");
}

ShapeField sample_multi_bump(const LatticeParams& params, double sigma_sq,
                             const Nonlinearity& nl, double alpha, double m,
                             std::mt19937_64& rng) {
    MacroParams mp{alpha, 0.0, m, std::sqrt(sigma_sq)};
    for (int attempt = 0; attempt < 1024; ++attempt) {
        const int k = static_cast<int>(uniform_long(rng, 2, 4));
        auto u = random_bump_field(params, sigma_sq, k, 0.9, 1.3, 3, 7, rng);
        if (classify(u, nl, mp).kind != BumpKind::multi_bump) continue;
        if (internal_energy(u, nl) > m) continue;
        return u;
    }
    throw FieldError("sample_multi_bump: rejection sampling exhausted");
}

ShapeField sample_nonregular_bump(const LatticeParams& params, double sigma_sq,
                                  const Nonlinearity& nl, double alpha,
                                  double beta, double m, std::mt19937_64& rng) {
    MacroParams mp{alpha, beta, m, std::sqrt(sigma_sq)};
    const double root_s0 = std::sqrt(nl.s0);
    for (int attempt = 0; attempt < 1024; ++attempt) {
        const long w = uniform_long(rng, 8, 16);
        const long center = (params.lo + params.hi) / 2;
        ShapeField u(params);
        add_bump(u, center, w, uniform_in(rng, 1.0, 1.3));
        // carve an interior dip that stays above the s0 threshold so the
        // component does not split, creating a monotonicity violation
        const long dip = center + uniform_long(rng, -w / 2, w / 2);
        for (long l = dip - 1; l <= dip + 1; ++l) {
            if (!u.in_extent(l)) continue;
            const double floor_v = root_s0 * 1.05;
            const double target = floor_v + uniform_in(rng, 0.0, 0.1);
            if (u[l] > target) u[l] = target;
        }
        rescale_to_charge(u, sigma_sq);
        if (classify(u, nl, mp).kind != BumpKind::single_bump_nonregular) continue;
        if (internal_energy(u, nl) > m) continue;
        return u;
    }
    throw FieldError("sample_nonregular_bump: rejection sampling exhausted");
}

ComplexField sample_complex_field(const LatticeParams& params, double sigma_sq,
                                  long support, std::mt19937_64& rng) {
    ComplexField psi(params);
    const long center = (params.lo + params.hi) / 2;
    const long half = support / 2;
    for (long l = center - half; l <= center + half; ++l) {
        if (!psi.in_extent(l)) continue;
        const double x = static_cast<double>(l - center) / (0.35 * half + 1.0);
        const double env = std::exp(-x * x);
        psi[l] = {env * uniform_in(rng, -1.0, 1.0), env * uniform_in(rng, -1.0, 1.0)};
    }
    const double c = charge_complex(psi);
    if (c <= 0.0) throw FieldError("sample_complex_field: zero draw");
    const double s = std::sqrt(sigma_sq / c);
    for (auto& z : psi.values()) z *= s;
    return psi;
}

} // namespace solcomp
