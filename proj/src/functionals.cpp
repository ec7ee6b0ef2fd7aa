#include "solcomp/functionals.hpp"

#include "solcomp/kernels.hpp"

#include <algorithm>
#include <cmath>

namespace solcomp {

bool RegionSplit::in_minus(long l) const {
    return std::binary_search(minus.begin(), minus.end(), l);
}

double charge(const ShapeField& u) {
    return kernels::sum_squares(u.values().data(), u.size());
}

double charge_complex(const ComplexField& psi) {
    // |z|^2 summed; the complex vector is a contiguous (re, im) double array
    const auto* d = reinterpret_cast<const double*>(psi.values().data());
    return kernels::sum_squares(d, 2 * psi.size());
}

RegionSplit region_split(const ShapeField& u, const Nonlinearity& nl) {
    RegionSplit rs;
    bool in_run = false;
    long run_start = 0;
    for (long l = u.lo(); l <= u.hi(); ++l) {
        const double v = u[l];
        if (v * v > nl.s0) {
            rs.minus.push_back(l);
            if (!in_run) {
                in_run = true;
                run_start = l;
            }
        } else if (in_run) {
            rs.components.emplace_back(run_start, l - 1);
            in_run = false;
        }
    }
    if (in_run) rs.components.emplace_back(run_start, u.hi());
    return rs;
}

bool is_hylomorphic(const ShapeField& u, const Nonlinearity& nl) {
    const double s0 = nl.s0;
    return std::any_of(u.values().begin(), u.values().end(),
                       [s0](double v) { return v * v > s0; });
}

std::pair<double, double> split_energy(const ShapeField& u, const Nonlinearity& nl) {
    const auto rs = region_split(u, nl);
    const double inv_h2 = 1.0 / (u.params().h * u.params().h);
    const auto [dlo, dhi] = diff_index_range(u.params());
    double jp = 0.0, jm = 0.0;
    for (long l = dlo; l <= dhi; ++l) {
        const double d = u.at(l) - u.at(l - 1);
        const double ul = u.at(l);
        const double term = inv_h2 * d * d - nl.F(ul * ul);
        (rs.in_minus(l) ? jm : jp) += term;
    }
    return {jp, jm};
}

double internal_energy(const ShapeField& u, const Nonlinearity& nl) {
    const auto [jp, jm] = split_energy(u, nl);
    return jp + jm;
}

double kinetic_energy(const ShapeField& u, const PhaseField& theta) {
    if (u.params() != theta.params())
        throw FieldError("kinetic_energy: mismatched extents");
    const double inv_h2 = 1.0 / (u.params().h * u.params().h);
    const auto [dlo, dhi] = diff_index_range(u.params());
    double acc = 0.0;
    for (long l = dlo; l <= dhi; ++l) {
        const double dth = theta.at(l) - theta.at(l - 1);
        const double ul = u.at(l);
        acc += ul * ul * dth * dth;
    }
    return inv_h2 * acc;
}

double energy_complex(const ComplexField& psi, const Nonlinearity& nl) {
    const double inv_h2 = 1.0 / (psi.params().h * psi.params().h);
    const auto [dlo, dhi] = diff_index_range(psi.params());
    double acc = 0.0;
    for (long l = dlo; l <= dhi; ++l) {
        const auto d = psi.at(l) - psi.at(l - 1);
        acc += inv_h2 * std::norm(d) - nl.F(std::norm(psi.at(l)));
    }
    return acc;
}

std::pair<ShapeField, PhaseField> polar_decompose(const ComplexField& psi) {
    ShapeField u(psi.params());
    PhaseField theta(psi.params());
    for (long l = psi.lo(); l <= psi.hi(); ++l) {
        const auto z = psi[l];
        const double r = std::abs(z);
        u[l] = r;
        theta[l] = r == 0.0 ? 0.0 : std::arg(z);
    }
    return {std::move(u), std::move(theta)};
}

ComplexField polar_recompose(const ShapeField& u, const PhaseField& theta) {
    if (u.params() != theta.params())
        throw FieldError("polar_recompose: mismatched extents");
    ComplexField psi(u.params());
    for (long l = u.lo(); l <= u.hi(); ++l)
        psi[l] = std::polar(u[l], theta[l]);
    return psi;
}

ShapeField make_vanishing(double sigma, long n, long center,
                          const LatticeParams& params) {
    if (!(sigma > 0.0)) throw FieldError("make_vanishing: sigma must be positive");
    if (n < 0) throw FieldError("make_vanishing: n must be non-negative");
    if (center - n < params.lo || center + n > params.hi)
        throw FieldError("make_vanishing: plateau window overflows the extent");
    const double eps = sigma / std::sqrt(static_cast<double>(2 * n + 1));
    ShapeField u(params);
    for (long l = center - n; l <= center + n; ++l) u[l] = eps;
    return u;
}

} // namespace solcomp
