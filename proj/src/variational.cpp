#include "solcomp/variational.hpp"

#include "solcomp/functionals.hpp"
#include "solcomp/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace solcomp {

std::vector<double> grad_J(const ShapeField& u, const Nonlinearity& nl) {
    const double inv_h2 = 1.0 / (u.params().h * u.params().h);
    std::vector<double> g(u.size());
    for (long l = u.lo(); l <= u.hi(); ++l) {
        const double ul = u[l];
        const double lap = 2.0 * ul - u.at(l - 1) - u.at(l + 1);
        g[static_cast<std::size_t>(l - u.lo())] =
            2.0 * inv_h2 * lap - 2.0 * ul * nl.f(ul * ul);
    }
    return g;
}

namespace {

// clamp negatives to zero and rescale to charge sigma^2
void project(std::vector<double>& v, double sigma_sq) {
    for (double& x : v)
        if (x < 0.0) x = 0.0;
    const double c = kernels::sum_squares(v.data(), v.size());
    if (c <= 0.0) throw VariationalError("projection hit the zero field");
    kernels::scale_inplace(v.data(), v.size(), std::sqrt(sigma_sq / c));
}

double eval_J(const LatticeParams& p, const std::vector<double>& v,
              const Nonlinearity& nl) {
    return internal_energy(ShapeField(p, v), nl);
}

} // namespace

GroundState minimize_fixed_charge(const ShapeField& u0, const Nonlinearity& nl,
                                  const MinimizeConfig& cfg) {
    if (!(cfg.sigma_sq > 0.0) || !(cfg.step > 0.0) || !(cfg.tol > 0.0))
        throw VariationalError("invalid minimize configuration");
    if (charge(u0) <= 0.0)
        throw VariationalError("minimize_fixed_charge: C(u0) must be positive");

    const LatticeParams p = u0.params();
    std::vector<double> x = u0.values();
    project(x, cfg.sigma_sq);

    double J = eval_J(p, x, nl);
    double step = cfg.step;
    long iters = 0;
    std::vector<double> g, trial;

    for (; iters < cfg.max_iters; ++iters) {
        const ShapeField uf(p, x);
        g = grad_J(uf, nl);

        // tangential (projected) gradient norm is the stationarity measure
        const double lam =
            kernels::dot(g.data(), x.data(), x.size()) / cfg.sigma_sq;
        double gp2 = 0.0;
        for (std::size_t i = 0; i < g.size(); ++i) {
            const double t = g[i] - lam * x[i];
            gp2 += t * t;
        }
        if (std::sqrt(gp2) < cfg.tol) break;

        // backtracking on the projected step
        bool accepted = false;
        for (int bt = 0; bt < 60; ++bt) {
            trial = x;
            for (std::size_t i = 0; i < trial.size(); ++i)
                trial[i] -= step * g[i];
            project(trial, cfg.sigma_sq);
            const double Jt = eval_J(p, trial, nl);
            if (Jt <= J) {
                x.swap(trial);
                J = Jt;
                accepted = true;
                step *= 1.25; // cautious growth after success
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            throw VariationalError("descent stalled: no decreasing step found");
    }

    GroundState gs{ShapeField(p, x), J, 0.0, 0.0, iters};
    const auto gfin = grad_J(gs.u, nl);
    gs.lagrange_omega =
        kernels::dot(gfin.data(), x.data(), x.size()) / cfg.sigma_sq;
    double r2 = 0.0;
    for (std::size_t i = 0; i < gfin.size(); ++i) {
        const double t = gfin[i] - gs.lagrange_omega * x[i];
        r2 += t * t;
    }
    gs.residual = std::sqrt(r2);
    return gs;
}

std::optional<ShapeField> hylomorphy_witness(double sigma_sq,
                                             const Nonlinearity& nl,
                                             const LatticeParams& params) {
    const long center = (params.lo + params.hi) / 2;
    const long max_half = std::min(center - params.lo, params.hi - center);
    std::optional<ShapeField> best;
    double bestJ = 0.0;
    for (long n = 0; n <= max_half; ++n) {
        const double s = sigma_sq / static_cast<double>(2 * n + 1);
        if (!(s > nl.s0)) break; // s decreases with n, nothing further qualifies
        const double J = 2.0 * s / (params.h * params.h) -
                         static_cast<double>(2 * n + 1) * nl.F(s);
        if (J < bestJ) {
            bestJ = J;
            ShapeField u(params);
            const double root = std::sqrt(s);
            for (long l = center - n; l <= center + n; ++l) u[l] = root;
            best = std::move(u);
        }
    }
    return best;
}

double estimate_m_sigma(double sigma_sq, const Nonlinearity& nl,
                        const MinimizeConfig& cfg, const LatticeParams& params) {
    MinimizeConfig c = cfg;
    c.sigma_sq = sigma_sq;
    const long center = (params.lo + params.hi) / 2;
    const long span = params.hi - params.lo;

    std::vector<ShapeField> starts;
    // plateau starts at a few widths
    for (long n : {0L, 2L, 8L, std::min(span / 4, 32L)}) {
        if (center - n < params.lo || center + n > params.hi) continue;
        ShapeField u(params);
        for (long l = center - n; l <= center + n; ++l) u[l] = 1.0;
        starts.push_back(std::move(u));
    }
    // gaussian-shaped bumps at two widths
    for (double w : {2.0, 6.0}) {
        ShapeField u(params);
        for (long l = params.lo; l <= params.hi; ++l) {
            const double x = static_cast<double>(l - center) / w;
            u[l] = std::exp(-x * x);
        }
        starts.push_back(std::move(u));
    }
    // seeded random fields
    std::mt19937_64 rng(0xb0b5);
    for (int k = 0; k < 2; ++k) {
        ShapeField u(params);
        for (long l = center - 10; l <= center + 10; ++l)
            if (u.in_extent(l))
                u[l] = std::ldexp(static_cast<double>(rng() >> 11), -53);
        starts.push_back(std::move(u));
    }

    double best = 0.0;
    for (const auto& s : starts) {
        try {
            const auto gs = minimize_fixed_charge(s, nl, c);
            best = std::min(best, gs.J_value);
        } catch (const VariationalError&) {
            // a stalled start contributes no bound
        }
    }
    if (auto w = hylomorphy_witness(sigma_sq, nl, params))
        best = std::min(best, internal_energy(*w, nl));
    return best;
}

bool in_S(const ShapeField& u, const Nonlinearity& nl, double m, double sigma) {
    return internal_energy(u, nl) <= m &&
           std::abs(charge(u) - sigma * sigma) <= 1e-10;
}

} // namespace solcomp
