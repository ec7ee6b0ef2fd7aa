#include "solcomp/evolution.hpp"

#include "solcomp/functionals.hpp"
#include "solcomp/kernels.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>

namespace solcomp {

void IntegratorConfig::validate() const {
    if (!(dt > 0.0)) throw IntegrationBlowup("dt must be positive");
    if (steps_per_sample < 1)
        throw IntegrationBlowup("steps_per_sample must be >= 1");
}

ComplexField dnls_rhs(const ComplexField& psi, const Nonlinearity& nl) {
    const double inv_h2 = 1.0 / (psi.params().h * psi.params().h);
    ComplexField out(psi.params());
    const std::complex<double> iunit(0.0, 1.0);
    for (long l = psi.lo(); l <= psi.hi(); ++l) {
        const auto z = psi[l];
        const auto lap = psi.at(l - 1) + psi.at(l + 1) - 2.0 * z;
        out[l] = iunit * (inv_h2 * lap + nl.f(std::norm(z)) * z);
    }
    return out;
}

LinearPropagator::LinearPropagator(const LatticeParams& params, double dt)
    : params_(params), dt_(dt), n_(params.size()) {
    params_.validate();
    if (n_ > 4096)
        throw IntegrationBlowup("window too large for the dense propagator");
    const double inv_h2 = 1.0 / (params_.h * params_.h);
    const auto n = n_;
    q_.resize(n * n);
    std::vector<double> lambda(n);
    using std::numbers::pi;

    if (params_.boundary == Boundary::zero) {
        // Dirichlet eigenbasis of delta^2: symmetric sine transform
        const double norm = std::sqrt(2.0 / (static_cast<double>(n) + 1.0));
        for (std::size_t k = 0; k < n; ++k) {
            const double s = std::sin((static_cast<double>(k) + 1.0) * pi /
                                      (2.0 * (static_cast<double>(n) + 1.0)));
            lambda[k] = -4.0 * s * s;
            for (std::size_t j = 0; j < n; ++j)
                q_[k * n + j] =
                    norm * std::sin((static_cast<double>(k) + 1.0) *
                                    (static_cast<double>(j) + 1.0) * pi /
                                    (static_cast<double>(n) + 1.0));
        }
        qt_ = q_; // symmetric
    } else {
        // real Fourier basis of the circulant delta^2
        qt_.resize(n * n);
        std::vector<std::vector<double>> rows;
        std::vector<double> lams;
        const double nr = static_cast<double>(n);
        {
            std::vector<double> r(n, 1.0 / std::sqrt(nr));
            rows.push_back(r);
            lams.push_back(0.0);
        }
        for (std::size_t k = 1; 2 * k < n; ++k) {
            const double s = std::sin(pi * static_cast<double>(k) / nr);
            const double lam = -4.0 * s * s;
            std::vector<double> c(n), sn(n);
            const double norm = std::sqrt(2.0 / nr);
            for (std::size_t j = 0; j < n; ++j) {
                const double arg =
                    2.0 * pi * static_cast<double>(k) * static_cast<double>(j) / nr;
                c[j] = norm * std::cos(arg);
                sn[j] = norm * std::sin(arg);
            }
            rows.push_back(std::move(c));
            lams.push_back(lam);
            rows.push_back(std::move(sn));
            lams.push_back(lam);
        }
        if (n % 2 == 0) {
            std::vector<double> r(n);
            for (std::size_t j = 0; j < n; ++j)
                r[j] = (j % 2 == 0 ? 1.0 : -1.0) / std::sqrt(nr);
            rows.push_back(std::move(r));
            lams.push_back(-4.0);
        }
        for (std::size_t k = 0; k < n; ++k) {
            lambda[k] = lams[k];
            for (std::size_t j = 0; j < n; ++j) {
                q_[k * n + j] = rows[k][j];      // row k = k-th basis vector
                qt_[j * n + k] = rows[k][j];
            }
        }
    }

    cos_.resize(n);
    sin_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double phi = inv_h2 * lambda[k] * dt_;
        cos_[k] = std::cos(phi);
        sin_[k] = std::sin(phi);
    }
}

void LinearPropagator::apply(ComplexField& psi) const {
    if (psi.params() != params_)
        throw IntegrationBlowup("propagator/field lattice mismatch");
    const auto n = n_;
    std::vector<double> re(n), im(n), a(n), b(n);
    for (std::size_t j = 0; j < n; ++j) {
        re[j] = psi.values()[j].real();
        im[j] = psi.values()[j].imag();
    }
    const double norm_before = kernels::sum_squares(re.data(), n) +
                               kernels::sum_squares(im.data(), n);

    // to the eigenbasis (rows of q_ are the basis vectors)
    kernels::matvec(q_.data(), re.data(), a.data(), n, n);
    kernels::matvec(q_.data(), im.data(), b.data(), n, n);
    // per-mode rotation e^{i phi_k}
    for (std::size_t k = 0; k < n; ++k) {
        const double ar = a[k], br = b[k];
        a[k] = cos_[k] * ar - sin_[k] * br;
        b[k] = sin_[k] * ar + cos_[k] * br;
    }
    // back to site space
    kernels::matvec(qt_.data(), a.data(), re.data(), n, n);
    kernels::matvec(qt_.data(), b.data(), im.data(), n, n);

    // restore the exact pre-step norm; the basis is orthogonal only to
    // rounding and the error would otherwise accumulate over 1e4+ steps
    const double norm_after = kernels::sum_squares(re.data(), n) +
                              kernels::sum_squares(im.data(), n);
    if (norm_after > 0.0 && norm_before > 0.0) {
        const double s = std::sqrt(norm_before / norm_after);
        kernels::scale_inplace(re.data(), n, s);
        kernels::scale_inplace(im.data(), n, s);
    }
    for (std::size_t j = 0; j < n; ++j) psi.values()[j] = {re[j], im[j]};
}

Evolver::Evolver(const LatticeParams& params, const Nonlinearity& nl,
                 const IntegratorConfig& cfg)
    : nl_(nl), cfg_(cfg), prop_(params, cfg.dt) {
    cfg_.validate();
}

namespace {
void rotate_nonlinear(ComplexField& psi, const Nonlinearity& nl, double tau) {
    for (auto& z : psi.values()) {
        const double phi = nl.f(std::norm(z)) * tau;
        z *= std::complex<double>(std::cos(phi), std::sin(phi));
    }
}
} // namespace

ComplexField Evolver::step_strang(ComplexField psi) const {
    rotate_nonlinear(psi, nl_, cfg_.dt / 2.0);
    prop_.apply(psi);
    rotate_nonlinear(psi, nl_, cfg_.dt / 2.0);
    psi.check_finite();
    return psi;
}

ComplexField Evolver::step_midpoint(const ComplexField& psi) const {
    // fixed-point solve of psi1 = psi + dt * rhs((psi + psi1)/2)
    ComplexField next = psi;
    for (int it = 0; it < 200; ++it) {
        ComplexField mid(psi.params());
        for (std::size_t j = 0; j < psi.size(); ++j)
            mid.values()[j] = 0.5 * (psi.values()[j] + next.values()[j]);
        const ComplexField r = dnls_rhs(mid, nl_);
        double delta = 0.0;
        for (std::size_t j = 0; j < psi.size(); ++j) {
            const auto upd = psi.values()[j] + cfg_.dt * r.values()[j];
            delta = std::max(delta, std::abs(upd - next.values()[j]));
            next.values()[j] = upd;
        }
        if (delta < 1e-14) break;
    }
    next.check_finite();
    return next;
}

ComplexField Evolver::step(const ComplexField& psi) const {
    return cfg_.scheme == Scheme::strang_split ? step_strang(psi)
                                               : step_midpoint(psi);
}

ComplexField step(const ComplexField& psi, const Nonlinearity& nl,
                  const IntegratorConfig& cfg) {
    return Evolver(psi.params(), nl, cfg).step(psi);
}

std::vector<TrajectorySample> evolve(const ComplexField& psi0,
                                     const Nonlinearity& nl,
                                     const IntegratorConfig& cfg, double t_end) {
    cfg.validate();
    if (t_end < 0.0) throw IntegrationBlowup("t_end must be non-negative");
    Evolver ev(psi0.params(), nl, cfg);

    const double e0 = energy_complex(psi0, nl);
    const double c0 = charge_complex(psi0);

    auto edge_hot = [](const ComplexField& psi) {
        if (psi.params().boundary != Boundary::zero) return false;
        return std::abs(psi[psi.lo()]) > 1e-10 || std::abs(psi[psi.hi()]) > 1e-10;
    };

    std::vector<TrajectorySample> samples;
    auto record = [&](double t, const ComplexField& psi) {
        TrajectorySample s{t, psi, energy_complex(psi, nl), charge_complex(psi),
                           0.0, 0.0, edge_hot(psi)};
        s.drift_energy = s.energy - e0;
        s.drift_charge = s.charge - c0;
        samples.push_back(std::move(s));
    };

    ComplexField psi = psi0;
    record(0.0, psi);
    const long total_steps = static_cast<long>(std::llround(t_end / cfg.dt));
    for (long k = 1; k <= total_steps; ++k) {
        psi = ev.step(psi);
        if (k % cfg.steps_per_sample == 0 || k == total_steps)
            record(static_cast<double>(k) * cfg.dt, psi);
    }
    return samples;
}

void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& samples) {
    os << "t,energy,charge,drift_energy,drift_charge\n";
    char buf[256];
    for (const auto& s : samples) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g,%.17g,%.17g\n", s.t,
                      s.energy, s.charge, s.drift_energy, s.drift_charge);
        os << buf;
    }
}

} // namespace solcomp
