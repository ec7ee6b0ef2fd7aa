#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solcomp/evolution.hpp"
#include "solcomp/functionals.hpp"
#include "solcomp/sampler.hpp"

#include <cmath>

using namespace solcomp;

namespace {
const Nonlinearity nl = make_nonlinearity_cubic_like(0.25);
} // namespace

TEST_CASE("rhs of a single excited site, frozen value") {
    ComplexField psi({1.0, -2, 2, Boundary::zero});
    psi[0] = {0.5, 0.0};
    const auto d = dnls_rhs(psi, nl);
    // i [ (0 + 0 - 2*0.5) + f(0.25)*0.5 ] = i (-1 + 0.03125)
    CHECK(d[0].real() == doctest::Approx(0.0));
    CHECK(d[0].imag() == doctest::Approx(-0.96875));
    // neighbours feel only the hopping term i * 0.5
    CHECK(d[1].imag() == doctest::Approx(0.5));
    CHECK(d[-1].imag() == doctest::Approx(0.5));
}

TEST_CASE("uniform periodic field rotates at frequency f(A^2)") {
    const double A = 0.3;
    ComplexField psi({1.0, 0, 31, Boundary::periodic});
    for (long l = 0; l <= 31; ++l) psi[l] = {A, 0.0};

    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps_per_sample = 1000;
    const auto traj = evolve(psi, nl, cfg, 10.0);
    const double t = traj.back().t;
    CHECK(t == doctest::Approx(10.0));
    const std::complex<double> expect =
        A * std::exp(std::complex<double>(0.0, nl.f(A * A) * t));
    for (long l = 0; l <= 31; ++l)
        CHECK(std::abs(traj.back().psi[l] - expect) < 1e-6);
}

TEST_CASE("charge and energy conservation at desk scale") {
    auto rng = make_rng(61, 0);
    const auto psi0 = sample_complex_field({1.0, -64, 63, Boundary::zero}, 2.0, 48, rng);
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps_per_sample = 500;
    const auto traj = evolve(psi0, nl, cfg, 2.0);
    for (const auto& s : traj) {
        CHECK(std::abs(s.drift_charge) < 1e-12);
        CHECK(std::abs(s.drift_energy) < 1e-6);
    }
}

TEST_CASE("strang energy drift scales like dt^2") {
    auto rng = make_rng(62, 0);
    const auto psi0 = sample_complex_field({1.0, -32, 31, Boundary::zero}, 2.0, 24, rng);
    auto drift_at = [&](double dt) {
        IntegratorConfig cfg;
        cfg.dt = dt;
        cfg.steps_per_sample = static_cast<long>(std::lround(1.0 / dt));
        const auto traj = evolve(psi0, nl, cfg, 1.0);
        return std::abs(traj.back().drift_energy);
    };
    const double d1 = drift_at(4e-3);
    const double d2 = drift_at(2e-3);
    CHECK(d1 / d2 > 3.0);
    CHECK(d1 / d2 < 5.0);
}

TEST_CASE("implicit midpoint agrees with strang at first order in dt^2") {
    auto rng = make_rng(63, 0);
    const auto psi0 = sample_complex_field({1.0, -24, 23, Boundary::zero}, 1.0, 16, rng);
    IntegratorConfig a, b;
    a.dt = b.dt = 1e-3;
    a.scheme = Scheme::strang_split;
    b.scheme = Scheme::implicit_midpoint;
    a.steps_per_sample = b.steps_per_sample = 100;
    const auto ta = evolve(psi0, nl, a, 0.1);
    const auto tb = evolve(psi0, nl, b, 0.1);
    double worst = 0.0;
    for (long l = psi0.lo(); l <= psi0.hi(); ++l)
        worst = std::max(worst, std::abs(ta.back().psi[l] - tb.back().psi[l]));
    CHECK(worst < 1e-5);
}

TEST_CASE("internal energy bounds the full energy from below along a run") {
    auto rng = make_rng(64, 0);
    const auto psi0 = sample_complex_field({1.0, -32, 31, Boundary::zero}, 2.0, 24, rng);
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps_per_sample = 200;
    for (const auto& s : evolve(psi0, nl, cfg, 0.6)) {
        const auto [u, theta] = polar_decompose(s.psi);
        CHECK(internal_energy(u, nl) <= s.energy + 1e-9);
    }
}

TEST_CASE("edge growth raises the boundary warning") {
    ComplexField psi({1.0, -8, 7, Boundary::zero});
    psi[-8] = {0.5, 0.0}; // mass on the edge from the start
    IntegratorConfig cfg;
    cfg.dt = 1e-3;
    cfg.steps_per_sample = 10;
    const auto traj = evolve(psi, nl, cfg, 0.05);
    CHECK(traj.back().boundary_warning);
}
