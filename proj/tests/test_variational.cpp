#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solcomp/functionals.hpp"
#include "solcomp/sampler.hpp"
#include "solcomp/variational.hpp"

#include <cmath>

using namespace solcomp;

namespace {
const Nonlinearity nl = make_nonlinearity_cubic_like(0.25);
const LatticeParams win{1.0, -48, 47, Boundary::zero};
} // namespace

TEST_CASE("gradient matches central differences") {
    auto rng = make_rng(51, 0);
    for (int trial = 0; trial < 25; ++trial) {
        const auto u = sample_hylomorphic(win, 3.0, nl, rng);
        const auto g = grad_J(u, nl);
        const double eps = 1e-6;
        for (long l = -5; l <= 5; ++l) {
            ShapeField up = u, um = u;
            up[l] += eps;
            um[l] -= eps;
            const double fd =
                (internal_energy(up, nl) - internal_energy(um, nl)) / (2 * eps);
            const double gi = g[static_cast<std::size_t>(l - u.lo())];
            CHECK(std::abs(gi - fd) <= 1e-6 * std::max(1.0, std::abs(fd)));
        }
    }
}

TEST_CASE("descent reaches a constrained critical point") {
    auto rng = make_rng(52, 0);
    const auto u0 = sample_hylomorphic(win, 8.5, nl, rng);
    MinimizeConfig mc;
    mc.sigma_sq = 8.5;
    const auto gs = minimize_fixed_charge(u0, nl, mc);
    CHECK(charge(gs.u) == doctest::Approx(8.5).epsilon(1e-12));
    CHECK(gs.J_value <= internal_energy(u0, nl) + 1e-12);
    CHECK(gs.residual < 1e-6);
    for (long l = gs.u.lo(); l <= gs.u.hi(); ++l) CHECK(gs.u[l] >= 0.0);
}

TEST_CASE("hylomorphy witness at sigma^2 = 8.5 reaches the plateau value") {
    const auto w = hylomorphy_witness(8.5, nl, win);
    REQUIRE(w.has_value());
    CHECK(charge(*w) == doctest::Approx(8.5).epsilon(1e-12));
    // the 17-site plateau alone already reaches -0.0625
    CHECK(internal_energy(*w, nl) <= -0.0625 + 1e-12);
    CHECK(is_hylomorphic(*w, nl));
}

TEST_CASE("no witness when the charge is too small to clear s0") {
    // sigma^2 < s0 means even one site cannot exceed the threshold
    CHECK_FALSE(hylomorphy_witness(0.2, nl, win).has_value());
}

TEST_CASE("m_sigma estimate improves on the witness") {
    MinimizeConfig mc;
    mc.sigma_sq = 8.5;
    const double m = estimate_m_sigma(8.5, nl, mc, win);
    CHECK(m <= -0.0625);
}

TEST_CASE("membership in S") {
    auto rng = make_rng(53, 0);
    const auto u = sample_hylomorphic(win, 4.0, nl, rng);
    const double J = internal_energy(u, nl);
    CHECK(in_S(u, nl, J + 0.1, 2.0));
    CHECK_FALSE(in_S(u, nl, J - 0.1, 2.0));
    CHECK_FALSE(in_S(u, nl, J + 0.1, 2.5));
}
