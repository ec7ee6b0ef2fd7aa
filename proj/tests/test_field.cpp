#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solcomp/field.hpp"
#include "solcomp/functionals.hpp"
#include "solcomp/sampler.hpp"

#include <cmath>
#include <sstream>

using namespace solcomp;

TEST_CASE("lattice params validation") {
    const LatticeParams bad_h{0.0, 0, 4};
    const LatticeParams bad_order{1.0, 4, 0};
    const LatticeParams good{0.5, -3, 3};
    CHECK_THROWS_AS(bad_h.validate(), FieldError);
    CHECK_THROWS_AS(bad_order.validate(), FieldError);
    CHECK_NOTHROW(good.validate());
}

TEST_CASE("boundary reads") {
    ShapeField u({1.0, 0, 2, Boundary::zero});
    u[0] = 1.0;
    u[1] = 2.0;
    u[2] = 3.0;
    CHECK(u.at(-1) == 0.0);
    CHECK(u.at(3) == 0.0);
    CHECK(u.at(1) == 2.0);

    ShapeField p({1.0, 0, 2, Boundary::periodic});
    p[0] = 1.0;
    p[1] = 2.0;
    p[2] = 3.0;
    CHECK(p.at(-1) == 3.0);
    CHECK(p.at(3) == 1.0);
    CHECK(p.at(-4) == 3.0);
}

TEST_CASE("diff index range per boundary") {
    CHECK(diff_index_range({1.0, -2, 5, Boundary::zero}) == std::pair<long, long>{-2, 6});
    CHECK(diff_index_range({1.0, -2, 5, Boundary::periodic}) == std::pair<long, long>{-2, 5});
}

TEST_CASE("translation preserves values and shifts the window") {
    ShapeField u({1.0, 0, 3, Boundary::zero});
    u[1] = 0.5;
    u[2] = 0.25;
    const auto v = translated(u, -7);
    CHECK(v.lo() == -7);
    CHECK(v.hi() == -4);
    CHECK(v[-6] == 0.5);
    CHECK(v[-5] == 0.25);
}

TEST_CASE("shape field text round trip") {
    auto rng = make_rng(42, 0);
    const auto u = random_bump_field({0.5, -20, 20, Boundary::zero}, 2.0, 2, 0.5,
                                     1.0, 3, 6, rng);
    std::stringstream ss;
    write_field(ss, u);
    const auto v = read_shape_field(ss);
    REQUIRE(v.params() == u.params());
    for (long l = u.lo(); l <= u.hi(); ++l) CHECK(v[l] == u[l]);
}

TEST_CASE("complex field text round trip") {
    auto rng = make_rng(43, 0);
    const auto psi = sample_complex_field({1.0, -10, 10, Boundary::periodic}, 1.5,
                                          11, rng);
    std::stringstream ss;
    write_field(ss, psi);
    const auto phi = read_complex_field(ss);
    REQUIRE(phi.params() == psi.params());
    for (long l = psi.lo(); l <= psi.hi(); ++l) CHECK(phi[l] == psi[l]);
}

TEST_CASE("polar decomposition round trips to 1e-12") {
    auto rng = make_rng(44, 0);
    const auto psi = sample_complex_field({1.0, -16, 15, Boundary::zero}, 2.5, 24, rng);
    const auto [u, theta] = polar_decompose(psi);
    const auto back = polar_recompose(u, theta);
    for (long l = psi.lo(); l <= psi.hi(); ++l) {
        CHECK(std::abs(back[l] - psi[l]) < 1e-12);
        CHECK(u[l] >= 0.0);
    }
}
