#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "solcomp/coding.hpp"
#include "solcomp/sampler.hpp"

#include <sstream>

using namespace solcomp;

namespace {
const Nonlinearity nl = make_nonlinearity_cubic_like(0.25);

ShapeField worked_example() {
    // u = (0, 0.7, 0.55, 0.8, 0) on sites 0..4
    ShapeField u({1.0, 0, 4, Boundary::zero});
    u[1] = 0.7;
    u[2] = 0.55;
    u[3] = 0.8;
    return u;
}
} // namespace

TEST_CASE("bin edges") {
    CodingParams cp{1.0, 4};
    CHECK(cp.bin(0.0) == 1);
    CHECK(cp.bin(0.2499) == 1);
    CHECK(cp.bin(0.25) == 2);
    CHECK(cp.bin(0.7) == 3);
    CHECK(cp.bin(0.75) == 4);
    CHECK(cp.bin(1.0) == 4); // closed last bin
}

TEST_CASE("worked example at sigma = 1, N = 4") {
    const auto sc = encode(worked_example(), CodingParams{1.0, 4});
    // differences carried by sites 0..5: 0, 0.7, 0.15, 0.25, 0.8, 0
    REQUIRE(sc.first_index == 0);
    REQUIRE(sc.omega == std::vector<int>{1, 3, 1, 2, 4, 1});
    CHECK(sc.signs == std::vector<std::int8_t>{0, 1, 0, 1, -1, 0});
    CHECK(sc.s_string == "++-");
    CHECK(sc.s_sites == std::vector<long>{1, 3, 4});
    REQUIRE(sc.window.has_value());
    CHECK(*sc.window == std::pair<long, long>{1, 4});
}

TEST_CASE("region split of the worked example") {
    const auto u = worked_example();
    const auto split =
        split_by_region(encode(u, CodingParams{1.0, 4}), region_split(u, nl));
    // sites 1, 3 lie in U^-, site 4 carries u_4 = 0 in U^+
    CHECK(split.s_minus == "++");
    CHECK(split.s_plus == "-");
}

TEST_CASE("rejects fields exceeding the amplitude cap") {
    ShapeField u({1.0, 0, 2, Boundary::zero});
    u[1] = 1.5;
    CHECK_THROWS_AS(encode(u, CodingParams{1.0, 4}), CodingError);
}

TEST_CASE("sandwich bound: at most N^2 sites carry a difference >= sigma/N") {
    auto rng = make_rng(21, 0);
    for (int i = 0; i < 200; ++i) {
        const double sq = uniform_in(rng, 1.0, 9.0);
        const auto u = sample_hylomorphic({1.0, -128, 127, Boundary::zero}, sq, nl, rng);
        CodingParams cp{std::sqrt(sq), 6};
        const auto sc = encode(u, cp);
        long big = 0;
        for (int w : sc.omega)
            if (w >= 2) ++big;
        CHECK(big <= static_cast<long>(cp.N) * cp.N);
    }
}

TEST_CASE("refinement keeps the sign string stable") {
    auto rng = make_rng(22, 0);
    for (int i = 0; i < 50; ++i) {
        const auto u = sample_hylomorphic({1.0, -64, 63, Boundary::zero}, 4.0, nl, rng);
        const auto [coarse, fine] = refine_bins(u, CodingParams{2.0, 4}, 16);
        // every sign present at N is present at N2 at the same site
        std::size_t j = 0;
        for (std::size_t i2 = 0; i2 < coarse.s_sites.size(); ++i2) {
            while (j < fine.s_sites.size() && fine.s_sites[j] < coarse.s_sites[i2]) ++j;
            REQUIRE(j < fine.s_sites.size());
            CHECK(fine.s_sites[j] == coarse.s_sites[i2]);
            CHECK(fine.s_string[j] == coarse.s_string[i2]);
        }
    }
}

TEST_CASE("coding is translation covariant") {
    const auto u = worked_example();
    const auto sc = encode(u, CodingParams{1.0, 4});
    const auto sd = encode(translated(u, 13), CodingParams{1.0, 4});
    CHECK(sd.s_string == sc.s_string);
    CHECK(sd.omega == sc.omega);
    CHECK(sd.first_index == sc.first_index + 13);
}

TEST_CASE("dump format") {
    std::stringstream ss;
    write_coding(ss, encode(worked_example(), CodingParams{1.0, 4}));
    std::string line;
    std::getline(ss, line);
    CHECK(line.find("sigma=1") != std::string::npos);
    std::getline(ss, line); // site 0
    CHECK(line == "0\t1\t.");
    std::getline(ss, line);
    CHECK(line == "1\t3\t+");
}
