#include "solcomp/coding.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace solcomp {

void CodingParams::validate() const {
    if (!(sigma > 0.0)) throw CodingError("coding sigma must be positive");
    if (N < 1) throw CodingError("coding N must be >= 1");
}

int CodingParams::bin(double d) const {
    if (d == sigma) return N; // P_N is closed at sigma
    const int k = static_cast<int>(std::floor(d * N / sigma)) + 1;
    return k > N ? N : k;
}

SymbolCoding encode(const ShapeField& u, const CodingParams& cp) {
    cp.validate();
    const double sigma = cp.sigma;

    // domain checks: amplitudes and differences must lie in [0, sigma]
    for (long l = u.lo(); l <= u.hi(); ++l)
        if (u[l] > sigma)
            throw CodingError("amplitude exceeds sigma at site " + std::to_string(l));

    // at most N^2 sites can sit at or above sigma/N when C(u) <= sigma^2
    long above = 0;
    for (long l = u.lo(); l <= u.hi(); ++l)
        if (u[l] >= sigma / cp.N) ++above;
    if (above > static_cast<long>(cp.N) * cp.N)
        throw CodingError("more than N^2 sites above sigma/N; charge exceeds sigma^2");

    SymbolCoding sc;
    sc.params = cp;
    const auto [dlo, dhi] = diff_index_range(u.params());
    sc.first_index = dlo;
    sc.omega.reserve(static_cast<std::size_t>(dhi - dlo + 1));
    sc.signs.reserve(sc.omega.capacity());

    long wfirst = 0, wlast = 0;
    bool have_window = false;
    for (long l = dlo; l <= dhi; ++l) {
        const double d = u.at(l) - u.at(l - 1);
        const double mag = std::abs(d);
        if (mag > sigma)
            throw CodingError("difference exceeds sigma at site " + std::to_string(l));
        const int k = cp.bin(mag);
        sc.omega.push_back(k);
        if (k >= 2) {
            const std::int8_t s = d > 0.0 ? std::int8_t{1} : std::int8_t{-1};
            sc.signs.push_back(s);
            sc.s_string.push_back(s > 0 ? '+' : '-');
            sc.s_sites.push_back(l);
            if (!have_window) {
                wfirst = l;
                have_window = true;
            }
            wlast = l;
        } else {
            sc.signs.push_back(0);
        }
    }
    if (have_window) sc.window = std::make_pair(wfirst, wlast);
    return sc;
}

SplitStrings split_by_region(const SymbolCoding& sc, const RegionSplit& rs) {
    SplitStrings out;
    for (std::size_t i = 0; i < sc.s_string.size(); ++i) {
        (rs.in_minus(sc.s_sites[i]) ? out.s_minus : out.s_plus)
            .push_back(sc.s_string[i]);
    }
    return out;
}

std::pair<SymbolCoding, SymbolCoding> refine_bins(const ShapeField& u,
                                                  const CodingParams& cp, int N2) {
    if (N2 <= cp.N) throw CodingError("refine_bins requires N2 > N");
    CodingParams fine = cp;
    fine.N = N2;
    auto coarse_sc = encode(u, cp);
    auto fine_sc = encode(u, fine);
    // sign stability: every non-empty sign at N is identical at N2
    for (std::size_t i = 0; i < coarse_sc.signs.size(); ++i) {
        if (coarse_sc.signs[i] != 0 && fine_sc.signs[i] != coarse_sc.signs[i])
            throw CodingError("sign instability under bin refinement");
    }
    return {std::move(coarse_sc), std::move(fine_sc)};
}

void write_coding(std::ostream& os, const SymbolCoding& sc) {
    char buf[128];
    long wf = 0, wl = -1;
    if (sc.window) {
        wf = sc.window->first;
        wl = sc.window->second;
    }
    std::snprintf(buf, sizeof buf, "# sigma=%.17g N=%d window=%ld..%ld\n",
                  sc.params.sigma, sc.params.N, wf, wl);
    os << buf;
    for (std::size_t i = 0; i < sc.omega.size(); ++i) {
        const char s = sc.signs[i] == 0 ? '.' : (sc.signs[i] > 0 ? '+' : '-');
        std::snprintf(buf, sizeof buf, "%ld\t%d\t%c\n", sc.site(i), sc.omega[i], s);
        os << buf;
    }
}

} // namespace solcomp
