#include "solcomp/nonlinearity.hpp"

#include <cmath>

namespace solcomp {

void Nonlinearity::check_structure(double s_max, int grid) const {
    if (!(s0 > 0.0)) throw NonlinearityError("s0 must be positive");
    if (!(s1 < s0) || !(s1 > 0.0))
        throw NonlinearityError("requires 0 < s1 < s0");
    if (F(0.0) != 0.0) throw NonlinearityError("F(0) must be 0");

    // F(s)/s -> 0 as s -> 0+, checked at a decreasing sample
    double prev = std::abs(F(1e-2) / 1e-2);
    for (double s = 1e-4; s >= 1e-12; s *= 1e-2) {
        const double r = std::abs(F(s) / s);
        if (r > prev + 1e-12) throw NonlinearityError("F(s)/s not vanishing at 0+");
        prev = r;
    }
    if (prev > 1e-9) throw NonlinearityError("F(s)/s not small near 0");

    // sign pattern on (0, s0) and (s0, s_max)
    for (int i = 1; i < grid; ++i) {
        const double s = s0 * i / grid;
        if (F(s) > 1e-14) throw NonlinearityError("F positive below s0");
    }
    for (int i = 1; i <= grid; ++i) {
        const double s = s0 + (s_max - s0) * i / grid;
        if (!(F(s) > 0.0)) throw NonlinearityError("F not positive above s0");
    }
    // monotonicity via the sign of f
    for (int i = 1; i < grid; ++i) {
        const double s = s1 * i / grid;
        if (f(s) > 1e-14) throw NonlinearityError("F increasing on (0, s1)");
    }
    for (int i = 1; i <= grid; ++i) {
        const double s = s0 + (s_max - s0) * i / grid;
        if (f(s) < -1e-14) throw NonlinearityError("F decreasing above s0");
    }
}

Nonlinearity make_nonlinearity_cubic_like(double s0) {
    if (!(s0 > 0.0)) throw NonlinearityError("s0 must be positive");
    Nonlinearity nl;
    nl.s0 = s0;
    nl.s1 = 2.0 * s0 / 3.0;
    nl.F = [s0](double s) { return s * s * (s - s0); };
    nl.f = [s0](double s) { return 3.0 * s * s - 2.0 * s0 * s; };
    nl.check_structure();
    return nl;
}

} // namespace solcomp
