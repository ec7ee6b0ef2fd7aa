#pragma once

#include <functional>
#include <stdexcept>

namespace solcomp {

struct NonlinearityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The pair (F, f = F') with its sign-change threshold s0 and monotonicity
/// threshold s1 < s0. F must vanish at 0, be sublinear at 0+, non-positive on
/// (0, s0), positive beyond s0, non-increasing on (0, s1) and non-decreasing
/// on (s0, inf). check_structure() spot-checks all of that on grids.
struct Nonlinearity {
    std::function<double(double)> F;
    std::function<double(double)> f;
    double s0 = 0.0;
    double s1 = 0.0;

    void check_structure(double s_max = 4.0, int grid = 512) const;
};

/// F(s) = s^2 (s - s0), f(s) = 3 s^2 - 2 s0 s, s1 = 2 s0 / 3.
Nonlinearity make_nonlinearity_cubic_like(double s0);

} // namespace solcomp
