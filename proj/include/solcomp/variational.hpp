#pragma once

#include "solcomp/field.hpp"
#include "solcomp/nonlinearity.hpp"

#include <optional>
#include <vector>

namespace solcomp {

struct VariationalError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MinimizeConfig {
    double sigma_sq = 1.0;   // target charge
    double step = 0.05;      // initial gradient step
    long max_iters = 20000;
    double tol = 1e-9;       // projected-gradient norm
};

struct GroundState {
    ShapeField u;
    double J_value = 0.0;
    double lagrange_omega = 0.0; // Rayleigh quotient <grad J, u> / sigma^2
    double residual = 0.0;       // || grad J - lagrange * u ||
    long iterations = 0;
};

/// dJ/du_l = (2/h^2)(2 u_l - u_{l-1} - u_{l+1}) - 2 u_l f(u_l^2)
std::vector<double> grad_J(const ShapeField& u, const Nonlinearity& nl);

/// Projected gradient descent on the charge sphere C(u) = sigma^2 with
/// non-negativity clamp and backtracking; J never increases between
/// accepted iterates.
GroundState minimize_fixed_charge(const ShapeField& u0, const Nonlinearity& nl,
                                  const MinimizeConfig& cfg);

/// Scans the plateau family u^s, s = sigma^2/(2n+1) > s0, for J < 0.
std::optional<ShapeField> hylomorphy_witness(double sigma_sq,
                                             const Nonlinearity& nl,
                                             const LatticeParams& params);

/// Best (lowest) J over a fixed multistart seed list; an upper bound on
/// m_sigma.
double estimate_m_sigma(double sigma_sq, const Nonlinearity& nl,
                        const MinimizeConfig& cfg, const LatticeParams& params);

/// u in S(m, sigma): J(u) <= m and |C(u) - sigma^2| <= 1e-10.
bool in_S(const ShapeField& u, const Nonlinearity& nl, double m, double sigma);

} // namespace solcomp
