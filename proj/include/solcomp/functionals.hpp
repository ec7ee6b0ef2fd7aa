#pragma once

#include "solcomp/field.hpp"
#include "solcomp/nonlinearity.hpp"

#include <utility>
#include <vector>

namespace solcomp {

/// Superlevel decomposition of the window: U^- = { l : u_l^2 > s0 } and its
/// complement, plus the maximal runs of consecutive indices in U^-.
struct RegionSplit {
    std::vector<long> minus;                      // sorted
    std::vector<std::pair<long, long>> components; // inclusive runs in minus

    bool in_minus(long l) const;
};

double charge(const ShapeField& u);
double charge_complex(const ComplexField& psi);

/// J(u) = h^-2 sum |u_l - u_{l-1}|^2 - sum F(u_l^2). Realized as
/// J^+ + J^- of split_energy so the region identity is exact.
double internal_energy(const ShapeField& u, const Nonlinearity& nl);

/// K(u, theta) = h^-2 sum u_l^2 |theta_l - theta_{l-1}|^2.
double kinetic_energy(const ShapeField& u, const PhaseField& theta);

/// E(psi) = h^-2 sum |psi_l - psi_{l-1}|^2 - sum F(|psi_l|^2).
double energy_complex(const ComplexField& psi, const Nonlinearity& nl);

/// (J^+, J^-): each per-site term h^-2 |u_l - u_{l-1}|^2 - F(u_l^2) is
/// assigned to the region containing l. J^+ + J^- = J exactly.
std::pair<double, double> split_energy(const ShapeField& u, const Nonlinearity& nl);

RegionSplit region_split(const ShapeField& u, const Nonlinearity& nl);

bool is_hylomorphic(const ShapeField& u, const Nonlinearity& nl);

/// u_l = |psi_l|, theta_l = arg psi_l in (-pi, pi], theta = 0 at zeros.
std::pair<ShapeField, PhaseField> polar_decompose(const ComplexField& psi);

ComplexField polar_recompose(const ShapeField& u, const PhaseField& theta);

/// Plateau of height sigma/sqrt(2n+1) on the 2n+1 sites around `center`;
/// carries charge exactly sigma^2.
ShapeField make_vanishing(double sigma, long n, long center,
                          const LatticeParams& params);

} // namespace solcomp
