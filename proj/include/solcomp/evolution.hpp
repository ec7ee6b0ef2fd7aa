#pragma once

#include "solcomp/field.hpp"
#include "solcomp/nonlinearity.hpp"

#include <vector>

namespace solcomp {

struct IntegrationBlowup : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Scheme { strang_split, implicit_midpoint };

struct IntegratorConfig {
    double dt = 1e-3;
    Scheme scheme = Scheme::strang_split;
    long steps_per_sample = 100;

    void validate() const;
};

struct TrajectorySample {
    double t = 0.0;
    ComplexField psi;
    double energy = 0.0;
    double charge = 0.0;
    double drift_energy = 0.0;
    double drift_charge = 0.0;
    bool boundary_warning = false; // edge amplitude exceeded 1e-10
};

/// dpsi/dt = i [ h^-2 (psi_{l-1} + psi_{l+1} - 2 psi_l) + f(|psi_l|^2) psi_l ]
ComplexField dnls_rhs(const ComplexField& psi, const Nonlinearity& nl);

/// exp(i t h^-2 delta^2) on the window, realized through the precomputed real
/// eigenbasis of delta^2 (sine basis for the zero boundary, Fourier basis for
/// the periodic one). Norm is restored to the pre-step value after the two
/// transforms, so the sub-flow is unitary to one rounding.
class LinearPropagator {
public:
    LinearPropagator(const LatticeParams& params, double dt);
    void apply(ComplexField& psi) const;
    const LatticeParams& params() const { return params_; }
    double dt() const { return dt_; }

private:
    LatticeParams params_;
    double dt_;
    std::size_t n_;
    std::vector<double> q_;        // eigenbasis, column-major rows = basis index
    std::vector<double> qt_;       // transpose (equal to q_ for the sine basis)
    std::vector<double> cos_, sin_; // per-mode rotation for one step
};

/// One full step of the chosen scheme.
class Evolver {
public:
    Evolver(const LatticeParams& params, const Nonlinearity& nl,
            const IntegratorConfig& cfg);
    ComplexField step(const ComplexField& psi) const;

private:
    ComplexField step_strang(ComplexField psi) const;
    ComplexField step_midpoint(const ComplexField& psi) const;

    Nonlinearity nl_;
    IntegratorConfig cfg_;
    LinearPropagator prop_;
};

/// Single-step convenience wrapper (rebuilds the propagator).
ComplexField step(const ComplexField& psi, const Nonlinearity& nl,
                  const IntegratorConfig& cfg);

std::vector<TrajectorySample> evolve(const ComplexField& psi0,
                                     const Nonlinearity& nl,
                                     const IntegratorConfig& cfg, double t_end);

/// Trajectory CSV: t, energy, charge, drift_energy, drift_charge.
void write_trajectory_csv(std::ostream& os,
                          const std::vector<TrajectorySample>& samples);

} // namespace solcomp
