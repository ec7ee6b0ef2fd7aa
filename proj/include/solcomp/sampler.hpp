#pragma once

#include "solcomp/field.hpp"
#include "solcomp/nonlinearity.hpp"

#include <cstdint>
#include <random>

namespace solcomp {

/// Deterministic fan-out of one master seed into independent substreams.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);
std::mt19937_64 make_rng(std::uint64_t master, std::uint64_t stream);

double uniform01(std::mt19937_64& rng);
double uniform_in(std::mt19937_64& rng, double a, double b);
long uniform_long(std::mt19937_64& rng, long a, long b); // inclusive

/// Superposition of `k` cosine-squared bumps with the given height and width
/// ranges, rescaled to charge sigma_sq.
ShapeField random_bump_field(const LatticeParams& params, double sigma_sq, int k,
                             double height_lo, double height_hi, long width_lo,
                             long width_hi, std::mt19937_64& rng);

/// Random hylomorphic field at charge sigma_sq (rejection over bump counts).
ShapeField sample_hylomorphic(const LatticeParams& params, double sigma_sq,
                              const Nonlinearity& nl, std::mt19937_64& rng);

/// Field classified multi_bump at height alpha with J <= m.
ShapeField sample_multi_bump(const LatticeParams& params, double sigma_sq,
                             const Nonlinearity& nl, double alpha, double m,
                             std::mt19937_64& rng);

/// Field classified single_bump_nonregular at (alpha, beta) with J <= m.
ShapeField sample_nonregular_bump(const LatticeParams& params, double sigma_sq,
                                  const Nonlinearity& nl, double alpha,
                                  double beta, double m, std::mt19937_64& rng);

/// Random decaying complex field at charge sigma_sq supported on the middle
/// `support` sites of the window.
ComplexField sample_complex_field(const LatticeParams& params, double sigma_sq,
                                  long support, std::mt19937_64& rng);

} // namespace solcomp
