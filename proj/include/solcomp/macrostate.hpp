#pragma once

#include "solcomp/coding.hpp"
#include "solcomp/complexity.hpp"
#include "solcomp/field.hpp"
#include "solcomp/functionals.hpp"
#include "solcomp/nonlinearity.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace solcomp {

struct MacrostateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MacroParams {
    double alpha = 0.0; // bump height on the u scale
    double beta = 0.0;  // regularity precision
    double m = 0.0;     // energy cap
    double sigma = 1.0;
};

enum class BumpKind {
    no_bump,
    multi_bump,
    single_bump_nonregular,
    single_bump_regular
};

std::string_view bump_kind_name(BumpKind k);

struct MacrostateLabel {
    BumpKind kind = BumpKind::no_bump;
    std::optional<std::pair<long, long>> tall_component; // U^-_alpha as a run
    std::optional<long> peak_index;                      // smallest admissible l0
    int n_tall_components = 0;
};

struct TransformCertificate {
    double dJ_claimed = 0.0; // guaranteed decrease (or cap, for grow_tail)
    double dJ_actual = 0.0;  // measured decrease J(in) - J(out); increase for grow_tail
    double dC_actual = 0.0;  // C(out) - C(in)
    long dComplexity = 0;    // est(s+ out) - est(s+ in), when applicable
    bool bound_satisfied = false;
    long iterations = 0;
};

struct TheoremParams {
    double gamma = 0.0;
    double mu = 0.0;
    int N = 0;
    long n = 0;
    long a = 1;
    std::uint64_t tail_seed = 0x7a11;

    /// Throws unless the tail energy budget holds and the caps on mu are met.
    void validate(double sigma_sq, double h, const Nonlinearity& nl, double alpha,
                  double beta) const;
};

MacrostateLabel classify(const ShapeField& u, const Nonlinearity& nl,
                         const MacroParams& mp);

/// Reverses the segment between consecutive tall components until a single
/// tall component remains. Charge and the multiset of values are preserved
/// exactly; the guaranteed decrease per merge is
/// (2/h^2) |min{v_b1, v_b2} - max{v_a1, v_a2}|^2, accumulated.
std::pair<ShapeField, TransformCertificate> merge_bumps(const ShapeField& v,
                                                        const Nonlinearity& nl,
                                                        const MacroParams& mp);

/// Rearranges the tall component unimodally (ascending to the peak, then
/// descending) so the bump becomes regular at (alpha, beta) in one pass.
/// Guaranteed decrease is (1/h^2) s0 beta^2 / C(v).
std::pair<ShapeField, TransformCertificate> regularize_bump(
    const ShapeField& v, const Nonlinearity& nl, const MacroParams& mp);

struct DilationResult {
    ShapeField u;
    double q = 0.0;        // C(in) - C(out) = (1 - gamma^2) sum_{U^-} u^2
    double dJ_minus = 0.0; // J^-(out) - J^-(in)
    long ejected = 0;      // sites leaving U^- under the contraction
};

DilationResult dilate_minus(const ShapeField& u, const Nonlinearity& nl,
                            double gamma);

/// Appends a bounded +-1 tail walk after the coding
/// window; certificate checks dJ+ <= mu, dC <= h^2 mu and the estimator
/// increase >= 1.
std::pair<ShapeField, TransformCertificate> grow_tail(
    const ShapeField& v, const Nonlinearity& nl, const CodingParams& cp,
    const TheoremParams& tp, const ComplexityEstimator& est);

/// Adds a vanishing plateau with height below sigma/(2N) at a gap >= 10 sites
/// from U^-, raising the charge by exactly `deficit` without touching s.
ShapeField pad_charge(const ShapeField& u, double deficit, const Nonlinearity& nl,
                      const CodingParams& cp);

/// Calibrates gamma on a seeded ensemble, picks mu from the admissibility
/// caps and the smallest N admitting a long enough tail at a = 1.
TheoremParams admissible_params(double sigma, double h, const Nonlinearity& nl,
                                double alpha, double beta,
                                std::uint64_t calibration_seed = 0xca11b);

struct ChainStage {
    std::string name;
    TransformCertificate cert;
};

struct ChainReport {
    std::vector<ChainStage> stages;
    bool passed = false;
    std::string failed_stage; // empty on success
    double J_in = 0.0, J_out = 0.0;
    double C_in = 0.0, C_out = 0.0;
    std::size_t K_plus_in = 0, K_plus_out = 0;
    BumpKind final_kind = BumpKind::no_bump;
};

/// Full pipeline merge -> regularize -> dilate -> grow_tail ->
/// pad_charge with end-to-end verification of the three conclusions.
std::pair<ShapeField, ChainReport> theorem_chain(
    const ShapeField& v, const Nonlinearity& nl, const MacroParams& mp,
    const TheoremParams& tp, const CodingParams& cp,
    const ComplexityEstimator& est);

/// Chain report CSV: stage, dJ_claimed, dJ_actual, dC, dComplexity,
/// bound_satisfied.
void write_chain_report_csv(std::ostream& os, const ChainReport& r);

} // namespace solcomp
