#pragma once

#include "solcomp/coding.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace solcomp {

/// Deterministic computable surrogate for the algorithmic information content
/// of a finite string.
struct ComplexityEstimator {
    std::string name;
    std::function<std::size_t(std::string_view)> eval;
};

/// Number of phrases in the incremental LZ78 parse; a trailing partial phrase
/// counts as one.
std::size_t lz78_complexity(std::string_view w);

/// Number of maximal runs of equal characters; cross-check estimator.
std::size_t run_length_tokens(std::string_view w);

ComplexityEstimator make_lz78_estimator();
ComplexityEstimator make_run_length_estimator();

struct AxiomReport {
    double k1_margin = 0.0;      // fitted additive constant for K1
    long k2_violations = 0;
    long k3_violations = 0;
    long corpus_size = 0;
    long k2_checks = 0;
    long k3_checks = 0;
    double k2_fitted_constant = 0.0; // c' making the joint K2 inequality tight
};

/// I_N(u) = est(s-string of encode(u, cp)).
std::size_t information_content(const ShapeField& u, const CodingParams& cp,
                                const ComplexityEstimator& est);

/// (I^+, I^-) over the region substrings of the s-string.
std::pair<std::size_t, std::size_t> information_content_split(
    const ShapeField& u, const Nonlinearity& nl, const CodingParams& cp,
    const ComplexityEstimator& est);

/// Measures (K1)-(K3) on a corpus: K1 fits the smallest additive constant,
/// K2 tests both substring inequalities on seeded random splits, K3 tests
/// the concatenation increase on seeded random pairs.
AxiomReport check_axioms(const ComplexityEstimator& est,
                         const std::vector<std::string>& corpus,
                         std::uint64_t seed = 0x5eed);

void write_axiom_report_csv(std::ostream& os, const AxiomReport& r);

} // namespace solcomp
