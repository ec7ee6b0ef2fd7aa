#pragma once

#include "solcomp/field.hpp"
#include "solcomp/functionals.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace solcomp {

struct CodingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// N-bin partition of [0, sigma]: P_k = [sigma (k-1)/N, sigma k/N) for k < N,
/// P_N closed at sigma.
struct CodingParams {
    double sigma = 1.0;
    int N = 1;

    void validate() const;
    /// Bin index in 1..N of a difference magnitude d in [0, sigma].
    int bin(double d) const;
};

/// The (omega, s) pair produced by coarse-graining the successive differences
/// of a shape field. Difference terms are indexed by the site l carrying the
/// difference u_l - u_{l-1}; the index range is diff_index_range(params).
struct SymbolCoding {
    long first_index = 0;              // site index of omega[0]
    std::vector<int> omega;            // values in 1..N
    std::vector<std::int8_t> signs;    // +1, -1, or 0 for the empty symbol
    std::optional<std::pair<long, long>> window; // minimal interval with omega >= 2
    std::string s_string;              // '+'/'-' of the non-empty signs, in order
    std::vector<long> s_sites;         // site carrying each s_string character
    CodingParams params;

    long site(std::size_t i) const { return first_index + static_cast<long>(i); }
};

struct SplitStrings {
    std::string s_plus;
    std::string s_minus;
};

SymbolCoding encode(const ShapeField& u, const CodingParams& cp);

/// Substrings of s over U^+ and U^- by the region membership of the site
/// carrying each sign.
SplitStrings split_by_region(const SymbolCoding& sc, const RegionSplit& rs);

/// Codings at N and N2 > N; non-empty signs at N are identical at N2.
std::pair<SymbolCoding, SymbolCoding> refine_bins(const ShapeField& u,
                                                  const CodingParams& cp, int N2);

/// Dump format: header with sigma, N, window; lines `l TAB omega TAB s` with
/// s in {+, -, .}.
void write_coding(std::ostream& os, const SymbolCoding& sc);

} // namespace solcomp
