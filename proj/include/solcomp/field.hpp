#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

namespace solcomp {

enum class Boundary { zero, periodic };

struct FieldError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Finite truncation window of the lattice Z with spacing h.
struct LatticeParams {
    double h = 1.0;
    long lo = 0;
    long hi = 0;
    Boundary boundary = Boundary::zero;

    std::size_t size() const { return static_cast<std::size_t>(hi - lo + 1); }
    void validate() const;
    bool operator==(const LatticeParams&) const = default;
};

namespace detail {
template <class T>
class FieldBase {
public:
    FieldBase() : values_(1, T{}) {}
    FieldBase(LatticeParams p, std::vector<T> values)
        : params_(p), values_(std::move(values)) {
        params_.validate();
        if (values_.size() != params_.size())
            throw FieldError("field length does not match lattice extent");
    }
    explicit FieldBase(LatticeParams p) : params_(p), values_(p.size(), T{}) {
        params_.validate();
    }

    const LatticeParams& params() const { return params_; }
    long lo() const { return params_.lo; }
    long hi() const { return params_.hi; }
    std::size_t size() const { return values_.size(); }

    const std::vector<T>& values() const { return values_; }
    std::vector<T>& values() { return values_; }

    bool in_extent(long l) const { return l >= params_.lo && l <= params_.hi; }

    /// Value at site l; outside the extent the zero boundary reads 0 and the
    /// periodic boundary wraps.
    T at(long l) const {
        if (in_extent(l)) return values_[static_cast<std::size_t>(l - params_.lo)];
        if (params_.boundary == Boundary::zero) return T{};
        const long n = params_.hi - params_.lo + 1;
        long j = (l - params_.lo) % n;
        if (j < 0) j += n;
        return values_[static_cast<std::size_t>(j)];
    }

    T& operator[](long l) { return values_[static_cast<std::size_t>(l - params_.lo)]; }
    const T& operator[](long l) const {
        return values_[static_cast<std::size_t>(l - params_.lo)];
    }

protected:
    LatticeParams params_{};
    std::vector<T> values_;
};
} // namespace detail

/// Full complex state psi over the window.
class ComplexField : public detail::FieldBase<std::complex<double>> {
public:
    using FieldBase::FieldBase;
    void check_finite() const;
};

/// Non-negative modulus profile u over the window.
class ShapeField : public detail::FieldBase<double> {
public:
    using FieldBase::FieldBase;
    void check_valid() const; // finite and >= 0
};

/// Phase profile theta (radians).
class PhaseField : public detail::FieldBase<double> {
public:
    using FieldBase::FieldBase;
};

/// Index range over which nearest-neighbour difference terms are summed:
/// [lo, hi+1] for the zero boundary (the fall back to zero is a real term),
/// [lo, hi] for the periodic boundary.
inline std::pair<long, long> diff_index_range(const LatticeParams& p) {
    return {p.lo, p.boundary == Boundary::zero ? p.hi + 1 : p.hi};
}

/// Same field values shifted by `offset` lattice sites (extent moves with it).
ShapeField translated(const ShapeField& u, long offset);

// Plain-text one-site-per-line serialization.
void write_field(std::ostream& os, const ShapeField& u);
void write_field(std::ostream& os, const ComplexField& psi);
ShapeField read_shape_field(std::istream& is);
ComplexField read_complex_field(std::istream& is);

void save_field(const std::string& path, const ShapeField& u);
void save_field(const std::string& path, const ComplexField& psi);
ShapeField load_shape_field(const std::string& path);
ComplexField load_complex_field(const std::string& path);

} // namespace solcomp
