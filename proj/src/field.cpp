#include "solcomp/field.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace solcomp {

void LatticeParams::validate() const {
    if (!(h > 0.0)) throw FieldError("lattice spacing h must be positive");
    if (lo >= hi) throw FieldError("lattice extent requires lo < hi");
}

void ComplexField::check_finite() const {
    for (const auto& z : values_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw FieldError("complex field has non-finite amplitude");
    }
}

void ShapeField::check_valid() const {
    for (double u : values_) {
        if (!std::isfinite(u)) throw FieldError("shape field has non-finite value");
        if (u < 0.0) throw FieldError("shape field has negative value");
    }
}

ShapeField translated(const ShapeField& u, long offset) {
    LatticeParams p = u.params();
    p.lo += offset;
    p.hi += offset;
    return ShapeField(p, u.values());
}

namespace {

void write_header(std::ostream& os, const LatticeParams& p) {
    char buf[128];
    std::snprintf(buf, sizeof buf, "# h=%.17g lo=%ld hi=%ld boundary=%s\n", p.h,
                  p.lo, p.hi, p.boundary == Boundary::zero ? "zero" : "periodic");
    os << buf;
}

LatticeParams read_header(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.empty() || line[0] != '#')
        throw FieldError("missing field header line");
    LatticeParams p;
    char bstr[32] = {0};
    if (std::sscanf(line.c_str(), "# h=%lg lo=%ld hi=%ld boundary=%31s", &p.h,
                    &p.lo, &p.hi, bstr) != 4)
        throw FieldError("malformed field header: " + line);
    const std::string b(bstr);
    if (b == "zero")
        p.boundary = Boundary::zero;
    else if (b == "periodic")
        p.boundary = Boundary::periodic;
    else
        throw FieldError("unknown boundary kind: " + b);
    p.validate();
    return p;
}

} // namespace

void write_field(std::ostream& os, const ShapeField& u) {
    write_header(os, u.params());
    char buf[96];
    for (long l = u.lo(); l <= u.hi(); ++l) {
        std::snprintf(buf, sizeof buf, "%ld\t%.17g\n", l, u[l]);
        os << buf;
    }
}

void write_field(std::ostream& os, const ComplexField& psi) {
    write_header(os, psi.params());
    char buf[160];
    for (long l = psi.lo(); l <= psi.hi(); ++l) {
        std::snprintf(buf, sizeof buf, "%ld\t%.17g\t%.17g\n", l, psi[l].real(),
                      psi[l].imag());
        os << buf;
    }
}

ShapeField read_shape_field(std::istream& is) {
    const LatticeParams p = read_header(is);
    ShapeField u(p);
    std::string line;
    for (long l = p.lo; l <= p.hi; ++l) {
        if (!std::getline(is, line)) throw FieldError("truncated shape field file");
        long site;
        double v;
        if (std::sscanf(line.c_str(), "%ld\t%lg", &site, &v) != 2 || site != l)
            throw FieldError("malformed shape field line: " + line);
        u[l] = v;
    }
    u.check_valid();
    return u;
}

ComplexField read_complex_field(std::istream& is) {
    const LatticeParams p = read_header(is);
    ComplexField psi(p);
    std::string line;
    for (long l = p.lo; l <= p.hi; ++l) {
        if (!std::getline(is, line)) throw FieldError("truncated complex field file");
        long site;
        double re, im;
        if (std::sscanf(line.c_str(), "%ld\t%lg\t%lg", &site, &re, &im) != 3 ||
            site != l)
            throw FieldError("malformed complex field line: " + line);
        psi[l] = {re, im};
    }
    psi.check_finite();
    return psi;
}

namespace {
std::ofstream open_out(const std::string& path) {
    std::ofstream os(path);
    if (!os) throw FieldError("cannot open for writing: " + path);
    return os;
}
std::ifstream open_in(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw FieldError("cannot open for reading: " + path);
    return is;
}
} // namespace

void save_field(const std::string& path, const ShapeField& u) {
    auto os = open_out(path);
    write_field(os, u);
}
void save_field(const std::string& path, const ComplexField& psi) {
    auto os = open_out(path);
    write_field(os, psi);
}
ShapeField load_shape_field(const std::string& path) {
    auto is = open_in(path);
    return read_shape_field(is);
}
ComplexField load_complex_field(const std::string& path) {
    auto is = open_in(path);
    return read_complex_field(is);
}

} // namespace solcomp
