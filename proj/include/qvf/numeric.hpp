#ifndef QVF_NUMERIC_HPP
#define QVF_NUMERIC_HPP

#include <array>
#include <complex>

#include "qvf/rational.hpp"
#include "qvf/unipoly.hpp"

namespace qvf {

using cplx = std::complex<double>;

/// Tolerance convention used across the project: the error is measured
/// relative to |expected| when |expected| > 1, absolutely otherwise.
inline bool near(double got, double expected, double tol = 1e-9) {
    const double scale = std::abs(expected) > 1.0 ? std::abs(expected) : 1.0;
    return std::abs(got - expected) <= tol * scale;
}
inline bool near(const cplx& got, const cplx& expected, double tol = 1e-9) {
    const double scale = std::abs(expected) > 1.0 ? std::abs(expected) : 1.0;
    return std::abs(got - expected) <= tol * scale;
}

/// Deterministic ordering of complex values: by real part, then imaginary.
inline bool cplx_less(const cplx& a, const cplx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
}

/// Roots of c2 z^2 + c1 z + c0 (c2 != 0), sorted by cplx_less.
std::array<cplx, 2> quadratic_roots(const cplx& c2, const cplx& c1, const cplx& c0);

/// Roots of a degree-3 polynomial with rational coefficients: Cardano
/// followed by a Newton polish on the exact-coefficient cubic. Sorted by
/// cplx_less.
std::array<cplx, 3> cubic_roots(const UniPoly& g);

} // namespace qvf

#endif
