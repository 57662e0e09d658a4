#ifndef QVF_NORMAL_FORM_HPP
#define QVF_NORMAL_FORM_HPP

#include <array>

#include "qvf/rational.hpp"
#include "qvf/unipoly.hpp"

namespace qvf {

/// Quadratic vector field in normal form: the canonical representative of
/// an affine orbit with singularities pinned at (0,0), (1,0), (0,1),
///
///   P(x,y) = a0 x^2 + a1 xy + a2 y^2 - a0 x - a2 y
///   Q(x,y) = a3 x^2 + a4 xy + a5 y^2 - a3 x - a5 y.
struct NormalFormField {
    std::array<Rational, 6> a{};

    template <class T>
    T P(const T& x, const T& y) const {
        const T c0 = rational_cast<T>(a[0]), c1 = rational_cast<T>(a[1]),
                c2 = rational_cast<T>(a[2]);
        return c0 * x * x + c1 * x * y + c2 * y * y - c0 * x - c2 * y;
    }
    template <class T>
    T Q(const T& x, const T& y) const {
        const T c3 = rational_cast<T>(a[3]), c4 = rational_cast<T>(a[4]),
                c5 = rational_cast<T>(a[5]);
        return c3 * x * x + c4 * x * y + c5 * y * y - c3 * x - c5 * y;
    }

    /// Linearization matrix entries at (x, y), row-major (Px, Py, Qx, Qy).
    std::array<Rational, 4> jacobian(const Rational& x, const Rational& y) const {
        const Rational two(2);
        return {
            two * a[0] * x + a[1] * y - a[0],
            a[1] * x + two * a[2] * y - a[2],
            two * a[3] * x + a[4] * y - a[3],
            a[4] * x + two * a[5] * y - a[5],
        };
    }

    bool is_zero() const {
        for (const auto& c : a)
            if (!c.is_zero()) return false;
        return true;
    }

    /// F(w) = a0 + a1 w + a2 w^2: the top part of P restricted to the
    /// line at infinity in the chart (z, w) = (1/x, y/x).
    UniPoly infinity_numerator() const { return UniPoly{a[0], a[1], a[2]}; }

    /// G(w) = w F(w) - (a3 + a4 w + a5 w^2); degree 3 iff a2 != 0.
    UniPoly infinity_denominator() const {
        return UniPoly{-a[3], a[0] - a[4], a[1] - a[5], a[2]};
    }

    bool operator==(const NormalFormField& o) const = default;
};

} // namespace qvf

#endif
