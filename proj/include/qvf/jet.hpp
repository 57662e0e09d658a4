#ifndef QVF_JET_HPP
#define QVF_JET_HPP

#include <array>

#include "qvf/rational.hpp"

namespace qvf {

/// First-order jet (value plus gradient) over Rational with N independent
/// variables: exact forward-mode differentiation for rational functions.
template <int N>
struct Jet {
    Rational v;
    std::array<Rational, N> g{};

    Jet() = default;
    explicit Jet(Rational value) : v(std::move(value)) {}

    static Jet variable(Rational value, int index) {
        Jet j(std::move(value));
        j.g[static_cast<size_t>(index)] = Rational(1);
        return j;
    }

    Jet operator-() const {
        Jet r(-v);
        for (int i = 0; i < N; ++i) r.g[static_cast<size_t>(i)] = -g[static_cast<size_t>(i)];
        return r;
    }
    friend Jet operator+(const Jet& a, const Jet& b) {
        Jet r(a.v + b.v);
        for (int i = 0; i < N; ++i)
            r.g[static_cast<size_t>(i)] = a.g[static_cast<size_t>(i)] + b.g[static_cast<size_t>(i)];
        return r;
    }
    friend Jet operator-(const Jet& a, const Jet& b) { return a + (-b); }
    friend Jet operator*(const Jet& a, const Jet& b) {
        Jet r(a.v * b.v);
        for (int i = 0; i < N; ++i)
            r.g[static_cast<size_t>(i)] =
                a.g[static_cast<size_t>(i)] * b.v + a.v * b.g[static_cast<size_t>(i)];
        return r;
    }
    friend Jet operator/(const Jet& a, const Jet& b) {
        if (b.v.is_zero()) throw domain_error("jet division by a zero value");
        Jet r(a.v / b.v);
        const Rational b2 = b.v * b.v;
        for (int i = 0; i < N; ++i)
            r.g[static_cast<size_t>(i)] =
                (a.g[static_cast<size_t>(i)] * b.v - a.v * b.g[static_cast<size_t>(i)]) / b2;
        return r;
    }

    Jet inverse() const { return Jet(Rational(1)) / *this; }
};

template <int N>
struct RationalCast<Jet<N>> {
    static Jet<N> cast(const Rational& q) { return Jet<N>(q); }
};

} // namespace qvf

#endif
