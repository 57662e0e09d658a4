#ifndef QVF_RATIONAL_HPP
#define QVF_RATIONAL_HPP

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <ostream>
#include <string>
#include <utility>

#include "qvf/errors.hpp"

namespace qvf {

/// Arbitrary-precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper over GMP's mpq_class; the
/// wrapper pins the canonical-form invariant and the "p/q" string format
/// used by every serialized interface.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}           // NOLINT(google-explicit-constructor)
    Rational(int n) : v_(n) {}            // NOLINT(google-explicit-constructor)
    Rational(long n, long d) : v_(n, d) {
        if (d == 0) throw domain_error("rational with zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" (q > 0 after canonicalization).
    static Rational from_string(const std::string& text);

    std::string str() const {
        std::string s = v_.get_num().get_str();
        if (v_.get_den() != 1) s += "/" + v_.get_den().get_str();
        return s;
    }

    double to_double() const { return v_.get_d(); }

    const mpz_class& num() const { return v_.get_num(); }
    const mpz_class& den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }
    bool is_integer() const { return v_.get_den() == 1; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw domain_error("division by zero rational");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero rational");
        return Rational(mpq_class(1 / v_));
    }

    Rational pow(unsigned e) const {
        mpz_class n, d;
        mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), e);
        mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), e);
        mpq_class r(n, d);   // already canonical: num/den coprime
        return Rational(std::move(r));
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    /// True iff this is the square of a rational; `root` receives the
    /// non-negative square root when so.
    bool sqrt_if_square(Rational& root) const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

  private:
    mpq_class v_;
};

inline Rational Rational::from_string(const std::string& text) {
    if (text.empty()) throw parse_error("empty rational literal");
    const auto slash = text.find('/');
    try {
        mpz_class num(slash == std::string::npos ? text : text.substr(0, slash));
        mpz_class den(slash == std::string::npos ? std::string("1") : text.substr(slash + 1));
        if (den == 0) throw parse_error("rational literal with zero denominator: " + text);
        mpq_class q(num, den);
        q.canonicalize();
        return Rational(std::move(q));
    } catch (const std::invalid_argument&) {
        throw parse_error("malformed rational literal: " + text);
    }
}

/// Conversion of exact rationals into other scalar rings (identity,
/// double, complex, jets, ...). Specialize or rely on T's constructor.
template <class T>
struct RationalCast {
    static T cast(const Rational& q) { return T(q); }
};
template <>
struct RationalCast<Rational> {
    static Rational cast(const Rational& q) { return q; }
};
template <>
struct RationalCast<double> {
    static double cast(const Rational& q) { return q.to_double(); }
};
template <>
struct RationalCast<std::complex<double>> {
    static std::complex<double> cast(const Rational& q) { return {q.to_double(), 0.0}; }
};

template <class T>
T rational_cast(const Rational& q) {
    return RationalCast<T>::cast(q);
}

inline bool Rational::sqrt_if_square(Rational& root) const {
    if (sign() < 0) return false;
    const mpz_class& n = num();
    const mpz_class& d = den();
    if (!mpz_perfect_square_p(n.get_mpz_t()) || !mpz_perfect_square_p(d.get_mpz_t()))
        return false;
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), d.get_mpz_t());
    root = Rational(mpq_class(rn, rd));
    return true;
}

} // namespace qvf

#endif
