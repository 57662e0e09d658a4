#ifndef QVF_UNIPOLY_HPP
#define QVF_UNIPOLY_HPP

#include <complex>
#include <initializer_list>
#include <utility>
#include <vector>

#include "qvf/rational.hpp"

namespace qvf {

/// Dense univariate polynomial over Rational, coefficients stored lowest
/// degree first with no trailing zeros. The zero polynomial has an empty
/// coefficient list and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    UniPoly(std::initializer_list<Rational> coeffs_low_first)
        : c_(coeffs_low_first) { normalize(); }
    explicit UniPoly(std::vector<Rational> coeffs_low_first)
        : c_(std::move(coeffs_low_first)) { normalize(); }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& leading() const;
    const Rational& coeff(int k) const;   // 0 outside stored range
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const;
    std::complex<double> operator()(const std::complex<double>& x) const;

    UniPoly derivative() const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    UniPoly scaled(const Rational& s) const;

    /// Quotient and remainder; divisor must be nonzero.
    static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

    UniPoly mod(const UniPoly& m) const { return divmod(*this, m).second; }

    /// Monic greatest common divisor (constant 1 when coprime).
    static UniPoly gcd(const UniPoly& a, const UniPoly& b);

    bool is_squarefree() const;

    /// Inverse of *this modulo m (extended Euclid); throws domain_error
    /// when gcd(*this, m) is non-constant.
    UniPoly inverse_mod(const UniPoly& m) const;

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

  private:
    void normalize();
    std::vector<Rational> c_;
};

/// Resultant of f and g: determinant of the Sylvester matrix with the
/// deg(g) rows of f's coefficients first, evaluated by fraction-free
/// Bareiss elimination (no root-finding anywhere). With this row order
/// Res(f,g) = lc(f)^deg(g) * prod g(alpha_i) over the roots alpha_i of f.
/// Conventions for edge cases: both inputs zero -> domain_error; exactly
/// one zero -> 0; two nonzero constants -> 1 (empty matrix).
Rational resultant(const UniPoly& f, const UniPoly& g);

/// Power sums s_1..s_mmax of the roots of g (with multiplicity), computed
/// from the coefficients through Newton's identities. s_0 = deg g.
std::vector<Rational> power_sums_of_roots(const UniPoly& g, int mmax);

/// p_m = sum_j (F(w_j)/G'(w_j))^m over the roots w_j of G, for m=1..mmax,
/// computed exactly as the trace of multiplication by (F*G'^{-1} mod G)^m
/// on the quotient ring C[w]/(G). Requires deg G = deg F + 1 and G
/// squarefree (equivalently G' invertible mod G).
std::vector<Rational> power_sums_of_residues(const UniPoly& F, const UniPoly& G,
                                             int mmax);

} // namespace qvf

#endif
