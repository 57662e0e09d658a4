#ifndef QVF_HIDDEN_HPP
#define QVF_HIDDEN_HPP

#include <array>
#include <span>

#include "qvf/multipoly.hpp"
#include "qvf/numeric.hpp"
#include "qvf/spectra.hpp"

namespace qvf {

/// One hardcoded term of a hat-polynomial: coefficient and exponents of
/// (t1..t4, d1..d4).
struct HatTerm {
    long coeff;
    std::array<int, 4> t;
    std::array<int, 4> d;
};

/// The fifth relation on the extended spectra, quadratic in Lambda.
/// h_hat are the short generating polynomials; h_tilde their diagonal S4
/// symmetrizations, each diagonal-symmetric and weighted-homogeneous of
/// degree 10 under (t:1, d:2). The relation is
///   h_tilde[2]*Lambda^2 + h_tilde[1]*Lambda + h_tilde[0] = 0.
class HiddenRelation {
  public:
    static const HiddenRelation& instance();

    const std::array<MultiPoly, 3>& hat() const { return hat_; }
    const std::array<MultiPoly, 3>& tilde() const { return tilde_; }

    /// Exact value of the relation on given spectra (zero on V2 spectra).
    Rational evaluate(const ExtendedSpectra& s) const;

    /// (c2, c1, c0) = (H~2, H~1, H~0) evaluated at the finite spectra.
    std::array<Rational, 3> quadratic(const FiniteSpectra& s) const;

    /// True iff every monomial of every h_tilde has weighted degree 10.
    bool weighted_homogeneity_check() const;

  private:
    HiddenRelation();
    std::array<MultiPoly, 3> hat_;
    std::array<MultiPoly, 3> tilde_;
};

/// Raw hardcoded term tables (exposed for transcription tests).
std::span<const HatTerm> hat_terms(int k);

/// Convenience front-ends.
Rational evaluate_hidden(const ExtendedSpectra& s);

struct LambdaPrediction {
    std::array<Rational, 3> coeffs;   // c2, c1, c0 exact
    std::array<cplx, 2> roots;        // sorted by cplx_less
};

/// The two admissible products of characteristic numbers for the given
/// finite spectra: the exact quadratic c2 L^2 + c1 L + c0 and its numeric
/// roots. One root is the field's Lambda, the other its twin's. Throws
/// domain_error when the quadratic degenerates (c2 = 0).
LambdaPrediction predict_lambda_pair(const FiniteSpectra& s);

} // namespace qvf

#endif
