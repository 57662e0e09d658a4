#ifndef QVF_SPECTRA_HPP
#define QVF_SPECTRA_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "qvf/normal_form.hpp"
#include "qvf/numeric.hpp"
#include "qvf/rational.hpp"
#include "qvf/unipoly.hpp"

namespace qvf {

/// Traces and determinants of the linearization at the four affine
/// singularities, plus the fourth singular point itself. t/d order
/// follows the pinned singularities (0,0), (1,0), (0,1), p4.
struct FiniteSpectra {
    std::array<Rational, 4> t{};
    std::array<Rational, 4> d{};
    std::pair<Rational, Rational> p4{};
};

/// Data of the induced foliation along the line at infinity:
/// dz/dw = z F(w)/G(w) + O(z^2). sigma holds the exact elementary
/// symmetric functions of the three characteristic numbers; Lambda is
/// sigma3 = Res(F,G)/Res(G',G); lambdas are the numeric residues.
struct InfinityData {
    UniPoly F;
    UniPoly G;
    std::array<Rational, 3> sigma{};
    Rational Lambda;
    std::array<cplx, 3> lambdas{};
};

struct ExtendedSpectra {
    FiniteSpectra finite;
    InfinityData infinity;
};

/// Verdict object for class membership; `ok` iff `reasons` is empty.
struct MembershipVerdict {
    bool ok = false;
    std::vector<std::string> reasons;
};

/// Finite spectra of a normal-form field: (t1..t3, d1..d3) by the closed
/// forms in the coefficients, d4/t4 derived through Euler-Jacobi, and the
/// fourth point p4 = (-d4/d2, -d4/d3) cross-checked exactly against the
/// Jacobian there. Throws domain_error outside V2.
FiniteSpectra finite_spectra(const NormalFormField& v);

/// Characteristic data at infinity; throws domain_error when deg G < 3,
/// G is not squarefree, or some characteristic number vanishes.
InfinityData infinity_data(const NormalFormField& v);

ExtendedSpectra extended_spectra(const NormalFormField& v);

/// Exact membership test for the class V2 (four isolated non-degenerate
/// affine singularities, three simple singularities at infinity, all
/// characteristic numbers nonzero). Never throws; collects every violated
/// condition.
MembershipVerdict membership_V2(const NormalFormField& v);

} // namespace qvf

#endif
