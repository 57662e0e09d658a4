#ifndef QVF_RELATIONS_HPP
#define QVF_RELATIONS_HPP

#include <utility>

#include "qvf/spectra.hpp"

namespace qvf {

/// Exact residuals of the five relations constraining the extended
/// spectra of a field in V2. All five are zero on genuine V2 spectra.
struct RelationReport {
    Rational ej1;      // sum 1/d_k
    Rational ej2;      // sum t_k/d_k
    Rational cs;       // sigma1 - 1
    Rational bb;       // sum t_k^2/d_k + sigma1 + 6 + sigma2/sigma3 - 16
    Rational hidden;   // H~2 L^2 + H~1 L + H~0

    bool all_zero() const {
        return ej1.is_zero() && ej2.is_zero() && cs.is_zero() && bb.is_zero() &&
               hidden.is_zero();
    }
};

/// Euler-Jacobi residuals (sum 1/d_k, sum t_k/d_k). Total on any spectra
/// values with nonzero determinants; throws on d_k = 0.
std::pair<Rational, Rational> check_euler_jacobi(const FiniteSpectra& s);

/// Baum-Bott residual in symmetric-function form. The theorem constant
/// is (d+2)^2 with projective degree d = 2, i.e. 16; the identity
/// sum (lambda+1)^2/lambda = sigma1 + 6 + sigma2/sigma3 replaces the
/// individual (generally irrational) characteristic numbers.
Rational check_baum_bott(const ExtendedSpectra& s);

/// Numeric Baum-Bott residual from the numeric characteristic numbers;
/// diagnostic companion of the exact form.
double baum_bott_numeric(const ExtendedSpectra& s);

/// Camacho-Sad residual sigma1 - 1.
Rational check_camacho_sad(const ExtendedSpectra& s);

/// Full exact report for one field; requires membership_V2 to accept and
/// throws domain_error with the collected reasons otherwise.
RelationReport full_report(const NormalFormField& v);

} // namespace qvf

#endif
