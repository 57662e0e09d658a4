#include "qvf/relations.hpp"

#include "qvf/errors.hpp"
#include "qvf/hidden.hpp"

namespace qvf {

std::pair<Rational, Rational> check_euler_jacobi(const FiniteSpectra& s) {
    Rational ej1, ej2;
    for (size_t k = 0; k < 4; ++k) {
        if (s.d[k].is_zero()) throw domain_error("degenerate spectra: d_k = 0");
        ej1 += s.d[k].inverse();
        ej2 += s.t[k] / s.d[k];
    }
    return {ej1, ej2};
}

Rational check_baum_bott(const ExtendedSpectra& s) {
    const auto& sig = s.infinity.sigma;
    if (sig[2].is_zero()) throw domain_error("degenerate infinity: sigma3 = 0");
    Rational sum;
    for (size_t k = 0; k < 4; ++k) {
        if (s.finite.d[k].is_zero()) throw domain_error("degenerate spectra: d_k = 0");
        sum += s.finite.t[k] * s.finite.t[k] / s.finite.d[k];
    }
    const Rational sixteen(16);   // (d+2)^2 at projective degree d = 2
    return sum + sig[0] + Rational(6) + sig[1] / sig[2] - sixteen;
}

double baum_bott_numeric(const ExtendedSpectra& s) {
    double sum = 0.0;
    for (size_t k = 0; k < 4; ++k)
        sum += (s.finite.t[k] * s.finite.t[k] / s.finite.d[k]).to_double();
    cplx inf{0.0, 0.0};
    for (const auto& lam : s.infinity.lambdas)
        inf += (lam + 1.0) * (lam + 1.0) / lam;
    return sum + inf.real() - 16.0;
}

Rational check_camacho_sad(const ExtendedSpectra& s) {
    return s.infinity.sigma[0] - Rational(1);
}

RelationReport full_report(const NormalFormField& v) {
    const MembershipVerdict verdict = membership_V2(v);
    if (!verdict.ok)
        throw domain_error("field rejected from V2", verdict.reasons);
    const ExtendedSpectra s = extended_spectra(v);
    RelationReport report;
    const auto ej = check_euler_jacobi(s.finite);
    report.ej1 = ej.first;
    report.ej2 = ej.second;
    report.cs = check_camacho_sad(s);
    report.bb = check_baum_bott(s);
    report.hidden = evaluate_hidden(s);
    return report;
}

} // namespace qvf
