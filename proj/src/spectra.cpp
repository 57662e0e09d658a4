#include "qvf/spectra.hpp"

#include <algorithm>

#include "qvf/errors.hpp"

namespace qvf {

namespace {

struct FinitePart {
    std::array<Rational, 4> t, d;
    std::pair<Rational, Rational> p4;
    std::string reject;   // empty iff valid
};

// Shared exact computation used by both finite_spectra (throwing) and
// membership_V2 (collecting): closed forms for the pinned points, then
// the Euler-Jacobi-derived fourth point with full cross-checks.
FinitePart finite_part(const NormalFormField& v) {
    FinitePart out;
    const auto& a = v.a;
    out.t[0] = -a[0] - a[5];
    out.d[0] = -a[2] * a[3] + a[0] * a[5];
    out.t[1] = a[0] + a[4] - a[5];
    out.d[1] = -a[1] * a[3] + a[2] * a[3] + a[0] * a[4] - a[0] * a[5];
    out.t[2] = -a[0] + a[1] + a[5];
    out.d[2] = a[2] * a[3] - a[2] * a[4] - a[0] * a[5] + a[1] * a[5];

    for (int k = 0; k < 3; ++k)
        if (out.d[static_cast<size_t>(k)].is_zero()) {
            out.reject = "degenerate singularity - outside V2: d" +
                         std::to_string(k + 1) + " = 0";
            return out;
        }

    const Rational inv_sum = out.d[0].inverse() + out.d[1].inverse() + out.d[2].inverse();
    if (inv_sum.is_zero()) {
        out.reject = "fourth singularity at infinity (1/d1 + 1/d2 + 1/d3 = 0)";
        return out;
    }
    out.d[3] = -inv_sum.inverse();
    out.t[3] = -out.d[3] * (out.t[0] / out.d[0] + out.t[1] / out.d[1] + out.t[2] / out.d[2]);
    out.p4 = {-out.d[3] / out.d[1], -out.d[3] / out.d[2]};

    const auto& [x4, y4] = out.p4;
    if (!v.P(x4, y4).is_zero() || !v.Q(x4, y4).is_zero()) {
        out.reject = "degenerate singularity - outside V2: fourth affine intersection missing or tangential";
        return out;
    }
    const auto J = v.jacobian(x4, y4);
    const Rational t4_jac = J[0] + J[3];
    const Rational d4_jac = J[0] * J[3] - J[1] * J[2];
    if (t4_jac != out.t[3] || d4_jac != out.d[3]) {
        out.reject = "degenerate singularity - outside V2: fourth singularity fails the Euler-Jacobi cross-check";
        return out;
    }
    // p4 has both coordinates nonzero (d4 != 0), so it cannot collide
    // with (0,0), (1,0) or (0,1); keep the explicit guard anyway.
    if ((x4.is_zero() && y4.is_zero()) || (x4.is_one() && y4.is_zero()) ||
        (x4.is_zero() && y4.is_one())) {
        out.reject = "degenerate singularity - outside V2: fewer than four distinct singularities";
        return out;
    }
    return out;
}

struct InfinityPart {
    UniPoly F, G;
    std::string reject;
};

InfinityPart infinity_part(const NormalFormField& v) {
    InfinityPart out;
    out.F = v.infinity_numerator();
    out.G = v.infinity_denominator();
    if (out.G.degree() != 3) {
        out.reject = "line at infinity degenerate - outside V2: deg G < 3 (deg G = " +
                     std::to_string(out.G.degree()) + ")";
        return out;
    }
    if (!out.G.is_squarefree()) {
        out.reject = "non-simple singularity at infinity (G has a repeated root)";
        return out;
    }
    return out;
}

} // namespace

FiniteSpectra finite_spectra(const NormalFormField& v) {
    FinitePart p = finite_part(v);
    if (!p.reject.empty()) throw domain_error(p.reject);
    return FiniteSpectra{p.t, p.d, p.p4};
}

InfinityData infinity_data(const NormalFormField& v) {
    InfinityPart part = infinity_part(v);
    if (!part.reject.empty()) throw domain_error(part.reject);

    InfinityData out;
    out.F = std::move(part.F);
    out.G = std::move(part.G);

    const Rational res_fg = resultant(out.F, out.G);
    const Rational res_gpg = resultant(out.G.derivative(), out.G);
    // G squarefree => Res(G',G) != 0
    out.Lambda = res_fg / res_gpg;
    if (out.Lambda.is_zero())
        throw domain_error("characteristic number zero at infinity (Res(F,G) = 0)");

    const auto p = power_sums_of_residues(out.F, out.G, 2);
    out.sigma[0] = p[0];
    out.sigma[1] = (p[0] * p[0] - p[1]) / Rational(2);
    out.sigma[2] = out.Lambda;

    const auto roots = cubic_roots(out.G);
    const UniPoly gp = out.G.derivative();
    for (size_t j = 0; j < 3; ++j) out.lambdas[j] = out.F(roots[j]) / gp(roots[j]);
    std::sort(out.lambdas.begin(), out.lambdas.end(), cplx_less);
    return out;
}

ExtendedSpectra extended_spectra(const NormalFormField& v) {
    return {finite_spectra(v), infinity_data(v)};
}

MembershipVerdict membership_V2(const NormalFormField& v) {
    MembershipVerdict verdict;
    if (v.is_zero()) {
        verdict.reasons.push_back("identically zero vector field");
        return verdict;
    }
    FinitePart fin = finite_part(v);
    if (!fin.reject.empty()) verdict.reasons.push_back(fin.reject);
    InfinityPart inf = infinity_part(v);
    if (!inf.reject.empty()) verdict.reasons.push_back(inf.reject);
    if (inf.reject.empty()) {
        if (resultant(inf.F, inf.G).is_zero())
            verdict.reasons.push_back(
                "characteristic number zero at infinity (Res(F,G) = 0)");
    }
    verdict.ok = verdict.reasons.empty();
    return verdict;
}

} // namespace qvf
