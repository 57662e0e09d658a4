#include "qvf/hidden.hpp"

#include "qvf/errors.hpp"

namespace qvf {

namespace {

// ring of (t1..t4, d1..d4) with the grading used throughout
const std::vector<int> kWeights{1, 1, 1, 1, 2, 2, 2, 2};

MultiPoly build_hat(int k) {
    MultiPoly p(8, kWeights);
    MultiPoly::Exponents e(8);
    for (const HatTerm& term : hat_terms(k)) {
        for (int i = 0; i < 4; ++i) {
            e[static_cast<size_t>(i)] = term.t[static_cast<size_t>(i)];
            e[static_cast<size_t>(i + 4)] = term.d[static_cast<size_t>(i)];
        }
        p.add_term(e, Rational(term.coeff));
    }
    return p;
}

} // namespace

HiddenRelation::HiddenRelation()
    : hat_{build_hat(0), build_hat(1), build_hat(2)},
      tilde_{symmetrize_diag_S4(hat_[0]), symmetrize_diag_S4(hat_[1]),
             symmetrize_diag_S4(hat_[2])} {}

const HiddenRelation& HiddenRelation::instance() {
    static const HiddenRelation relation;
    return relation;
}

std::array<Rational, 3> HiddenRelation::quadratic(const FiniteSpectra& s) const {
    std::array<Rational, 8> point{s.t[0], s.t[1], s.t[2], s.t[3],
                                  s.d[0], s.d[1], s.d[2], s.d[3]};
    return {tilde_[2].eval_exact(point), tilde_[1].eval_exact(point),
            tilde_[0].eval_exact(point)};
}

Rational HiddenRelation::evaluate(const ExtendedSpectra& s) const {
    const auto c = quadratic(s.finite);
    const Rational& L = s.infinity.Lambda;
    return c[0] * L * L + c[1] * L + c[2];
}

bool HiddenRelation::weighted_homogeneity_check() const {
    for (const MultiPoly& h : tilde_) {
        for (const auto& [e, coef] : h.terms()) {
            long long deg = 0;
            for (size_t i = 0; i < 8; ++i)
                deg += static_cast<long long>(e[i]) * kWeights[i];
            if (deg != 10) return false;
        }
        if (h.is_zero()) return false;
    }
    return true;
}

Rational evaluate_hidden(const ExtendedSpectra& s) {
    return HiddenRelation::instance().evaluate(s);
}

LambdaPrediction predict_lambda_pair(const FiniteSpectra& s) {
    const auto c = HiddenRelation::instance().quadratic(s);
    if (c[0].is_zero())
        throw domain_error("quadratic degenerates - non-generic spectra (H~2 = 0)");
    // monic normalization keeps the numeric root extraction well scaled
    const Rational b = c[1] / c[0], cc = c[2] / c[0];
    LambdaPrediction out;
    out.coeffs = c;
    out.roots = quadratic_roots(cplx{1.0, 0.0}, cplx{b.to_double(), 0.0},
                                cplx{cc.to_double(), 0.0});
    return out;
}

} // namespace qvf
