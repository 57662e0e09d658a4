#include "qvf/multipoly.hpp"

#include <algorithm>
#include <numeric>

namespace qvf {

namespace {
const Rational kZero{};
}

MultiPoly::MultiPoly(int arity, std::vector<int> weights)
    : arity_(arity), weights_(std::move(weights)) {
    if (weights_.size() != static_cast<size_t>(arity_))
        throw domain_error("weight vector length must equal arity");
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != static_cast<size_t>(arity_))
        throw domain_error("exponent vector length must equal arity");
    for (int x : e)
        if (x < 0) throw domain_error("negative exponent");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

const Rational& MultiPoly::coeff(const Exponents& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? kZero : it->second;
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(arity_, weights_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw domain_error("arity mismatch in +");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw domain_error("arity mismatch in -");
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    if (a.arity_ != b.arity_) throw domain_error("arity mismatch in *");
    MultiPoly r(a.arity_, a.weights_);
    MultiPoly::Exponents e(static_cast<size_t>(a.arity_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    return r;
}

MultiPoly MultiPoly::scaled(const Rational& s) const {
    MultiPoly r(arity_, weights_);
    if (s.is_zero()) return r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, c * s);
    return r;
}

std::optional<long long> MultiPoly::weighted_degree() const {
    if (terms_.empty()) return std::nullopt;
    long long best = 0;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        long long d = 0;
        for (int i = 0; i < arity_; ++i)
            d += static_cast<long long>(e[static_cast<size_t>(i)]) * weights_[static_cast<size_t>(i)];
        if (first || d > best) best = d;
        first = false;
    }
    return best;
}

MultiPoly MultiPoly::derivative(int var) const {
    if (var < 0 || var >= arity_) throw domain_error("derivative variable out of range");
    MultiPoly r(arity_, weights_);
    Exponents e(static_cast<size_t>(arity_));
    for (const auto& [exp, c] : terms_) {
        const int k = exp[static_cast<size_t>(var)];
        if (k == 0) continue;
        e = exp;
        e[static_cast<size_t>(var)] = k - 1;
        r.add_term(e, c * Rational(k));
    }
    return r;
}

MultiPoly MultiPoly::permuted(const std::vector<int>& perm) const {
    if (perm.size() != static_cast<size_t>(arity_))
        throw domain_error("permutation length must equal arity");
    MultiPoly r(arity_, weights_);
    Exponents e(static_cast<size_t>(arity_));
    for (const auto& [exp, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < arity_; ++i)
            e[static_cast<size_t>(perm[static_cast<size_t>(i)])] = exp[static_cast<size_t>(i)];
        r.add_term(e, c);
    }
    return r;
}

MultiPoly symmetrize_diag_S4(const MultiPoly& p) {
    if (p.arity() != 8)
        throw domain_error("diagonal S4 symmetrization requires arity 8 (t1..t4, d1..d4)");
    std::vector<int> sigma{0, 1, 2, 3};
    MultiPoly sum(p.arity(), p.weights());
    std::vector<int> perm(8);
    do {
        for (int i = 0; i < 4; ++i) {
            perm[static_cast<size_t>(i)] = sigma[static_cast<size_t>(i)];
            perm[static_cast<size_t>(i + 4)] = sigma[static_cast<size_t>(i)] + 4;
        }
        sum = sum + p.permuted(perm);
    } while (std::next_permutation(sigma.begin(), sigma.end()));
    return sum;
}

} // namespace qvf
