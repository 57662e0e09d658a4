#ifndef QVF_MULTIPOLY_HPP
#define QVF_MULTIPOLY_HPP

#include <complex>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "qvf/rational.hpp"

namespace qvf {

/// Sparse multivariate polynomial over Rational, keyed by exponent
/// vectors, with optional per-variable weights for the weighted degree
/// (default weight 1). No zero coefficients are ever stored; the weighted
/// degree of the zero polynomial is reported as std::nullopt ("minus
/// infinity").
class MultiPoly {
  public:
    using Exponents = std::vector<int>;
    using TermMap = std::map<Exponents, Rational>;

    explicit MultiPoly(int arity)
        : arity_(arity), weights_(static_cast<size_t>(arity), 1) {}
    MultiPoly(int arity, std::vector<int> weights);

    int arity() const { return arity_; }
    const std::vector<int>& weights() const { return weights_; }
    size_t num_terms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Adds c * x^e; exponents must be non-negative with length = arity.
    void add_term(const Exponents& e, const Rational& c);
    const Rational& coeff(const Exponents& e) const;

    MultiPoly operator-() const;
    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    MultiPoly scaled(const Rational& s) const;

    bool operator==(const MultiPoly& o) const {
        return arity_ == o.arity_ && terms_ == o.terms_;
    }

    std::optional<long long> weighted_degree() const;

    MultiPoly derivative(int var) const;

    /// Image under the substitution x_i -> x_{perm[i]}.
    MultiPoly permuted(const std::vector<int>& perm) const;

    /// Evaluation at a point of any commutative-ring scalar type T that
    /// supports T*T, T+T and construction from Rational via `convert`.
    template <class T, class Convert>
    T eval(std::span<const T> point, Convert convert) const {
        if (point.size() != static_cast<size_t>(arity_))
            throw domain_error("evaluation point arity mismatch");
        // per-variable power tables up to the maximal exponent used
        std::vector<int> maxe(static_cast<size_t>(arity_), 0);
        for (const auto& [e, c] : terms_)
            for (int i = 0; i < arity_; ++i)
                maxe[static_cast<size_t>(i)] = std::max(maxe[static_cast<size_t>(i)], e[static_cast<size_t>(i)]);
        std::vector<std::vector<T>> pw(static_cast<size_t>(arity_));
        for (int i = 0; i < arity_; ++i) {
            auto& col = pw[static_cast<size_t>(i)];
            col.reserve(static_cast<size_t>(maxe[static_cast<size_t>(i)]) + 1);
            col.push_back(convert(Rational(1)));
            for (int k = 1; k <= maxe[static_cast<size_t>(i)]; ++k)
                col.push_back(col.back() * point[static_cast<size_t>(i)]);
        }
        T acc = convert(Rational(0));
        for (const auto& [e, c] : terms_) {
            T term = convert(c);
            for (int i = 0; i < arity_; ++i)
                if (e[static_cast<size_t>(i)] > 0)
                    term = term * pw[static_cast<size_t>(i)][static_cast<size_t>(e[static_cast<size_t>(i)])];
            acc = acc + term;
        }
        return acc;
    }

    Rational eval_exact(std::span<const Rational> point) const {
        return eval<Rational>(point, [](const Rational& c) { return c; });
    }

    std::complex<double> eval_numeric(std::span<const std::complex<double>> point) const {
        return eval<std::complex<double>>(point, [](const Rational& c) {
            return std::complex<double>(c.to_double(), 0.0);
        });
    }

  private:
    int arity_;
    TermMap terms_;
    std::vector<int> weights_;
};

/// Symmetrization with respect to the diagonal S4 action on the variable
/// blocks (t1..t4, d1..d4): the sum of the 24 images of p under applying
/// the same permutation to both blocks. Requires arity 8.
MultiPoly symmetrize_diag_S4(const MultiPoly& p);

} // namespace qvf

#endif
