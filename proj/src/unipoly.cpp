#include "qvf/unipoly.hpp"

#include <algorithm>

namespace qvf {

namespace {
const Rational kZero{};
}

void UniPoly::normalize() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

const Rational& UniPoly::leading() const {
    if (is_zero()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
}

const Rational& UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(k)];
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

std::complex<double> UniPoly::operator()(const std::complex<double>& x) const {
    std::complex<double> acc{0.0, 0.0};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->to_double();
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * Rational(static_cast<long>(k));
    return UniPoly(std::move(d));
}

UniPoly UniPoly::operator-() const {
    std::vector<Rational> d(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) d[k] = -c_[k];
    return UniPoly(std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    std::vector<Rational> d(std::max(a.c_.size(), b.c_.size()));
    for (size_t k = 0; k < d.size(); ++k) {
        if (k < a.c_.size()) d[k] += a.c_[k];
        if (k < b.c_.size()) d[k] += b.c_[k];
    }
    return UniPoly(std::move(d));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> d(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) d[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::scaled(const Rational& s) const {
    std::vector<Rational> d(c_.size());
    for (size_t k = 0; k < c_.size(); ++k) d[k] = c_[k] * s;
    return UniPoly(std::move(d));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.c_;
    std::vector<Rational> quo(static_cast<size_t>(a.degree() - b.degree()) + 1);
    const Rational lc_inv = b.leading().inverse();
    for (int k = a.degree() - b.degree(); k >= 0; --k) {
        Rational q = rem[static_cast<size_t>(k + b.degree())] * lc_inv;
        quo[static_cast<size_t>(k)] = q;
        if (q.is_zero()) continue;
        for (int j = 0; j <= b.degree(); ++j)
            rem[static_cast<size_t>(k + j)] -= q * b.c_[static_cast<size_t>(j)];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly r0 = a, r1 = b;
    while (!r1.is_zero()) {
        UniPoly r2 = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(r2);
    }
    if (r0.is_zero()) return {};
    return r0.scaled(r0.leading().inverse());   // monic
}

bool UniPoly::is_squarefree() const {
    if (is_zero()) return false;
    if (degree() == 0) return true;
    return gcd(*this, derivative()).degree() == 0;
}

UniPoly UniPoly::inverse_mod(const UniPoly& m) const {
    // half-extended Euclid: track u with u*this = r (mod m)
    UniPoly r0 = m, r1 = this->mod(m);
    UniPoly u0{}, u1{Rational(1)};
    while (!r1.is_zero() && r1.degree() > 0) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly u2 = u0 - q * u1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
    }
    if (r1.is_zero())
        throw domain_error("not invertible modulo the given polynomial");
    return u1.scaled(r1.leading().inverse()).mod(m);
}

Rational resultant(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) throw domain_error("undefined resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) return Rational(0);
    const int m = f.degree(), n = g.degree();
    const int dim = m + n;
    if (dim == 0) return Rational(1);

    // Sylvester matrix, f rows first, coefficients in descending order.
    std::vector<std::vector<Rational>> a(static_cast<size_t>(dim),
                                         std::vector<Rational>(static_cast<size_t>(dim)));
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) a[r][r + k] = f.coeff(m - k);
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) a[n + r][r + k] = g.coeff(n - k);

    // Bareiss fraction-free elimination with row pivoting.
    Rational prev(1);
    int sign = 1;
    for (int k = 0; k < dim - 1; ++k) {
        if (a[k][k].is_zero()) {
            int swap_row = -1;
            for (int r = k + 1; r < dim; ++r)
                if (!a[r][k].is_zero()) { swap_row = r; break; }
            if (swap_row < 0) return Rational(0);
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(swap_row)]);
            sign = -sign;
        }
        for (int i = k + 1; i < dim; ++i) {
            for (int j = k + 1; j < dim; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = Rational(0);
        }
        prev = a[k][k];
    }
    Rational det = a[static_cast<size_t>(dim - 1)][static_cast<size_t>(dim - 1)];
    return sign > 0 ? det : -det;
}

std::vector<Rational> power_sums_of_roots(const UniPoly& g, int mmax) {
    if (g.is_zero()) throw domain_error("power sums of the zero polynomial");
    const int n = g.degree();
    const Rational lc_inv = g.leading().inverse();
    std::vector<Rational> s(static_cast<size_t>(mmax) + 1);
    s[0] = Rational(n);
    for (int k = 1; k <= mmax; ++k) {
        // Newton: lc*s_k + sum_{i=1..min(k-1,n)} c_{n-i} s_{k-i} (+ k*c_{n-k} if k<=n) = 0
        Rational acc;
        for (int i = 1; i < k && i <= n; ++i)
            acc += g.coeff(n - i) * s[static_cast<size_t>(k - i)];
        if (k <= n) acc += Rational(k) * g.coeff(n - k);
        s[static_cast<size_t>(k)] = -acc * lc_inv;
    }
    return s;
}

std::vector<Rational> power_sums_of_residues(const UniPoly& F, const UniPoly& G,
                                             int mmax) {
    if (G.is_zero() || G.degree() != F.degree() + 1)
        throw domain_error("degenerate infinity divisor: deg G must be deg F + 1");
    const UniPoly Gp = G.derivative();
    if (!G.is_squarefree())
        throw domain_error("degenerate infinity divisor: G is not squarefree");
    const UniPoly u = (F * Gp.inverse_mod(G)).mod(G);

    const int n = G.degree();
    const std::vector<Rational> s = power_sums_of_roots(G, n - 1);
    const auto trace = [&](const UniPoly& h) {
        Rational t;
        for (int j = 0; j < n; ++j) t += h.coeff(j) * s[static_cast<size_t>(j)];
        return t;
    };

    std::vector<Rational> p;
    p.reserve(static_cast<size_t>(mmax));
    UniPoly um = u;
    for (int m = 1; m <= mmax; ++m) {
        p.push_back(trace(um));
        if (m < mmax) um = (um * u).mod(G);
    }
    return p;
}

} // namespace qvf
