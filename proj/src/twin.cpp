#include "qvf/twin.hpp"

#include <algorithm>

#include "qvf/errors.hpp"

namespace qvf {

namespace {

// Exact RREF of the 5x7 augmented system; returns pivot column per row.
// The system has unknowns a0..a5 and one right-hand column.
struct LineSolution {
    std::array<Rational, 6> base, dir;
};

LineSolution solve_line(const std::array<Rational, 4>& t,
                        const std::pair<Rational, Rational>& p4) {
    const auto& [x4, y4] = p4;
    const Rational X = x4 * x4 - x4, W = x4 * y4, Y = y4 * y4 - y4;
    const Rational minus1(-1), one(1), zero(0);

    std::array<std::array<Rational, 7>, 5> m{{
        {minus1, zero, zero, zero, zero, minus1, t[0]},
        {one, zero, zero, zero, one, minus1, t[1]},
        {minus1, one, zero, zero, zero, one, t[2]},
        {X, W, Y, zero, zero, zero, zero},
        {zero, zero, zero, X, W, Y, zero},
    }};

    std::array<int, 5> pivot_col{-1, -1, -1, -1, -1};
    size_t row = 0;
    for (int col = 0; col < 6 && row < 5; ++col) {
        size_t sel = row;
        while (sel < 5 && m[sel][static_cast<size_t>(col)].is_zero()) ++sel;
        if (sel == 5) continue;
        std::swap(m[sel], m[row]);
        const Rational inv = m[row][static_cast<size_t>(col)].inverse();
        for (auto& x : m[row]) x *= inv;
        for (size_t r = 0; r < 5; ++r) {
            if (r == row) continue;
            const Rational f = m[r][static_cast<size_t>(col)];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < 7; ++j) m[r][j] -= f * m[row][j];
        }
        pivot_col[row] = col;
        ++row;
    }
    if (row < 5) throw domain_error("non-generic spectra: trace/point system has rank < 5");

    int free_col = -1;
    for (int c = 0; c < 6; ++c)
        if (std::find(pivot_col.begin(), pivot_col.end(), c) == pivot_col.end()) {
            free_col = c;
            break;
        }

    LineSolution line;
    line.base.fill(Rational(0));
    line.dir.fill(Rational(0));
    line.dir[static_cast<size_t>(free_col)] = Rational(1);
    for (size_t r = 0; r < 5; ++r) {
        const size_t c = static_cast<size_t>(pivot_col[r]);
        line.base[c] = m[r][6];
        line.dir[c] = -m[r][static_cast<size_t>(free_col)];
    }
    return line;
}

// coefficients (s^0, s^1, s^2) of a_i(s) * a_j(s) along the line
std::array<Rational, 3> product_on_line(const LineSolution& line, int i, int j) {
    const Rational& bi = line.base[static_cast<size_t>(i)];
    const Rational& bj = line.base[static_cast<size_t>(j)];
    const Rational& ui = line.dir[static_cast<size_t>(i)];
    const Rational& uj = line.dir[static_cast<size_t>(j)];
    return {bi * bj, bi * uj + ui * bj, ui * uj};
}

// the d_k expression along the line minus the target value, as a
// polynomial (gamma, beta, alpha) in the line parameter
std::array<Rational, 3> determinant_constraint(const LineSolution& line, int k,
                                               const Rational& target) {
    auto acc = std::array<Rational, 3>{-target, Rational(0), Rational(0)};
    const auto add = [&](int i, int j, int sign) {
        const auto p = product_on_line(line, i, j);
        for (size_t m = 0; m < 3; ++m)
            acc[m] += sign > 0 ? p[m] : -p[m];
    };
    switch (k) {
        case 1:   // d1 = -a2 a3 + a0 a5
            add(2, 3, -1);
            add(0, 5, +1);
            break;
        case 2:   // d2 = -a1 a3 + a2 a3 + a0 a4 - a0 a5
            add(1, 3, -1);
            add(2, 3, +1);
            add(0, 4, +1);
            add(0, 5, -1);
            break;
        case 3:   // d3 = a2 a3 - a2 a4 - a0 a5 + a1 a5
            add(2, 3, +1);
            add(2, 4, -1);
            add(0, 5, -1);
            add(1, 5, +1);
            break;
        default:
            throw internal_error("determinant constraint index out of range");
    }
    return acc;   // gamma, beta, alpha
}

NormalFormField field_at(const LineSolution& line, const Rational& s) {
    NormalFormField f;
    for (size_t j = 0; j < 6; ++j) f.a[j] = line.base[j] + s * line.dir[j];
    return f;
}

std::array<cplx, 6> field_at_numeric(const LineSolution& line, const cplx& s) {
    std::array<cplx, 6> f;
    for (size_t j = 0; j < 6; ++j)
        f[j] = line.base[j].to_double() + s * line.dir[j].to_double();
    return f;
}

} // namespace

TwinReconstruction reconstruct(const std::array<Rational, 3>& t,
                               const std::array<Rational, 3>& d) {
    TwinReconstruction rec;
    for (size_t k = 0; k < 3; ++k) {
        if (d[k].is_zero())
            throw domain_error("spectra not EJ-consistent: d" + std::to_string(k + 1) +
                               " = 0");
        rec.t[k] = t[k];
        rec.d[k] = d[k];
    }
    const Rational inv_sum = d[0].inverse() + d[1].inverse() + d[2].inverse();
    if (inv_sum.is_zero())
        throw domain_error(
            "spectra not EJ-consistent: 1/d1 + 1/d2 + 1/d3 = 0 leaves no finite fourth point");
    rec.d[3] = -inv_sum.inverse();
    rec.t[3] = -rec.d[3] * (t[0] / d[0] + t[1] / d[1] + t[2] / d[2]);
    rec.p4 = {-rec.d[3] / rec.d[1], -rec.d[3] / rec.d[2]};

    const LineSolution line = solve_line(rec.t, rec.p4);
    rec.line_base = line.base;
    rec.line_dir = line.dir;

    // first genuinely quadratic determinant condition, fallback d1, d2, d3
    std::array<Rational, 3> poly{};
    for (int k = 1; k <= 3; ++k) {
        poly = determinant_constraint(line, k, rec.d[static_cast<size_t>(k - 1)]);
        if (!poly[2].is_zero()) {
            rec.quad_from = k;
            break;
        }
    }
    if (rec.quad_from == 0)
        throw domain_error("non-generic spectra: no determinant condition is quadratic on the line");
    rec.quad = {poly[2], poly[1], poly[0]};   // alpha, beta, gamma

    const Rational& alpha = rec.quad[0];
    const Rational& beta = rec.quad[1];
    const Rational& gamma = rec.quad[2];
    rec.discriminant = beta * beta - Rational(4) * alpha * gamma;

    const auto verify = [&rec](const NormalFormField& f) {
        try {
            const FiniteSpectra s = finite_spectra(f);
            return s.t == rec.t && s.d == rec.d && s.p4 == rec.p4;
        } catch (const domain_error&) {
            return false;
        }
    };

    std::vector<Rational> roots;
    Rational sqrt_d;
    if (rec.discriminant.is_zero()) {
        rec.coincident = true;
        rec.rational_roots = true;
        roots.push_back(-beta / (Rational(2) * alpha));
    } else if (rec.discriminant.sqrt_if_square(sqrt_d)) {
        rec.rational_roots = true;
        roots.push_back((-beta - sqrt_d) / (Rational(2) * alpha));
        roots.push_back((-beta + sqrt_d) / (Rational(2) * alpha));
        std::sort(roots.begin(), roots.end());
    }

    const Rational a_d = alpha, b_d = beta, c_d = gamma;
    rec.roots_numeric = quadratic_roots(cplx{1.0, 0.0},
                                        cplx{(b_d / a_d).to_double(), 0.0},
                                        cplx{(c_d / a_d).to_double(), 0.0});
    for (const auto& r : rec.roots_numeric)
        rec.solutions_numeric.push_back(field_at_numeric(line, r));

    if (rec.rational_roots) {
        for (const Rational& r : roots) {
            NormalFormField f = field_at(line, r);
            if (!verify(f))
                throw domain_error("spectra not realizable by a normal-form field");
            rec.solutions.push_back(std::move(f));
        }
    }
    return rec;
}

TwinReconstruction reconstruct(const FiniteSpectra& s) {
    TwinReconstruction rec = reconstruct({s.t[0], s.t[1], s.t[2]},
                                         {s.d[0], s.d[1], s.d[2]});
    if (rec.t[3] != s.t[3] || rec.d[3] != s.d[3])
        throw domain_error("spectra violate the Euler-Jacobi relations: supplied (t4, d4) "
                           "disagree with the derived values");
    return rec;
}

TwinOutcome twin(const NormalFormField& v) {
    const FiniteSpectra s = finite_spectra(v);
    TwinOutcome out;
    out.rec = reconstruct(s);
    if (out.rec.coincident) {
        out.coincident = true;
        return out;
    }
    if (!out.rec.rational_roots || out.rec.solutions.size() != 2)
        throw internal_error("reconstruction of a rational field produced irrational twins");
    if (out.rec.solutions[0] == v)
        out.twin = out.rec.solutions[1];
    else if (out.rec.solutions[1] == v)
        out.twin = out.rec.solutions[0];
    else
        throw internal_error("the input field is not among its own reconstructions");
    return out;
}

NormalFormField twin_field(const NormalFormField& v) {
    TwinOutcome out = twin(v);
    if (out.coincident)
        throw domain_error("twin coincidence - single solution returned");
    return out.twin;
}

} // namespace qvf
