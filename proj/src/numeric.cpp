#include "qvf/numeric.hpp"

#include <algorithm>
#include <cmath>

#include "qvf/errors.hpp"

namespace qvf {

std::array<cplx, 2> quadratic_roots(const cplx& c2, const cplx& c1, const cplx& c0) {
    if (c2 == cplx{0.0, 0.0}) throw domain_error("quadratic with zero leading coefficient");
    const cplx b = c1 / c2, c = c0 / c2;
    const cplx disc = std::sqrt(b * b - 4.0 * c);
    // subtract in the stable direction, recover the mate by Vieta
    const cplx q = (std::real(std::conj(b) * disc) >= 0.0) ? -(b + disc) / 2.0
                                                           : -(b - disc) / 2.0;
    cplx r0, r1;
    if (std::abs(q) > 0.0) {
        r0 = q;
        r1 = c / q;
    } else {
        r0 = r1 = cplx{0.0, 0.0};
    }
    if (!cplx_less(r0, r1)) std::swap(r0, r1);
    return {r0, r1};
}

std::array<cplx, 3> cubic_roots(const UniPoly& g) {
    if (g.degree() != 3) throw domain_error("cubic solver needs degree exactly 3");
    const double c3 = g.coeff(3).to_double();
    const double c2 = g.coeff(2).to_double() / c3;
    const double c1 = g.coeff(1).to_double() / c3;
    const double c0 = g.coeff(0).to_double() / c3;

    // depressed cubic u^3 + p u + q, w = u - c2/3
    const double shift = c2 / 3.0;
    const double p = c1 - c2 * c2 / 3.0;
    const double q = 2.0 * c2 * c2 * c2 / 27.0 - c2 * c1 / 3.0 + c0;

    const cplx inner = std::sqrt(cplx(q * q / 4.0 + p * p * p / 27.0, 0.0));
    cplx u3 = -q / 2.0 + inner;
    if (std::abs(u3) < 1e-300) u3 = -q / 2.0 - inner;
    const cplx u = std::pow(u3, 1.0 / 3.0);
    const cplx omega{-0.5, std::sqrt(3.0) / 2.0};

    std::array<cplx, 3> roots;
    for (int k = 0; k < 3; ++k) {
        cplx uk = u * (k == 0 ? cplx{1.0, 0.0} : (k == 1 ? omega : omega * omega));
        cplx v = (std::abs(uk) > 1e-300) ? -p / (3.0 * uk) : cplx{0.0, 0.0};
        roots[static_cast<size_t>(k)] = uk + v - shift;
    }

    // Newton polish against the exact-coefficient cubic
    const UniPoly gp = g.derivative();
    for (auto& r : roots) {
        for (int it = 0; it < 4; ++it) {
            const cplx f = g(r);
            const cplx fp = gp(r);
            if (std::abs(fp) < 1e-300) break;
            const cplx step = f / fp;
            r -= step;
            if (std::abs(step) < 1e-16 * (1.0 + std::abs(r))) break;
        }
    }
    std::sort(roots.begin(), roots.end(), cplx_less);
    return roots;
}

} // namespace qvf
