#include "qvf/ratrecon.hpp"

#include "qvf/errors.hpp"

namespace qvf {

mpz_class crt_combine(std::span<const u64> residues, std::span<const u64> moduli) {
    if (residues.size() != moduli.size() || residues.empty())
        throw domain_error("CRT needs matching nonempty residue/modulus lists");
    mpz_class big(1);
    for (u64 m : moduli) big *= mpz_class(static_cast<unsigned long>(m));
    mpz_class acc(0);
    for (size_t i = 0; i < residues.size(); ++i) {
        const mpz_class pi(static_cast<unsigned long>(moduli[i]));
        const mpz_class mi = big / pi;
        mpz_class inv;
        if (mpz_invert(inv.get_mpz_t(), mi.get_mpz_t(), pi.get_mpz_t()) == 0)
            throw domain_error("CRT moduli are not pairwise coprime");
        acc += mpz_class(static_cast<unsigned long>(residues[i])) * mi % big * inv % big;
    }
    acc %= big;
    if (acc < 0) acc += big;
    return acc;
}

std::optional<Rational> rational_reconstruct(const mpz_class& residue,
                                             const mpz_class& modulus) {
    if (modulus <= 1) return std::nullopt;
    mpz_class bound;
    mpz_fdiv_q_ui(bound.get_mpz_t(), modulus.get_mpz_t(), 2);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());   // floor(sqrt(M/2))

    mpz_class r0 = modulus, r1 = residue % modulus;
    if (r1 < 0) r1 += modulus;
    mpz_class t0 = 0, t1 = 1;
    while (r1 > bound) {
        mpz_class q = r0 / r1;
        mpz_class r2 = r0 - q * r1;
        mpz_class t2 = t0 - q * t1;
        r0 = r1; r1 = r2;
        t0 = t1; t1 = t2;
    }
    if (t1 == 0) return std::nullopt;
    mpz_class num = r1, den = t1;
    if (den < 0) { den = -den; num = -num; }
    if (den > bound) return std::nullopt;
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    if (g != 1) return std::nullopt;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    if (g != 1) return std::nullopt;
    return Rational(mpq_class(num, den));
}

} // namespace qvf
