#ifndef QVF_RATRECON_HPP
#define QVF_RATRECON_HPP

#include <optional>
#include <span>
#include <vector>

#include "qvf/prime_field.hpp"
#include "qvf/rational.hpp"

namespace qvf {

/// Chinese-remainder combination of residues mod pairwise-coprime moduli.
/// Returns the value in [0, prod moduli).
mpz_class crt_combine(std::span<const u64> residues, std::span<const u64> moduli);

/// Wang rational reconstruction: the unique n/d with |n|, d <= sqrt(M/2),
/// gcd(n,d)=1, gcd(d,M)=1 and n = r*d (mod M), if one exists.
std::optional<Rational> rational_reconstruct(const mpz_class& residue,
                                             const mpz_class& modulus);

} // namespace qvf

#endif
