#ifndef QVF_PRIME_FIELD_HPP
#define QVF_PRIME_FIELD_HPP

#include <array>
#include <cstdint>

#include "qvf/rational.hpp"

namespace qvf {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// Fixed published list of 62-bit primes used for all modular work.
inline constexpr std::array<u64, 3> kModularPrimes = {
    4611686018427387847ULL,
    4611686018427387817ULL,
    4611686018427387787ULL,
};

/// Element of Z/p for a 62-bit prime p. Plain representation, suitable
/// for the public surface and small computations; bulk linear algebra
/// goes through MontgomeryContext below.
struct PrimeField {
    u64 modulus = 0;
    u64 value = 0;

    PrimeField() = default;
    PrimeField(u64 p, u64 v) : modulus(p), value(v % p) {}

    PrimeField operator+(const PrimeField& o) const {
        u64 s = value + o.value;
        if (s >= modulus) s -= modulus;
        return {modulus, s};
    }
    PrimeField operator-(const PrimeField& o) const {
        return {modulus, value >= o.value ? value - o.value : value + modulus - o.value};
    }
    PrimeField operator*(const PrimeField& o) const {
        return {modulus, static_cast<u64>((u128)value * o.value % modulus)};
    }
    PrimeField pow(u64 e) const {
        PrimeField r{modulus, 1}, b = *this;
        while (e) {
            if (e & 1) r = r * b;
            b = b * b;
            e >>= 1;
        }
        return r;
    }
    PrimeField inverse() const {
        if (value == 0) throw domain_error("inverse of 0 in prime field");
        return pow(modulus - 2);
    }
    bool operator==(const PrimeField& o) const = default;
};

/// Montgomery arithmetic context for one odd prime < 2^63. Values in
/// Montgomery form are plain u64; the caller tracks which form a value
/// is in (the elimination kernels keep whole rows in Montgomery form).
struct MontgomeryContext {
    u64 p = 0;
    u64 pinv = 0;   // -p^{-1} mod 2^64
    u64 r2 = 0;     // 2^128 mod p
    u64 one = 0;    // 2^64 mod p (Montgomery form of 1)

    explicit MontgomeryContext(u64 prime) : p(prime) {
        u64 inv = prime;
        for (int i = 0; i < 6; ++i) inv *= 2 - prime * inv;   // Newton, mod 2^64
        pinv = ~inv + 1;
        u128 r = (u128)1 << 64;
        one = static_cast<u64>(r % prime);
        r2 = static_cast<u64>(((u128)one * one) % prime);
    }

    u64 redc(u128 t) const {
        const u64 m = static_cast<u64>(t) * pinv;
        const u128 s = t + (u128)m * p;
        const u64 r = static_cast<u64>(s >> 64);
        return r >= p ? r - p : r;
    }
    u64 to_mont(u64 plain) const { return redc((u128)plain * r2); }
    u64 from_mont(u64 mont) const { return redc((u128)mont); }
    u64 mul(u64 a, u64 b) const { return redc((u128)a * b); }
    u64 add(u64 a, u64 b) const {
        u64 s = a + b;
        return s >= p ? s - p : s;
    }
    u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
    u64 pow(u64 base_mont, u64 e) const {
        u64 r = one, b = base_mont;
        while (e) {
            if (e & 1) r = mul(r, b);
            b = mul(b, b);
            e >>= 1;
        }
        return r;
    }
    u64 inv(u64 a_mont) const {
        if (a_mont == 0) throw domain_error("inverse of 0 in prime field");
        return pow(a_mont, p - 2);
    }
};

/// Residue of an exact rational mod p (plain form). Throws when the
/// denominator is divisible by p.
inline u64 residue_mod(const Rational& q, u64 p) {
    u64 n = mpz_fdiv_ui(q.num().get_mpz_t(), p);   // fdiv: result in [0,p) even for n<0
    u64 d = mpz_fdiv_ui(q.den().get_mpz_t(), p);
    if (d == 0) throw domain_error("denominator divisible by the working prime");
    if (n == 0) return 0;
    return (PrimeField{p, n} * PrimeField{p, d}.inverse()).value;
}

} // namespace qvf

#endif
