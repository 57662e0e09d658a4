#ifndef QVF_REDISCOVER_HPP
#define QVF_REDISCOVER_HPP

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "qvf/multipoly.hpp"
#include "qvf/prime_field.hpp"
#include "qvf/spectra.hpp"

namespace qvf {

/// Monomial basis of the search space: all monomials in
/// (t1, t2, t3, d1, d2, d3, L) whose (t, d)-part is weighted-homogeneous
/// of degree 14 under (t:1, d:2) and whose L-exponent is at most 2,
/// enumerated in ascending lexicographic order of the exponent tuple.
struct MonomialBasis {
    static constexpr std::array<int, 7> kWeights{1, 1, 1, 2, 2, 2, 0};
    std::vector<std::array<int, 7>> entries;
};

MonomialBasis build_basis();

/// One admissible point of the spectra variety: a sampled field, its full
/// extended spectra, and the 7-tuple (t1, t2, t3, d1, d2, d3, Lambda).
struct SpectraSample {
    NormalFormField field;
    ExtendedSpectra spectra;
    std::array<Rational, 7> tuple;
};

struct SamplerOptions {
    long coeff_min = -20;
    long coeff_max = 20;
    std::uint64_t max_candidate_factor = 64;   // exhaustion bound: factor * n candidates
};

/// First n distinct V2 samples of the seeded stream, in candidate order.
/// Deterministic for a given seed regardless of thread count; duplicate
/// 7-tuples are skipped. Throws domain_error on sampler exhaustion.
std::vector<SpectraSample> sample_spectra(std::uint64_t seed, size_t n,
                                          const SamplerOptions& opts = {});

/// The recovered vanishing-ideal generator: exact rational coefficients
/// over the monomial basis, scaled so the first (lexicographic) monomial
/// with nonzero coefficient has coefficient 1.
struct RecoveredH {
    MonomialBasis basis;
    std::vector<Rational> coeffs;

    size_t monomial_count() const;
    int lambda_degree() const;
    Rational eval(const std::array<Rational, 7>& tuple) const;
    /// Coefficient of L^k as a polynomial in (t1..t3, d1..d3),
    /// weighted (1,1,1,2,2,2).
    MultiPoly lambda_slice(int k) const;
};

struct RecoveryDiagnostics {
    std::vector<u64> primes_used;
    std::vector<size_t> nullity_per_prime;
    size_t samples_used = 0;
    size_t fresh_vanish_checked = 0;
    double elimination_seconds = 0.0;
};

/// Nullspace interpolation of the vanishing ideal: builds the evaluation
/// matrix of the basis on the samples over `num_primes` 62-bit primes,
/// checks the nullspace is one-dimensional over each, lifts by CRT plus
/// rational reconstruction (extending to a third prime on failure), and
/// verifies the lift exactly: every coefficient re-reduces to its modular
/// residues and the polynomial vanishes on every fresh sample.
RecoveredH recover_H(std::span<const SpectraSample> samples,
                     std::span<const SpectraSample> fresh_vanish,
                     int num_primes = 2, RecoveryDiagnostics* diag = nullptr);

struct THIdealVerdict {
    bool ok = false;
    Rational scale;        // single global constant relating the two sides
    std::string failure;   // names k and the sample index when !ok
};

/// Exact proportionality check (d1 d2 d3)^2 * H~_k = scale * d4^4 * H_k at
/// fresh samples, with one scale shared by every k and every sample.
THIdealVerdict check_tH_ideal(const RecoveredH& h,
                              std::span<const SpectraSample> fresh);

struct RankWitness {
    int rank = 0;
    std::array<std::array<Rational, 6>, 3> jacobian{};   // exact, rows = components
    double max_fd_error = 0.0;
    bool fd_agrees = false;   // central differences match to 1e-6
};

/// Exact Jacobian rank of the restricted map
///   (t1,t2,t3,d1,d2,d3) -> (9 - sum t_k^2/d_k, -H1/H2, H0/H2)
/// with t4, d4 eliminated through Euler-Jacobi, at the given test point;
/// cross-checked against a central-difference numeric Jacobian.
RankWitness rank_phi_check(const RecoveredH& h,
                           const std::array<Rational, 6>& point = {
                               Rational(1), Rational(1), Rational(2),
                               Rational(1), Rational(2), Rational(-1)});

} // namespace qvf

#endif
