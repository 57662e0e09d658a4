#include "qvf/rediscover.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <unordered_set>

#include "qvf/errors.hpp"
#include "qvf/hidden.hpp"
#include "qvf/jet.hpp"
#include "qvf/modmat.hpp"
#include "qvf/numeric.hpp"
#include "qvf/ratrecon.hpp"
#include "qvf/rng.hpp"

namespace qvf {

MonomialBasis build_basis() {
    MonomialBasis basis;
    for (int e1 = 0; e1 <= 14; ++e1)
        for (int e2 = 0; e1 + e2 <= 14; ++e2)
            for (int e3 = 0; e1 + e2 + e3 <= 14; ++e3) {
                const int rest = 14 - e1 - e2 - e3;
                if (rest % 2) continue;
                const int fsum = rest / 2;
                for (int f1 = 0; f1 <= fsum; ++f1)
                    for (int f2 = 0; f1 + f2 <= fsum; ++f2) {
                        const int f3 = fsum - f1 - f2;
                        for (int g = 0; g <= 2; ++g)
                            basis.entries.push_back({e1, e2, e3, f1, f2, f3, g});
                    }
            }
    return basis;
}

std::vector<SpectraSample> sample_spectra(std::uint64_t seed, size_t n,
                                          const SamplerOptions& opts) {
    std::vector<SpectraSample> out;
    out.reserve(n);
    std::unordered_set<std::string> seen;
    const std::uint64_t limit = opts.max_candidate_factor * static_cast<std::uint64_t>(n) + 256;

    constexpr size_t kChunk = 256;
    std::vector<std::optional<SpectraSample>> chunk(kChunk);

    for (std::uint64_t base = 0; base < limit && out.size() < n; base += kChunk) {
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 8)
#endif
        for (size_t i = 0; i < kChunk; ++i) {
            chunk[i].reset();
            SplitMix64 rng = SplitMix64::for_index(seed, base + i);
            NormalFormField field;
            for (auto& c : field.a)
                c = Rational(rng.in_range(opts.coeff_min, opts.coeff_max));
            if (!membership_V2(field).ok) continue;
            SpectraSample sample;
            sample.field = field;
            sample.spectra = extended_spectra(field);
            const auto& fs = sample.spectra.finite;
            sample.tuple = {fs.t[0], fs.t[1], fs.t[2], fs.d[0], fs.d[1], fs.d[2],
                            sample.spectra.infinity.Lambda};
            chunk[i] = std::move(sample);
        }
        for (size_t i = 0; i < kChunk && out.size() < n; ++i) {
            if (!chunk[i]) continue;
            std::string key;
            for (const auto& q : chunk[i]->tuple) {
                key += q.str();
                key += '|';
            }
            if (!seen.insert(key).second) continue;
            out.push_back(std::move(*chunk[i]));
        }
    }
    if (out.size() < n)
        throw domain_error("sampler exhaustion: not enough V2 fields in the candidate budget");
    return out;
}

size_t RecoveredH::monomial_count() const {
    size_t c = 0;
    for (const auto& q : coeffs)
        if (!q.is_zero()) ++c;
    return c;
}

int RecoveredH::lambda_degree() const {
    int deg = -1;
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero()) deg = std::max(deg, basis.entries[i][6]);
    return deg;
}

Rational RecoveredH::eval(const std::array<Rational, 7>& tuple) const {
    // per-variable power tables over the nonzero support
    std::array<int, 7> maxe{};
    for (size_t i = 0; i < coeffs.size(); ++i)
        if (!coeffs[i].is_zero())
            for (size_t v = 0; v < 7; ++v)
                maxe[v] = std::max(maxe[v], basis.entries[i][v]);
    std::array<std::vector<Rational>, 7> pw;
    for (size_t v = 0; v < 7; ++v) {
        pw[v].reserve(static_cast<size_t>(maxe[v]) + 1);
        pw[v].push_back(Rational(1));
        for (int k = 1; k <= maxe[v]; ++k) pw[v].push_back(pw[v].back() * tuple[v]);
    }
    Rational acc;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        Rational term = coeffs[i];
        for (size_t v = 0; v < 7; ++v) {
            const int e = basis.entries[i][v];
            if (e > 0) term *= pw[v][static_cast<size_t>(e)];
        }
        acc += term;
    }
    return acc;
}

MultiPoly RecoveredH::lambda_slice(int k) const {
    MultiPoly slice(6, std::vector<int>{1, 1, 1, 2, 2, 2});
    MultiPoly::Exponents e(6);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero() || basis.entries[i][6] != k) continue;
        for (size_t v = 0; v < 6; ++v) e[v] = basis.entries[i][v];
        slice.add_term(e, coeffs[i]);
    }
    return slice;
}

namespace {

// evaluation row of the basis at one sample, plain residues mod ctx.p
std::vector<u64> basis_row(const MonomialBasis& basis,
                           const std::array<Rational, 7>& tuple,
                           const MontgomeryContext& ctx) {
    std::array<std::array<u64, 15>, 7> pw{};   // Montgomery powers, exps <= 14
    for (size_t v = 0; v < 7; ++v) {
        const u64 r = ctx.to_mont(residue_mod(tuple[v], ctx.p));
        pw[v][0] = ctx.one;
        for (int k = 1; k <= 14; ++k) pw[v][static_cast<size_t>(k)] = ctx.mul(pw[v][static_cast<size_t>(k - 1)], r);
    }
    std::vector<u64> row(basis.entries.size());
    for (size_t i = 0; i < basis.entries.size(); ++i) {
        const auto& e = basis.entries[i];
        u64 acc = pw[0][static_cast<size_t>(e[0])];
        for (size_t v = 1; v < 7; ++v)
            if (e[v] > 0) acc = ctx.mul(acc, pw[v][static_cast<size_t>(e[v])]);
        row[i] = ctx.from_mont(acc);
    }
    return row;
}

std::vector<u64> nullvector_mod_prime(const MonomialBasis& basis,
                                      std::span<const SpectraSample> samples,
                                      u64 prime, size_t* nullity_out) {
    const MontgomeryContext ctx(prime);
    EchelonBuilder builder(prime, basis.entries.size());
    constexpr size_t kBlock = 192;
    std::vector<std::vector<u64>> block;
    for (size_t start = 0; start < samples.size(); start += kBlock) {
        const size_t stop = std::min(start + kBlock, samples.size());
        block.assign(stop - start, {});
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
        for (size_t i = start; i < stop; ++i)
            block[i - start] = basis_row(basis, samples[i].tuple, ctx);
        builder.add_rows(std::move(block));
    }
    *nullity_out = builder.nullity();
    if (builder.nullity() != 1)
        throw domain_error("insufficient or degenerate samples: nullspace dimension " +
                           std::to_string(builder.nullity()) + " != 1 mod " +
                           std::to_string(prime));
    return builder.nullspace().basis.front();
}

} // namespace

RecoveredH recover_H(std::span<const SpectraSample> samples,
                     std::span<const SpectraSample> fresh_vanish,
                     int num_primes, RecoveryDiagnostics* diag) {
    MonomialBasis basis = build_basis();
    const size_t ncols = basis.entries.size();
    if (samples.size() <= ncols)
        throw domain_error("insufficient samples: need more rows than basis monomials");
    if (num_primes < 1 || num_primes > static_cast<int>(kModularPrimes.size()))
        throw domain_error("prime count must be between 1 and " +
                           std::to_string(kModularPrimes.size()));

    RecoveryDiagnostics local;
    RecoveryDiagnostics& dg = diag ? *diag : local;
    dg.samples_used = samples.size();

    const auto t0 = std::chrono::steady_clock::now();
    std::vector<std::vector<u64>> vectors;   // one normalized nullvector per prime
    std::vector<u64> primes;

    const auto add_prime = [&](u64 p) {
        size_t nullity = 0;
        vectors.push_back(nullvector_mod_prime(basis, samples, p, &nullity));
        primes.push_back(p);
        dg.primes_used.push_back(p);
        dg.nullity_per_prime.push_back(nullity);
    };
    for (int i = 0; i < num_primes; ++i) add_prime(kModularPrimes[static_cast<size_t>(i)]);

    RecoveredH out;
    out.basis = std::move(basis);

    for (;;) {
        // common normalization: first basis index nonzero mod every prime
        size_t idx0 = ncols;
        for (size_t i = 0; i < ncols && idx0 == ncols; ++i) {
            bool all = true;
            for (const auto& vec : vectors) all = all && vec[i] != 0;
            if (all) idx0 = i;
        }
        if (idx0 == ncols)
            throw internal_error("modular nullvectors share no nonzero coordinate");
        for (size_t k = 0; k < vectors.size(); ++k) {
            const u64 p = primes[k];
            const u64 inv = PrimeField{p, vectors[k][idx0]}.inverse().value;
            for (auto& x : vectors[k]) x = static_cast<u64>((u128)x * inv % p);
        }

        mpz_class modulus(1);
        for (u64 p : primes) modulus *= mpz_class(static_cast<unsigned long>(p));

        bool lifted = true;
        out.coeffs.assign(ncols, Rational(0));
        std::vector<u64> residues(primes.size());
        for (size_t i = 0; i < ncols && lifted; ++i) {
            bool all_zero = true;
            for (size_t k = 0; k < primes.size(); ++k) {
                residues[k] = vectors[k][i];
                all_zero = all_zero && residues[k] == 0;
            }
            if (all_zero) continue;
            const mpz_class r = crt_combine(residues, primes);
            const auto q = rational_reconstruct(r, modulus);
            if (!q) {
                lifted = false;
                break;
            }
            out.coeffs[i] = *q;
        }

        if (lifted) {
            // exact re-reduction of every lifted coefficient
            for (size_t i = 0; i < ncols && lifted; ++i)
                for (size_t k = 0; k < primes.size(); ++k)
                    if (residue_mod(out.coeffs[i], primes[k]) != vectors[k][i]) {
                        lifted = false;
                        break;
                    }
        }
        if (lifted) {
            dg.fresh_vanish_checked = 0;
            for (const auto& sample : fresh_vanish) {
                if (!out.eval(sample.tuple).is_zero()) {
                    lifted = false;
                    break;
                }
                ++dg.fresh_vanish_checked;
            }
        }
        if (lifted) break;

        if (primes.size() >= kModularPrimes.size())
            throw domain_error(
                "rational reconstruction failed with every published prime; add primes");
        add_prime(kModularPrimes[primes.size()]);
    }

    dg.elimination_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

THIdealVerdict check_tH_ideal(const RecoveredH& h,
                              std::span<const SpectraSample> fresh) {
    THIdealVerdict verdict;
    const auto& tilde = HiddenRelation::instance().tilde();
    const std::array<MultiPoly, 3> slices{h.lambda_slice(0), h.lambda_slice(1),
                                          h.lambda_slice(2)};
    bool scale_fixed = false;
    for (size_t s = 0; s < fresh.size(); ++s) {
        const auto& fs = fresh[s].spectra.finite;
        const std::array<Rational, 8> p8{fs.t[0], fs.t[1], fs.t[2], fs.t[3],
                                         fs.d[0], fs.d[1], fs.d[2], fs.d[3]};
        const std::array<Rational, 6> p6{fs.t[0], fs.t[1], fs.t[2],
                                         fs.d[0], fs.d[1], fs.d[2]};
        const Rational lhs_factor = (fs.d[0] * fs.d[1] * fs.d[2]).pow(2);
        const Rational rhs_factor = fs.d[3].pow(4);
        for (int k = 0; k < 3; ++k) {
            const Rational lhs = lhs_factor * tilde[static_cast<size_t>(k)].eval_exact(p8);
            const Rational rhs = rhs_factor * slices[static_cast<size_t>(k)].eval_exact(p6);
            if (rhs.is_zero() != lhs.is_zero()) {
                verdict.failure = "zero-pattern mismatch at k=" + std::to_string(k) +
                                  " sample=" + std::to_string(s);
                return verdict;
            }
            if (rhs.is_zero()) continue;
            const Rational ratio = lhs / rhs;
            if (!scale_fixed) {
                verdict.scale = ratio;
                scale_fixed = true;
            } else if (ratio != verdict.scale) {
                verdict.failure = "proportionality broken at k=" + std::to_string(k) +
                                  " sample=" + std::to_string(s);
                return verdict;
            }
        }
    }
    if (!scale_fixed) {
        verdict.failure = "all right-hand sides vanished; scale undetermined";
        return verdict;
    }
    verdict.ok = true;
    return verdict;
}

RankWitness rank_phi_check(const RecoveredH& h, const std::array<Rational, 6>& point) {
    using J = Jet<6>;
    for (size_t k = 3; k < 6; ++k)
        if (point[k].is_zero())
            throw domain_error("denominator vanishing at the test point: d" +
                               std::to_string(k - 2) + " = 0");

    std::array<J, 6> x;
    for (int i = 0; i < 6; ++i) x[static_cast<size_t>(i)] = J::variable(point[static_cast<size_t>(i)], i);
    const J &T1 = x[0], &T2 = x[1], &T3 = x[2], &D1 = x[3], &D2 = x[4], &D3 = x[5];

    const J inv_sum = D1.inverse() + D2.inverse() + D3.inverse();
    if (inv_sum.v.is_zero())
        throw domain_error("denominator vanishing at the test point: 1/d1 + 1/d2 + 1/d3 = 0");
    const J D4 = -inv_sum.inverse();
    const J T4 = -D4 * (T1 / D1 + T2 / D2 + T3 / D3);

    const std::array<MultiPoly, 3> slices{h.lambda_slice(0), h.lambda_slice(1),
                                          h.lambda_slice(2)};
    const auto jet_cast = [](const Rational& c) { return J(c); };
    const std::array<J, 6> pt6{T1, T2, T3, D1, D2, D3};
    const J H0 = slices[0].eval<J>(pt6, jet_cast);
    const J H1 = slices[1].eval<J>(pt6, jet_cast);
    const J H2 = slices[2].eval<J>(pt6, jet_cast);
    if (H2.v.is_zero())
        throw domain_error("denominator vanishing at the test point: H2 = 0");

    const J nine(Rational(9));
    const J comp0 = nine - (T1 * T1 / D1 + T2 * T2 / D2 + T3 * T3 / D3 + T4 * T4 / D4);
    const J comp1 = -(H1 / H2);
    const J comp2 = H0 / H2;

    RankWitness witness;
    witness.jacobian = {comp0.g, comp1.g, comp2.g};

    // exact rank of the 3x6 Jacobian
    auto m = witness.jacobian;
    int rank = 0;
    for (size_t col = 0; col < 6 && rank < 3; ++col) {
        size_t sel = static_cast<size_t>(rank);
        while (sel < 3 && m[sel][col].is_zero()) ++sel;
        if (sel == 3) continue;
        std::swap(m[sel], m[static_cast<size_t>(rank)]);
        const Rational inv = m[static_cast<size_t>(rank)][col].inverse();
        for (auto& e : m[static_cast<size_t>(rank)]) e *= inv;
        for (size_t r = 0; r < 3; ++r) {
            if (r == static_cast<size_t>(rank)) continue;
            const Rational f = m[r][col];
            if (f.is_zero()) continue;
            for (size_t j = 0; j < 6; ++j) m[r][j] -= f * m[static_cast<size_t>(rank)][j];
        }
        ++rank;
    }
    witness.rank = rank;

    // central-difference cross-check of every Jacobian entry
    const auto phi_num = [&slices](const std::array<double, 6>& p) {
        const double t1 = p[0], t2 = p[1], t3 = p[2], d1 = p[3], d2 = p[4], d3 = p[5];
        const double s = 1.0 / d1 + 1.0 / d2 + 1.0 / d3;
        const double d4 = -1.0 / s;
        const double t4 = -d4 * (t1 / d1 + t2 / d2 + t3 / d3);
        const std::array<double, 6> q{t1, t2, t3, d1, d2, d3};
        const auto cast = [](const Rational& c) { return c.to_double(); };
        const double h0 = slices[0].eval<double>(q, cast);
        const double h1 = slices[1].eval<double>(q, cast);
        const double h2 = slices[2].eval<double>(q, cast);
        return std::array<double, 3>{
            9.0 - (t1 * t1 / d1 + t2 * t2 / d2 + t3 * t3 / d3 + t4 * t4 / d4),
            -h1 / h2, h0 / h2};
    };
    std::array<double, 6> base;
    for (size_t i = 0; i < 6; ++i) base[i] = point[i].to_double();
    const double step = 1e-5;
    witness.fd_agrees = true;
    for (size_t i = 0; i < 6; ++i) {
        auto hi = base, lo = base;
        hi[i] += step;
        lo[i] -= step;
        const auto fp = phi_num(hi), fm = phi_num(lo);
        for (size_t r = 0; r < 3; ++r) {
            const double fd = (fp[r] - fm[r]) / (2.0 * step);
            const double exact = witness.jacobian[r][i].to_double();
            const double scale = std::abs(exact) > 1.0 ? std::abs(exact) : 1.0;
            const double err = std::abs(fd - exact) / scale;
            witness.max_fd_error = std::max(witness.max_fd_error, err);
            if (err > 1e-6) witness.fd_agrees = false;
        }
    }
    return witness;
}

} // namespace qvf
