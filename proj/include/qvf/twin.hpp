#ifndef QVF_TWIN_HPP
#define QVF_TWIN_HPP

#include <array>
#include <utility>
#include <vector>

#include "qvf/normal_form.hpp"
#include "qvf/numeric.hpp"
#include "qvf/spectra.hpp"

namespace qvf {

/// Result of inverting the finite-spectra map. The solution set of the
/// five linear conditions (three traces plus vanishing of P and Q at the
/// fourth point) is a line in coefficient space; one determinant
/// condition cuts it in a quadratic whose roots are the (up to) two
/// fields realizing the spectra.
struct TwinReconstruction {
    std::array<Rational, 4> t{}, d{};            // full spectra incl. derived t4, d4
    std::pair<Rational, Rational> p4{};
    std::array<Rational, 6> line_base{}, line_dir{};
    std::array<Rational, 3> quad{};              // alpha s^2 + beta s + gamma
    int quad_from = 0;                           // index of the d-equation used (1..3)
    Rational discriminant;                       // beta^2 - 4 alpha gamma
    bool rational_roots = false;
    bool coincident = false;                     // discriminant == 0
    std::vector<NormalFormField> solutions;      // exact; sorted by parameter value
    std::array<cplx, 2> roots_numeric{};         // parameter roots, sorted
    std::vector<std::array<cplx, 6>> solutions_numeric;
};

/// Reconstruct from (t1..t3, d1..d3); t4, d4 and p4 are derived through
/// the Euler-Jacobi relations. Exact solutions are verified to reproduce
/// all eight spectra values before being returned. Throws domain_error on
/// EJ-inconsistent or non-generic input.
TwinReconstruction reconstruct(const std::array<Rational, 3>& t,
                               const std::array<Rational, 3>& d);

/// Same, from a full spectra object; the supplied t4, d4 must match the
/// EJ-derived values exactly.
TwinReconstruction reconstruct(const FiniteSpectra& s);

struct TwinOutcome {
    bool coincident = false;       // discriminant vanished; no distinct twin
    NormalFormField twin;          // valid iff !coincident
    TwinReconstruction rec;
};

/// The unique twin of v: the other field with the same singular locus and
/// the same spectrum at every singularity. For rational v in V2 the twin
/// is rational whenever it is distinct (the reconstruction quadratic has
/// one rational root, hence two).
TwinOutcome twin(const NormalFormField& v);

/// Convenience: the twin itself; throws domain_error when coincident.
NormalFormField twin_field(const NormalFormField& v);

} // namespace qvf

#endif
