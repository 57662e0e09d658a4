// Hardcoded coefficient tables of the hat-polynomials generating the
// hidden relation. Exponents are (t1..t4) and (d1..d4); every term has
// weighted degree 10 under (t:1, d:2). Transcribed once; guarded by a
// checksum test and an independently re-typed copy in the test suite.

#include "qvf/hidden.hpp"

namespace qvf {

namespace {

constexpr HatTerm kHat0[] = {
    {-4, {0, 0, 0, 0}, {3, 1, 1, 0}},
    {4, {0, 0, 0, 0}, {2, 2, 1, 0}},
};

constexpr HatTerm kHat1[] = {
    {2, {3, 1, 0, 0}, {0, 2, 1, 0}},
    {2, {3, 1, 0, 0}, {0, 0, 2, 1}},
    {-6, {2, 2, 0, 0}, {1, 0, 2, 0}},
    {-2, {2, 2, 0, 0}, {0, 0, 2, 1}},
    {-2, {2, 1, 1, 0}, {0, 2, 0, 1}},
    {6, {2, 1, 1, 0}, {1, 0, 0, 2}},
    {36, {2, 0, 0, 0}, {2, 1, 1, 0}},
    {12, {2, 0, 0, 0}, {1, 2, 1, 0}},
    {36, {2, 0, 0, 0}, {0, 3, 1, 0}},
    {36, {2, 0, 0, 0}, {0, 2, 2, 0}},
    {24, {2, 0, 0, 0}, {0, 2, 1, 1}},
    {-48, {1, 1, 0, 0}, {2, 1, 1, 0}},
    {24, {1, 1, 0, 0}, {1, 1, 2, 0}},
    {-24, {1, 1, 0, 0}, {2, 0, 1, 1}},
    {-24, {1, 1, 0, 0}, {1, 0, 2, 1}},
    {-36, {1, 1, 0, 0}, {0, 0, 3, 1}},
    {-36, {1, 1, 0, 0}, {0, 0, 2, 2}},
    {216, {0, 0, 0, 0}, {3, 1, 1, 0}},
    {-216, {0, 0, 0, 0}, {2, 2, 1, 0}},
};

constexpr HatTerm kHat2[] = {
    {4, {4, 2, 2, 0}, {0, 1, 0, 0}},
    {-4, {3, 3, 2, 0}, {0, 0, 1, 0}},
    {-4, {4, 2, 1, 1}, {0, 1, 0, 0}},
    {8, {3, 2, 2, 1}, {0, 1, 0, 0}},
    {-4, {2, 2, 2, 2}, {1, 0, 0, 0}},
    {-8, {4, 2, 0, 0}, {0, 1, 1, 0}},
    {-16, {4, 2, 0, 0}, {0, 0, 2, 0}},
    {8, {4, 2, 0, 0}, {0, 0, 1, 1}},
    {8, {3, 3, 0, 0}, {1, 0, 1, 0}},
    {16, {3, 3, 0, 0}, {0, 0, 2, 0}},
    {-8, {3, 3, 0, 0}, {0, 0, 1, 1}},
    {-2, {4, 1, 1, 0}, {0, 1, 1, 0}},
    {2, {4, 1, 1, 0}, {0, 1, 0, 1}},
    {16, {4, 1, 1, 0}, {0, 0, 0, 2}},
    {2, {3, 2, 1, 0}, {1, 0, 1, 0}},
    {30, {3, 2, 1, 0}, {0, 1, 1, 0}},
    {-8, {3, 2, 1, 0}, {1, 0, 0, 1}},
    {-22, {3, 2, 1, 0}, {0, 1, 0, 1}},
    {-2, {3, 2, 1, 0}, {0, 0, 1, 1}},
    {-32, {3, 2, 1, 0}, {0, 0, 0, 2}},
    {-30, {2, 2, 2, 0}, {1, 1, 0, 0}},
    {30, {2, 2, 2, 0}, {1, 0, 0, 1}},
    {16, {2, 2, 2, 0}, {0, 0, 0, 2}},
    {-2, {3, 1, 1, 1}, {1, 1, 0, 0}},
    {2, {3, 1, 1, 1}, {0, 1, 1, 0}},
    {30, {2, 2, 1, 1}, {1, 1, 0, 0}},
    {-30, {2, 2, 1, 1}, {1, 0, 1, 0}},
    {81, {4, 0, 0, 0}, {0, 2, 1, 0}},
    {-54, {3, 1, 0, 0}, {0, 2, 1, 0}},
    {-162, {3, 1, 0, 0}, {0, 1, 2, 0}},
    {-216, {3, 1, 0, 0}, {0, 0, 2, 1}},
    {81, {2, 2, 0, 0}, {2, 0, 1, 0}},
    {405, {2, 2, 0, 0}, {1, 0, 2, 0}},
    {135, {2, 2, 0, 0}, {0, 0, 2, 1}},
    {-162, {2, 1, 1, 0}, {0, 2, 1, 0}},
    {-81, {2, 1, 1, 0}, {2, 0, 0, 1}},
    {54, {2, 1, 1, 0}, {0, 2, 0, 1}},
    {-405, {2, 1, 1, 0}, {1, 0, 0, 2}},
    {162, {2, 1, 1, 0}, {0, 1, 0, 2}},
    {162, {1, 1, 1, 1}, {2, 1, 0, 0}},
    {-972, {2, 0, 0, 0}, {2, 1, 1, 0}},
    {-324, {2, 0, 0, 0}, {1, 2, 1, 0}},
    {-972, {2, 0, 0, 0}, {0, 3, 1, 0}},
    {-972, {2, 0, 0, 0}, {0, 2, 2, 0}},
    {-648, {2, 0, 0, 0}, {0, 2, 1, 1}},
    {1296, {1, 1, 0, 0}, {2, 1, 1, 0}},
    {-648, {1, 1, 0, 0}, {1, 1, 2, 0}},
    {648, {1, 1, 0, 0}, {2, 0, 1, 1}},
    {648, {1, 1, 0, 0}, {1, 0, 2, 1}},
    {972, {1, 1, 0, 0}, {0, 0, 3, 1}},
    {972, {1, 1, 0, 0}, {0, 0, 2, 2}},
    {-2916, {0, 0, 0, 0}, {3, 1, 1, 0}},
    {2916, {0, 0, 0, 0}, {2, 2, 1, 0}},
};

} // namespace

std::span<const HatTerm> hat_terms(int k) {
    switch (k) {
        case 0: return kHat0;
        case 1: return kHat1;
        case 2: return kHat2;
        default: throw domain_error("hat polynomial index must be 0, 1 or 2");
    }
}

} // namespace qvf
