#pragma once

#include "hkg/numeric.hpp"
#include "hkg/ramification.hpp"

#include <vector>

namespace hkg {

/// Index set of the holomorphic m-polydifferential basis: the pole numbers
/// mu <= m(2g-2). For data from an actual cover the dimension is g when m = 1
/// and (2m-1)g - 2m + 1 for m >= 2; both the count and the expected value are
/// reported.
struct PolyBasis {
    Int m;
    Int degree_bound;  // m(2g-2)
    std::vector<Int> pole_numbers;
    Int dimension;
    Int expected_dimension;
};
PolyBasis basis_polydifferentials(const RamificationData& rd, const Int& m);

/// Degree of div(df^{otimes m}) from the jump data (base case b_0 = -1)
/// against m(2g-2); equality is a theorem, disagreement throws.
struct CanonicalDegreeReport {
    Int m;
    Int jump_side;
    Int genus_side;
    bool holds = false;
};
CanonicalDegreeReport canonical_degree_check(const RamificationData& rd, const Int& m);

/// The module of m-polydifferentials splits into at most
/// floor(m(2g-2)/p^{h_0}) indecomposable summands; the invariant functions
/// (powers of the degree-p^{h_0} base function, constants included) number one
/// more. A group order above m(2g-2) forces indecomposability.
struct IndecomposabilityReport {
    Int m;
    Int summand_bound;     // N
    Int invariant_count;   // N + 1
    bool forced_indecomposable = false;
};
IndecomposabilityReport indecomposability(const RamificationData& rd, const Int& m);

/// Dimension 3*0 - 3 + ceil(delta / p^{h_0}) of the weighted tangent block
/// for the rational quotient.
Int deformation_dimension(const RamificationData& rd);

}  // namespace hkg
