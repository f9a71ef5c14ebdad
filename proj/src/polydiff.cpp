#include "hkg/polydiff.hpp"

#include "hkg/errors.hpp"

namespace hkg {

PolyBasis basis_polydifferentials(const RamificationData& rd, const Int& m) {
    require_structural(rd);
    if (m < 1) throw InvalidData({"m_positive (tensor power must be at least 1)"});
    Int g = genus(rd);
    PolyBasis basis;
    basis.m = m;
    basis.degree_bound = m * (2 * g - 2);
    auto semigroup = weierstrass_semigroup(rd);
    basis.pole_numbers = semigroup.members_upto(basis.degree_bound);
    basis.dimension = static_cast<std::int64_t>(basis.pole_numbers.size());
    basis.expected_dimension = (m == 1) ? g : (2 * m - 1) * g - 2 * m + 1;
    return basis;
}

CanonicalDegreeReport canonical_degree_check(const RamificationData& rd, const Int& m) {
    require_structural(rd);
    if (m < 0) throw InvalidData({"m_nonnegative"});
    CanonicalDegreeReport report;
    report.m = m;
    // jump side with base case b_0 = -1
    Int sum = 0;
    Int b_prev = -1;
    for (std::size_t i = 1; i <= rd.jump_count(); ++i) {
        sum += (rd.lower_jumps[i - 1] - b_prev) * (rd.order(i - 1) - 1);
        b_prev = rd.lower_jumps[i - 1];
    }
    report.jump_side = m * (-2 * rd.group_order() + sum);
    report.genus_side = m * (2 * genus(rd) - 2);
    report.holds = report.jump_side == report.genus_side;
    if (!report.holds)
        throw IdentityViolation("canonical degree " + report.jump_side.str() +
                                " differs from m(2g-2) = " + report.genus_side.str());
    return report;
}

IndecomposabilityReport indecomposability(const RamificationData& rd, const Int& m) {
    require_structural(rd);
    if (m < 1) throw InvalidData({"m_positive (tensor power must be at least 1)"});
    IndecomposabilityReport report;
    report.m = m;
    Int bound = m * (2 * genus(rd) - 2);
    report.summand_bound = bound / rd.group_order();
    report.invariant_count = report.summand_bound + 1;
    report.forced_indecomposable = rd.group_order() > bound;
    return report;
}

Int deformation_dimension(const RamificationData& rd) {
    require_structural(rd);
    return -3 + ceil_div(different_delta(rd), rd.group_order());
}

}  // namespace hkg
