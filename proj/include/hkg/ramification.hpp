#pragma once

#include "hkg/numeric.hpp"
#include "hkg/semigroup.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace hkg {

/// The ramification datum of a totally ramified p-group cover of the line
/// with a unique ramified point: group-order exponents h_0 > ... > h_{n-1}
/// (p^{h_0} the full group order, h_n = 0 implicit) and the lower jumps
/// lambda_1 < ... < lambda_n of the filtration, each coprime to p.
struct RamificationData {
    Int p;
    std::vector<Int> exponents;
    std::vector<Int> lower_jumps;

    std::size_t jump_count() const { return lower_jumps.size(); }

    /// h_i for 0 <= i <= n, with the implicit h_n = 0.
    Int exponent(std::size_t i) const;

    /// p^{h_i}
    Int order(std::size_t i) const;

    /// p^{h_0}, the order of the full group.
    Int group_order() const { return order(0); }

    /// Semigroup generator p^{h_i} * lambda_i for 1-based i in 1..n.
    Int semigroup_generator(std::size_t i) const;
};

struct ValidationIssue {
    std::string name;
    std::string detail;
    bool operator==(const ValidationIssue&) const = default;
};

struct ValidationReport {
    std::vector<ValidationIssue> failures;
    std::vector<ValidationIssue> warnings;
    bool valid() const { return failures.empty(); }
};

/// Checks every datum invariant plus the derived gates genus >= 2 and
/// lambda_n <= 2g-1; warn_only downgrades the two gates to warnings.
/// Returns structured failures, never throws.
ValidationReport validate(const RamificationData& rd, bool warn_only = false);

/// Structural constraints only (no derived gates); throws InvalidData.
void require_structural(const RamificationData& rd);

/// Genus from the Riemann-Hurwitz formula of the cover.
Int genus(const RamificationData& rd);

/// Conductor of the generated semigroup by Brauer's chain formula; equals
/// 2 * genus identically.
Int conductor_brauer(const RamificationData& rd);

/// Local different contribution: sum over the filtration of |G_i| - 1.
Int different_delta(const RamificationData& rd);

/// |G_i| = order for from <= i <= to; trivial beyond the last segment.
struct FiltrationSegment {
    Int from;
    Int to;
    Int order;
    bool operator==(const FiltrationSegment&) const = default;
};
std::vector<FiltrationSegment> ramification_filtration(const RamificationData& rd);

struct JumpSequence {
    enum class Kind { lower, upper };
    Kind kind = Kind::lower;
    std::vector<Rat> values;
    std::vector<Int> orders;  // p^{h_{i-1}} at the i-th jump
};

JumpSequence lower_jump_sequence(const RamificationData& rd);

/// Herbrand transform: u_i = u_{i-1} + (b_i - b_{i-1}) / p^{h_0 - h_{i-1}}.
JumpSequence lower_to_upper(const RamificationData& rd);

/// Inverse transform; throws NonIntegralLowerJump when a b_i is fractional.
std::vector<Int> upper_to_lower(const std::vector<Rat>& upper_jumps,
                                const std::vector<Int>& exponents, const Int& p);

/// Semigroup generated by p^{h_0} and the p^{h_i} * lambda_i.
NumericalSemigroup weierstrass_semigroup(const RamificationData& rd);

struct TowerLevel {
    std::size_t index = 0;  // 1..n+1; level 1 is the rational base
    std::vector<Int> generators;
    NumericalSemigroup semigroup;
    Int group_order_above;  // p^{h_{i-1}} for level i
    bool is_rational = false;
};

/// Levels 1..n+1 of the field tower; cross-checks each level against the
/// scale_extend recursion from the previous one (IdentityViolation on
/// disagreement).
std::vector<TowerLevel> tower_semigroups(const RamificationData& rd);

struct HasseArfPair {
    std::size_t index = 0;       // compares jumps b_index, b_index+1
    Int modulus;                 // p^{h_0 - h_index}
    bool jump_congruence = false;
    bool generator_congruence = false;
};

/// Congruences every abelian group must satisfy: a clean sweep is necessary
/// for G_1(P) abelian, any failure certifies it non-abelian. The datum does
/// not determine abelianness, so this is advisory.
struct HasseArfReport {
    std::vector<HasseArfPair> pairs;
    bool all_hold = true;
};
HasseArfReport hasse_arf_check(const RamificationData& rd);

struct StructuralClaim {
    std::string name;
    bool holds = false;
    std::string detail;
};

/// Case d1 (first jump 1) or d2 (first jump > 1) with the claims the case
/// carries; outcomes are reported, not enforced, since synthetic data can
/// falsify claims that hold for data coming from an actual curve.
struct StructuralCaseReport {
    std::string case_tag;  // "d1" | "d2"
    std::vector<StructuralClaim> claims;
    bool all_hold = true;
};
StructuralCaseReport structural_case(const RamificationData& rd);

struct JumpWitness {
    Int jump;
    bool found = false;
    Int pole_number;  // the witnessing m_k when found
};

/// Every jump must be m_r minus a pole number for data from an actual curve;
/// reports the witnesses and flags inconsistency instead of rejecting.
struct PossibleJumpReport {
    bool consistent = true;
    std::vector<JumpWitness> witnesses;
};
PossibleJumpReport possible_jump_check(const RamificationData& rd);

/// Always zero; asserts the Deuring-Shafarevich specialization
/// 0 - 1 = p^{h_0} (0 - 1) + (p^{h_0} - 1) on the way.
Int p_rank(const RamificationData& rd);

}  // namespace hkg
