#include "hkg/ramification.hpp"

#include "hkg/errors.hpp"

#include <algorithm>

namespace hkg {

namespace {

constexpr std::int64_t kExponentCap = 1 << 20;

unsigned exponent_as_unsigned(const Int& h) {
    auto v = to_int64(h);
    if (!v || *v < 0 || *v > kExponentCap) throw Error("exponent " + h.str() + " out of range");
    return static_cast<unsigned>(*v);
}

std::vector<ValidationIssue> structural_issues(const RamificationData& rd) {
    std::vector<ValidationIssue> out;
    if (!is_prime(rd.p) || rd.p <= 3)
        out.push_back({"p_prime_gt_3", "p = " + rd.p.str() + " must be a prime greater than 3"});
    std::size_t n = rd.lower_jumps.size();
    if (n == 0 || rd.exponents.size() != n) {
        out.push_back({"length_match", "need equally many exponents and jumps, at least one each"});
        return out;  // nothing else is well-formed
    }
    bool exp_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& h = rd.exponents[i];
        if (h < 1 || h > kExponentCap || (i > 0 && rd.exponents[i - 1] <= h)) exp_ok = false;
    }
    if (!exp_ok)
        out.push_back({"exponents_strictly_decreasing",
                       "exponents must be positive, strictly decreasing and of moderate size"});
    bool jumps_ok = true;
    bool coprime_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        const Int& l = rd.lower_jumps[i];
        if (l < 1 || (i > 0 && rd.lower_jumps[i - 1] >= l)) jumps_ok = false;
        if (rd.p > 0 && int_gcd(l, rd.p) != 1) coprime_ok = false;
    }
    if (!jumps_ok)
        out.push_back({"jumps_strictly_increasing", "lower jumps must be positive and strictly increasing"});
    if (!coprime_ok)
        out.push_back({"jumps_coprime_to_p", "every lower jump must be coprime to p"});
    if (out.empty()) {
        for (std::size_t i = 1; i < n; ++i) {
            if (rd.semigroup_generator(i) >= rd.semigroup_generator(i + 1)) {
                out.push_back({"semigroup_generators_increasing",
                               "p^{h_i} * lambda_i must be strictly increasing"});
                break;
            }
        }
    }
    return out;
}

Int two_genus(const RamificationData& rd) {
    // Riemann-Hurwitz: 2g = 2 - 2 p^{h_0} + delta
    return 2 - 2 * rd.group_order() + different_delta(rd);
}

}  // namespace

Int RamificationData::exponent(std::size_t i) const {
    if (i < exponents.size()) return exponents[i];
    return 0;
}

Int RamificationData::order(std::size_t i) const {
    return int_pow(p, exponent_as_unsigned(exponent(i)));
}

Int RamificationData::semigroup_generator(std::size_t i) const {
    return order(i) * lower_jumps.at(i - 1);
}

ValidationReport validate(const RamificationData& rd, bool warn_only) {
    ValidationReport report;
    report.failures = structural_issues(rd);
    if (!report.failures.empty()) return report;

    auto& gates = warn_only ? report.warnings : report.failures;
    Int tg = two_genus(rd);
    if (tg < 0 || tg % 2 != 0) {
        report.failures.push_back({"genus_integral", "2g evaluates to " + tg.str()});
        return report;
    }
    Int g = tg / 2;
    if (g < 2) gates.push_back({"genus_at_least_2", "genus " + g.str() + " < 2"});
    const Int& mr = rd.lower_jumps.back();
    if (mr > 2 * g - 1)
        gates.push_back({"coprime_pole_within_2g_minus_1",
                         "smallest coprime pole number " + mr.str() + " exceeds 2g-1 = " +
                             Int(2 * g - 1).str()});
    return report;
}

void require_structural(const RamificationData& rd) {
    auto issues = structural_issues(rd);
    if (!issues.empty()) {
        std::vector<std::string> names;
        names.reserve(issues.size());
        for (auto& i : issues) names.push_back(i.name + " (" + i.detail + ")");
        throw InvalidData(std::move(names));
    }
}

Int genus(const RamificationData& rd) {
    require_structural(rd);
    Int tg = two_genus(rd);
    if (tg < 0 || tg % 2 != 0) throw NonIntegralGenus("2g evaluates to " + tg.str());
    return tg / 2;
}

Int conductor_brauer(const RamificationData& rd) {
    require_structural(rd);
    std::size_t n = rd.jump_count();
    Int kappa = -rd.group_order() + 1;
    for (std::size_t k = 1; k <= n; ++k)
        kappa += (rd.order(k - 1) - rd.order(k)) * rd.lower_jumps[k - 1];
    return kappa;
}

Int different_delta(const RamificationData& rd) {
    require_structural(rd);
    std::size_t n = rd.jump_count();
    Int delta = (rd.group_order() - 1) * (rd.lower_jumps[0] + 1);
    for (std::size_t k = 2; k <= n; ++k)
        delta += (rd.order(k - 1) - 1) * (rd.lower_jumps[k - 1] - rd.lower_jumps[k - 2]);
    return delta;
}

std::vector<FiltrationSegment> ramification_filtration(const RamificationData& rd) {
    require_structural(rd);
    std::vector<FiltrationSegment> segments;
    // G_0 = G_1 holds up to the first jump, then each |G_i| = p^{h_{j-1}}
    // until the next jump; trivial beyond the last
    segments.push_back({0, rd.lower_jumps[0], rd.group_order()});
    for (std::size_t j = 2; j <= rd.jump_count(); ++j)
        segments.push_back({rd.lower_jumps[j - 2] + 1, rd.lower_jumps[j - 1], rd.order(j - 1)});
    return segments;
}

JumpSequence lower_jump_sequence(const RamificationData& rd) {
    require_structural(rd);
    JumpSequence seq;
    seq.kind = JumpSequence::Kind::lower;
    for (std::size_t i = 1; i <= rd.jump_count(); ++i) {
        seq.values.emplace_back(rd.lower_jumps[i - 1]);
        seq.orders.push_back(rd.order(i - 1));
    }
    return seq;
}

JumpSequence lower_to_upper(const RamificationData& rd) {
    require_structural(rd);
    JumpSequence seq;
    seq.kind = JumpSequence::Kind::upper;
    Rat u = 0;
    Int b_prev = 0;
    for (std::size_t i = 1; i <= rd.jump_count(); ++i) {
        const Int& b = rd.lower_jumps[i - 1];
        u += Rat(b - b_prev, rd.group_order() / rd.order(i - 1));
        seq.values.push_back(u);
        seq.orders.push_back(rd.order(i - 1));
        b_prev = b;
    }
    return seq;
}

std::vector<Int> upper_to_lower(const std::vector<Rat>& upper_jumps,
                                const std::vector<Int>& exponents, const Int& p) {
    if (upper_jumps.empty() || exponents.size() != upper_jumps.size())
        throw InvalidData({"length_match"});
    for (std::size_t i = 1; i < upper_jumps.size(); ++i) {
        if (upper_jumps[i - 1] >= upper_jumps[i])
            throw InvalidData({"upper_jumps_strictly_increasing"});
        if (exponents[i - 1] <= exponents[i]) throw InvalidData({"exponents_strictly_decreasing"});
    }
    if (exponents.back() < 1) throw InvalidData({"exponents_strictly_decreasing"});
    unsigned h0 = exponent_as_unsigned(exponents[0]);
    std::vector<Int> lower;
    Rat u_prev = 0;
    Int b = 0;
    for (std::size_t i = 0; i < upper_jumps.size(); ++i) {
        unsigned hi = exponent_as_unsigned(exponents[i]);
        Rat step = (upper_jumps[i] - u_prev) * int_pow(p, h0 - hi);
        if (boost::multiprecision::denominator(step) != 1)
            throw NonIntegralLowerJump("jump " + std::to_string(i + 1) + " evaluates to " +
                                       format_rational(step));
        b += boost::multiprecision::numerator(step);
        lower.push_back(b);
        u_prev = upper_jumps[i];
    }
    return lower;
}

NumericalSemigroup weierstrass_semigroup(const RamificationData& rd) {
    require_structural(rd);
    std::vector<Int> gens{rd.group_order()};
    for (std::size_t i = 1; i <= rd.jump_count(); ++i) gens.push_back(rd.semigroup_generator(i));
    return NumericalSemigroup::from_generators(std::move(gens));
}

std::vector<TowerLevel> tower_semigroups(const RamificationData& rd) {
    require_structural(rd);
    std::size_t n = rd.jump_count();
    std::vector<TowerLevel> levels;
    levels.reserve(n + 1);

    levels.push_back(TowerLevel{1, {1}, NumericalSemigroup::from_generators({1}),
                                rd.group_order(), true});

    for (std::size_t i = 1; i <= n; ++i) {
        std::vector<Int> generators{rd.group_order() / rd.order(i)};
        for (std::size_t j = 1; j <= i; ++j)
            generators.push_back(rd.order(j) / rd.order(i) * rd.lower_jumps[j - 1]);
        auto semigroup = NumericalSemigroup::from_generators(generators);
        bool rational = semigroup.is_full();

        // the same field arises from the previous level by scaling with the
        // relative group order and adjoining the jump
        Int q = rd.order(i - 1) / rd.order(i);
        auto recursed = scale_extend(levels.back().semigroup, q, rd.lower_jumps[i - 1]);
        auto bound = to_int64(2 * semigroup.conductor());
        if (!bound || !(recursed == semigroup) ||
            recursed.sieve_upto(*bound) != semigroup.sieve_upto(*bound))
            throw IdentityViolation("tower recursion disagrees at level " +
                                    std::to_string(i + 1));
        levels.push_back(TowerLevel{i + 1, std::move(generators), std::move(semigroup),
                                    rd.order(i), rational});
    }
    return levels;
}

HasseArfReport hasse_arf_check(const RamificationData& rd) {
    require_structural(rd);
    HasseArfReport report;
    std::size_t n = rd.jump_count();
    for (std::size_t i = 1; i + 1 <= n; ++i) {
        HasseArfPair pair;
        pair.index = i;
        pair.modulus = rd.group_order() / rd.order(i);
        Int jump_diff = rd.lower_jumps[i] - rd.lower_jumps[i - 1];
        pair.jump_congruence = jump_diff % pair.modulus == 0;
        // generator form: Lambda_i against |G_{b_{i+1}}/G_{b_{i+2}}| Lambda_{i+1},
        // taken modulo the full group order so the two forms are equivalent
        Int lhs = rd.semigroup_generator(i);
        Int rhs = (rd.order(i) / rd.order(i + 1)) * rd.semigroup_generator(i + 1);
        pair.generator_congruence = (rhs - lhs) % rd.group_order() == 0;
        if (pair.jump_congruence != pair.generator_congruence)
            throw IdentityViolation("jump and generator congruences disagree at pair " +
                                    std::to_string(i));
        report.all_hold = report.all_hold && pair.jump_congruence;
        report.pairs.push_back(std::move(pair));
    }
    return report;
}

StructuralCaseReport structural_case(const RamificationData& rd) {
    require_structural(rd);
    auto semigroup = weierstrass_semigroup(rd);
    auto mingens = semigroup.minimal_generators();
    Int group_order = rd.group_order();
    bool group_order_minimal =
        std::find(mingens.begin(), mingens.end(), group_order) != mingens.end();

    StructuralCaseReport report;
    if (rd.lower_jumps[0] == 1) {
        report.case_tag = "d1";
        report.claims.push_back(
            {"group_order_not_minimal_generator", !group_order_minimal,
             group_order.str() + (group_order_minimal ? " is " : " is not ") +
                 "a minimal generator"});
        Int second_order = rd.order(1);
        Int first_pole = mingens.front();
        report.claims.push_back(
            {"second_group_order_equals_first_pole",
             second_order == first_pole && second_order == rd.semigroup_generator(1),
             "|G_{b_2}| = " + second_order.str() + ", m_1 = " + first_pole.str()});
        Int predecessor = rd.lower_jumps.back() - 1;
        report.claims.push_back(
            {"predecessor_of_last_jump_is_pole", semigroup.contains(predecessor),
             "m_r - 1 = " + predecessor.str() +
                 (semigroup.contains(predecessor) ? " is a pole number" : " is a gap")});
    } else {
        report.case_tag = "d2";
        report.claims.push_back(
            {"group_order_is_minimal_generator", group_order_minimal,
             group_order.str() + (group_order_minimal ? " is " : " is not ") +
                 "a minimal generator"});
    }
    for (const auto& claim : report.claims) report.all_hold = report.all_hold && claim.holds;
    return report;
}

PossibleJumpReport possible_jump_check(const RamificationData& rd) {
    require_structural(rd);
    auto semigroup = weierstrass_semigroup(rd);
    const Int& mr = rd.lower_jumps.back();
    PossibleJumpReport report;
    for (const Int& jump : rd.lower_jumps) {
        JumpWitness witness;
        witness.jump = jump;
        Int candidate = mr - jump;
        witness.found = semigroup.contains(candidate);
        if (witness.found) witness.pole_number = candidate;
        report.consistent = report.consistent && witness.found;
        report.witnesses.push_back(std::move(witness));
    }
    return report;
}

Int p_rank(const RamificationData& rd) {
    require_structural(rd);
    // Deuring-Shafarevich for the cover of the rational line with one
    // totally ramified point and zero quotient p-rank
    Int lhs = Int(0) - 1;
    Int rhs = rd.group_order() * (Int(0) - 1) + (rd.group_order() - 1);
    if (lhs != rhs) throw IdentityViolation("Deuring-Shafarevich specialization failed");
    return 0;
}

}  // namespace hkg
