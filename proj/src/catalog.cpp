#include "hkg/catalog.hpp"

#include "hkg/errors.hpp"

namespace hkg {

namespace {

void require_odd_prime(const Int& p) {
    if (!is_prime(p) || p <= 3)
        throw BadParameters("p = " + p.str() + " must be a prime greater than 3");
}

}  // namespace

RamificationData artin_schreier(const Int& p, const Int& m) {
    require_odd_prime(p);
    if (m <= p) throw BadParameters("pole degree m = " + m.str() + " must exceed p");
    if (int_gcd(m, p) != 1) throw BadParameters("m = " + m.str() + " must be coprime to p");
    return RamificationData{p, {1}, {m}};
}

RamificationData as_tower(const Int& p, const Int& m) {
    require_odd_prime(p);
    if (m <= 1) throw BadParameters("tower exponent m = " + m.str() + " must exceed 1");
    if (int_gcd(m, p) != 1) throw BadParameters("m = " + m.str() + " must be coprime to p");
    // jumps (1, m) need p * 1 < m for the semigroup generators to increase
    if (m < p) throw BadParameters("m = " + m.str() + " must exceed p = " + p.str());
    return RamificationData{p, {2, 1}, {1, m}};
}

RamificationData hermitian_type(const Int& p, unsigned s) {
    require_odd_prime(p);
    if (s == 0) throw BadParameters("s must be positive");
    Int q = int_pow(p, s);
    return RamificationData{p, {Int(3) * s, Int(s)}, {1, q + 1}};
}

RamificationData gk_shape(const Int& q, const Int& m1, const Int& mr) {
    auto pp = as_prime_power(q);
    if (!pp) throw BadParameters("q = " + q.str() + " is not a prime power");
    auto [p, s] = *pp;
    require_odd_prime(p);
    if (m1 % q != 0)
        throw BadParameters("m1 = " + m1.str() + " must be divisible by q = " + q.str());
    Int lambda1 = m1 / q;
    if (lambda1 < 1 || int_gcd(lambda1, p) != 1)
        throw BadParameters("m1/q = " + lambda1.str() + " must be positive and coprime to p");
    if (int_gcd(mr, p) != 1) throw BadParameters("mr = " + mr.str() + " must be coprime to p");
    if (m1 >= mr)
        throw BadParameters("need m1 < mr for increasing semigroup generators");
    RamificationData rd{p, {Int(3) * s, Int(s)}, {lambda1, mr}};
    try {
        require_structural(rd);
    } catch (const InvalidData& e) {
        throw BadParameters(std::string("gk-shape datum is inconsistent: ") + e.what());
    }
    return rd;
}

BigActionReport big_action_check(const RamificationData& rd) {
    require_structural(rd);
    BigActionReport report;
    report.group_order = rd.group_order();
    report.genus = genus(rd);
    report.is_big = report.group_order * (rd.p - 1) > 2 * rd.p * report.genus;
    report.first_jump_is_one = rd.lower_jumps.front() == 1;
    report.second_group_nontrivial = rd.jump_count() >= 2 || rd.lower_jumps.front() > 1;
    report.forces_indecomposable_m1 =
        report.is_big && report.group_order > 2 * report.genus - 2;
    return report;
}

MaximalCompatReport maximal_compat_check(const RamificationData& rd, const Int& q) {
    require_structural(rd);
    auto pp = as_prime_power(q);
    if (!pp || pp->first != rd.p)
        throw BadParameters("q = " + q.str() + " is not a power of p = " + rd.p.str());
    MaximalCompatReport report;
    report.q = q;
    report.q_within_group_order = q <= rd.group_order();
    auto semigroup = weierstrass_semigroup(rd);
    report.q_is_pole = semigroup.contains(q);
    report.q_plus_one_is_pole = semigroup.contains(q + 1);
    report.frobenius_degree_matches = rd.lower_jumps.back() == q + 1;
    report.passes_necessary_conditions =
        report.q_within_group_order && report.q_is_pole && report.q_plus_one_is_pole;
    return report;
}

}  // namespace hkg
