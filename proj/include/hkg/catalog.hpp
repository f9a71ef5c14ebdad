#pragma once

#include "hkg/numeric.hpp"
#include "hkg/ramification.hpp"

namespace hkg {

/// y^p - y = f(x) with a single pole of degree m > p coprime to p:
/// one jump at m, group of order p, semigroup <p, m>.
RamificationData artin_schreier(const Int& p, const Int& m);

/// z^p - z = y^m on top of a rational Artin-Schreier cover: jumps 1 and m,
/// group order p^2, semigroup <p, m>. Needs m > p so the generators increase.
RamificationData as_tower(const Int& p, const Int& m);

/// Hermitian-shaped datum for q = p^s: group order q^3, jumps 1 and q + 1,
/// semigroup <q, q+1>, genus q(q-1)/2.
RamificationData hermitian_type(const Int& p, unsigned s);

/// Giulietti-Korchmaros-shaped datum: group order q^3 with an order-q kernel
/// level and jumps m1/q and mr. Takes the pole numbers as explicit inputs and
/// validates the shape; no literature values are built in.
RamificationData gk_shape(const Int& q, const Int& m1, const Int& mr);

struct BigActionReport {
    Int group_order;
    Int genus;
    bool is_big = false;                    // |G| (p-1) > 2 p g, strictly
    bool first_jump_is_one = false;         // G_1 > G_2
    bool second_group_nontrivial = false;   // some jump beyond 1
    bool forces_indecomposable_m1 = false;  // big actions pin m = 1 down
};
BigActionReport big_action_check(const RamificationData& rd);

/// Necessary-condition screen for the datum to come from a maximal curve
/// over F_{q^2}; never asserts maximality.
struct MaximalCompatReport {
    Int q;
    bool q_within_group_order = false;    // q <= p^{h_0}
    bool q_is_pole = false;               // q in H(P)
    bool q_plus_one_is_pole = false;      // q + 1 in H(P)
    bool frobenius_degree_matches = false;  // m_r == q + 1
    bool passes_necessary_conditions = false;
};
MaximalCompatReport maximal_compat_check(const RamificationData& rd, const Int& q);

}  // namespace hkg
