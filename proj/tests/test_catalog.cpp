#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkg/catalog.hpp"
#include "hkg/errors.hpp"
#include "hkg/polydiff.hpp"

using hkg::Int;

TEST_CASE("artin-schreier family") {
    auto rd = hkg::artin_schreier(5, 7);
    CHECK(rd.exponents == std::vector<Int>{1});
    CHECK(rd.lower_jumps == std::vector<Int>{7});
    CHECK(hkg::genus(rd) == 12);
    CHECK(hkg::weierstrass_semigroup(rd).minimal_generators() == std::vector<Int>{5, 7});

    CHECK(hkg::genus(hkg::artin_schreier(5, 6)) == 10);

    CHECK_THROWS_AS(hkg::artin_schreier(5, 10), hkg::BadParameters);
    CHECK_THROWS_AS(hkg::artin_schreier(5, 4), hkg::BadParameters);
    CHECK_THROWS_AS(hkg::artin_schreier(4, 7), hkg::BadParameters);
}

TEST_CASE("artin-schreier tower family") {
    auto rd = hkg::as_tower(5, 7);
    CHECK(rd.exponents == std::vector<Int>{2, 1});
    CHECK(rd.lower_jumps == std::vector<Int>{1, 7});
    CHECK(hkg::genus(rd) == 12);
    CHECK(hkg::weierstrass_semigroup(rd).minimal_generators() == std::vector<Int>{5, 7});

    CHECK(hkg::hasse_arf_check(hkg::as_tower(5, 11)).all_hold);
    CHECK_FALSE(hkg::hasse_arf_check(hkg::as_tower(5, 7)).all_hold);

    CHECK_THROWS_AS(hkg::as_tower(5, 10), hkg::BadParameters);
    CHECK_THROWS_AS(hkg::as_tower(5, 3), hkg::BadParameters);
}

TEST_CASE("the two constructions of <p, m> agree") {
    for (std::int64_t m : {6, 7, 8, 9, 11, 12, 13}) {
        auto direct = hkg::artin_schreier(5, m);
        auto towered = hkg::as_tower(5, m);
        CHECK(hkg::weierstrass_semigroup(direct) == hkg::weierstrass_semigroup(towered));
        CHECK(hkg::genus(direct) == hkg::genus(towered));
    }
}

TEST_CASE("hermitian-shaped family") {
    auto rd = hkg::hermitian_type(5, 1);
    CHECK(rd.exponents == std::vector<Int>{3, 1});
    CHECK(rd.lower_jumps == std::vector<Int>{1, 6});
    CHECK(hkg::genus(rd) == 10);
    CHECK(hkg::conductor_brauer(rd) == 20);

    CHECK(hkg::genus(hkg::hermitian_type(7, 1)) == 21);
    CHECK(hkg::conductor_brauer(hkg::hermitian_type(7, 1)) == 42);
    CHECK(hkg::genus(hkg::hermitian_type(5, 2)) == 300);  // q = 25

    for (std::int64_t p : {5, 7, 11}) {
        for (unsigned s : {1u, 2u}) {
            auto fam = hkg::hermitian_type(p, s);
            Int q = hkg::int_pow(p, s);
            CHECK(hkg::validate(fam).valid());
            CHECK(2 * hkg::genus(fam) == q * (q - 1));
            auto sc = hkg::structural_case(fam);
            CHECK(sc.case_tag == "d1");
            CHECK(sc.all_hold);
            CHECK(fam.order(1) == q);  // |G_2| = q
            CHECK(hkg::weierstrass_semigroup(fam).minimal_generators() ==
                  std::vector<Int>{q, q + 1});
        }
    }
}

TEST_CASE("gk-shaped constructor validates instead of hardcoding") {
    auto rd = hkg::gk_shape(5, 10, 51);
    CHECK(rd.p == 5);
    CHECK(rd.exponents == std::vector<Int>{3, 1});
    CHECK(rd.lower_jumps == std::vector<Int>{2, 51});
    CHECK(hkg::validate(rd).valid());
    CHECK(hkg::structural_case(rd).case_tag == "d2");

    CHECK_THROWS_AS(hkg::gk_shape(6, 10, 51), hkg::BadParameters);   // not a prime power
    CHECK_THROWS_AS(hkg::gk_shape(5, 11, 51), hkg::BadParameters);   // q does not divide m1
    CHECK_THROWS_AS(hkg::gk_shape(5, 25, 51), hkg::BadParameters);   // m1/q not coprime to p
    CHECK_THROWS_AS(hkg::gk_shape(5, 51, 10), hkg::BadParameters);   // m1 >= mr
}

TEST_CASE("big actions") {
    auto h = hkg::big_action_check(hkg::hermitian_type(5, 1));
    CHECK(h.is_big);  // 125*4 > 2*5*10
    CHECK(h.first_jump_is_one);
    CHECK(h.second_group_nontrivial);
    CHECK(h.forces_indecomposable_m1);
    CHECK(hkg::indecomposability(hkg::hermitian_type(5, 1), 1).forced_indecomposable);

    CHECK_FALSE(hkg::big_action_check(hkg::artin_schreier(5, 7)).is_big);  // 20 <= 120
    CHECK_FALSE(hkg::big_action_check(hkg::as_tower(5, 7)).is_big);        // 100 <= 120

    for (std::int64_t p : {5, 7, 11, 13}) CHECK(hkg::big_action_check(hkg::hermitian_type(p, 1)).is_big);
}

TEST_CASE("maximal-curve compatibility") {
    auto h = hkg::maximal_compat_check(hkg::hermitian_type(5, 1), 5);
    CHECK(h.q_within_group_order);
    CHECK(h.q_is_pole);
    CHECK(h.q_plus_one_is_pole);
    CHECK(h.frobenius_degree_matches);  // m_r = 6 = q + 1
    CHECK(h.passes_necessary_conditions);

    auto as_big_q = hkg::maximal_compat_check(hkg::artin_schreier(5, 7), 25);
    CHECK_FALSE(as_big_q.q_within_group_order);  // 25 > 5
    CHECK_FALSE(as_big_q.passes_necessary_conditions);

    auto as_q5 = hkg::maximal_compat_check(hkg::artin_schreier(5, 7), 5);
    CHECK(as_q5.q_is_pole);
    CHECK_FALSE(as_q5.q_plus_one_is_pole);  // 6 is a gap of <5,7>
    CHECK_FALSE(as_q5.passes_necessary_conditions);

    CHECK_THROWS_AS(hkg::maximal_compat_check(hkg::artin_schreier(5, 7), 6),
                    hkg::BadParameters);
    CHECK_THROWS_AS(hkg::maximal_compat_check(hkg::artin_schreier(5, 7), 49),
                    hkg::BadParameters);
}
