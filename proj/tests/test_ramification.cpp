#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkg/errors.hpp"
#include "hkg/ramification.hpp"
#include "support/corpus.hpp"

using hkg::Int;
using hkg::RamificationData;
using hkg::Rat;

namespace {
const RamificationData hermitian{5, {3, 1}, {1, 6}};
const RamificationData artin_schreier_57{5, {1}, {7}};
const RamificationData tower_57{5, {2, 1}, {1, 7}};
}  // namespace

TEST_CASE("validation") {
    CHECK(hkg::validate(hermitian).valid());
    CHECK(hkg::genus(hermitian) == 10);

    auto genus_zero = hkg::validate(RamificationData{5, {1}, {1}});
    REQUIRE_FALSE(genus_zero.valid());
    CHECK(genus_zero.failures.front().name == "genus_at_least_2");

    auto not_coprime = hkg::validate(RamificationData{5, {1}, {5}});
    REQUIRE_FALSE(not_coprime.valid());
    CHECK(not_coprime.failures.front().name == "jumps_coprime_to_p");

    // genus 0 trips both gates: g >= 2 and lambda_n <= 2g-1
    auto warned = hkg::validate(RamificationData{5, {1}, {1}}, /*warn_only=*/true);
    CHECK(warned.valid());
    CHECK(warned.warnings.size() == 2);

    CHECK_FALSE(hkg::validate(RamificationData{4, {1}, {3}}).valid());
    CHECK_FALSE(hkg::validate(RamificationData{5, {1, 2}, {1, 7}}).valid());
    CHECK_FALSE(hkg::validate(RamificationData{5, {2, 1}, {7, 1}}).valid());
    // generators p*3 = 15 > 4 must increase
    CHECK_FALSE(hkg::validate(RamificationData{5, {2, 1}, {3, 4}}).valid());
}

TEST_CASE("weierstrass semigroups of the named data") {
    auto h = hkg::weierstrass_semigroup(hermitian);
    CHECK(h.minimal_generators() == std::vector<Int>{5, 6});
    CHECK(h.generators() == std::vector<Int>{5, 6, 125});

    auto as = hkg::weierstrass_semigroup(artin_schreier_57);
    CHECK(as.minimal_generators() == std::vector<Int>{5, 7});

    auto tower = hkg::weierstrass_semigroup(tower_57);
    CHECK(tower.generators() == std::vector<Int>{5, 7, 25});
    CHECK(tower.minimal_generators() == std::vector<Int>{5, 7});
    CHECK(as == tower);
}

TEST_CASE("genus, conductor, different") {
    CHECK(hkg::genus(hermitian) == 10);
    CHECK(hkg::genus(artin_schreier_57) == 12);
    CHECK(hkg::genus(tower_57) == 12);

    CHECK(hkg::conductor_brauer(hermitian) == 20);
    CHECK(hkg::conductor_brauer(artin_schreier_57) == 24);
    CHECK(hkg::conductor_brauer(tower_57) == 24);

    CHECK(hkg::different_delta(hermitian) == 268);
    CHECK(hkg::different_delta(artin_schreier_57) == 32);
    CHECK(hkg::different_delta(tower_57) == 72);
}

TEST_CASE("ramification filtration") {
    auto segs = hkg::ramification_filtration(hermitian);
    REQUIRE(segs.size() == 2);
    CHECK(segs[0] == hkg::FiltrationSegment{0, 1, 125});
    CHECK(segs[1] == hkg::FiltrationSegment{2, 6, 5});

    auto as = hkg::ramification_filtration(artin_schreier_57);
    REQUIRE(as.size() == 1);
    CHECK(as[0] == hkg::FiltrationSegment{0, 7, 5});
}

TEST_CASE("tower semigroups") {
    auto levels = hkg::tower_semigroups(hermitian);
    REQUIRE(levels.size() == 3);
    CHECK(levels[0].is_rational);
    CHECK(levels[0].group_order_above == 125);
    CHECK(levels[1].is_rational);  // first jump 1
    CHECK(levels[1].group_order_above == 5);
    CHECK_FALSE(levels[2].is_rational);
    CHECK(levels[2].group_order_above == 1);
    CHECK(levels[2].semigroup.frobenius() == 19);

    auto as_levels = hkg::tower_semigroups(artin_schreier_57);
    REQUIRE(as_levels.size() == 2);
    CHECK(as_levels[0].is_rational);
    CHECK_FALSE(as_levels[1].is_rational);
    CHECK(as_levels[1].semigroup.frobenius() == 23);
}

TEST_CASE("herbrand transforms") {
    auto upper = hkg::lower_to_upper(hermitian);
    REQUIRE(upper.values.size() == 2);
    CHECK(upper.values[0] == Rat(1));
    CHECK(upper.values[1] == Rat(6, 5));
    CHECK(upper.orders == std::vector<Int>{125, 5});

    auto single = hkg::lower_to_upper(artin_schreier_57);
    CHECK(single.values == std::vector<Rat>{Rat(7)});

    auto tower_upper = hkg::lower_to_upper(tower_57);
    CHECK(tower_upper.values == std::vector<Rat>{Rat(1), Rat(11, 5)});

    CHECK(hkg::upper_to_lower({Rat(1), Rat(6, 5)}, {3, 1}, 5) == std::vector<Int>{1, 6});
    CHECK(hkg::upper_to_lower({Rat(7)}, {1}, 5) == std::vector<Int>{7});
    CHECK(hkg::upper_to_lower({Rat(1), Rat(2)}, {2, 1}, 5) == std::vector<Int>{1, 6});
    // (126/125 - 1) * 25 = 1/5
    CHECK_THROWS_AS(hkg::upper_to_lower({Rat(1), Rat(126, 125)}, {3, 1}, 5),
                    hkg::NonIntegralLowerJump);
}

TEST_CASE("hasse-arf congruences") {
    auto h = hkg::hasse_arf_check(hermitian);
    REQUIRE(h.pairs.size() == 1);
    CHECK(h.pairs[0].modulus == 25);
    CHECK_FALSE(h.pairs[0].jump_congruence);
    CHECK_FALSE(h.all_hold);  // certifies a non-abelian group

    auto ok = hkg::hasse_arf_check(RamificationData{5, {2, 1}, {1, 11}});
    REQUIRE(ok.pairs.size() == 1);
    CHECK(ok.pairs[0].modulus == 5);
    CHECK(ok.all_hold);

    CHECK(hkg::hasse_arf_check(artin_schreier_57).pairs.empty());
    CHECK(hkg::hasse_arf_check(artin_schreier_57).all_hold);
}

TEST_CASE("structural case analysis") {
    auto h = hkg::structural_case(hermitian);
    CHECK(h.case_tag == "d1");
    CHECK(h.all_hold);

    auto as = hkg::structural_case(artin_schreier_57);
    CHECK(as.case_tag == "d2");
    CHECK(as.all_hold);

    // valid datum whose shape no actual curve realizes: the case tag is d1
    // and the pole-predecessor claim honestly fails
    auto tower = hkg::structural_case(tower_57);
    CHECK(tower.case_tag == "d1");
    CHECK_FALSE(tower.all_hold);
    for (const auto& claim : tower.claims) {
        if (claim.name == "predecessor_of_last_jump_is_pole")
            CHECK_FALSE(claim.holds);
        else
            CHECK(claim.holds);
    }
}

TEST_CASE("possible jump witnesses") {
    auto h = hkg::possible_jump_check(hermitian);
    CHECK(h.consistent);
    REQUIRE(h.witnesses.size() == 2);
    CHECK(h.witnesses[0].pole_number == 5);  // 1 = 6 - 5
    CHECK(h.witnesses[1].pole_number == 0);  // 6 = 6 - 0

    CHECK(hkg::possible_jump_check(artin_schreier_57).consistent);

    auto tower = hkg::possible_jump_check(tower_57);
    CHECK_FALSE(tower.consistent);
    CHECK_FALSE(tower.witnesses[0].found);  // 7 - 1 = 6 is a gap of <5,7>
    CHECK(tower.witnesses[1].found);
}

TEST_CASE("p-rank") {
    CHECK(hkg::p_rank(hermitian) == 0);
    CHECK(hkg::p_rank(artin_schreier_57) == 0);
}

TEST_CASE("operations reject structurally invalid data") {
    RamificationData bad{5, {1, 2}, {1, 7}};
    CHECK_THROWS_AS(hkg::genus(bad), hkg::InvalidData);
    CHECK_THROWS_AS(hkg::weierstrass_semigroup(bad), hkg::InvalidData);
    CHECK_THROWS_AS(hkg::hasse_arf_check(bad), hkg::InvalidData);
}

TEST_CASE("identities across a random corpus") {
    hkg::testsupport::CorpusOptions opt;
    opt.count = 60;
    opt.seed = 31;
    opt.conductor_cap = 30000;
    auto corpus = hkg::testsupport::make_corpus(opt);
    REQUIRE(corpus.size() == 60);

    for (const auto& rd : corpus) {
        Int g = hkg::genus(rd);
        CHECK(hkg::conductor_brauer(rd) == 2 * g);

        auto semigroup = hkg::weierstrass_semigroup(rd);
        CHECK(semigroup.genus() == g);
        CHECK(semigroup.conductor() == 2 * g);
        CHECK(semigroup.is_symmetric());

        // different equals the filtration sum
        Int total = 0;
        for (const auto& seg : hkg::ramification_filtration(rd))
            total += (seg.to - seg.from + 1) * (seg.order - 1);
        CHECK(total == hkg::different_delta(rd));

        // herbrand round-trip
        auto upper = hkg::lower_to_upper(rd);
        CHECK(hkg::upper_to_lower(upper.values, rd.exponents, rd.p) == rd.lower_jumps);

        // rationality of the second level reflects the first jump
        auto levels = hkg::tower_semigroups(rd);
        CHECK(levels[1].is_rational == (rd.lower_jumps.front() == 1));

        // structural claims hold on curve-shaped data
        CHECK(hkg::structural_case(rd).all_hold);
        CHECK(hkg::possible_jump_check(rd).consistent);
    }
}
