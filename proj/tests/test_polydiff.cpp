#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hkg/errors.hpp"
#include "hkg/polydiff.hpp"
#include "support/corpus.hpp"

using hkg::Int;
using hkg::RamificationData;

namespace {
const RamificationData hermitian{5, {3, 1}, {1, 6}};
const RamificationData artin_schreier_57{5, {1}, {7}};
const RamificationData tower_57{5, {2, 1}, {1, 7}};
}  // namespace

TEST_CASE("polydifferential bases of the named data") {
    auto b1 = hkg::basis_polydifferentials(hermitian, 1);
    CHECK(b1.degree_bound == 18);
    CHECK(b1.dimension == 10);
    CHECK(b1.expected_dimension == 10);
    CHECK(b1.pole_numbers ==
          std::vector<Int>{0, 5, 6, 10, 11, 12, 15, 16, 17, 18});

    auto b2 = hkg::basis_polydifferentials(hermitian, 2);
    CHECK(b2.degree_bound == 36);
    CHECK(b2.dimension == 27);
    CHECK(b2.expected_dimension == 27);

    auto as1 = hkg::basis_polydifferentials(artin_schreier_57, 1);
    CHECK(as1.degree_bound == 22);
    CHECK(as1.dimension == 12);

    CHECK_THROWS_AS(hkg::basis_polydifferentials(hermitian, 0), hkg::InvalidData);
}

TEST_CASE("canonical degree identity") {
    auto r1 = hkg::canonical_degree_check(hermitian, 1);
    CHECK(r1.jump_side == 18);
    CHECK(r1.genus_side == 18);
    CHECK(r1.holds);

    auto r0 = hkg::canonical_degree_check(hermitian, 0);
    CHECK(r0.jump_side == 0);
    CHECK(r0.genus_side == 0);

    auto as2 = hkg::canonical_degree_check(artin_schreier_57, 2);
    CHECK(as2.jump_side == 44);
    CHECK(as2.genus_side == 44);
}

TEST_CASE("indecomposability bound") {
    auto h2 = hkg::indecomposability(hermitian, 2);
    CHECK(h2.summand_bound == 0);
    CHECK(h2.invariant_count == 1);
    CHECK(h2.forced_indecomposable);  // 125 > 36

    auto as2 = hkg::indecomposability(artin_schreier_57, 2);
    CHECK(as2.summand_bound == 8);  // floor(44/5)
    CHECK(as2.invariant_count == 9);
    CHECK_FALSE(as2.forced_indecomposable);
}

TEST_CASE("deformation dimension") {
    CHECK(hkg::deformation_dimension(hermitian) == 0);          // -3 + ceil(268/125)
    CHECK(hkg::deformation_dimension(artin_schreier_57) == 4);  // -3 + ceil(32/5)
    CHECK(hkg::deformation_dimension(tower_57) == 0);           // -3 + ceil(72/25)
}

TEST_CASE("dimension counts across a random corpus") {
    hkg::testsupport::CorpusOptions opt;
    opt.count = 40;
    opt.seed = 41;
    opt.conductor_cap = 20000;
    auto corpus = hkg::testsupport::make_corpus(opt);
    REQUIRE(corpus.size() == 40);

    for (const auto& rd : corpus) {
        Int g = hkg::genus(rd);
        auto semigroup = hkg::weierstrass_semigroup(rd);
        CHECK_FALSE(semigroup.contains(2 * g - 1));  // 2g-1 is always a gap
        for (int m = 1; m <= 4; ++m) {
            auto basis = hkg::basis_polydifferentials(rd, m);
            CHECK(basis.dimension == basis.expected_dimension);
            CHECK(basis.dimension == (m == 1 ? g : (2 * m - 1) * g - 2 * m + 1));
            CHECK(hkg::canonical_degree_check(rd, m).holds);
            auto ind = hkg::indecomposability(rd, m);
            CHECK(ind.invariant_count == ind.summand_bound + 1);
            if (ind.forced_indecomposable) CHECK(ind.invariant_count == 1);
            // the two published forms of the summand bound agree
            Int sum = 0;
            Int b_prev = -1;
            for (std::size_t i = 1; i <= rd.jump_count(); ++i) {
                sum += (rd.lower_jumps[i - 1] - b_prev) * (rd.order(i - 1) - 1);
                b_prev = rd.lower_jumps[i - 1];
            }
            CHECK(ind.summand_bound == -2 * m + (m * sum) / rd.group_order());
        }
    }
}
