#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "hlattice/errors.hpp"
#include "hlattice/goldbach2.hpp"
#include "support/oracles.hpp"

using namespace hlattice;
using goldbach2::census;
using goldbach2::classify_even;
using goldbach2::compatible_quadrants;
using goldbach2::goldbach_solutions;
using goldbach2::pair_census;
using goldbach2::rhombus_side;

namespace {

bool census_equal(const goldbach2::PairCensus& a, const goldbach2::PairCensus& b) {
    return a.e == b.e && a.quadrant == b.quadrant && a.a == b.a &&
           a.p_first == b.p_first && a.v_first == b.v_first &&
           a.p_second == b.p_second && a.v_second == b.v_second &&
           a.n_pp == b.n_pp && a.n_pv == b.n_pv && a.n_vp == b.n_vp &&
           a.n_vv == b.n_vv;
}

} // namespace

TEST_CASE("even numbers classify by residue with exact traeger sum") {
    const auto c10 = classify_even(10);
    CHECK(c10.residue == -2);
    CHECK(c10.traeger_sum == 2);
    const auto c12 = classify_even(12);
    CHECK(c12.residue == 0);
    CHECK(c12.traeger_sum == 2);
    const auto c14 = classify_even(14);
    CHECK(c14.residue == 2);
    CHECK(c14.traeger_sum == 2);
    CHECK_THROWS_AS(classify_even(8), OutOfDomain);
    CHECK_THROWS_AS(classify_even(0), OutOfDomain);
    CHECK_THROWS_AS(classify_even(15), OutOfDomain);
    CHECK_THROWS_AS(classify_even(-12), OutOfDomain);
}

TEST_CASE("residue classes cover the evens disjointly") {
    for (std::int64_t e = 10; e <= 100000; e += 2) {
        const auto c = classify_even(e);
        switch (e % 6) {
            case 2: CHECK(c.residue == 2); break;
            case 4: CHECK(c.residue == -2); break;
            default: CHECK(c.residue == 0); break;
        }
        CHECK(6 * c.traeger_sum + c.residue == e);
        const auto quads = compatible_quadrants(e);
        if (c.residue == 2) CHECK(quads == std::vector<int>{1});
        if (c.residue == -2) CHECK(quads == std::vector<int>{3});
        if (c.residue == 0) CHECK(quads == std::vector<int>{2, 4});
    }
}

TEST_CASE("rhombus side of 1208 in quadrant 1") {
    const auto side = rhombus_side(1208, 1);
    CHECK(side.a == 200);
    REQUIRE(side.pairs.size() == 200);
    CHECK(side.pairs.front().x == 7);
    CHECK(side.pairs.front().y == 1201);
    CHECK(side.pairs.front().type == PairType::pp);
    CHECK(side.pairs.back().x == 1201);
    CHECK(side.pairs.back().y == 7);
    for (std::size_t i = 0; i < side.pairs.size(); ++i) {
        CHECK(side.pairs[i].x + side.pairs[i].y == 1208);
        CHECK(side.pairs[i].x == 7 + 6 * static_cast<std::int64_t>(i));
    }
    CHECK_THROWS_AS(rhombus_side(1208, 2), QuadrantMismatch);
    CHECK_THROWS_AS(rhombus_side(1208, 5), OutOfDomain);
    CHECK_THROWS_AS(rhombus_side(9, 1), OutOfDomain);
}

TEST_CASE("frozen census of 1208 in quadrant 1") {
    const auto c = census(1208, 1);
    CHECK(c.a == 200);
    CHECK(c.p_first == 95);
    CHECK(c.v_first == 105);
    CHECK(c.p_second == 95);
    CHECK(c.v_second == 105);
    CHECK(c.n_pp == 40);
    CHECK(c.n_pv == 55);
    CHECK(c.n_vp == 55);
    CHECK(c.n_vv == 50);
    CHECK(goldbach2::census_identity_check(c));
}

TEST_CASE("frozen census of 1152 in quadrant 2 and its quadrant-4 mirror") {
    const auto c2 = census(1152, 2);
    CHECK(c2.a == 191);
    CHECK(c2.p_first == 95);
    CHECK(c2.v_first == 96);
    CHECK(c2.p_second == 92);
    CHECK(c2.v_second == 99);
    CHECK(c2.n_pp == 36);
    CHECK(c2.n_pv == 59);
    CHECK(c2.n_vp == 56);
    CHECK(c2.n_vv == 40);
    CHECK(goldbach2::census_identity_check(c2));

    const auto c4 = census(1152, 4);
    CHECK(c4.a == c2.a);
    CHECK(c4.p_first == c2.p_second);
    CHECK(c4.v_first == c2.v_second);
    CHECK(c4.p_second == c2.p_first);
    CHECK(c4.v_second == c2.v_first);
    CHECK(c4.n_pp == c2.n_pp);
    CHECK(c4.n_vv == c2.n_vv);
    CHECK(c4.n_pv == c2.n_vp);
    CHECK(c4.n_vp == c2.n_pv);
}

TEST_CASE("census errors mirror the side constructor") {
    CHECK_THROWS_AS(census(1208, 3), QuadrantMismatch);
    CHECK_THROWS_AS(census(12, 1), QuadrantMismatch);
    CHECK_THROWS_AS(census(12, 3), QuadrantMismatch);
    CHECK_THROWS_AS(census(10, 0), OutOfDomain);
    CHECK_THROWS_AS(census(7, 1), OutOfDomain);
}

TEST_CASE("sweep census equals the materialized pair census") {
    for (std::int64_t e = 10; e <= 600; e += 2)
        for (int q : compatible_quadrants(e))
            CHECK(census_equal(census(e, q), pair_census(rhombus_side(e, q))));
    CHECK(census_equal(census(1208, 1), pair_census(rhombus_side(1208, 1))));
    CHECK(census_equal(census(1152, 2), pair_census(rhombus_side(1152, 2))));
    CHECK(census_equal(census(1152, 4), pair_census(rhombus_side(1152, 4))));
}

TEST_CASE("census identity holds on every side up to 600") {
    for (std::int64_t e = 10; e <= 600; e += 2)
        for (int q : compatible_quadrants(e)) {
            const auto c = census(e, q);
            CHECK(goldbach2::census_identity_check(c));
            CHECK(c.n_pp + c.n_pv + c.n_vp + c.n_vv == c.a);
            CHECK(c.p_first + c.v_first == c.a);
            CHECK(c.p_second + c.v_second == c.a);
        }
}

TEST_CASE("prime decompositions of small even numbers") {
    using Pairs = std::vector<std::pair<std::int64_t, std::int64_t>>;
    CHECK(goldbach_solutions(10).pairs == Pairs{{5, 5}});
    CHECK(goldbach_solutions(12).pairs == Pairs{{5, 7}});
    CHECK(goldbach_solutions(14).pairs == Pairs{{7, 7}});
    CHECK(goldbach_solutions(90).pairs ==
          Pairs{{7, 83}, {11, 79}, {17, 73}, {19, 71}, {23, 67},
                {29, 61}, {31, 59}, {37, 53}, {43, 47}});
}

TEST_CASE("prime decompositions of 1208") {
    const auto sol = goldbach_solutions(1208);
    CHECK(sol.residue == 2);
    REQUIRE(sol.pairs.size() == 20);
    CHECK(sol.pairs.front() == std::pair<std::int64_t, std::int64_t>{7, 1201});
    bool middle = false;
    for (const auto& [p, q] : sol.pairs) {
        CHECK(p + q == 1208);
        CHECK(p <= q);
        CHECK(oracle::is_prime(static_cast<std::uint64_t>(p)));
        CHECK(oracle::is_prime(static_cast<std::uint64_t>(q)));
        if (p == 601 && q == 607) middle = true;
    }
    CHECK(middle);
}

TEST_CASE("decompositions agree with the brute-force oracle up to 2000") {
    for (std::int64_t e = 10; e <= 2000; e += 2)
        CHECK(goldbach_solutions(e).pairs == oracle::goldbach_pairs(e));
}

TEST_CASE("component traegers add up to the class traeger sum") {
    std::mt19937_64 rng(1208);
    std::uniform_int_distribution<std::int64_t> dist(5, 5000);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t e = 2 * dist(rng);
        const auto cls = classify_even(e);
        for (const auto& [p, q] : goldbach_solutions(e).pairs)
            CHECK(traeger_of(p).first + traeger_of(q).first == cls.traeger_sum);
    }
}

TEST_CASE("scan counts equal per-even solution counts") {
    const auto rep = goldbach2::scan_goldbach(10, 2000);
    CHECK(rep.e_lo == 10);
    CHECK(rep.e_hi == 2000);
    REQUIRE(rep.counts.size() == 996);
    for (std::int64_t e = 10; e <= 2000; e += 2)
        CHECK(rep.counts[static_cast<std::size_t>((e - 10) / 2)] ==
              goldbach_solutions(e).pairs.size());
    CHECK(rep.no_solution.empty());
    CHECK(rep.min_count == 1);
    CHECK(rep.min_count_e == 10);
    CHECK(rep.identity_checked == 996);
    CHECK(rep.identity_failures == 0);
}

TEST_CASE("scan reports are independent of the job count") {
    const auto one = goldbach2::scan_goldbach(10, 5000, 1);
    const auto four = goldbach2::scan_goldbach(10, 5000, 4);
    CHECK(one.counts == four.counts);
    CHECK(one.no_solution == four.no_solution);
    CHECK(one.min_count == four.min_count);
    CHECK(one.min_count_e == four.min_count_e);
    CHECK(one.identity_checked == four.identity_checked);
    CHECK(one.identity_failures == four.identity_failures);
}

TEST_CASE("scan bounds round inward to even numbers") {
    const auto rep = goldbach2::scan_goldbach(11, 21);
    CHECK(rep.e_lo == 12);
    CHECK(rep.e_hi == 20);
    CHECK(rep.counts.size() == 5);
    CHECK_THROWS_AS(goldbach2::scan_goldbach(8, 100), OutOfDomain);
    CHECK_THROWS_AS(goldbach2::scan_goldbach(11, 11), OutOfDomain);
    CHECK_THROWS_AS(goldbach2::scan_goldbach(100, 10), OutOfDomain);
}

TEST_CASE("identity sweep covers one census per residue quadrant") {
    const auto rep = goldbach2::identity_sweep(10, 5000);
    // 2496 evens, 832 of them divisible by 6 carry a second quadrant
    CHECK(rep.censuses_checked == 3328);
    CHECK(rep.failures == 0);
}
