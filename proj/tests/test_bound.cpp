#include "doctest.h"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hameig/bound.hpp"

using namespace hameig;

TEST_CASE("branch selection follows m*q^2 vs 4n(q-1)") {
    // m q^2 / (2n(q-1)) > 2, cleared of denominators, chosen exactly.
    CHECK(vorobev_lower_bound(4, 5, 3).branch == 1);   // 75 > 64
    CHECK(vorobev_lower_bound(2, 3, 1).branch == 2);   // 9 <= 16
    CHECK(vorobev_lower_bound(3, 3, 0).branch == 2);   // 0 <= 24
    CHECK(vorobev_lower_bound(2, 3, 2).branch == 1);   // 18 > 16
    CHECK(vorobev_lower_bound(1, 5, 1).branch == 1);   // 25 > 16
    CHECK(vorobev_lower_bound(9, 3, 4).branch == 2);   // 36 <= 72

    int seen_branch1 = 0;
    int seen_branch2 = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int q = 3; q <= 5; ++q) {
            for (int m = 0; m <= n; ++m) {
                const SupportBound bound = vorobev_lower_bound(n, q, m);
                const int expected =
                    static_cast<std::int64_t>(m) * q * q > 4LL * n * (q - 1) ? 1 : 2;
                CHECK(bound.branch == expected);
                (expected == 1 ? seen_branch1 : seen_branch2)++;
            }
        }
    }
    CHECK(seen_branch1 >= 20);
    CHECK(seen_branch2 >= 20);
}

TEST_CASE("branch 1 is the exact integer 2^m (q-2)^(n-m)") {
    const SupportBound b453 = vorobev_lower_bound(4, 5, 3);
    CHECK(b453.exact == Rational(24));  // 2^3 * 3^1
    CHECK(b453.squared == Rational(576));
    CHECK(b453.decimal == "24");
    CHECK(b453.is_exact());

    CHECK(vorobev_lower_bound(2, 3, 2).exact == Rational(4));   // 2^2 * 1^0
    CHECK(vorobev_lower_bound(5, 7, 5).exact == Rational(32));  // 2^5
    CHECK(vorobev_lower_bound(3, 4, 3).exact == Rational(8));
}

TEST_CASE("branch 2 carries its exact square and a 25-digit decimal") {
    // n=2,q=3,m=1: bound = 9 * (1/2)^(1/2) * 1 * (1/2) = sqrt(81/8)
    //            = 3.18198051533946385980379962947...
    const SupportBound b231 = vorobev_lower_bound(2, 3, 1);
    CHECK(b231.squared == parse_rational("81/8"));
    CHECK_FALSE(b231.is_exact());
    CHECK(b231.decimal.substr(0, 23) == "3.181980515339463859803");
    CHECK(b231.approx == doctest::Approx(3.18198051533946386).epsilon(1e-12));

    // m = 0 collapses every m-dependent factor: bound = q^n * (1-0)^(n/2).
    const SupportBound b330 = vorobev_lower_bound(3, 3, 0);
    CHECK(b330.squared == Rational(729));
    CHECK(b330.is_exact());
    CHECK(b330.exact == Rational(27));
    CHECK(b330.decimal == "27");
}

TEST_CASE("leq compares exactly through the square on branch 2") {
    const SupportBound b231 = vorobev_lower_bound(2, 3, 1);
    CHECK(b231.leq(Rational(4)));                        // sqrt(81/8) < 4
    CHECK_FALSE(b231.leq(Rational(3)));                  // 81/8 > 9
    CHECK_FALSE(b231.leq(Rational(-5)));
    CHECK(b231.leq(parse_rational("1591/500")));         // 3.182 > bound
    CHECK_FALSE(b231.leq(parse_rational("3181/1000")));  // 3.181 < bound

    const SupportBound b453 = vorobev_lower_bound(4, 5, 3);
    CHECK(b453.leq(Rational(24)));
    CHECK_FALSE(b453.leq(parse_rational("2399/100")));
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(vorobev_lower_bound(0, 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(vorobev_lower_bound(2, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(vorobev_lower_bound(2, 3, 3), std::invalid_argument);
    CHECK_THROWS_AS(vorobev_lower_bound(2, 3, -1), std::invalid_argument);
    // (q=2, m=n): branch 2 is undefined and the scope excludes it.
    CHECK_THROWS_AS(vorobev_lower_bound(3, 2, 3), std::invalid_argument);
    // (q=2, m<n) is fine: 2*4 <= 4*3*1 picks branch 2, squared 256/27.
    const SupportBound b322 = vorobev_lower_bound(3, 2, 2);
    CHECK(b322.branch == 2);
    CHECK(b322.squared == Rational(256) / Rational(27));
    CHECK_FALSE(b322.is_exact());
}
