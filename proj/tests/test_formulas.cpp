#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "balance/formulas.hpp"

using namespace balance;

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1) - Rational(7, 2)) == Rational(-5, 2));
    CHECK(Rational(-4, -8) == Rational(1, 2));
    CHECK(Rational(3, -2).str() == "-3/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(2, 4) <= Rational(1, 2));
    CHECK(Rational(7).is_integer());
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
    CHECK(half_binomial2(5) == Rational(5));
    CHECK(half_binomial2(6) == Rational(15, 2));
}

TEST_CASE("odd cycle threshold expression") {
    // (k-1)n - (k^2 - k - 1 - alpha)/2, always an integer since k^2 - k is
    // even and 1 + alpha is even.
    CHECK(bal_odd_cycle(15, 1, 1) == Rational(1));
    CHECK(bal_odd_cycle(15, 1, -1) == Rational(0));
    CHECK(bal_odd_cycle(30, 2, 1) == Rational(30));
    CHECK(bal_odd_cycle(30, 2, -1) == Rational(29));
    CHECK(bal_odd_cycle(100, 3, 1) == Rational(200 - 2));
    for (long long k = 1; k <= 4; ++k)
        for (int alpha : {-1, 1}) CHECK(bal_odd_cycle(50, k, alpha).is_integer());

    // 32 n >= 144 k^2 + 104 k + 49: tight around n = 9.28 for k = 1.
    CHECK(!odd_cycle_threshold_ok(9, 1));
    CHECK(odd_cycle_threshold_ok(10, 1));
    CHECK(!odd_cycle_threshold_ok(26, 2));
    CHECK(odd_cycle_threshold_ok(27, 2));
}

TEST_CASE("even cycle window") {
    const auto [lo1, hi1] = c4k_bounds(20, 1);
    CHECK(lo1 == 0);
    CHECK(hi1 == 15);
    const auto [lo2, hi2] = c4k_bounds(20, 2);
    CHECK(lo2 == 20 - 1);
    CHECK(hi2 == 20 + 48 + 6);
    CHECK(lo2 <= hi2);
}

TEST_CASE("linear forest extremal expression") {
    // S = sum floor(v_i / 2); value (S-1)(n-S+1) + C(S-1,2) + c.
    CHECK(linear_forest_ex(10, {4}) == 9);            // S=2, c=0
    CHECK(linear_forest_ex(10, {3, 3}) == 10);        // S=2, c=1 (all odd)
    CHECK(linear_forest_ex(12, {2, 2, 2}) == 21);     // S=3, c=0
    CHECK(linear_forest_ex(12, {5, 3}) == 22);  // S=3, all odd
    CHECK_THROWS_AS(linear_forest_ex(10, {1}), std::invalid_argument);
    CHECK_THROWS_AS(linear_forest_ex(10, {}), std::invalid_argument);
}

TEST_CASE("K5 constants match the stated decimals") {
    const auto c = k5_constants();
    CHECK(c.c == doctest::Approx(0.016).epsilon(0.1));
    CHECK(std::abs(c.c - 0.016) < 1e-3);
    CHECK(std::abs(c.upper_coeff - 0.177) < 1e-3);
}

TEST_CASE("K5 window and structural bound") {
    const auto [lo, hi] = k5_bounds(100, 0.1);
    CHECK(lo < hi);
    CHECK(lo > 100.0 * 99.0 / 4.0);  // above half the pair count

    CHECK(structural_upper_bound(5, 7) == Rational(9));
    CHECK(structural_upper_bound(6, 7) == Rational(15, 2) + Rational(4));
}
