#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "pentacover/modarith.hpp"

using namespace pentacover;

namespace {

std::vector<i64> values(const std::vector<Residue>& rs) {
    std::vector<i64> out;
    for (const auto& r : rs) out.push_back(r.value);
    return out;
}

} // namespace

TEST_CASE("units") {
    CHECK(values(units(5)) == std::vector<i64>{1, 2, 3, 4});
    CHECK(values(units(1)) == std::vector<i64>{0});
    CHECK(values(units(12)) == std::vector<i64>{1, 5, 7, 11});
}

TEST_CASE("units match invertibility for all n <= 10^4") {
    for (i64 n = 2; n <= 10'000; ++n) {
        auto us = units(n);
        size_t idx = 0;
        for (i64 x = 0; x < n; ++x) {
            bool invertible = false;
            i64 a, b;
            if (egcd_i64(x, n, a, b) == 1) invertible = true;
            bool in_units = idx < us.size() && us[idx].value == x;
            if (in_units) ++idx;
            if (invertible != in_units) {
                CAPTURE(n);
                CAPTURE(x);
                REQUIRE(invertible == in_units);
            }
        }
    }
}

TEST_CASE("poly_roots of the cyclotomic quintic") {
    ModPoly eq1({1, 1, 1, 1, 1}, 5);
    CHECK(values(poly_roots(eq1)) == std::vector<i64>{1});

    ModPoly eq1_11({1, 1, 1, 1, 1}, 11);
    CHECK(values(poly_roots(eq1_11)) == std::vector<i64>{3, 4, 5, 9});

    ModPoly q({5, 0, 10, 0, 1}, 11); // x^4 + 10x^2 + 5
    auto roots = values(poly_roots(q));
    CHECK(std::find(roots.begin(), roots.end(), 3) != roots.end());
}

TEST_CASE("poly_roots scan cap") {
    CHECK_THROWS_AS(poly_roots(ModPoly({1, 1}, 100'000'000)), modarith_error);
}

TEST_CASE("solve_eq1 examples") {
    CHECK(values(solve_eq1(1)) == std::vector<i64>{0});
    CHECK(solve_eq1(7).empty());
    auto r31 = values(solve_eq1(31));
    CHECK(std::find(r31.begin(), r31.end(), 2) != r31.end());
}

TEST_CASE("solve_eq1 structural characterization for m <= 200") {
    for (i64 m = 1; m <= 200; ++m) {
        auto roots = solve_eq1(m); // throws if scan and factorization disagree
        CHECK(roots.empty() != eq1_solvable_by_factorization(m));
        if (m > 5)
            for (const auto& r : roots) {
                CHECK(pow_mod(r.value, 5, m) == 1);
                CHECK(r.value != 1);
            }
    }
}

TEST_CASE("order5_unit") {
    CHECK(order5_unit(11).value == 3);
    auto l = order5_unit(121);
    CHECK(l.value != 1);
    CHECK(pow_mod(l.value, 5, 121) == 1);
    for (i64 x = 2; x < l.value; ++x)
        CHECK((gcd_i64(x, 121) != 1 || pow_mod(x, 5, 121) != 1));
    CHECK_THROWS_WITH_AS(order5_unit(7), doctest::Contains("5 does not divide"), modarith_error);
}

TEST_CASE("sqrt_mod") {
    CHECK(values(sqrt_mod(5, 11)) == std::vector<i64>{4, 7});
    CHECK(values(sqrt_mod(5, 19)) == std::vector<i64>{9, 10});
    CHECK(values(sqrt_mod(0, 5)) == std::vector<i64>{0});
    CHECK(sqrt_mod(2, 5).empty());
    for (i64 p : {3, 5, 7, 11, 13, 17, 19, 23})
        for (i64 a = 0; a < p; ++a) {
            auto roots = sqrt_mod(a, p);
            CHECK(roots.size() <= 2);
            if (roots.size() == 1) CHECK(a == 0);
            for (const auto& r : roots) CHECK((r.value * r.value) % p == a);
        }
}

TEST_CASE("modular inverse and order helpers") {
    CHECK(inv_mod(2, 5) == 3);
    CHECK(inv_mod(8, 11) == 7);
    CHECK_THROWS_AS(inv_mod(2, 4), modarith_error);
    CHECK(mul_order(3, 11) == 5);
    CHECK(mul_order(2, 31) == 5);
    CHECK(is_prime(2));
    CHECK(is_prime(31));
    CHECK(!is_prime(1));
    CHECK(!is_prime(121));
    auto f = factorize(550);
    CHECK(f == std::vector<std::pair<i64, int>>{{2, 1}, {5, 2}, {11, 1}});
}
