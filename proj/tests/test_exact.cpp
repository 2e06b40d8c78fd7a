#include "gstirling/exact.hpp"

#include <doctest.h>

#include <random>
#include <vector>

using namespace gstirling;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

Rational random_rational(std::mt19937& gen) {
    std::uniform_int_distribution<int> num(-60, 60);
    std::uniform_int_distribution<int> den(1, 40);
    return make_rational(num(gen), den(gen));
}

}  // namespace

TEST_CASE("rational arithmetic matches hand values") {
    CHECK(rat_add(rat(1, 2), rat(1, 3)) == rat(5, 6));
    CHECK(rat_add(rat(-7, 9), rat(0)) == rat(-7, 9));
    CHECK(rat_add(rat(7, 8), rat(-15, 16)) == rat(-1, 16));
    CHECK(rat_mul(rat(2, 3), rat(3, 2)) == rat(1));
    CHECK(rat_inv(rat(-3, 4)) == rat(-4, 3));
    CHECK(rat_mul(rat(1, 120), rat(120)) == rat(1));
    CHECK(rat_neg(rat(5, 7)) == rat(-5, 7));
    CHECK_THROWS_AS(rat_inv(rat(0)), std::domain_error);
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
}

TEST_CASE("construction canonicalizes") {
    CHECK(numerator(make_rational(6, -4)) == -3);
    CHECK(denominator(make_rational(6, -4)) == 2);
    CHECK(numerator(make_rational(0, 17)) == 0);
    CHECK(denominator(make_rational(0, 17)) == 1);
}

TEST_CASE("sums stay canonical on random inputs") {
    std::mt19937 gen(20260811);
    for (int i = 0; i < 500; ++i) {
        const Rational s = rat_add(random_rational(gen), random_rational(gen));
        CHECK(denominator(s) > 0);
        CHECK(gcd(abs(numerator(s)), denominator(s)) == 1);
    }
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 gen(42);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(gen);
        const Rational b = random_rational(gen);
        const Rational c = random_rational(gen);
        CHECK(rat_add(a, b) == rat_add(b, a));
        CHECK(rat_mul(a, b) == rat_mul(b, a));
        CHECK(rat_add(rat_add(a, b), c) == rat_add(a, rat_add(b, c)));
        CHECK(rat_mul(rat_mul(a, b), c) == rat_mul(a, rat_mul(b, c)));
        CHECK(rat_mul(a, rat_add(b, c)) == rat_add(rat_mul(a, b), rat_mul(a, c)));
    }
}

TEST_CASE("factorial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(factorial(20) == BigInt("2432902008176640000"));

    // Cross-check the iteration against the product in reverse order.
    BigInt reversed = 1;
    for (int i = 20; i >= 2; --i) reversed *= i;
    CHECK(factorial(20) == reversed);
}

TEST_CASE("factorials stay exact at 500!") {
    const BigInt big = factorial(500);
    CHECK(big == factorial(499) * 500);
    CHECK(big.str().size() == 1135);
    CHECK(BigInt(big.str()) == big);  // decimal round trip
}

TEST_CASE("binomial") {
    CHECK(binomial(6, 2) == 15);
    CHECK(binomial(9, 0) == 1);
    CHECK(binomial(10, 5) == 252);
    CHECK(binomial(3, 7) == 0);

    // Pascal-triangle oracle up to n = 64.
    std::vector<std::vector<BigInt>> pascal(65);
    for (unsigned n = 0; n <= 64; ++n) {
        pascal[n].assign(n + 1, 1);
        for (unsigned m = 1; m < n; ++m) pascal[n][m] = pascal[n - 1][m - 1] + pascal[n - 1][m];
        for (unsigned m = 0; m <= n; ++m) CHECK(binomial(n, m) == pascal[n][m]);
    }
}

TEST_CASE("p/q codec") {
    CHECK(format_rational(rat(85, 216)) == "85/216");
    CHECK(format_rational(rat(-3, 4)) == "-3/4");
    CHECK(format_rational(rat(7)) == "7");
    CHECK(format_rational(rat(0)) == "0");

    CHECK(parse_rational("85/216") == rat(85, 216));
    CHECK(parse_rational("-25/288") == rat(-25, 288));
    CHECK(parse_rational("24") == rat(24));
    CHECK(parse_rational("+3/9") == rat(1, 3));
    CHECK(parse_rational("6/-4") == rat(-3, 2));  // lenient in, canonical out

    std::mt19937 gen(7);
    for (int i = 0; i < 200; ++i) {
        const Rational r = random_rational(gen);
        CHECK(parse_rational(format_rational(r)) == r);
    }

    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1/2/3"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("/2"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("3/"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("4/0"), std::domain_error);
}
