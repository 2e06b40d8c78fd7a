#include "gstirling/symfunc.hpp"

#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>

using namespace gstirling;

namespace {

Rational rat(long long num, long long den = 1) { return make_rational(num, den); }

// Explicit sums over index tuples, the defining expansions. Exponential in
// k, so only used on tiny inputs.
Rational brute_h(int k, const SymArgs& xs) {
    Rational total = 0;
    std::function<void(int, std::size_t, Rational)> rec = [&](int depth, std::size_t lo,
                                                              Rational prod) {
        if (depth == k) {
            total += prod;
            return;
        }
        for (std::size_t i = lo; i < xs.size(); ++i) rec(depth + 1, i, prod * xs[i]);
    };
    rec(0, 0, Rational(1));
    return total;
}

Rational brute_e(int k, const SymArgs& xs) {
    Rational total = 0;
    std::function<void(int, std::size_t, Rational)> rec = [&](int depth, std::size_t lo,
                                                              Rational prod) {
        if (depth == k) {
            total += prod;
            return;
        }
        for (std::size_t i = lo; i < xs.size(); ++i) rec(depth + 1, i + 1, prod * xs[i]);
    };
    rec(0, 0, Rational(1));
    return total;
}

SymArgs random_args(std::mt19937& gen, int len) {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 7);
    SymArgs xs;
    for (int i = 0; i < len; ++i) xs.push_back(make_rational(num(gen), den(gen)));
    return xs;
}

}  // namespace

TEST_CASE("complete_h hand values") {
    CHECK(complete_h(2, {rat(-1), rat(-1, 2)}) == rat(7, 4));
    CHECK(complete_h(0, {rat(3), rat(5)}) == rat(1));
    CHECK(complete_h(0, {}) == rat(1));
    CHECK(complete_h(4, {}) == rat(0));
    CHECK(complete_h(1, {rat(-1), rat(-1, 2), rat(-1, 3)}) == rat(-11, 6));
}

TEST_CASE("elementary_e hand values") {
    CHECK(elementary_e(2, {rat(-1), rat(-2), rat(-3)}) == rat(11));
    CHECK(elementary_e(0, {}) == rat(1));
    CHECK(elementary_e(4, {rat(1), rat(2), rat(3)}) == rat(0));
}

TEST_CASE("generating-function truncations") {
    CHECK(genfunc_h_coeffs({rat(-1)}, 3) == Series{rat(1), rat(-1), rat(1), rat(-1)});
    CHECK(genfunc_h_coeffs({}, 4) == Series{rat(1), rat(0), rat(0), rat(0), rat(0)});
    CHECK(genfunc_e_coeffs({rat(-1), rat(-2)}, 2) == Series{rat(1), rat(-3), rat(2)});
}

TEST_CASE("recurrences agree with the explicit tuple sums") {
    std::mt19937 gen(19930201);
    for (int len = 0; len <= 4; ++len)
        for (int trial = 0; trial < 12; ++trial) {
            const SymArgs xs = random_args(gen, len);
            for (int k = 0; k <= 5; ++k) {
                CAPTURE(len);
                CAPTURE(k);
                CHECK(complete_h(k, xs) == brute_h(k, xs));
                CHECK(elementary_e(k, xs) == brute_e(k, xs));
            }
        }
}

TEST_CASE("recurrences agree with the generating products") {
    std::mt19937 gen(77);
    for (int trial = 0; trial < 40; ++trial) {
        std::uniform_int_distribution<int> len_dist(0, 6);
        const SymArgs xs = random_args(gen, len_dist(gen));
        const Series h = genfunc_h_coeffs(xs, 8);
        const Series e = genfunc_e_coeffs(xs, 8);
        for (int k = 0; k <= 8; ++k) {
            CHECK(complete_h(k, xs) == h[static_cast<std::size_t>(k)]);
            CHECK(elementary_e(k, xs) == e[static_cast<std::size_t>(k)]);
        }
    }
}

TEST_CASE("h and e are reciprocal generating products") {
    // prod (1 - x y)^-1 * prod (1 - x y) = 1, i.e.
    // sum_i (-1)^i e_i h_{k-i} = 0 for k >= 1.
    std::mt19937 gen(5);
    for (int trial = 0; trial < 25; ++trial) {
        const SymArgs xs = random_args(gen, 5);
        for (int k = 1; k <= 7; ++k) {
            Rational acc = 0;
            for (int i = 0; i <= k; ++i) {
                const Rational term = elementary_e(i, xs) * complete_h(k - i, xs);
                acc += (i % 2 != 0) ? -term : term;
            }
            CHECK(acc == 0);
        }
    }
}

TEST_CASE("evaluation is permutation invariant") {
    std::mt19937 gen(11);
    for (int trial = 0; trial < 20; ++trial) {
        SymArgs xs = random_args(gen, 6);
        SymArgs shuffled = xs;
        std::shuffle(shuffled.begin(), shuffled.end(), gen);
        for (int k = 0; k <= 6; ++k) {
            CHECK(complete_h(k, xs) == complete_h(k, shuffled));
            CHECK(elementary_e(k, xs) == elementary_e(k, shuffled));
        }
    }
}
