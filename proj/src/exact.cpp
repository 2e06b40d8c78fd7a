#include "gstirling/exact.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace gstirling {

Rational make_rational(BigInt num, BigInt den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    BigInt g = gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return Rational(num, den);
}

Rational rat_inv(const Rational& a) {
    if (a == 0) throw std::domain_error("division by zero");
    return make_rational(denominator(a), numerator(a));
}

BigInt factorial(unsigned n) {
    BigInt acc = 1;
    for (unsigned i = 2; i <= n; ++i) acc *= i;
    return acc;
}

BigInt binomial(unsigned n, unsigned m) {
    if (m > n) return 0;
    m = std::min(m, n - m);
    BigInt acc = 1;
    for (unsigned i = 1; i <= m; ++i) {
        acc *= n - m + i;
        acc /= i;  // exact: acc is C(n-m+i, i) after each step
    }
    return acc;
}

BigInt int_pow(const BigInt& base, unsigned exp) {
    return pow(base, exp);
}

double to_double(const Rational& r) {
    return r.convert_to<double>();
}

std::string format_rational(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

namespace {

bool is_signed_integer(std::string_view s) {
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view num = text;
    std::string_view den = "1";
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num = text.substr(0, slash);
        den = text.substr(slash + 1);
    }
    if (!is_signed_integer(num) || !is_signed_integer(den))
        throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    if (num.front() == '+') num.remove_prefix(1);  // cpp_int rejects a leading '+'
    if (den.front() == '+') den.remove_prefix(1);
    return make_rational(BigInt(std::string(num)), BigInt(std::string(den)));
}

}  // namespace gstirling
