#include "gstirling/symfunc.hpp"

#include <stdexcept>

namespace gstirling {

Series mul_trunc(const Series& a, const Series& b, int k_max) {
    Series out(static_cast<std::size_t>(k_max) + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= static_cast<std::size_t>(k_max); ++i) {
        if (a[i] == 0) continue;
        const std::size_t j_end = std::min(b.size(), static_cast<std::size_t>(k_max) + 1 - i);
        for (std::size_t j = 0; j < j_end; ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

Rational complete_h(int k, const SymArgs& xs) {
    if (k < 0) throw std::invalid_argument("complete_h: k must be nonnegative");
    std::vector<Rational> h(static_cast<std::size_t>(k) + 1, Rational(0));
    h[0] = 1;
    for (const Rational& x : xs)
        for (int t = 1; t <= k; ++t) h[t] += x * h[t - 1];
    return h[k];
}

Rational elementary_e(int k, const SymArgs& xs) {
    if (k < 0) throw std::invalid_argument("elementary_e: k must be nonnegative");
    if (static_cast<std::size_t>(k) > xs.size()) return 0;
    std::vector<Rational> e(static_cast<std::size_t>(k) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& x : xs)
        for (int t = k; t >= 1; --t) e[t] += x * e[t - 1];
    return e[k];
}

Series genfunc_h_coeffs(const SymArgs& xs, int k_max) {
    if (k_max < 0) throw std::invalid_argument("genfunc_h_coeffs: k_max must be nonnegative");
    Series acc(static_cast<std::size_t>(k_max) + 1, Rational(0));
    acc[0] = 1;
    for (const Rational& x : xs) {
        Series geom(static_cast<std::size_t>(k_max) + 1);
        geom[0] = 1;
        for (int t = 1; t <= k_max; ++t) geom[t] = geom[t - 1] * x;
        acc = mul_trunc(acc, geom, k_max);
    }
    return acc;
}

Series genfunc_e_coeffs(const SymArgs& xs, int k_max) {
    if (k_max < 0) throw std::invalid_argument("genfunc_e_coeffs: k_max must be nonnegative");
    Series acc(static_cast<std::size_t>(k_max) + 1, Rational(0));
    acc[0] = 1;
    for (const Rational& x : xs) {
        Series linear{Rational(1), x};
        acc = mul_trunc(acc, linear, k_max);
    }
    return acc;
}

}  // namespace gstirling
