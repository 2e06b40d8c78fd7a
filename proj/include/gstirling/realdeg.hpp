#pragma once

#include "gstirling/stirling.hpp"

#include <optional>
#include <vector>

namespace gstirling {

// Degrees this close to an integer route to the exact path instead.
inline constexpr double kIntegerproximity = 1e-12;

bool is_near_integer(double a, double eps = kIntegerproximity);

// psi^(order)(x) for x > 0: upward recurrence to a large argument, then the
// Bernoulli asymptotic series. Good to >= 10 significant digits for
// x >= 1e-3, order <= 12. Throws std::domain_error for x <= 0.
double polygamma(int order, double x);

// Taylor coefficients in y of (y)_a = Gamma(y+1)/Gamma(y-a+1) for real
// non-integer a; coefficient k is the float s(a,k). Built from the two
// log-gamma series at 1 and 1-a (lifted through (y)_a = (y-a+1)(y)_{a-1}
// until 1-a is comfortably positive), exponentiated as a truncated series.
// Throws std::domain_error when a is within 1e-12 of an integer.
std::vector<double> lower_factorial_series(double a, int k_max);

struct RealCheckReport {
    double degree = 0.0;
    double max_recurrence_residual = 0.0;
    bool recurrence_ok = false;
    // Present when the degree sits near an integer: max |float - exact|.
    std::optional<double> max_exact_deviation;
    bool exact_ok = true;
    bool passed = false;
};

// (i) coefficientwise residual of s(a,k) = s(a-1,k-1) - (a-1) s(a-1,k)
// against `tol`; (ii) when a = n + eps with |eps| <= 1e-2, agreement with
// the exact integer path within 100*|eps| (empirical slope bound for the
// test degrees; no sharper error bound is claimed).
RealCheckReport real_identity_checks(double a, int k_max, double tol);

// Recurrence residual at a in {0.25, 0.5, 1.5, -0.5, -2.5}, k <= 8.
IdentityResult real_recurrence_suite(double tol = 1e-8);

// Float-vs-exact agreement at n + eps for n in [-4,4], k <= 6, with the
// deviation required to shrink across eps in {1e-3, 1e-4, 1e-5} (up to a
// 1e-9 noise floor) and to end below 1e-3.
IdentityResult real_continuity_suite();

}  // namespace gstirling
