#include "gstirling/realdeg.hpp"

#include "gstirling/exact.hpp"
#include "gstirling/stirling.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace gstirling {

bool is_near_integer(double a, double eps) {
    return std::abs(a - std::round(a)) <= eps;
}

namespace {

constexpr int kAsymptoticCutoff = 18;   // lift x at least this far before the series
constexpr int kBernoulliTerms = 14;

// B_2, B_4, ..., computed once, exactly, from the defining recurrence
// sum_{j<=n} C(n+1,j) B_j = 0.
const std::vector<double>& even_bernoulli() {
    static const std::vector<double> table = [] {
        const int count = 2 * kBernoulliTerms + 2;
        std::vector<Rational> b(static_cast<std::size_t>(count) + 1);
        b[0] = 1;
        for (int n = 1; n <= count; ++n) {
            Rational acc = 0;
            for (int j = 0; j < n; ++j)
                acc += Rational(binomial(static_cast<unsigned>(n + 1),
                                         static_cast<unsigned>(j))) *
                       b[static_cast<std::size_t>(j)];
            b[static_cast<std::size_t>(n)] = -acc / Rational(n + 1);
        }
        std::vector<double> evens;
        for (int t = 1; t <= kBernoulliTerms; ++t)
            evens.push_back(to_double(b[static_cast<std::size_t>(2 * t)]));
        return evens;
    }();
    return table;
}

double rising_factorial(double x, int count) {
    double acc = 1.0;
    for (int i = 0; i < count; ++i) acc *= x + i;
    return acc;
}

// Asymptotic expansion of psi^(r) at large y.
double polygamma_asymptotic(int order, double y) {
    const auto& b2 = even_bernoulli();
    if (order == 0) {
        double acc = std::log(y) - 0.5 / y;
        double ypow = y * y;
        for (int t = 0; t < kBernoulliTerms; ++t) {
            acc -= b2[static_cast<std::size_t>(t)] / ((2.0 * (t + 1)) * ypow);
            ypow *= y * y;
        }
        return acc;
    }
    // (-1)^(r-1) [ (r-1)!/y^r + r!/(2 y^(r+1))
    //            + sum_t B_2t (2t+r-1)! / ((2t)! y^(2t+r)) ]
    double rfact = 1.0;
    for (int i = 2; i < order; ++i) rfact *= i;  // (r-1)!
    const double yr = std::pow(y, order);
    double acc = rfact / yr + rfact * order / (2.0 * yr * y);
    double ypow = yr * y * y;
    // (2t+r-1)!/(2t)! = (2t+1)(2t+2)...(2t+r-1), r-1 ascending factors
    for (int t = 1; t <= kBernoulliTerms; ++t) {
        acc += b2[static_cast<std::size_t>(t - 1)] * rising_factorial(2.0 * t + 1, order - 1) /
               ypow;
        ypow *= y * y;
    }
    return (order % 2 == 0) ? -acc : acc;
}

}  // namespace

double polygamma(int order, double x) {
    if (order < 0) throw std::invalid_argument("polygamma: order must be nonnegative");
    if (!(x > 0.0)) throw std::domain_error("polygamma: argument must be positive");

    // psi^(r)(x) = psi^(r)(x+1) - (-1)^r r!/x^(r+1); lift until large enough.
    int steps = 0;
    if (x < kAsymptoticCutoff) steps = static_cast<int>(std::ceil(kAsymptoticCutoff - x));
    double rfact = 1.0;
    for (int i = 2; i <= order; ++i) rfact *= i;
    const double term_sign = (order % 2 == 0) ? 1.0 : -1.0;
    double correction = 0.0;
    for (int i = 0; i < steps; ++i)
        correction += term_sign * rfact / std::pow(x + i, order + 1);
    return polygamma_asymptotic(order, x + steps) - correction;
}

namespace {

constexpr int kGuardTerms = 8;  // absorbs cancellation in the log-series subtraction

// exp of a series with zero constant term: E_0 = 1,
// E_n = (1/n) sum_t t c_t E_{n-t}.
std::vector<double> series_exp(const std::vector<double>& c) {
    std::vector<double> e(c.size(), 0.0);
    e[0] = 1.0;
    for (std::size_t n = 1; n < c.size(); ++n) {
        double acc = 0.0;
        for (std::size_t t = 1; t <= n; ++t) acc += static_cast<double>(t) * c[t] * e[n - t];
        e[n] = acc / static_cast<double>(n);
    }
    return e;
}

// (y)_a for 1 - a >= 0.5: exp(lnGamma(1+y) - lnGamma(1-a+y)) via polygamma
// Taylor data, scaled by 1/Gamma(1-a).
std::vector<double> core_series(double a, int len) {
    const double x0 = 1.0 - a;
    std::vector<double> log_diff(static_cast<std::size_t>(len), 0.0);
    double tfact = 1.0;
    for (int t = 1; t < len; ++t) {
        tfact *= t;
        log_diff[static_cast<std::size_t>(t)] =
            (polygamma(t - 1, 1.0) - polygamma(t - 1, x0)) / tfact;
    }
    std::vector<double> series = series_exp(log_diff);
    const double scale = std::exp(-std::lgamma(x0));
    for (double& v : series) v *= scale;
    return series;
}

}  // namespace

std::vector<double> lower_factorial_series(double a, int k_max) {
    if (k_max < 0)
        throw std::invalid_argument("lower_factorial_series: k_max must be nonnegative");
    if (!std::isfinite(a) || is_near_integer(a))
        throw std::domain_error(
            "lower_factorial_series: degree must be a finite non-integer real");

    // Lift (y)_a = (y-a+1)(y)_{a-1} until 1 - (a - lifts) >= 0.5.
    const int lifts = std::max(0, static_cast<int>(std::ceil(a - 0.5)));
    const int len = k_max + kGuardTerms + 1;
    std::vector<double> series = core_series(a - lifts, len);
    for (int i = 1; i <= lifts; ++i) {
        const double root = i - a;  // factor (y + (i - a))
        double carry = 0.0;
        for (int t = 0; t < len; ++t) {
            const double next_carry = series[static_cast<std::size_t>(t)];
            series[static_cast<std::size_t>(t)] =
                series[static_cast<std::size_t>(t)] * root + carry;
            carry = next_carry;
        }
    }
    series.resize(static_cast<std::size_t>(k_max) + 1);
    return series;
}

RealCheckReport real_identity_checks(double a, int k_max, double tol) {
    RealCheckReport report;
    report.degree = a;

    const auto cur = lower_factorial_series(a, k_max);
    const auto prev = lower_factorial_series(a - 1.0, k_max);
    double max_residual = 0.0;
    for (int k = 0; k <= k_max; ++k) {
        const double shifted = (k > 0) ? prev[static_cast<std::size_t>(k - 1)] : 0.0;
        const double residual = cur[static_cast<std::size_t>(k)] -
                                (shifted - (a - 1.0) * prev[static_cast<std::size_t>(k)]);
        max_residual = std::max(max_residual, std::abs(residual));
    }
    report.max_recurrence_residual = max_residual;
    report.recurrence_ok = max_residual < tol;

    const double nearest = std::round(a);
    const double eps = std::abs(a - nearest);
    if (eps <= 1e-2) {
        const auto exact = defn_coeffs(static_cast<int>(nearest), k_max);
        double max_dev = 0.0;
        for (int k = 0; k <= k_max; ++k)
            max_dev = std::max(max_dev, std::abs(cur[static_cast<std::size_t>(k)] -
                                                 to_double(exact[static_cast<std::size_t>(k)])));
        report.max_exact_deviation = max_dev;
        report.exact_ok = max_dev < 100.0 * eps;
    }

    report.passed = report.recurrence_ok && report.exact_ok;
    return report;
}

IdentityResult real_recurrence_suite(double tol) {
    IdentityResult result;
    result.name = "real-recurrence-residual";
    result.range = "a in {0.25, 0.5, 1.5, -0.5, -2.5}, k <= 8";
    for (double a : {0.25, 0.5, 1.5, -0.5, -2.5}) {
        const auto report = real_identity_checks(a, 8, tol);
        ++result.checked;
        if (!report.recurrence_ok) {
            if (result.failures == 0) {
                std::ostringstream os;
                os << "a=" << a << ": max residual " << report.max_recurrence_residual
                   << " >= " << tol;
                result.first_counterexample = os.str();
            }
            ++result.failures;
        }
    }
    return result;
}

IdentityResult real_continuity_suite() {
    IdentityResult result;
    result.name = "real-continuity";
    result.range = "n in [-4,4], k <= 6, eps in {1e-3, 1e-4, 1e-5}";
    constexpr double kNoiseFloor = 1e-9;
    constexpr double kEps[] = {1e-3, 1e-4, 1e-5};
    for (int n = -4; n <= 4; ++n) {
        const auto exact = defn_coeffs(n, 6);
        std::vector<std::vector<double>> series;
        for (double eps : kEps) series.push_back(lower_factorial_series(n + eps, 6));
        for (int k = 0; k <= 6; ++k) {
            const double target = to_double(exact[static_cast<std::size_t>(k)]);
            double dev[3];
            for (int i = 0; i < 3; ++i)
                dev[i] = std::abs(series[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] -
                                  target);
            const bool ok = dev[1] <= dev[0] + kNoiseFloor && dev[2] <= dev[1] + kNoiseFloor &&
                            dev[2] < 1e-3;
            ++result.checked;
            if (!ok) {
                if (result.failures == 0) {
                    std::ostringstream os;
                    os << "s(" << n << "+eps," << k << "): deviations " << dev[0] << ", "
                       << dev[1] << ", " << dev[2];
                    result.first_counterexample = os.str();
                }
                ++result.failures;
            }
        }
    }
    return result;
}

}  // namespace gstirling
