#pragma once

#include "gstirling/exact.hpp"
#include "gstirling/symfunc.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gstirling {

enum class Method { Recurrence, Knuth, PartitionSum, SymFunc, Definition };

std::string method_name(Method m);
std::optional<Method> method_from_name(std::string_view name);

enum class NegVariant { Bounded, LargestPart, Composition };
enum class PosVariant { Reciprocal, Product, LargestPart, CycleType };

struct Region {
    int n_min = 0;
    int n_max = 0;
    int k_max = 0;

    long long cell_count() const {
        return static_cast<long long>(n_max - n_min + 1) * (k_max + 1);
    }
    bool contains(int n, int k) const {
        return n >= n_min && n <= n_max && k >= 0 && k <= k_max;
    }
    bool operator==(const Region&) const = default;
};

// Rectangular (degree, order) -> Rational map with method provenance.
class StirlingTable {
public:
    StirlingTable(Region region, Method method);

    const Rational& cell(int n, int k) const;  // throws std::out_of_range
    void set_cell(int n, int k, Rational value);
    const Region& region() const { return region_; }
    Method method() const { return method_; }

    bool operator==(const StirlingTable&) const = default;

private:
    std::size_t index(int n, int k) const;

    Region region_;
    Method method_;
    std::vector<Rational> cells_;
};

// --- exact algorithms ------------------------------------------------------

// Coefficients s(n, 0..k_max) straight from the definition: expansion of
// y(y-1)...(y-n+1) for n >= 0, of 1/((y+1)...(y+m)) for n = -m < 0. This is
// the definitional oracle the other routes are tested against.
std::vector<Rational> defn_coeffs(int n, int k_max);

// Full table via the two-directional recurrence seeded at s(0,.) = delta.
// Requires n_min <= 0 <= n_max.
StirlingTable recurrence_table(int n_min, int n_max, int k_max);

// Production path for arbitrary regions: builds through the recurrence
// (widening to degree 0 as needed) and slices to `region`.
StirlingTable build_table(Region region);

// s(-m, k) by the finite binomial sum. m = 0 is allowed for k >= 1 (empty
// sum, value 0); (0, 0) is rejected.
Rational knuth_neg(int m, int k);

// The same binomial sum evaluated at a formally negative order -k, i.e.
// with m^{+k} inside; the right side of the first/second-kind duality.
Rational knuth_formal_neg_order(int n, int k);

Rational partition_sum_neg(int m, int k, NegVariant variant);
Rational partition_sum_pos(int n, int k, PosVariant variant);

// h_k specialization for negative degree, e_{n-k} specialization for
// positive degree; delta at degree 0.
Rational symfunc_route(int n, int k);

// Second-kind number S(k, n) via the classical binomial sum (bound n; the
// m = 0 term carries delta_{k,0}). Throws std::logic_error if the sum is
// not a nonnegative integer.
BigInt stirling2(int k, int n);

// Nested partial harmonic sums: T_1(n) = H_n, T_r(n) = sum_{i<=n} T_{r-1}(i)/i.
Rational nested_harmonic(int n, int r);
Rational harmonic_number(int n);

// sum_k (-1)^k s(n,k) for positive n, evaluated from the definition.
Rational alternating_sum(int n);

// --- identity verification --------------------------------------------------

struct IdentityResult {
    std::string name;
    std::string range;
    long long checked = 0;
    long long failures = 0;
    std::string first_counterexample;

    bool passed() const { return failures == 0; }
};

struct IdentityReport {
    std::vector<IdentityResult> results;

    bool all_passed() const;
    long long total_failures() const;
};

struct TailLimitReport {
    int m = 0;
    int k_max = 0;
    bool signs_alternate = false;
    bool magnitudes_nondecreasing = false;
    bool bounded_by_one = false;
    double gap = 0.0;  // 1 - (m-1)!|s(-m,k_max)|
    bool gap_within_tol = false;
};

// Checks the k -> infinity behavior along column -m using the Knuth sum:
// alternating signs, magnitudes climbing monotonically toward 1/(m-1)!.
TailLimitReport tail_limit_check(int m, int k_max, double tol);

// First/second-kind duality at (n, k), exact.
bool duality_holds(int n, int k);

struct VerifyOptions {
    int harmonic_n_max = 20;
    int duality_max = 8;
    int alternating_n_max = 10;
    int permutation_n_max = 7;
    int tail_m_max = 5;
    int tail_k_max = 60;
    double tail_tol = 1e-4;
    bool inject_fault = false;           // corrupt one cell; the suite must catch it
    std::string only;                    // when nonempty, run identities whose name contains it
};

// Cross-agreement of every algorithm on every applicable cell plus the named
// identity suite.
IdentityReport verify_all(Region region, const VerifyOptions& options = {});

}  // namespace gstirling
