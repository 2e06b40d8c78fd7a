#include "gstirling/stirling.hpp"

#include "gstirling/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace gstirling {

std::string method_name(Method m) {
    switch (m) {
        case Method::Recurrence: return "recurrence";
        case Method::Knuth: return "knuth";
        case Method::PartitionSum: return "partition";
        case Method::SymFunc: return "symfunc";
        case Method::Definition: return "defn";
    }
    return "unknown";
}

std::optional<Method> method_from_name(std::string_view name) {
    if (name == "recurrence") return Method::Recurrence;
    if (name == "knuth") return Method::Knuth;
    if (name == "partition") return Method::PartitionSum;
    if (name == "symfunc") return Method::SymFunc;
    if (name == "defn") return Method::Definition;
    return std::nullopt;
}

StirlingTable::StirlingTable(Region region, Method method)
    : region_(region), method_(method) {
    if (region.n_min > region.n_max || region.k_max < 0)
        throw std::invalid_argument("empty table region");
    cells_.assign(static_cast<std::size_t>(region.cell_count()), Rational(0));
}

std::size_t StirlingTable::index(int n, int k) const {
    if (!region_.contains(n, k)) {
        std::ostringstream os;
        os << "cell (" << n << "," << k << ") outside table region";
        throw std::out_of_range(os.str());
    }
    return static_cast<std::size_t>(n - region_.n_min) *
               static_cast<std::size_t>(region_.k_max + 1) +
           static_cast<std::size_t>(k);
}

const Rational& StirlingTable::cell(int n, int k) const { return cells_[index(n, k)]; }

void StirlingTable::set_cell(int n, int k, Rational value) {
    cells_[index(n, k)] = std::move(value);
}

namespace {

Rational sign_pow(long long exponent) {
    return (exponent % 2 == 0) ? Rational(1) : Rational(-1);
}

}  // namespace

std::vector<Rational> defn_coeffs(int n, int k_max) {
    if (k_max < 0) throw std::invalid_argument("defn_coeffs: k_max must be nonnegative");
    const std::size_t len = static_cast<std::size_t>(k_max) + 1;
    if (n >= 0) {
        // y(y-1)...(y-n+1), expanded exactly; degree n.
        std::vector<Rational> poly{Rational(1)};
        for (int i = 0; i < n; ++i) {
            std::vector<Rational> next(poly.size() + 1, Rational(0));
            for (std::size_t t = 0; t < poly.size(); ++t) {
                next[t + 1] += poly[t];
                next[t] -= Rational(i) * poly[t];
            }
            poly = std::move(next);
        }
        poly.resize(std::max(poly.size(), len), Rational(0));
        poly.resize(len);
        return poly;
    }
    // 1/((y+1)(y+2)...(y+m)) = (1/m!) prod_i (1 + y/i)^-1, each factor a
    // truncated geometric series.
    const int m = -n;
    Series acc(len, Rational(0));
    acc[0] = 1;
    for (int i = 1; i <= m; ++i) {
        Series geom(len);
        geom[0] = 1;
        const Rational ratio = make_rational(-1, i);
        for (int t = 1; t <= k_max; ++t) geom[t] = geom[t - 1] * ratio;
        acc = mul_trunc(acc, geom, k_max);
    }
    const Rational inv_mfact = make_rational(1, factorial(static_cast<unsigned>(m)));
    for (Rational& c : acc) c *= inv_mfact;
    return acc;
}

StirlingTable recurrence_table(int n_min, int n_max, int k_max) {
    if (n_min > 0 || n_max < 0)
        throw std::invalid_argument("recurrence_table: region must contain degree 0");
    StirlingTable table({n_min, n_max, k_max}, Method::Recurrence);
    table.set_cell(0, 0, Rational(1));  // s(0,k) = delta_{0,k}

    // Upward: s(a+1,k) = s(a,k-1) - a s(a,k).
    for (int a = 0; a < n_max; ++a)
        for (int k = 0; k <= k_max; ++k) {
            Rational v = -Rational(a) * table.cell(a, k);
            if (k > 0) v += table.cell(a, k - 1);
            table.set_cell(a + 1, k, std::move(v));
        }

    // Downward: s(-m,k) = (s(-m+1,k) - s(-m,k-1))/m, seeded s(-m,0) = 1/m!.
    for (int m = 1; m <= -n_min; ++m) {
        table.set_cell(-m, 0, table.cell(-m + 1, 0) / m);
        for (int k = 1; k <= k_max; ++k)
            table.set_cell(-m, k, (table.cell(-m + 1, k) - table.cell(-m, k - 1)) / m);
    }
    return table;
}

StirlingTable build_table(Region region) {
    const int lo = std::min(region.n_min, 0);
    const int hi = std::max(region.n_max, 0);
    StirlingTable wide = recurrence_table(lo, hi, region.k_max);
    if (lo == region.n_min && hi == region.n_max) return wide;
    StirlingTable out(region, Method::Recurrence);
    for (int n = region.n_min; n <= region.n_max; ++n)
        for (int k = 0; k <= region.k_max; ++k) out.set_cell(n, k, wide.cell(n, k));
    return out;
}

Rational knuth_neg(int m, int k) {
    if (m < 0 || k < 0) throw std::invalid_argument("knuth_neg: arguments must be nonnegative");
    if (m == 0 && k == 0)
        throw std::domain_error("knuth sum is undefined at degree 0, order 0");
    Rational sum = 0;
    for (int j = 1; j <= m; ++j) {
        BigInt coef = binomial(static_cast<unsigned>(m), static_cast<unsigned>(j));
        if (j % 2 != 0) coef = -coef;
        sum += make_rational(coef, int_pow(BigInt(j), static_cast<unsigned>(k)));
    }
    return sign_pow(k + 1) * sum / Rational(factorial(static_cast<unsigned>(m)));
}

Rational knuth_formal_neg_order(int n, int k) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("knuth_formal_neg_order: need n >= 1, k >= 0");
    BigInt sum = 0;
    for (int j = 1; j <= n; ++j) {
        BigInt term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) *
                      int_pow(BigInt(j), static_cast<unsigned>(k));
        sum += (j % 2 != 0) ? -term : term;
    }
    return sign_pow(k + 1) * make_rational(sum, factorial(static_cast<unsigned>(n)));
}

Rational partition_sum_neg(int m, int k, NegVariant variant) {
    if (m < 0 || k < 0)
        throw std::invalid_argument("partition_sum_neg: arguments must be nonnegative");
    switch (variant) {
        case NegVariant::Bounded: {
            if (m == 0) return k == 0 ? Rational(1) : Rational(0);
            Rational sum = 0;
            auto stream = enum_bounded(k, m);
            while (auto rho = stream.next()) sum += make_rational(1, rho->product());
            return sign_pow(k) * sum / Rational(factorial(static_cast<unsigned>(m)));
        }
        case NegVariant::LargestPart: {
            if (m < 1)
                throw std::invalid_argument("partition_sum_neg: LargestPart needs m >= 1");
            // Partitions with k+1 parts whose largest part is exactly m are
            // those of the Bounded sum with the part m adjoined.
            Rational sum = 0;
            auto stream = enum_bounded(k, m);
            while (auto rho = stream.next())
                sum += make_rational(1, rho->with_part(m).product());
            return sign_pow(k) * sum / Rational(factorial(static_cast<unsigned>(m - 1)));
        }
        case NegVariant::Composition: {
            if (m < 1)
                throw std::invalid_argument("partition_sum_neg: Composition needs m >= 1");
            Rational sum = 0;
            auto stream = enum_compositions(m, k);
            while (auto comp = stream.next()) {
                BigInt den = 1;
                const auto& mult = comp->entries();
                for (int i = 1; i <= m; ++i)
                    den *= int_pow(BigInt(i), static_cast<unsigned>(mult[i - 1]));
                sum += make_rational(1, den);
            }
            return sign_pow(k) * sum / Rational(factorial(static_cast<unsigned>(m)));
        }
    }
    throw std::invalid_argument("partition_sum_neg: unknown variant");
}

Rational partition_sum_pos(int n, int k, PosVariant variant) {
    if (n < 1 || k < 0)
        throw std::invalid_argument("partition_sum_pos: need n >= 1, k >= 0");
    const Rational sign = sign_pow(n + k);
    switch (variant) {
        case PosVariant::Reciprocal: {
            if (k == 0) return 0;  // no partition has -1 parts
            Rational sum = 0;
            auto stream = enum_distinct_below(k - 1, n);
            while (auto mu = stream.next()) sum += make_rational(1, mu->product());
            return sign * Rational(factorial(static_cast<unsigned>(n - 1))) * sum;
        }
        case PosVariant::Product: {
            if (n - k < 0) return 0;
            BigInt sum = 0;
            auto stream = enum_distinct_below(n - k, n);
            while (auto mu = stream.next()) sum += mu->product();
            return sign * Rational(sum);
        }
        case PosVariant::LargestPart: {
            if (k == 0) return 0;
            // Distinct partitions with k parts and largest part exactly n:
            // adjoin n to every distinct partition with k-1 parts below n.
            Rational sum = 0;
            auto stream = enum_distinct_below(k - 1, n);
            while (auto mu = stream.next())
                sum += make_rational(1, mu->with_part(n).product());
            return sign * Rational(factorial(static_cast<unsigned>(n))) * sum;
        }
        case PosVariant::CycleType: {
            Rational sum = 0;
            const BigInt nfact = factorial(static_cast<unsigned>(n));
            auto stream = enum_weight(n, k);
            while (auto mu = stream.next()) {
                // n! / prod_i i^{m_i} m_i!, the count of permutations of
                // cycle type mu.
                BigInt den = 1;
                const auto& parts = mu->parts();
                for (std::size_t i = 0; i < parts.size();) {
                    std::size_t j = i;
                    while (j < parts.size() && parts[j] == parts[i]) ++j;
                    const unsigned mult = static_cast<unsigned>(j - i);
                    den *= int_pow(BigInt(parts[i]), mult) * factorial(mult);
                    i = j;
                }
                sum += make_rational(nfact, den);
            }
            return sign * sum;
        }
    }
    throw std::invalid_argument("partition_sum_pos: unknown variant");
}

Rational symfunc_route(int n, int k) {
    if (k < 0) throw std::invalid_argument("symfunc_route: k must be nonnegative");
    if (n == 0) return k == 0 ? Rational(1) : Rational(0);
    if (n < 0) {
        const int m = -n;
        SymArgs xs;
        xs.reserve(static_cast<std::size_t>(m));
        for (int i = 1; i <= m; ++i) xs.push_back(make_rational(-1, i));
        return complete_h(k, xs) / Rational(factorial(static_cast<unsigned>(m)));
    }
    if (k > n) return 0;
    SymArgs xs;
    xs.reserve(static_cast<std::size_t>(n - 1));
    for (int i = 1; i <= n - 1; ++i) xs.push_back(Rational(-i));
    return elementary_e(n - k, xs);
}

BigInt stirling2(int k, int n) {
    if (k < 0 || n < 1) throw std::invalid_argument("stirling2: need k >= 0, n >= 1");
    Rational sum = (k == 0) ? Rational(1) : Rational(0);  // m = 0 term, 0^k
    for (int m = 1; m <= n; ++m) {
        BigInt term = binomial(static_cast<unsigned>(n), static_cast<unsigned>(m)) *
                      int_pow(BigInt(m), static_cast<unsigned>(k));
        sum += (m % 2 != 0) ? Rational(-term) : Rational(term);
    }
    const Rational value = sign_pow(n) * sum / Rational(factorial(static_cast<unsigned>(n)));
    if (denominator(value) != 1 || value < 0)
        throw std::logic_error("stirling2: sum did not reduce to a nonnegative integer");
    return numerator(value);
}

Rational nested_harmonic(int n, int r) {
    if (n < 1 || r < 1) throw std::invalid_argument("nested_harmonic: need n >= 1, r >= 1");
    std::vector<Rational> level(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int i = 1; i <= n; ++i) level[i] = level[i - 1] + make_rational(1, i);
    for (int depth = 2; depth <= r; ++depth) {
        std::vector<Rational> next(static_cast<std::size_t>(n) + 1, Rational(0));
        for (int i = 1; i <= n; ++i) next[i] = next[i - 1] + level[i] / i;
        level = std::move(next);
    }
    return level[static_cast<std::size_t>(n)];
}

Rational harmonic_number(int n) {
    if (n < 0) throw std::invalid_argument("harmonic_number: n must be nonnegative");
    return n == 0 ? Rational(0) : nested_harmonic(n, 1);
}

Rational alternating_sum(int n) {
    if (n < 1) throw std::invalid_argument("alternating_sum: n must be positive");
    const auto coeffs = defn_coeffs(n, n);
    Rational acc = 0;
    for (int k = 0; k <= n; ++k) acc += sign_pow(k) * coeffs[static_cast<std::size_t>(k)];
    return acc;
}

bool IdentityReport::all_passed() const {
    return std::all_of(results.begin(), results.end(),
                       [](const IdentityResult& r) { return r.passed(); });
}

long long IdentityReport::total_failures() const {
    long long total = 0;
    for (const auto& r : results) total += r.failures;
    return total;
}

TailLimitReport tail_limit_check(int m, int k_max, double tol) {
    if (m < 1 || k_max < 0 || tol <= 0)
        throw std::invalid_argument("tail_limit_check: need m >= 1, k_max >= 0, tol > 0");
    TailLimitReport report;
    report.m = m;
    report.k_max = k_max;
    report.signs_alternate = true;
    report.magnitudes_nondecreasing = true;
    report.bounded_by_one = true;

    const Rational scale(factorial(static_cast<unsigned>(m - 1)));
    Rational prev_mag = 0;
    Rational last_mag = 0;
    for (int k = 0; k <= k_max; ++k) {
        const Rational s = knuth_neg(m, k);
        const bool want_negative = (k % 2 != 0);
        if (s == 0 || (s < 0) != want_negative) report.signs_alternate = false;
        const Rational mag = scale * abs(s);
        if (mag < prev_mag) report.magnitudes_nondecreasing = false;
        if (mag > 1) report.bounded_by_one = false;
        prev_mag = mag;
        last_mag = mag;
    }
    report.gap = to_double(Rational(1) - last_mag);
    report.gap_within_tol = report.gap < tol;
    return report;
}

bool duality_holds(int n, int k) {
    if (n < 1 || k < 1) throw std::invalid_argument("duality_holds: need n, k >= 1");
    const Rational lhs(stirling2(k, n));
    const Rational rhs = sign_pow(n + k + 1) * knuth_formal_neg_order(n, k);
    return lhs == rhs;
}

namespace {

// Accumulates instance checks for one identity, keeping the first witness.
class Checker {
public:
    Checker(std::string name, std::string range) {
        result_.name = std::move(name);
        result_.range = std::move(range);
    }

    void check(bool ok, const std::function<std::string()>& witness) {
        ++result_.checked;
        if (!ok) {
            if (result_.failures == 0) result_.first_counterexample = witness();
            ++result_.failures;
        }
    }

    IdentityResult take() { return std::move(result_); }

private:
    IdentityResult result_;
};

std::string cell_witness(int n, int k, const Rational& expected, const Rational& got,
                         const char* route) {
    std::ostringstream os;
    os << "s(" << n << "," << k << "): " << route << " gave " << format_rational(got)
       << ", expected " << format_rational(expected);
    return os.str();
}

// Cycle counts over all permutations of {1..n}, by exhaustive generation.
std::vector<long long> permutation_cycle_counts(int n) {
    std::vector<long long> counts(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<char> seen(static_cast<std::size_t>(n));
    do {
        std::fill(seen.begin(), seen.end(), 0);
        int cycles = 0;
        for (int i = 0; i < n; ++i) {
            if (seen[static_cast<std::size_t>(i)]) continue;
            ++cycles;
            for (int j = i; !seen[static_cast<std::size_t>(j)]; j = perm[static_cast<std::size_t>(j)])
                seen[static_cast<std::size_t>(j)] = 1;
        }
        ++counts[static_cast<std::size_t>(cycles)];
    } while (std::next_permutation(perm.begin(), perm.end()));
    return counts;
}

bool wants(const VerifyOptions& options, std::string_view name) {
    return options.only.empty() || name.find(options.only) != std::string_view::npos;
}

}  // namespace

IdentityReport verify_all(Region region, const VerifyOptions& options) {
    IdentityReport report;
    StirlingTable table = build_table(region);
    if (options.inject_fault) {
        const int n = (region.n_min + region.n_max) / 2;
        const int k = region.k_max / 2;
        table.set_cell(n, k, table.cell(n, k) + 1);
    }

    std::ostringstream region_label;
    region_label << "n in [" << region.n_min << "," << region.n_max << "], k in [0,"
                 << region.k_max << "]";

    if (wants(options, "five-way-agreement")) {
        Checker checker("five-way-agreement", region_label.str());
        for (int n = region.n_min; n <= region.n_max; ++n) {
            const auto defn = defn_coeffs(n, region.k_max);
            for (int k = 0; k <= region.k_max; ++k) {
                const Rational& expected = table.cell(n, k);
                auto compare = [&](const Rational& got, const char* route) {
                    checker.check(got == expected,
                                  [&] { return cell_witness(n, k, expected, got, route); });
                };
                compare(defn[static_cast<std::size_t>(k)], "defn");
                compare(symfunc_route(n, k), "symfunc");
                if (n <= 0 && !(n == 0 && k == 0)) compare(knuth_neg(-n, k), "knuth");
                if (n <= 0) compare(partition_sum_neg(-n, k, NegVariant::Bounded),
                                    "partition/bounded");
                if (n < 0) {
                    compare(partition_sum_neg(-n, k, NegVariant::LargestPart),
                            "partition/largest-part");
                    compare(partition_sum_neg(-n, k, NegVariant::Composition),
                            "partition/composition");
                }
                if (n > 0) {
                    compare(partition_sum_pos(n, k, PosVariant::Reciprocal),
                            "partition/reciprocal");
                    compare(partition_sum_pos(n, k, PosVariant::Product), "partition/product");
                    compare(partition_sum_pos(n, k, PosVariant::LargestPart),
                            "partition/largest-part");
                    compare(partition_sum_pos(n, k, PosVariant::CycleType),
                            "partition/cycle-type");
                }
            }
        }
        report.results.push_back(checker.take());
    }

    if (wants(options, "recurrence-identity")) {
        Checker checker("recurrence-identity", region_label.str());
        for (int n = region.n_min; n < region.n_max; ++n)
            for (int k = 1; k <= region.k_max; ++k) {
                const Rational lhs = table.cell(n + 1, k);
                const Rational rhs = table.cell(n, k - 1) - Rational(n) * table.cell(n, k);
                checker.check(lhs == rhs, [&] {
                    return cell_witness(n + 1, k, rhs, lhs, "recurrence");
                });
            }
        report.results.push_back(checker.take());
    }

    if (wants(options, "zero-pattern")) {
        Checker checker("zero-pattern", region_label.str());
        for (int n = region.n_min; n <= region.n_max; ++n)
            for (int k = 0; k <= region.k_max; ++k) {
                // Nonnegative degrees vanish above the diagonal and, for
                // positive degree, at order 0; negative degrees never vanish.
                const bool should_be_zero = (k > n && n >= 0) || (k == 0 && n > 0);
                const bool is_zero = table.cell(n, k) == 0;
                checker.check(is_zero == should_be_zero, [&] {
                    std::ostringstream os;
                    os << "s(" << n << "," << k << ") = " << format_rational(table.cell(n, k))
                       << (should_be_zero ? " should be zero" : " should be nonzero");
                    return os.str();
                });
            }
        report.results.push_back(checker.take());
    }

    if (wants(options, "permutation-oracle")) {
        const int n_top = std::min(options.permutation_n_max, region.n_max);
        Checker checker("permutation-oracle",
                        "n in [1," + std::to_string(n_top) + "], all k");
        for (int n = 1; n <= n_top; ++n) {
            const auto counts = permutation_cycle_counts(n);
            for (int k = 0; k <= region.k_max; ++k) {
                const Rational expected =
                    (k <= n) ? Rational(counts[static_cast<std::size_t>(k)]) : Rational(0);
                const Rational got = abs(table.cell(n, k));
                checker.check(got == expected, [&] {
                    return cell_witness(n, k, expected, got, "|s| vs cycle count");
                });
            }
        }
        report.results.push_back(checker.take());
    }

    if (wants(options, "harmonic-nested")) {
        Checker checker("harmonic-nested",
                        "r in [1,3], n in [1," + std::to_string(options.harmonic_n_max) + "]");
        for (int r = 1; r <= 3; ++r)
            for (int n = 1; n <= options.harmonic_n_max; ++n) {
                const Rational lhs =
                    Rational(factorial(static_cast<unsigned>(n))) * knuth_neg(n, r);
                const Rational rhs = sign_pow(r) * nested_harmonic(n, r);
                checker.check(lhs == rhs, [&] {
                    std::ostringstream os;
                    os << "n!*s(-" << n << "," << r << ") = " << format_rational(lhs)
                       << " but (-1)^r T_r(n) = " << format_rational(rhs);
                    return os.str();
                });
            }
        report.results.push_back(checker.take());
    }

    if (wants(options, "harmonic-positive-order2")) {
        Checker checker("harmonic-positive-order2",
                        "n in [2," + std::to_string(options.harmonic_n_max) + "]");
        for (int n = 2; n <= options.harmonic_n_max; ++n) {
            const Rational lhs = defn_coeffs(n, 2)[2];
            const Rational rhs = sign_pow(n) *
                                 Rational(factorial(static_cast<unsigned>(n - 1))) *
                                 harmonic_number(n - 1);
            checker.check(lhs == rhs, [&] {
                return cell_witness(n, 2, rhs, lhs, "harmonic order-2");
            });
        }
        report.results.push_back(checker.take());
    }

    if (wants(options, "duality")) {
        Checker checker("duality",
                        "n, k in [1," + std::to_string(options.duality_max) + "]");
        for (int n = 1; n <= options.duality_max; ++n)
            for (int k = 1; k <= options.duality_max; ++k)
                checker.check(duality_holds(n, k), [&] {
                    std::ostringstream os;
                    os << "S(" << k << "," << n << ") != (-1)^(n+k+1) s(-" << n << ",-" << k
                       << ")";
                    return os.str();
                });
        report.results.push_back(checker.take());
    }

    if (wants(options, "alternating-sum")) {
        Checker checker("alternating-sum",
                        "n in [1," + std::to_string(options.alternating_n_max) + "]");
        for (int n = 1; n <= options.alternating_n_max; ++n) {
            const Rational lhs = alternating_sum(n);
            const Rational rhs = sign_pow(n) * Rational(factorial(static_cast<unsigned>(n)));
            checker.check(lhs == rhs, [&] {
                std::ostringstream os;
                os << "sum_k (-1)^k s(" << n << ",k) = " << format_rational(lhs)
                   << ", expected " << format_rational(rhs);
                return os.str();
            });
        }
        report.results.push_back(checker.take());
    }

    if (wants(options, "row-generating")) {
        const int n_top = std::min({10, region.n_max, region.k_max});
        Checker checker("row-generating", "n in [1," + std::to_string(n_top) + "]");
        for (int n = 1; n <= n_top; ++n) {
            // Horner evaluation of the table row at y = -1.
            Rational acc = 0;
            for (int k = n; k >= 0; --k) acc = -acc + table.cell(n, k);
            const Rational rhs = sign_pow(n) * Rational(factorial(static_cast<unsigned>(n)));
            checker.check(acc == rhs, [&] {
                std::ostringstream os;
                os << "row " << n << " at y=-1 gave " << format_rational(acc) << ", expected "
                   << format_rational(rhs);
                return os.str();
            });
        }
        report.results.push_back(checker.take());
    }

    if (wants(options, "tail-limit")) {
        Checker checker("tail-limit",
                        "m in [1," + std::to_string(options.tail_m_max) + "], k up to " +
                            std::to_string(options.tail_k_max));
        for (int m = 1; m <= options.tail_m_max; ++m) {
            const auto tail = tail_limit_check(m, options.tail_k_max, options.tail_tol);
            const bool ok = tail.signs_alternate && tail.magnitudes_nondecreasing &&
                            tail.bounded_by_one && tail.gap_within_tol;
            checker.check(ok, [&] {
                std::ostringstream os;
                os << "column -" << m << ": signs=" << tail.signs_alternate
                   << " monotone=" << tail.magnitudes_nondecreasing
                   << " bounded=" << tail.bounded_by_one << " gap=" << tail.gap;
                return os.str();
            });
        }
        report.results.push_back(checker.take());
    }

    return report;
}

}  // namespace gstirling
