// gstirling: exact generalized Stirling numbers of the first kind, all
// integer degrees, plus a float path for real degree. Subcommands: eval,
// table, verify, bench.

#include "gstirling/realdeg.hpp"
#include "gstirling/stirling.hpp"
#include "gstirling/table_io.hpp"
#include "gstirling/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace gstirling;

constexpr int kExitVerifyFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;

// Partition sums above this order are served by the recurrence instead;
// the enumeration count grows superpolynomially in k.
constexpr int kPartitionOrderCeiling = 24;

void enforce_region_limits(const Region& region) {
    if (region.n_min < -500 || region.n_max > 500 || region.k_max > 1000)
        throw std::invalid_argument("region limit exceeded: |n| <= 500, k <= 1000");
    if (const char* cap_text = std::getenv("GSTIRLING_MAX_REGION")) {
        long long cap = 0;
        const std::string_view sv(cap_text);
        const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), cap);
        if (ec != std::errc() || ptr != sv.data() + sv.size())
            throw std::invalid_argument("GSTIRLING_MAX_REGION must be an integer cell count");
        if (region.cell_count() > cap)
            throw std::invalid_argument("region limit exceeded: GSTIRLING_MAX_REGION=" +
                                        std::string(cap_text));
    }
}

std::optional<long long> parse_integer_degree(const std::string& text) {
    long long value = 0;
    std::string_view sv(text);
    if (!sv.empty() && sv.front() == '+') sv.remove_prefix(1);
    const auto [ptr, ec] = std::from_chars(sv.data(), sv.data() + sv.size(), value);
    if (ec == std::errc() && ptr == sv.data() + sv.size()) return value;
    return std::nullopt;
}

Rational eval_exact_cell(int n, int k, Method method) {
    switch (method) {
        case Method::Recurrence:
            return build_table({std::min(n, 0), std::max(n, 0), k}).cell(n, k);
        case Method::Definition:
            return defn_coeffs(n, k)[static_cast<std::size_t>(k)];
        case Method::Knuth:
            if (n > 0)
                throw std::domain_error(
                    "the finite binomial sum applies to degrees <= 0 only");
            return knuth_neg(-n, k);
        case Method::PartitionSum:
            if (n > 0) return partition_sum_pos(n, k, PosVariant::Product);
            return partition_sum_neg(-n, k, NegVariant::Bounded);
        case Method::SymFunc:
            return symfunc_route(n, k);
    }
    throw std::invalid_argument("unsupported method");
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + out_path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + out_path);
}

// --- eval -------------------------------------------------------------------

struct EvalArgs {
    std::string degree;
    int order = 0;
    std::string method;
};

int run_eval(const EvalArgs& args) {
    Method method = Method::Recurrence;
    bool method_given = !args.method.empty();
    bool real_requested = args.method == "real";
    if (method_given && !real_requested) {
        const auto m = method_from_name(args.method);
        if (!m) throw std::invalid_argument("unknown method '" + args.method + "'");
        method = *m;
    }

    if (const auto n = parse_integer_degree(args.degree)) {
        if (real_requested)
            throw std::domain_error("the real-degree path requires a non-integer degree");
        std::cout << format_rational(eval_exact_cell(static_cast<int>(*n), args.order, method))
                  << '\n';
        return 0;
    }

    double a = 0.0;
    try {
        std::size_t used = 0;
        a = std::stod(args.degree, &used);
        if (used != args.degree.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
        throw std::invalid_argument("degree must be an integer or a real number, got '" +
                                    args.degree + "'");
    }

    if (is_near_integer(a)) {
        // Integer in float clothing: the exact path is forced.
        if (real_requested)
            throw std::domain_error("the real-degree path requires a non-integer degree");
        const int n = static_cast<int>(std::llround(a));
        std::cout << format_rational(eval_exact_cell(n, args.order, method)) << '\n';
        return 0;
    }

    if (method_given && !real_requested)
        throw std::domain_error("method '" + args.method +
                                "' is exact-only; non-integer degrees use --method real");
    const auto series = lower_factorial_series(a, args.order);
    std::cout << format_double(series[static_cast<std::size_t>(args.order)]) << '\n';
    return 0;
}

// --- table ------------------------------------------------------------------

struct TableArgs {
    std::string region = "-5:5:6";
    std::string format = "csv";
    std::string method = "recurrence";
    std::string out;
    std::string created;
    bool group_digits = false;
};

StirlingTable build_table_by_method(const Region& region, Method method) {
    switch (method) {
        case Method::Recurrence:
            return build_table(region);
        case Method::Definition: {
            StirlingTable table(region, Method::Definition);
            for (int n = region.n_min; n <= region.n_max; ++n) {
                const auto row = defn_coeffs(n, region.k_max);
                for (int k = 0; k <= region.k_max; ++k)
                    table.set_cell(n, k, row[static_cast<std::size_t>(k)]);
            }
            return table;
        }
        case Method::Knuth: {
            if (region.n_max > 0)
                throw std::domain_error("knuth tables cover degrees <= 0 only");
            StirlingTable table(region, Method::Knuth);
            for (int n = region.n_min; n <= region.n_max; ++n)
                for (int k = 0; k <= region.k_max; ++k)
                    table.set_cell(n, k, (n == 0 && k == 0) ? Rational(1)  // the delta seed
                                                            : knuth_neg(-n, k));
            return table;
        }
        case Method::PartitionSum: {
            if (region.k_max > kPartitionOrderCeiling) {
                std::cerr << "note: order above " << kPartitionOrderCeiling
                          << "; routing to the recurrence table\n";
                return build_table(region);
            }
            StirlingTable table(region, Method::PartitionSum);
            for (int n = region.n_min; n <= region.n_max; ++n)
                for (int k = 0; k <= region.k_max; ++k)
                    table.set_cell(n, k,
                                   n > 0 ? partition_sum_pos(n, k, PosVariant::Product)
                                         : partition_sum_neg(-n, k, NegVariant::Bounded));
            return table;
        }
        case Method::SymFunc: {
            StirlingTable table(region, Method::SymFunc);
            for (int n = region.n_min; n <= region.n_max; ++n)
                for (int k = 0; k <= region.k_max; ++k)
                    table.set_cell(n, k, symfunc_route(n, k));
            return table;
        }
    }
    throw std::invalid_argument("unsupported method");
}

int run_table(const TableArgs& args) {
    const Region region = parse_region(args.region);
    enforce_region_limits(region);
    const auto method = method_from_name(args.method);
    if (!method) throw std::invalid_argument("unknown method '" + args.method + "'");

    const StirlingTable table = build_table_by_method(region, *method);
    std::string text;
    if (args.format == "csv") {
        text = print_csv(table);
    } else if (args.format == "json") {
        text = print_json(table);
    } else if (args.format == "latex") {
        text = print_latex(table, args.group_digits);
    } else if (args.format == "native") {
        TableFile file{"1", args.created.empty() ? iso8601_utc_now() : args.created, table};
        text = print_native(file);
    } else {
        throw std::invalid_argument("unknown format '" + args.format + "'");
    }
    write_output(text, args.out);
    return 0;
}

// --- verify -----------------------------------------------------------------

struct VerifyArgs {
    std::string region = "-8:8:12";
    double tol = 1e-8;
    std::string only;
    std::string format = "text";
    int harmonic_n_max = 20;
    bool inject_fault = false;
};

int run_verify(const VerifyArgs& args) {
    const Region region = parse_region(args.region);
    enforce_region_limits(region);

    VerifyOptions options;
    options.only = args.only;
    options.harmonic_n_max = args.harmonic_n_max;
    options.inject_fault = args.inject_fault;
    IdentityReport report = verify_all(region, options);

    auto wanted = [&](std::string_view name) {
        return args.only.empty() || name.find(args.only) != std::string_view::npos;
    };
    if (wanted("real-recurrence-residual"))
        report.results.push_back(real_recurrence_suite(args.tol));
    if (wanted("real-continuity")) report.results.push_back(real_continuity_suite());

    if (args.format == "json") {
        nlohmann::ordered_json doc;
        doc["region"] = format_region(region);
        doc["all_passed"] = report.all_passed();
        auto& results = doc["results"] = nlohmann::ordered_json::array();
        for (const auto& r : report.results) {
            nlohmann::ordered_json entry{{"name", r.name},
                                         {"range", r.range},
                                         {"checked", r.checked},
                                         {"failures", r.failures},
                                         {"passed", r.passed()}};
            if (!r.passed()) entry["first_counterexample"] = r.first_counterexample;
            results.push_back(std::move(entry));
        }
        std::cout << doc.dump(2) << '\n';
    } else if (args.format == "text") {
        for (const auto& r : report.results) {
            std::cout << (r.passed() ? "PASS" : "FAIL") << "  " << r.name << "  (" << r.range
                      << ", " << r.checked << " checks)";
            if (!r.passed())
                std::cout << "  first counterexample: " << r.first_counterexample;
            std::cout << '\n';
        }
        std::cout << (report.all_passed() ? "all identities hold\n"
                                          : "verification FAILED\n");
    } else {
        throw std::invalid_argument("unknown report format '" + args.format + "'");
    }
    return report.all_passed() ? 0 : kExitVerifyFailure;
}

// --- bench ------------------------------------------------------------------

struct BenchArgs {
    std::string region = "-10:0:8";
    std::string algorithms = "defn,recurrence,knuth,partition,symfunc";
    int repetitions = 3;
    bool parallel = false;
    std::string out;
};

struct BenchRecord {
    std::string algorithm;
    int n = 0;
    int k = 0;
    double seconds = 0.0;
    long long cells = 1;
};

double time_once(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

int run_bench(const BenchArgs& args) {
    const Region region = parse_region(args.region);
    enforce_region_limits(region);
    if (args.repetitions < 1) throw std::invalid_argument("repetitions must be positive");

    std::vector<std::string> algos;
    {
        std::string token;
        std::istringstream is(args.algorithms);
        while (std::getline(is, token, ',')) {
            if (!method_from_name(token))
                throw std::invalid_argument("unknown algorithm '" + token + "'");
            algos.push_back(token);
        }
        if (algos.empty()) throw std::invalid_argument("no algorithms selected");
    }

    struct Task {
        std::size_t algo_index;
        Method method;
        int n, k;
    };
    std::vector<Task> tasks;
    for (std::size_t ai = 0; ai < algos.size(); ++ai) {
        const Method method = *method_from_name(algos[ai]);
        for (int n = region.n_min; n <= region.n_max; ++n)
            for (int k = 0; k <= region.k_max; ++k) {
                if (method == Method::Knuth && (n > 0 || (n == 0 && k == 0))) continue;
                tasks.push_back({ai, method, n, k});
            }
    }

    std::vector<BenchRecord> records(tasks.size());
    auto run_task = [&](std::size_t i) {
        const Task& task = tasks[i];
        Rational sink;
        double best = 0.0;
        for (int rep = 0; rep < args.repetitions; ++rep) {
            const double secs =
                time_once([&] { sink = eval_exact_cell(task.n, task.k, task.method); });
            best = (rep == 0) ? secs : std::min(best, secs);
        }
        const long long cells =
            task.method == Method::Recurrence
                ? static_cast<long long>(std::abs(task.n) + 1) * (task.k + 1)
                : 1;
        records[i] = {algos[task.algo_index], task.n, task.k, best, cells};
    };

    if (args.parallel) {
        std::atomic<std::size_t> cursor{0};
        const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < tasks.size();
                     i = cursor.fetch_add(1))
                    run_task(i);
            });
        for (auto& t : pool) t.join();
    } else {
        for (std::size_t i = 0; i < tasks.size(); ++i) run_task(i);
    }
    // Task order is already (algorithm, n, k)-sorted; parallel runs only
    // fill slots, so the output order is stable either way.

    std::ostringstream csv;
    csv << "algorithm,n,k,seconds,cells\n";
    for (const auto& r : records) {
        char secs[32];
        std::snprintf(secs, sizeof secs, "%.9e", r.seconds);
        csv << r.algorithm << ',' << r.n << ',' << r.k << ',' << secs << ',' << r.cells
            << '\n';
    }
    write_output(csv.str(), args.out);

    // Crossover frontier between the Knuth sum and the partition enumeration.
    std::map<std::pair<int, int>, double> knuth_time, partition_time;
    for (const auto& r : records) {
        if (r.algorithm == "knuth") knuth_time[{r.n, r.k}] = r.seconds;
        if (r.algorithm == "partition") partition_time[{r.n, r.k}] = r.seconds;
    }
    if (!knuth_time.empty() && !partition_time.empty()) {
        std::ostream& note = args.out.empty() ? std::cerr : std::cout;
        note << "crossover frontier (first order where the partition sum is slower "
                "than the Knuth sum):\n";
        for (int n = region.n_min; n <= std::min(region.n_max, -1); ++n) {
            std::optional<int> frontier;
            for (int k = 0; k <= region.k_max; ++k) {
                const auto kt = knuth_time.find({n, k});
                const auto pt = partition_time.find({n, k});
                if (kt != knuth_time.end() && pt != partition_time.end() &&
                    pt->second > kt->second) {
                    frontier = k;
                    break;
                }
            }
            note << "  degree " << n << ": ";
            if (frontier)
                note << "k = " << *frontier << '\n';
            else
                note << "none within region\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"generalized Stirling numbers of the first kind"};
    app.set_version_flag("--version", GSTIRLING_VERSION);
    app.require_subcommand(1);

    EvalArgs eval_args;
    auto* eval = app.add_subcommand("eval", "evaluate a single s(n,k)");
    eval->add_option("-n,--degree", eval_args.degree, "degree (integer or real)")->required();
    eval->add_option("-k,--order", eval_args.order, "order (nonnegative integer)")
        ->required()
        ->check(CLI::NonNegativeNumber);
    eval->add_option("--method", eval_args.method,
                     "defn|recurrence|knuth|partition|symfunc|real");

    TableArgs table_args;
    auto* table = app.add_subcommand("table", "build and emit a table of s(n,k)");
    table->add_option("--region", table_args.region, "n_min:n_max:k_max");
    table->add_option("--format", table_args.format, "csv|json|latex|native");
    table->add_option("--method", table_args.method, "defn|recurrence|knuth|partition|symfunc");
    table->add_option("--out", table_args.out, "output path (default stdout)");
    table->add_option("--created", table_args.created,
                      "pin the native-format creation stamp (default: now)");
    table->add_flag("--group-digits", table_args.group_digits,
                    "comma-group digits in latex output");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "run the identity-verification suite");
    verify->add_option("--region", verify_args.region, "n_min:n_max:k_max");
    verify->add_option("--tol", verify_args.tol, "tolerance for float checks");
    verify->add_option("--only", verify_args.only, "run identities whose name contains this");
    verify->add_option("--n-max", verify_args.harmonic_n_max,
                       "upper degree for the harmonic identities");
    verify->add_option("--format", verify_args.format, "text|json");
    verify->add_flag("--inject-fault", verify_args.inject_fault,
                     "corrupt one table cell; the suite must report it");

    BenchArgs bench_args;
    auto* bench = app.add_subcommand("bench", "time the algorithms cell by cell");
    bench->add_option("--region", bench_args.region, "n_min:n_max:k_max");
    bench->add_option("--algorithms", bench_args.algorithms, "comma-separated algorithm list");
    bench->add_option("--reps", bench_args.repetitions, "repetitions (minimum is reported)");
    bench->add_flag("--parallel", bench_args.parallel, "time cells concurrently");
    bench->add_option("--out", bench_args.out, "CSV output path (default stdout)");

    int seed = 0;
    app.add_option("--seed", seed, "reserved")->group("");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*eval) return run_eval(eval_args);
        if (*table) return run_table(table_args);
        if (*verify) return run_verify(verify_args);
        if (*bench) return run_bench(bench_args);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitDomain;
    }
    return kExitUsage;
}
