#include "gstirling/partitions.hpp"
#include "gstirling/realdeg.hpp"
#include "gstirling/stirling.hpp"
#include "gstirling/table_io.hpp"
#include "gstirling/version.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace gstirling;

namespace {

Method method_or_throw(const std::string& name) {
    const auto m = method_from_name(name);
    if (!m) throw std::invalid_argument("unknown method '" + name + "'");
    return *m;
}

NegVariant neg_variant(const std::string& name) {
    if (name == "bounded") return NegVariant::Bounded;
    if (name == "largest-part") return NegVariant::LargestPart;
    if (name == "composition") return NegVariant::Composition;
    throw std::invalid_argument("unknown negative-degree variant '" + name + "'");
}

PosVariant pos_variant(const std::string& name) {
    if (name == "reciprocal") return PosVariant::Reciprocal;
    if (name == "product") return PosVariant::Product;
    if (name == "largest-part") return PosVariant::LargestPart;
    if (name == "cycle-type") return PosVariant::CycleType;
    throw std::invalid_argument("unknown positive-degree variant '" + name + "'");
}

SymArgs parse_args(const std::vector<std::string>& xs) {
    SymArgs out;
    out.reserve(xs.size());
    for (const auto& x : xs) out.push_back(parse_rational(x));
    return out;
}

std::vector<std::string> format_all(const std::vector<Rational>& values) {
    std::vector<std::string> out;
    out.reserve(values.size());
    for (const auto& v : values) out.push_back(format_rational(v));
    return out;
}

Rational eval_exact_impl(int n, int k, const std::string& method_name_str) {
    switch (method_or_throw(method_name_str)) {
        case Method::Recurrence:
            return build_table({std::min(n, 0), std::max(n, 0), k}).cell(n, k);
        case Method::Definition:
            return defn_coeffs(n, k)[static_cast<std::size_t>(k)];
        case Method::Knuth:
            if (n > 0)
                throw std::domain_error("the finite binomial sum applies to degrees <= 0 only");
            return knuth_neg(-n, k);
        case Method::PartitionSum:
            return n > 0 ? partition_sum_pos(n, k, PosVariant::Product)
                         : partition_sum_neg(-n, k, NegVariant::Bounded);
        case Method::SymFunc:
            return symfunc_route(n, k);
    }
    throw std::invalid_argument("unsupported method");
}

py::int_ bigint_to_py(const BigInt& value) {
    const std::string digits = value.str();
    PyObject* obj = PyLong_FromString(digits.c_str(), nullptr, 10);
    if (!obj) throw py::error_already_set();
    return py::reinterpret_steal<py::int_>(obj);
}

template <typename Stream>
std::vector<std::vector<int>> collect_parts(Stream stream) {
    std::vector<std::vector<int>> out;
    while (auto p = stream.next()) out.push_back(p->parts());
    return out;
}

py::dict result_to_dict(const IdentityResult& r) {
    py::dict d;
    d["name"] = r.name;
    d["range"] = r.range;
    d["checked"] = r.checked;
    d["failures"] = r.failures;
    d["passed"] = r.passed();
    if (!r.passed()) d["first_counterexample"] = r.first_counterexample;
    return d;
}

}  // namespace

PYBIND11_MODULE(_gstirling, m) {
    m.doc() = "Exact generalized Stirling numbers of the first kind";
    m.attr("__version__") = GSTIRLING_VERSION;

    m.def(
        "eval_exact",
        [](int n, int k, const std::string& method) {
            return format_rational(eval_exact_impl(n, k, method));
        },
        py::arg("n"), py::arg("k"), py::arg("method") = "recurrence",
        "Exact s(n,k) for integer degree, as a 'p/q' string.");

    m.def(
        "eval_real",
        [](double a, int k) {
            return lower_factorial_series(a, k)[static_cast<std::size_t>(k)];
        },
        py::arg("a"), py::arg("k"), "Float s(a,k) for non-integer real degree.");

    m.def(
        "defn_coeffs",
        [](int n, int k_max) { return format_all(defn_coeffs(n, k_max)); },
        py::arg("n"), py::arg("k_max"));

    m.def(
        "table_cells",
        [](int n_min, int n_max, int k_max) {
            const StirlingTable table = build_table({n_min, n_max, k_max});
            std::vector<std::tuple<int, int, std::string>> cells;
            for (int n = n_min; n <= n_max; ++n)
                for (int k = 0; k <= k_max; ++k)
                    cells.emplace_back(n, k, format_rational(table.cell(n, k)));
            return cells;
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("k_max"),
        "All cells of the recurrence table as (n, k, 'p/q') tuples.");

    m.def(
        "native_table",
        [](int n_min, int n_max, int k_max, const std::string& created) {
            TableFile file{"1", created.empty() ? iso8601_utc_now() : created,
                           build_table({n_min, n_max, k_max})};
            return print_native(file);
        },
        py::arg("n_min"), py::arg("n_max"), py::arg("k_max"), py::arg("created") = "");

    m.def(
        "knuth",
        [](int m_deg, int k) { return format_rational(knuth_neg(m_deg, k)); },
        py::arg("m"), py::arg("k"), "s(-m,k) by the finite binomial sum.");

    m.def(
        "partition_sum_neg",
        [](int m_deg, int k, const std::string& variant) {
            return format_rational(partition_sum_neg(m_deg, k, neg_variant(variant)));
        },
        py::arg("m"), py::arg("k"), py::arg("variant") = "bounded");

    m.def(
        "partition_sum_pos",
        [](int n, int k, const std::string& variant) {
            return format_rational(partition_sum_pos(n, k, pos_variant(variant)));
        },
        py::arg("n"), py::arg("k"), py::arg("variant") = "product");

    m.def(
        "symfunc_route",
        [](int n, int k) { return format_rational(symfunc_route(n, k)); },
        py::arg("n"), py::arg("k"));

    m.def(
        "stirling2", [](int k, int n) { return bigint_to_py(stirling2(k, n)); },
        py::arg("k"), py::arg("n"), "Second-kind number S(k,n).");

    m.def(
        "nested_harmonic",
        [](int n, int r) { return format_rational(nested_harmonic(n, r)); },
        py::arg("n"), py::arg("r"), "T_r(n), the r-fold nested partial harmonic sum.");

    m.def(
        "alternating_sum",
        [](int n) { return format_rational(alternating_sum(n)); },
        py::arg("n"));

    m.def(
        "complete_h",
        [](int k, const std::vector<std::string>& xs) {
            return format_rational(complete_h(k, parse_args(xs)));
        },
        py::arg("k"), py::arg("xs"));

    m.def(
        "elementary_e",
        [](int k, const std::vector<std::string>& xs) {
            return format_rational(elementary_e(k, parse_args(xs)));
        },
        py::arg("k"), py::arg("xs"));

    m.def(
        "genfunc_h_coeffs",
        [](const std::vector<std::string>& xs, int k_max) {
            return format_all(genfunc_h_coeffs(parse_args(xs), k_max));
        },
        py::arg("xs"), py::arg("k_max"));

    m.def(
        "genfunc_e_coeffs",
        [](const std::vector<std::string>& xs, int k_max) {
            return format_all(genfunc_e_coeffs(parse_args(xs), k_max));
        },
        py::arg("xs"), py::arg("k_max"));

    m.def(
        "enum_bounded",
        [](int k_parts, int max_part) { return collect_parts(enum_bounded(k_parts, max_part)); },
        py::arg("k_parts"), py::arg("max_part"));

    m.def(
        "enum_distinct_below",
        [](int k_parts, int bound) { return collect_parts(enum_distinct_below(k_parts, bound)); },
        py::arg("k_parts"), py::arg("bound"));

    m.def(
        "enum_weight",
        [](int n, int k_parts) { return collect_parts(enum_weight(n, k_parts)); },
        py::arg("n"), py::arg("k_parts"));

    m.def(
        "enum_compositions",
        [](int slots, int total) {
            std::vector<std::vector<int>> out;
            auto stream = enum_compositions(slots, total);
            while (auto c = stream.next()) out.push_back(c->entries());
            return out;
        },
        py::arg("slots"), py::arg("total"));

    m.def("polygamma", &polygamma, py::arg("order"), py::arg("x"));

    m.def("lower_factorial_series", &lower_factorial_series, py::arg("a"), py::arg("k_max"));

    m.def(
        "real_identity_checks",
        [](double a, int k_max, double tol) {
            const auto report = real_identity_checks(a, k_max, tol);
            py::dict d;
            d["degree"] = report.degree;
            d["max_recurrence_residual"] = report.max_recurrence_residual;
            d["recurrence_ok"] = report.recurrence_ok;
            if (report.max_exact_deviation)
                d["max_exact_deviation"] = *report.max_exact_deviation;
            d["passed"] = report.passed;
            return d;
        },
        py::arg("a"), py::arg("k_max"), py::arg("tol") = 1e-8);

    m.def(
        "verify",
        [](int n_min, int n_max, int k_max, const std::string& only) {
            VerifyOptions options;
            options.only = only;
            const IdentityReport report = verify_all({n_min, n_max, k_max}, options);
            py::list results;
            for (const auto& r : report.results) results.append(result_to_dict(r));
            return py::make_tuple(report.all_passed(), results);
        },
        py::arg("n_min") = -8, py::arg("n_max") = 8, py::arg("k_max") = 12,
        py::arg("only") = "",
        "Run the identity suite; returns (all_passed, [per-identity dicts]).");
}
