#include "gstirling/table_io.hpp"

#include <json.hpp>

#include <charconv>
#include <chrono>
#include <ctime>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace gstirling {

namespace {

constexpr std::string_view kMagic = "gstirling-table";

int parse_int(std::string_view s, const char* what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw std::invalid_argument(std::string("malformed ") + what + ": '" +
                                    std::string(s) + "'");
    return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        const auto pos = s.find(sep);
        if (pos == std::string_view::npos) {
            out.push_back(s);
            return out;
        }
        out.push_back(s.substr(0, pos));
        s.remove_prefix(pos + 1);
    }
}

}  // namespace

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string format_region(const Region& region) {
    std::ostringstream os;
    os << region.n_min << ':' << region.n_max << ':' << region.k_max;
    return os.str();
}

Region parse_region(std::string_view text) {
    const auto parts = split(text, ':');
    if (parts.size() != 3)
        throw std::invalid_argument("region must be n_min:n_max:k_max, got '" +
                                    std::string(text) + "'");
    Region region{parse_int(parts[0], "region bound"), parse_int(parts[1], "region bound"),
                  parse_int(parts[2], "region bound")};
    if (region.n_min > region.n_max || region.k_max < 0)
        throw std::invalid_argument("empty region '" + std::string(text) + "'");
    return region;
}

std::string print_native(const TableFile& file) {
    const Region& region = file.table.region();
    std::ostringstream os;
    os << kMagic << ' ' << file.format_version << '\n';
    os << "region " << format_region(region) << '\n';
    os << "method " << method_name(file.table.method()) << '\n';
    os << "created " << file.created << '\n';
    for (int n = region.n_min; n <= region.n_max; ++n)
        for (int k = 0; k <= region.k_max; ++k)
            os << n << ',' << k << ',' << format_rational(file.table.cell(n, k)) << '\n';
    return os.str();
}

TableFile parse_native(std::string_view text) {
    std::vector<std::string_view> lines;
    while (!text.empty()) {
        const auto pos = text.find('\n');
        if (pos == std::string_view::npos) {
            if (!text.empty()) throw std::invalid_argument("native table: missing final newline");
            break;
        }
        lines.push_back(text.substr(0, pos));
        text.remove_prefix(pos + 1);
    }
    if (lines.size() < 4) throw std::invalid_argument("native table: truncated header");

    auto header_value = [&](std::size_t idx, std::string_view key) {
        const std::string_view line = lines[idx];
        if (line.substr(0, key.size()) != key || line.size() <= key.size() ||
            line[key.size()] != ' ')
            throw std::invalid_argument("native table: expected '" + std::string(key) +
                                        "' header line");
        return line.substr(key.size() + 1);
    };

    const std::string_view version = header_value(0, kMagic);
    if (version != "1")
        throw std::invalid_argument("native table: unsupported format version '" +
                                    std::string(version) + "'");
    const Region region = parse_region(header_value(1, "region"));
    const auto method = method_from_name(header_value(2, "method"));
    if (!method)
        throw std::invalid_argument("native table: unknown method");
    const std::string_view created = header_value(3, "created");

    if (lines.size() - 4 != static_cast<std::size_t>(region.cell_count()))
        throw std::invalid_argument("native table: cell count does not match region");

    TableFile file{std::string(version), std::string(created),
                   StirlingTable(region, *method)};
    std::size_t row = 4;
    for (int n = region.n_min; n <= region.n_max; ++n)
        for (int k = 0; k <= region.k_max; ++k, ++row) {
            const auto fields = split(lines[row], ',');
            if (fields.size() != 3)
                throw std::invalid_argument("native table: malformed cell row '" +
                                            std::string(lines[row]) + "'");
            if (parse_int(fields[0], "cell degree") != n ||
                parse_int(fields[1], "cell order") != k)
                throw std::invalid_argument("native table: cell out of order at row " +
                                            std::to_string(row));
            file.table.set_cell(n, k, parse_rational(fields[2]));
        }
    return file;
}

std::string print_csv(const StirlingTable& table) {
    const Region& region = table.region();
    std::ostringstream os;
    for (int n = region.n_min; n <= region.n_max; ++n)
        for (int k = 0; k <= region.k_max; ++k)
            os << n << ',' << k << ',' << format_rational(table.cell(n, k)) << '\n';
    return os.str();
}

std::string print_json(const StirlingTable& table) {
    const Region& region = table.region();
    nlohmann::ordered_json doc;
    doc["format"] = std::string(kMagic);
    doc["version"] = 1;
    doc["region"] = {{"n_min", region.n_min}, {"n_max", region.n_max}, {"k_max", region.k_max}};
    doc["method"] = method_name(table.method());
    auto& cells = doc["cells"] = nlohmann::ordered_json::array();
    for (int n = region.n_min; n <= region.n_max; ++n)
        for (int k = 0; k <= region.k_max; ++k)
            cells.push_back({{"n", n}, {"k", k}, {"value", format_rational(table.cell(n, k))}});
    return doc.dump(2) + "\n";
}

namespace {

std::string group_thousands(std::string digits) {
    std::string out;
    const std::size_t len = digits.size();
    for (std::size_t i = 0; i < len; ++i) {
        if (i > 0 && (len - i) % 3 == 0) out += ',';
        out += digits[i];
    }
    return out;
}

// Sign outside the fraction, integers printed plain.
std::string latex_cell(const Rational& value, bool group_digits) {
    const bool negative = value < 0;
    const Rational mag = negative ? -value : value;
    std::string num = numerator(mag).str();
    std::string body;
    if (denominator(mag) == 1) {
        body = group_digits ? group_thousands(num) : num;
    } else {
        std::string den = denominator(mag).str();
        if (group_digits) {
            num = group_thousands(num);
            den = group_thousands(den);
        }
        body = "\\frac{" + num + "}{" + den + "}";
    }
    std::string cell = negative ? "-" + body : body;
    return "$" + cell + "$";
}

}  // namespace

std::string print_latex(const StirlingTable& table, bool group_digits) {
    const Region& region = table.region();
    std::ostringstream os;
    os << "\\begin{tabular}{c|";
    for (int n = region.n_min; n <= region.n_max; ++n) os << 'r';
    os << "}\n";
    os << "$k \\backslash n$";
    for (int n = region.n_min; n <= region.n_max; ++n) os << " & $" << n << "$";
    os << " \\\\\n\\hline\n";
    for (int k = 0; k <= region.k_max; ++k) {
        os << k;
        for (int n = region.n_min; n <= region.n_max; ++n)
            os << " & " << latex_cell(table.cell(n, k), group_digits);
        os << " \\\\\n";
    }
    os << "\\end{tabular}\n";
    return os.str();
}

}  // namespace gstirling
