#pragma once

#include "gstirling/stirling.hpp"

#include <string>
#include <string_view>

namespace gstirling {

// Persisted table: versioned header plus one "n,k,p/q" record per cell.
struct TableFile {
    std::string format_version = "1";
    std::string created;  // ISO-8601 UTC stamp, kept verbatim on round trips
    StirlingTable table;

    bool operator==(const TableFile&) const = default;
};

std::string iso8601_utc_now();

std::string format_region(const Region& region);                  // "n_min:n_max:k_max"
Region parse_region(std::string_view text);                       // throws std::invalid_argument

// Line-oriented native cache format. parse(print(t)) == t, byte-exact.
std::string print_native(const TableFile& file);
TableFile parse_native(std::string_view text);  // throws std::invalid_argument

// Headerless "n,k,value" rows, n ascending then k ascending.
std::string print_csv(const StirlingTable& table);

std::string print_json(const StirlingTable& table);

// Tabular layout: one row per order k, one column per degree n.
// group_digits switches on comma grouping inside the fraction parts.
std::string print_latex(const StirlingTable& table, bool group_digits = false);

}  // namespace gstirling
