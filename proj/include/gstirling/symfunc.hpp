#pragma once

#include "gstirling/exact.hpp"

#include <vector>

namespace gstirling {

// Finite specialization point for the symmetric functions.
using SymArgs = std::vector<Rational>;

// Truncated power-series coefficients, index 0..k_max.
using Series = std::vector<Rational>;

// Product of two truncated series, cut at degree k_max.
Series mul_trunc(const Series& a, const Series& b, int k_max);

// Complete homogeneous h_k at xs. h_0 = 1; h_k = 0 for empty xs, k > 0.
// One-variable-at-a-time recurrence, O(k * |xs|).
Rational complete_h(int k, const SymArgs& xs);

// Elementary e_k at xs; 0 when k > |xs|.
Rational elementary_e(int k, const SymArgs& xs);

// Truncations of prod (1 - x y)^-1 resp. prod (1 + x y), the generating
// products of h and e. These expand each factor explicitly and convolve,
// so they double as an independent oracle for the recurrences above.
Series genfunc_h_coeffs(const SymArgs& xs, int k_max);
Series genfunc_e_coeffs(const SymArgs& xs, int k_max);

}  // namespace gstirling
