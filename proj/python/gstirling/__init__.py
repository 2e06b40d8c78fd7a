"""Exact generalized Stirling numbers of the first kind.

Thin wrapper over the C++ extension: exact values come back as
`fractions.Fraction`, floats stay floats.
"""

from fractions import Fraction

try:
    from . import _gstirling as _ext
except ImportError:  # development layout: extension on sys.path, not in-package
    import _gstirling as _ext

__version__ = _ext.__version__

eval_real = _ext.eval_real
polygamma = _ext.polygamma
lower_factorial_series = _ext.lower_factorial_series
real_identity_checks = _ext.real_identity_checks
enum_bounded = _ext.enum_bounded
enum_distinct_below = _ext.enum_distinct_below
enum_weight = _ext.enum_weight
enum_compositions = _ext.enum_compositions
stirling2 = _ext.stirling2
verify = _ext.verify
native_table = _ext.native_table


def eval_exact(n, k, method="recurrence"):
    return Fraction(_ext.eval_exact(n, k, method))


def defn_coeffs(n, k_max):
    return [Fraction(c) for c in _ext.defn_coeffs(n, k_max)]


def table_cells(n_min, n_max, k_max):
    return [(n, k, Fraction(v)) for n, k, v in _ext.table_cells(n_min, n_max, k_max)]


def knuth(m, k):
    return Fraction(_ext.knuth(m, k))


def partition_sum_neg(m, k, variant="bounded"):
    return Fraction(_ext.partition_sum_neg(m, k, variant))


def partition_sum_pos(n, k, variant="product"):
    return Fraction(_ext.partition_sum_pos(n, k, variant))


def symfunc_route(n, k):
    return Fraction(_ext.symfunc_route(n, k))


def nested_harmonic(n, r):
    return Fraction(_ext.nested_harmonic(n, r))


def alternating_sum(n):
    return Fraction(_ext.alternating_sum(n))


def complete_h(k, xs):
    return Fraction(_ext.complete_h(k, [_arg(x) for x in xs]))


def elementary_e(k, xs):
    return Fraction(_ext.elementary_e(k, [_arg(x) for x in xs]))


def genfunc_h_coeffs(xs, k_max):
    return [Fraction(c) for c in _ext.genfunc_h_coeffs([_arg(x) for x in xs], k_max)]


def genfunc_e_coeffs(xs, k_max):
    return [Fraction(c) for c in _ext.genfunc_e_coeffs([_arg(x) for x in xs], k_max)]


def _arg(x):
    if isinstance(x, Fraction):
        return f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return str(x)
    if isinstance(x, str):
        return x
    raise TypeError(f"symmetric-function arguments must be Fraction, int or str, got {type(x)!r}")
