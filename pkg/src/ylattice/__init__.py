"""Exact arithmetic for intervals in Young's lattice.

Rank generating polynomials of partition intervals, their multivariate
generating series with a rational recursion, and the exact first-order
growth constants of average interval sizes.
"""

from .partitions import (
    EMPTY,
    Partition,
    SkewInterval,
    catalan,
    contains,
    decompose_staircase_interval,
    enumerate_interval,
    enumerate_partitions,
    enumerate_staircase_interval,
    interval_split_bottom,
    interval_split_top,
    rho,
    slice_at,
    staircase_block_bounds,
    staircase_concat,
    staircase_rectangle,
)
from .rankpoly import (
    YPoly,
    filled_prefix_expansion,
    gaussian_poly,
    interval_count,
    poincare_poly,
    rank_gen_poly,
    skew_interval_count,
)
from .series import (
    MultiSeries,
    closed_form_series,
    dk_product_check,
    geometric_factor,
    partition_monomial_series,
    prefix_monomial,
    qk_direct,
    qk_recursive,
    qk_substituted,
    qk_xm,
    specialize_y0,
    verify_xm_recursion,
)
from .counts import (
    A_kn,
    A_le_kn,
    C_kn,
    b_direct,
    b_recursive,
    c_kn,
    convergence_table,
    falling_factorial,
    fraction_str,
    g_k,
)

__version__ = "0.1.0"
