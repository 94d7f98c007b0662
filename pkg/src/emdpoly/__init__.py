"""Exact arithmetic on the EMD numerator polynomials N_pq(t) and their combinatorial models."""

from .arith import CapExceeded, binomial, factorial
from .partitions import (
    Partition,
    RectBound,
    conjugate,
    enumerate_partitions,
    fits,
    sum_sym_diff,
    sym_diff_size,
)
from .polynomials import (
    IntPoly,
    count_distinct_real_roots,
    eval_at_one,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    la_haye_S,
    n_poly_closed,
    n_poly_recursive,
    n_poly_symdiff,
    subset_symdiff_sum,
    w_poly,
)
from .emd import (
    Composition,
    comp_to_partition,
    emd,
    emd_via_bijection,
    enumerate_compositions,
    expected_emd,
    expected_emd_limit,
    hprime_coeff_bruteforce,
    hprime_coeff_closed,
    series_expand,
)
from .wiener import HasseGraph, build_hasse, wiener_bfs, wiener_formula

__version__ = "0.1.0"
