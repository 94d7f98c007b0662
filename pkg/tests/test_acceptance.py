"""Exit criteria, one test per criterion, each with its runtime budget.

Run ``pytest tests/test_acceptance.py`` (a PASS/FAIL line per criterion is
printed in the terminal summary) or ``python tests/test_acceptance.py``.
"""

import itertools
import time
from fractions import Fraction

import pytest

from emdpoly.arith import binomial
from emdpoly.emd import (
    emd,
    emd_via_bijection,
    enumerate_compositions,
    expected_emd,
    expected_emd_limit,
    hprime_coeff_closed,
    series_expand,
)
from emdpoly.partitions import RectBound, sum_sym_diff
from emdpoly.polynomials import (
    IntPoly,
    eval_at_one,
    is_palindromic,
    is_real_rooted,
    is_unimodal,
    la_haye_S,
    n_poly_closed,
    n_poly_recursive,
    n_poly_symdiff,
    subset_symdiff_sum,
)
from emdpoly.wiener import build_hasse, wiener_bfs, wiener_formula

PRINTED_N = {
    1: (),
    2: (0, 2),
    3: (0, 8, 8),
    4: (0, 20, 56, 20),
    5: (0, 40, 216, 216, 40),
    6: (0, 70, 616, 1188, 616, 70),
    7: (0, 112, 1456, 4576, 4576, 1456, 112),
    8: (0, 168, 3024, 14040, 22880, 14040, 3024, 168),
}
SUBSET_TABLE = {0: 0, 1: 2, 2: 16, 3: 96, 4: 512, 5: 2560, 6: 12288, 7: 57344, 8: 262144}


def criterion_1():
    bad = [n for n, c in PRINTED_N.items() if n_poly_recursive(n, n) != IntPoly(c)]
    return not bad, f"N_1..N_8 mismatches: {bad}"


def criterion_2():
    bad = [(p, q) for p, q in itertools.product(range(1, 7), repeat=2)
           if n_poly_symdiff(p, q) != n_poly_recursive(p, q)]
    n4 = n_poly_symdiff(4, 4).coeffs
    return not bad and n4 == (0, 20, 56, 20), f"mismatches {bad}, N_4 via sums {n4}"


def criterion_3():
    # n_poly_closed raises ArithmeticError on any non-integral coefficient
    bad = [n for n in range(1, 13) if n_poly_closed(n) != n_poly_recursive(n, n)]
    return not bad, f"mismatches {bad}"


def criterion_4():
    bad = [n for n in range(1, 31) if not (is_palindromic(n_poly_closed(n)) and is_unimodal(n_poly_closed(n)))]
    return not bad, f"failures {bad}"


def criterion_5():
    bad = []
    for a, b in itertools.product(range(1, 5), repeat=2):
        triple = (wiener_formula(a, b), wiener_bfs(build_hasse(RectBound(a, b))), sum_sym_diff((a, b), (a, b)))
        if len(set(triple)) != 1:
            bad.append((a, b, triple))
    paper = wiener_bfs(build_hasse(RectBound(1, 3))) == 20 and wiener_bfs(build_hasse(RectBound(2, 2))) == 56
    return not bad and paper, f"mismatches {bad}"


def criterion_6():
    bad = []
    for n in range(1, 5):
        series = series_expand(n_poly_recursive(n, n), 2 * n, 6)
        for s in range(6):
            comps = enumerate_compositions(s, n)
            total = 0
            for a in comps:
                for b in comps:
                    d = emd(a, b)
                    if d != emd_via_bijection(a, b):
                        bad.append(("bijection", a.parts, b.parts))
                    total += d
            if not total == hprime_coeff_closed(s, n) == series[s]:
                bad.append((s, n, total, hprime_coeff_closed(s, n), series[s]))
    return not bad, f"mismatches {bad[:3]}"


def criterion_7():
    bad = []
    for s in range(7):
        for n in range(1, 5):
            comps = enumerate_compositions(s, n)
            mean = Fraction(sum(emd(a, b) for a in comps for b in comps), len(comps) ** 2)
            if mean != expected_emd(s, n):
                bad.append((s, n, mean, expected_emd(s, n)))
    ok = not bad and expected_emd(2, 2) == Fraction(8, 9)
    return ok, f"mismatches {bad}"


def criterion_8():
    bad = [n for n in range(1, 21) if eval_at_one(n_poly_closed(n)) != la_haye_S(n - 1)]
    table = all(eval_at_one(n_poly_closed(n)) == SUBSET_TABLE[n - 1] for n in range(1, 9))
    table = table and all(la_haye_S(n) == v for n, v in SUBSET_TABLE.items())
    subsets = [n for n in range(11) if subset_symdiff_sum(n) != la_haye_S(n)]
    ok = not bad and not subsets and table and eval_at_one(n_poly_closed(8)) == 57344
    return ok, f"sum mismatches {bad}, subset mismatches {subsets}, table ok {table}"


def criterion_9():
    bad = [n for n in range(2, 21) if not is_real_rooted(n_poly_closed(n))]
    return not bad, f"not real-rooted: {bad}"


def criterion_10():
    bad = []
    for n in range(1, 7):
        lim = expected_emd_limit(n)
        errs = [abs(expected_emd(s, n) / s - lim) for s in (10, 100, 1000)]
        if lim == 0:
            # n = 1: a single bin, every EMD is 0 and the limit is exactly 0
            ok = all(e == 0 for e in errs)
        else:
            ok = errs[0] > errs[1] > errs[2] and errs[2] < lim / 100
        if not ok:
            bad.append((n, [float(e) for e in errs]))
    return not bad, f"failures {bad}"


CRITERIA = [
    (1, "golden table N_1..N_8 from the recursion", criterion_1, 1.0),
    (2, "symmetric-difference sums equal the recursion, p,q <= 6", criterion_2, 30.0),
    (3, "closed coefficient formula equals the recursion, n <= 12", criterion_3, 5.0),
    (4, "palindromic and unimodal, n <= 30", criterion_4, 5.0),
    (5, "Wiener formula = BFS = symmetric-difference sum, a,b <= 4", criterion_5, 60.0),
    (6, "EMD oracle and series coefficients, s <= 5, n <= 4", criterion_6, 60.0),
    (7, "expected EMD equals brute-force mean, s <= 6, n <= 4", criterion_7, 60.0),
    (8, "N_n(1) = S(n-1) for n <= 20, subset sums for n <= 10", criterion_8, 60.0),
    (9, "real-rooted via Sturm chains, 2 <= n <= 20", criterion_9, 60.0),
    (10, "expected EMD / s converges to the limit, n <= 6", criterion_10, 10.0),
]


def evaluate(fn, budget):
    start = time.perf_counter()
    ok, detail = fn()
    elapsed = time.perf_counter() - start
    return ok and elapsed < budget, elapsed, detail


@pytest.mark.parametrize("number, title, fn, budget", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, fn, budget, acceptance_log):
    ok, elapsed, detail = evaluate(fn, budget)
    line = f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} ({elapsed:.2f} s, budget {budget:g} s)"
    acceptance_log.append(line)
    print(line)
    assert ok, f"{line}: {detail}"


if __name__ == "__main__":
    failures = 0
    for number, title, fn, budget in CRITERIA:
        ok, elapsed, detail = evaluate(fn, budget)
        failures += not ok
        print(f"{'PASS' if ok else 'FAIL'} criterion {number:2d}: {title} ({elapsed:.2f} s, budget {budget:g} s)")
        if not ok:
            print(f"    {detail}")
    raise SystemExit(1 if failures else 0)
