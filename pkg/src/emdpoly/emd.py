"""Histograms as weak compositions, the one-dimensional EMD, and expected values.

EMD between two histograms with the same number of bins and the same total
is the L1 norm of the difference of their cumulative sums.  The composition
alpha in C(s, n) corresponds to the partition
((n-1)^alpha_1, (n-2)^alpha_2, ..., 1^alpha_{n-1}) in Par(s x (n-1)), and under
that correspondence EMD becomes the size of the symmetric difference.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import accumulate
from typing import Iterable, Iterator

from .arith import DEFAULT_MAX_PAIRS, CapExceeded, binomial, exact_div, factorial
from .partitions import Partition, sym_diff_size
from .polynomials import IntPoly


@dataclass(frozen=True)
class Composition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(x) for x in self.parts)
        if not parts:
            raise ValueError("a composition needs at least one part")
        if any(x < 0 for x in parts):
            raise ValueError(f"parts must be nonnegative, got {parts}")
        object.__setattr__(self, "parts", parts)

    @property
    def n(self) -> int:
        return len(self.parts)

    @property
    def s(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> Composition:
        """Append empty bins up to ``n`` bins."""
        if n < self.n:
            raise ValueError(f"cannot pad {self.n} bins down to {n}")
        return Composition(self.parts + (0,) * (n - self.n))

    def __iter__(self):
        return iter(self.parts)


def composition_count(s: int, n: int) -> int:
    return binomial(s + n - 1, s) if n >= 1 else 0


def _iter_parts(s: int, n: int) -> Iterator[tuple[int, ...]]:
    # first bin descending, so (s, 0, ..., 0) comes first
    if n == 1:
        yield (s,)
        return
    for first in range(s, -1, -1):
        for rest in _iter_parts(s - first, n - 1):
            yield (first,) + rest


def enumerate_compositions(s: int, n: int, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> list[Composition]:
    """All of C(s, n), first part descending then recursively.

    Refuses when the number of ordered pairs |C(s,n)|^2 exceeds ``max_pairs``.
    """
    if s < 0 or n < 1:
        raise ValueError(f"need s >= 0 and n >= 1, got s={s}, n={n}")
    count = composition_count(s, n)
    if max_pairs is not None and count * count > max_pairs:
        raise CapExceeded(f"composition pairs for C({s},{n})", count * count, max_pairs)
    return [Composition(p) for p in _iter_parts(s, n)]


def _check_pair(alpha: Composition, beta: Composition):
    if alpha.n != beta.n or alpha.s != beta.s:
        raise ValueError(
            f"EMD needs matching bins and totals, got n={alpha.n},{beta.n} s={alpha.s},{beta.s}"
        )


def emd(alpha: Composition, beta: Composition) -> int:
    _check_pair(alpha, beta)
    return sum(abs(c) for c in accumulate(a - b for a, b in zip(alpha.parts, beta.parts)))


def comp_to_partition(alpha: Composition) -> Partition:
    """alpha -> ((n-1)^alpha_1, ..., 1^alpha_{n-1}); the last bin is implied by s."""
    n = alpha.n
    parts = []
    for i, mult in enumerate(alpha.parts[:-1]):
        parts.extend([n - 1 - i] * mult)
    return Partition(parts)


def emd_via_bijection(alpha: Composition, beta: Composition) -> int:
    _check_pair(alpha, beta)
    return sym_diff_size(comp_to_partition(alpha), comp_to_partition(beta))


def hprime_coeff_bruteforce(s: int, n: int, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> int:
    """Total EMD over all ordered pairs in C(s,n) x C(s,n)."""
    comps = enumerate_compositions(s, n, max_pairs)
    cums = [tuple(accumulate(c.parts)) for c in comps]
    return sum(sum(abs(x - y) for x, y in zip(u, v)) for u in cums for v in cums)


def hprime_pq_bruteforce(s: int, p: int, q: int, max_pairs: int | None = DEFAULT_MAX_PAIRS) -> int:
    """Total EMD over C(s,p) x C(s,q), the shorter histogram padded with empty trailing bins."""
    if p < 1 or q < 1:
        raise ValueError(f"need p, q >= 1, got ({p}, {q})")
    size = composition_count(s, p) * composition_count(s, q)
    if max_pairs is not None and size > max_pairs:
        raise CapExceeded(f"composition pairs for C({s},{p}) x C({s},{q})", size, max_pairs)
    m = max(p, q)
    left = [Composition(c).padded(m) for c in _iter_parts(s, p)]
    right = [Composition(c).padded(m) for c in _iter_parts(s, q)]
    return sum(emd(a, b) for a in left for b in right)


def hprime_coeff_closed(s: int, n: int) -> int:
    """[t^s] of the EMD-sum series for n bins, via the Wiener index of Par(s x (n-1))."""
    if s < 0 or n < 1:
        raise ValueError(f"need s >= 0 and n >= 1, got s={s}, n={n}")
    if s == 0 or n == 1:
        return 0
    m = n - 1
    return exact_div(s * m * binomial(2 * s + 2 * m + 2, 2 * s + 1), 4 * s + 4 * m + 2,
                     f"Wiener index of Par({s}x{m})")


def series_expand(numer: IntPoly | Iterable[int], pole_order: int, terms: int) -> list[int]:
    """First ``terms`` coefficients of numer(t) / (1-t)^pole_order."""
    if pole_order < 1 or terms < 1:
        raise ValueError("pole_order and terms must be positive")
    numer = numer if isinstance(numer, IntPoly) else IntPoly(tuple(numer))
    kernel = [binomial(j + pole_order - 1, pole_order - 1) for j in range(terms)]
    return [sum(numer[i] * kernel[s - i] for i in range(min(s, len(numer) - 1) + 1)) for s in range(terms)]


def expected_emd(s: int, n: int) -> Fraction:
    """Mean EMD over uniformly random ordered pairs from C(s,n)."""
    if s < 0 or n < 1:
        raise ValueError(f"need s >= 0 and n >= 1, got s={s}, n={n}")
    if s == 0:
        return Fraction(0)
    return (Fraction(s * (n - 1), 4 * s + 4 * n - 2)
            * Fraction(binomial(2 * s + 2 * n, 2 * s + 1), binomial(s + n - 1, s) ** 2))


def expected_emd_limit(n: int) -> Fraction:
    """lim E[EMD]/s as s grows: 2^(2n-3) (n-1) ((n-1)!)^2 / (2n-1)!."""
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    return Fraction(2) ** (2 * n - 3) * (n - 1) * factorial(n - 1) ** 2 / factorial(2 * n - 1)
