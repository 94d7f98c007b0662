"""Young diagrams inside a rectangle and sums of symmetric differences.

A partition is stored as its nonzero parts in weakly decreasing order.  The
symmetric difference of two diagrams has size sum_i |lambda_i - mu_i| (rows
padded with zeros), since each row of a diagram is a left-justified prefix.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Union

import numpy as np

from .arith import CapExceeded, binomial


class Partition(tuple):
    """Weakly decreasing tuple of positive integers; ``Partition()`` is the empty diagram.

    Trailing zeros in the input are dropped, so ``Partition((2, 1, 0)) == Partition((2, 1))``.
    """

    def __new__(cls, parts: Iterable[int] = ()):
        parts = list(parts)
        while parts and parts[-1] == 0:
            parts.pop()
        for i, x in enumerate(parts):
            if not isinstance(x, (int, np.integer)) or x < 1:
                raise ValueError(f"parts must be positive integers, got {parts!r}")
            if i and parts[i - 1] < x:
                raise ValueError(f"parts must be weakly decreasing, got {parts!r}")
        return super().__new__(cls, (int(x) for x in parts))

    @property
    def length(self) -> int:
        return len(self)

    @property
    def width(self) -> int:
        return self[0] if self else 0

    @property
    def size(self) -> int:
        return sum(self)

    def padded(self, rows: int) -> tuple[int, ...]:
        if rows < len(self):
            raise ValueError(f"{self!r} has more than {rows} rows")
        return tuple(self) + (0,) * (rows - len(self))

    def boxes(self) -> set[tuple[int, int]]:
        """Cells (row, col), 0-indexed, English convention."""
        return {(i, j) for i, row in enumerate(self) for j in range(row)}

    def __repr__(self):
        return f"Partition({tuple(self)!r})"


@dataclass(frozen=True)
class RectBound:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise ValueError(f"rectangle dimensions must be nonnegative, got {self.rows}x{self.cols}")

    def count(self) -> int:
        return binomial(self.rows + self.cols, self.rows)


BoundLike = Union[RectBound, tuple[int, int]]


def as_bound(bound: BoundLike) -> RectBound:
    if isinstance(bound, RectBound):
        return bound
    a, b = bound
    return RectBound(a, b)


def fits(lam: Partition, bound: BoundLike) -> bool:
    bound = as_bound(bound)
    return len(lam) <= bound.rows and (lam[0] if lam else 0) <= bound.cols


@lru_cache(maxsize=256)
def _padded_vectors(a: int, b: int) -> tuple[tuple[int, ...], ...]:
    # lexicographically increasing: first row ascending, then the rest recursively
    if a == 0:
        return ((),)
    out = []
    for first in range(b + 1):
        for rest in _padded_vectors(a - 1, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(bound: BoundLike) -> list[Partition]:
    """All of Par(a x b), ordered lexicographically on the zero-padded part vector.

    The empty diagram comes first and the full rectangle last.
    """
    bound = as_bound(bound)
    return [Partition(v) for v in _padded_vectors(bound.rows, bound.cols)]


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return Partition()
    return Partition(sum(1 for row in lam if row > j) for j in range(lam[0]))


def sym_diff_size(lam: Iterable[int], mu: Iterable[int]) -> int:
    lam, mu = tuple(lam), tuple(mu)
    r = max(len(lam), len(mu))
    lam = lam + (0,) * (r - len(lam))
    mu = mu + (0,) * (r - len(mu))
    return sum(abs(x - y) for x, y in zip(lam, mu))


def _as_array(bound: RectBound, rows: int) -> np.ndarray:
    vecs = _padded_vectors(bound.rows, bound.cols)
    arr = np.zeros((len(vecs), rows), dtype=np.int64)
    if bound.rows:
        arr[:, : bound.rows] = np.asarray(vecs, dtype=np.int64)
    return arr


def sum_sym_diff(
    bound_left: BoundLike,
    bound_right: BoundLike,
    max_pairs: int | None = None,
    chunk_cells: int = 1 << 22,
) -> int:
    """S(a,b | c,d): total of |lambda (-) mu| over Par(a x b) x Par(c x d).

    Every ordered pair is visited explicitly (vectorized in row blocks), so
    the result is an independent oracle for the closed forms elsewhere.
    """
    left, right = as_bound(bound_left), as_bound(bound_right)
    n_left, n_right = left.count(), right.count()
    if max_pairs is not None and n_left * n_right > max_pairs:
        raise CapExceeded("partition pairs", n_left * n_right, max_pairs)
    rows = max(left.rows, right.rows)
    if rows == 0:
        return 0
    A = _as_array(left, rows)
    B = _as_array(right, rows)
    step = max(1, chunk_cells // (len(B) * rows))
    total = 0
    for i in range(0, len(A), step):
        block = np.abs(A[i : i + step, None, :] - B[None, :, :])
        total += int(block.sum(dtype=np.int64))
    return total
