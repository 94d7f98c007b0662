"""Integer polynomials in t and the numerator family N_pq(t).

N_pq(t) is the numerator of the EMD-sum generating function
sum_s (sum over C(s,p) x C(s,q) of EMD) t^s = N_pq(t) / (1-t)^(p+q).
Three independent constructions are provided (recursion, symmetric-difference
sums, closed coefficient formula) together with shape checks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from .arith import DEFAULT_SUBSET_CAP, CapExceeded, binomial, exact_div
from .partitions import RectBound, sum_sym_diff


@dataclass(frozen=True)
class IntPoly:
    """Dense polynomial with integer coefficients, lowest degree first.

    Trailing zeros are stripped on construction; the zero polynomial has
    ``coeffs == ()`` and ``degree is None``.
    """

    coeffs: tuple[int, ...] = ()

    def __post_init__(self):
        c = [int(x) for x in self.coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int | None:
        return len(self.coeffs) - 1 if self.coeffs else None

    @property
    def low_degree(self) -> int | None:
        for k, c in enumerate(self.coeffs):
            if c:
                return k
        return None

    def is_zero(self) -> bool:
        return not self.coeffs

    def __getitem__(self, k: int) -> int:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else 0

    def __iter__(self):
        return iter(self.coeffs)

    def __len__(self):
        return len(self.coeffs)

    def __add__(self, other):
        other = _lift(other)
        n = max(len(self), len(other))
        return IntPoly(tuple(self[k] + other[k] for k in range(n)))

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-_lift(other))

    def __rsub__(self, other):
        return _lift(other) - self

    def __mul__(self, other):
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(tuple(out))

    __rmul__ = __mul__

    def shift(self, k: int) -> IntPoly:
        """Multiply by t**k."""
        return IntPoly((0,) * k + self.coeffs) if self.coeffs else self

    def derivative(self) -> IntPoly:
        return IntPoly(tuple(k * c for k, c in enumerate(self.coeffs))[1:])

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            mono = "" if k == 0 else ("t" if k == 1 else f"t^{k}")
            if mono and abs(c) == 1:
                body = mono
            else:
                body = f"{abs(c)}{mono}"
            terms.append(("-" if c < 0 else "+", body))
        head_sign, head = terms[0]
        out = ("-" if head_sign == "-" else "") + head
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


def _lift(x) -> IntPoly:
    if isinstance(x, IntPoly):
        return x
    if isinstance(x, (int, np.integer)):
        return IntPoly((int(x),))
    return NotImplemented


ONE_MINUS_T = IntPoly((1, -1))
T = IntPoly((0, 1))


def w_poly(p: int, q: int) -> IntPoly:
    """sum_k C(p-1,k) C(q-1,k) t^k, the numerator of sum_s |C(s,p)||C(s,q)| t^s."""
    if p < 1 or q < 1:
        raise ValueError(f"w_poly needs p, q >= 1, got ({p}, {q})")
    return IntPoly(tuple(binomial(p - 1, k) * binomial(q - 1, k) for k in range(min(p, q))))


def n_poly_table(p: int, q: int) -> list[list[IntPoly]]:
    """Bottom-up table of N_ij for 0 <= i <= p, 0 <= j <= q."""
    if p < 0 or q < 0:
        raise ValueError(f"n_poly needs p, q >= 0, got ({p}, {q})")
    zero = IntPoly()
    table = [[zero] * (q + 1) for _ in range(p + 1)]
    for i in range(1, p + 1):
        for j in range(1, q + 1):
            if i == 1 and j == 1:
                continue
            prev = table[i - 1][j - 1]
            val = table[i - 1][j] + table[i][j - 1] - ONE_MINUS_T * prev
            if i != j:
                val = val + (abs(i - j) * w_poly(i, j)).shift(1)
            table[i][j] = val
    return table


def n_poly_recursive(p: int, q: int) -> IntPoly:
    return n_poly_table(p, q)[p][q]


def n_poly_symdiff(p: int, q: int, max_pairs: int | None = None) -> IntPoly:
    """N_pq built coefficientwise from brute-force symmetric-difference sums.

    [t^k] = S(k, p-k | k, q-k) for 1 <= k <= min(p, q).
    """
    if p < 1 or q < 1:
        raise ValueError(f"n_poly_symdiff needs p, q >= 1, got ({p}, {q})")
    coeffs = [0]
    for k in range(1, min(p, q) + 1):
        coeffs.append(sum_sym_diff(RectBound(k, p - k), RectBound(k, q - k), max_pairs=max_pairs))
    return IntPoly(tuple(coeffs))


def n_poly_closed(n: int) -> IntPoly:
    """N_n(t) from the explicit coefficients k(n-k) C(2n+2, 2k+1) / (4n+2).

    Raises ArithmeticError if a coefficient is not an integer.
    """
    if n < 1:
        raise ValueError(f"n_poly_closed needs n >= 1, got {n}")
    den = 4 * n + 2
    coeffs = [0] + [
        exact_div(k * (n - k) * binomial(2 * n + 2, 2 * k + 1), den, f"[t^{k}]N_{n}")
        for k in range(1, n)
    ]
    return IntPoly(tuple(coeffs))


def is_palindromic(f: IntPoly) -> bool:
    # zero polynomial counts as palindromic by convention
    if f.is_zero():
        return True
    a, b = f.low_degree, f.degree
    d = a + b
    return all(f[k] == f[d - k] for k in range(a, b + 1))


def is_unimodal(f: IntPoly) -> bool:
    """Weakly rising then weakly falling on the window [low_degree, degree]."""
    if f.is_zero():
        return True
    seq = f.coeffs[f.low_degree :]
    i = 0
    while i + 1 < len(seq) and seq[i] <= seq[i + 1]:
        i += 1
    while i + 1 < len(seq) and seq[i] >= seq[i + 1]:
        i += 1
    return i == len(seq) - 1


# --- exact real-root counting -------------------------------------------------

def _strip(c: list) -> list:
    while c and c[-1] == 0:
        c.pop()
    return c


def _rem(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(r) - 1 >= db and r:
        q = r[-1] / lb
        shift = len(r) - 1 - db
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()  # leading term cancels exactly
        _strip(r)
    return r


def _quo(a: Sequence[Fraction], b: Sequence[Fraction]) -> list[Fraction]:
    r = list(a)
    db, lb = len(b) - 1, b[-1]
    out = [Fraction(0)] * max(len(a) - db, 0)
    while len(r) - 1 >= db and r:
        q = r[-1] / lb
        shift = len(r) - 1 - db
        out[shift] = q
        for i, c in enumerate(b):
            r[shift + i] -= q * c
        r.pop()
        _strip(r)
    if r:
        raise ArithmeticError("polynomial division left a remainder")
    return out


def _gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _rem(a, b)
    return [c / a[-1] for c in a]


def _primitive(c: Sequence[Fraction]) -> IntPoly:
    den = math.lcm(*(x.denominator for x in c))
    ints = [int(x * den) for x in c]
    g = math.gcd(*ints)
    if ints[-1] < 0:
        g = -g
    return IntPoly(tuple(x // g for x in ints))


def square_free_part(f: IntPoly) -> IntPoly:
    """f / gcd(f, f') scaled to a primitive integer polynomial with positive leading coefficient."""
    if f.is_zero():
        raise ValueError("square-free part of the zero polynomial is undefined")
    fc = [Fraction(c) for c in f.coeffs]
    if len(fc) == 1:
        return IntPoly((1,))
    df = [Fraction(c) for c in f.derivative().coeffs]
    return _primitive(_quo(fc, _gcd(fc, df)))


def sturm_chain(f: IntPoly) -> list[list[Fraction]]:
    p0 = [Fraction(c) for c in f.coeffs]
    p1 = [Fraction(c) for c in f.derivative().coeffs]
    chain = [p0]
    while p1:
        chain.append(p1)
        p0, p1 = p1, [-c for c in _rem(p0, p1)]
    return chain


def _sign_changes(signs: Iterable[int]) -> int:
    signs = [s for s in signs if s]
    return sum(1 for x, y in zip(signs, signs[1:]) if x != y)


def count_distinct_real_roots(f: IntPoly) -> int:
    """Number of distinct real roots, from a Sturm chain of the square-free part."""
    if f.is_zero():
        raise ValueError("the zero polynomial has no finite root count")
    g = square_free_part(f)
    chain = sturm_chain(g)

    def sign(x):
        return (x > 0) - (x < 0)

    at_pos_inf = [sign(p[-1]) for p in chain]
    at_neg_inf = [sign(p[-1]) * (-1) ** (len(p) - 1) for p in chain]
    return _sign_changes(at_neg_inf) - _sign_changes(at_pos_inf)


def is_real_rooted(f: IntPoly) -> bool:
    g = square_free_part(f)
    return count_distinct_real_roots(g) == g.degree


# --- the subset symmetric-difference sequence ---------------------------------

def la_haye_S(n: int) -> int:
    """n * 2^(2n-1): total |X (-) Y| over ordered pairs of subsets of an n-set."""
    if n < 0:
        raise ValueError(f"la_haye_S needs n >= 0, got {n}")
    return 0 if n == 0 else n * 2 ** (2 * n - 1)


def subset_symdiff_sum(n: int, cap: int = DEFAULT_SUBSET_CAP) -> int:
    """Brute force over all 4^n ordered pairs of subsets of {1..n}, encoded as bitmasks."""
    if n < 0:
        raise ValueError(f"subset_symdiff_sum needs n >= 0, got {n}")
    if n > cap:
        raise CapExceeded("subset_symdiff_sum n", n, cap)
    masks = np.arange(1 << n, dtype=np.uint32)
    total = 0
    step = max(1, (1 << 22) >> n)
    for i in range(0, len(masks), step):
        xor = masks[i : i + step, None] ^ masks[None, :]
        total += int(np.bitwise_count(xor).sum(dtype=np.int64))
    return total


def eval_at_one(f: IntPoly) -> int:
    return sum(f.coeffs)
