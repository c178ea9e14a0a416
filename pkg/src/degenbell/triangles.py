"""Stirling and Whitney number triangles with Q[L] entries.

Every triangle is defined by a change-of-basis identity between
falling-factorial families, and each entry is produced directly from
that defining conversion (synthetic division in rings.py).  The
triangular recurrence for the second-kind numbers is exposed as a
separately derived fast path and is cross-checked against the
conversion route by the test suite; the conversion remains the source
of truth.

Row functions are cached; the returned lists must not be mutated.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from typing import Callable, List

from .rings import (
    CLASSICAL,
    DEGENERATE,
    LAM,
    LambdaPoly,
    XPoly,
    binomial,
    ff_classical,
    ff_degenerate,
    gff_scalar,
    to_falling_basis,
)


@lru_cache(maxsize=None)
def _stirling2_degenerate_row(n: int) -> tuple:
    # (x)_{n,L} = sum_k S2_L(n,k) (x)_k
    coeffs = to_falling_basis(ff_degenerate(n), CLASSICAL)
    coeffs += [LambdaPoly()] * (n + 1 - len(coeffs))
    return tuple(coeffs)


def stirling2_degenerate(n: int, k: int) -> LambdaPoly:
    """Connection coefficient of (x)_k inside the product x(x-L)...(x-(n-1)L)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LambdaPoly()
    return _stirling2_degenerate_row(n)[k]


@lru_cache(maxsize=None)
def _stirling2_degenerate_row_rec(n: int) -> tuple:
    # derived fast path: T(n+1,k) = T(n,k-1) + (k - nL) T(n,k)
    if n == 0:
        return (LambdaPoly.const(1),)
    prev = _stirling2_degenerate_row_rec(n - 1)
    row = [LambdaPoly() for _ in range(n + 1)]
    for k in range(n + 1):
        acc = LambdaPoly()
        if k >= 1:
            acc = acc + prev[k - 1]
        if k <= n - 1:
            acc = acc + (LambdaPoly.const(k) - LAM * (n - 1)) * prev[k]
        row[k] = acc
    return tuple(row)


def stirling2_degenerate_rec(n: int, k: int) -> LambdaPoly:
    """Same triangle via its three-term recurrence; used for cross-checks."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LambdaPoly()
    return _stirling2_degenerate_row_rec(n)[k]


@lru_cache(maxsize=None)
def _stirling2_classical_row(n: int) -> tuple:
    if n == 0:
        return (1,)
    prev = _stirling2_classical_row(n - 1)
    row = [0] * (n + 1)
    for k in range(n + 1):
        acc = 0
        if k >= 1:
            acc += prev[k - 1]
        if k <= n - 1:
            acc += k * prev[k]
        row[k] = acc
    return tuple(row)


def stirling2_classical(n: int, k: int) -> int:
    """Number of partitions of an n-set into k nonempty blocks."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return _stirling2_classical_row(n)[k]


@lru_cache(maxsize=None)
def _stirling1_degenerate_row(n: int) -> tuple:
    # (x)_n = sum_k S1_L(n,k) (x)_{k,L}
    coeffs = to_falling_basis(ff_classical(n), DEGENERATE)
    coeffs += [LambdaPoly()] * (n + 1 - len(coeffs))
    return tuple(coeffs)


def stirling1_degenerate(n: int, k: int) -> LambdaPoly:
    """Connection coefficient of (x)_{k,L} inside the classical falling factorial (x)_n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LambdaPoly()
    return _stirling1_degenerate_row(n)[k]


def _exact_div_pow(p: LambdaPoly, m: int, k: int) -> LambdaPoly:
    # p / m^k; exact because each Q[L] coefficient is a Fraction
    q = Fraction(1, m ** k)
    return p * q


@lru_cache(maxsize=None)
def _whitney_row(m: int, n: int) -> tuple:
    # (mx + 1)_{n,L} = sum_k W_{m,L}(n,k) m^k (x)_k
    base = XPoly((LambdaPoly.const(1), LambdaPoly.const(m)))
    prod = XPoly.const(1)
    for i in range(n):
        prod = prod * (base - LAM * i)
    coeffs = to_falling_basis(prod, CLASSICAL)
    coeffs += [LambdaPoly()] * (n + 1 - len(coeffs))
    return tuple(_exact_div_pow(c, m, k) for k, c in enumerate(coeffs))


def whitney_degenerate(m: int, n: int, k: int) -> LambdaPoly:
    """Whitney-type connection coefficient for the base mx + 1.

    Defined by expanding (mx+1)((mx+1)-L)...((mx+1)-(n-1)L) over the
    classical falling basis and stripping the m^k normalization.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LambdaPoly()
    return _whitney_row(m, n)[k]


@lru_cache(maxsize=None)
def _whitney_r_row(m: int, r: Fraction, n: int) -> tuple:
    # (mx + r)_{n,L} = sum_k W^(r)_{m,L}(n,k) m^k (x)_k
    base = XPoly((LambdaPoly.const(r), LambdaPoly.const(m)))
    prod = XPoly.const(1)
    for i in range(n):
        prod = prod * (base - LAM * i)
    coeffs = to_falling_basis(prod, CLASSICAL)
    coeffs += [LambdaPoly()] * (n + 1 - len(coeffs))
    return tuple(_exact_div_pow(c, m, k) for k, c in enumerate(coeffs))


def whitney_r_degenerate(m: int, r, n: int, k: int) -> LambdaPoly:
    """Whitney-type coefficient with shifted base mx + r; r = 1 recovers whitney_degenerate.

    r may be any nonnegative rational, including 0.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    r = Fraction(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return LambdaPoly()
    return _whitney_r_row(m, r, n)[k]


def w1_identity_check(n: int, k: int) -> bool:
    """Whether W_{1,L}(n,k) = S2_L(n+1,k+1) + L n S2_L(n,k+1) holds at (n,k)."""
    lhs = whitney_degenerate(1, n, k)
    rhs = stirling2_degenerate(n + 1, k + 1) + LAM * n * stirling2_degenerate(n, k + 1)
    return lhs == rhs


def orthogonality_sum(n: int, j: int) -> LambdaPoly:
    """sum_k S1_L(n,k) S2_L(k,j); equals delta_{n,j} when the triangles are inverse."""
    acc = LambdaPoly()
    for k in range(j, n + 1):
        acc = acc + stirling1_degenerate(n, k) * stirling2_degenerate(k, j)
    return acc


class TriangleTable:
    """A named triangle with uniform row access, for table rendering."""

    def __init__(self, name: str, entry: Callable[[int, int], LambdaPoly]):
        self.name = name
        self._entry = entry

    def entry(self, n: int, k: int) -> LambdaPoly:
        return self._entry(n, k)

    def row(self, n: int) -> List[LambdaPoly]:
        return [self._entry(n, k) for k in range(n + 1)]


def make_table(kind: str, m: int = 1, r=1) -> TriangleTable:
    """Triangle lookup by CLI name; m and r are consumed only by the Whitney kinds."""
    if kind == "stirling2-deg":
        return TriangleTable(kind, stirling2_degenerate)
    if kind == "stirling1-deg":
        return TriangleTable(kind, stirling1_degenerate)
    if kind == "whitney":
        return TriangleTable(kind, lambda n, k: whitney_degenerate(m, n, k))
    if kind == "r-whitney":
        return TriangleTable(kind, lambda n, k: whitney_r_degenerate(m, r, n, k))
    raise ValueError(f"unknown triangle kind {kind!r}")


TABLE_KINDS = ("stirling2-deg", "stirling1-deg", "whitney", "r-whitney")
