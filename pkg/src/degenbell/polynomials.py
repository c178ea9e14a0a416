"""Bell- and Dowling-type polynomial families in Q[L][x].

Each family is a generating-function-style sum over a triangle row:
the x^k coefficient of the n-th member is the (n,k) triangle entry.
An independent oracle for the Bell family, built from the exponential
of x((1+L t)^{1/L} - 1) via the exp-of-a-series recurrence, lives here
too so the tests can compare two genuinely different routes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, List

from .rings import LAM, LambdaPoly, X, XPoly, gff_scalar
from .triangles import (
    stirling2_classical,
    stirling2_degenerate,
    whitney_degenerate,
    whitney_r_degenerate,
)


def bell_degenerate(n: int) -> XPoly:
    """sum_k S2_L(n,k) x^k; at L = 0 and x = 1 this yields the Bell numbers."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return XPoly(stirling2_degenerate(n, k) for k in range(n + 1))


def bell_classical(n: int) -> XPoly:
    """sum_k S2(n,k) x^k with the partition-count triangle."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return XPoly(Fraction(stirling2_classical(n, k)) for k in range(n + 1))


def bell_number(n: int) -> int:
    """Total number of set partitions of an n-set."""
    v = bell_classical(n).eval_x(1).constant_value()
    assert v.denominator == 1
    return v.numerator


def dowling(m: int, n: int) -> XPoly:
    """sum_k W_{m,L}(n,k) x^k."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return XPoly(whitney_degenerate(m, n, k) for k in range(n + 1))


def dowling_r(m: int, r, n: int) -> XPoly:
    """sum_k W^(r)_{m,L}(n,k) x^k; r = 1 recovers dowling, any rational r >= 0 is allowed."""
    if m < 1:
        raise ValueError("m must be a positive integer")
    r = Fraction(r)
    if r < 0:
        raise ValueError("r must be nonnegative")
    if n < 0:
        raise ValueError("n must be nonnegative")
    return XPoly(whitney_r_degenerate(m, r, n, k) for k in range(n + 1))


def _factorial(n: int) -> int:
    out = 1
    for i in range(2, n + 1):
        out *= i
    return out


def bell_gf_oracle(n_max: int) -> List[XPoly]:
    """Bell family members 0..n_max from the exponential generating function.

    Independent of the triangle route: forms the truncated series
    g(t) = x * sum_{k>=1} (1)_{k,L} t^k / k!, exponentiates it with the
    exp-of-a-series recurrence n h_n = sum_j j g_j h_{n-j}, and returns
    n! times each t^n coefficient.
    """
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    g: List[XPoly] = [XPoly()]
    for k in range(1, n_max + 1):
        g.append(X * (gff_scalar(1, k) * Fraction(1, _factorial(k))))
    h: List[XPoly] = [XPoly.const(1)]
    for n in range(1, n_max + 1):
        acc = XPoly()
        for j in range(1, n + 1):
            acc = acc + g[j] * h[n - j] * j
        h.append(acc * Fraction(1, n))
    return [h[n] * _factorial(n) for n in range(n_max + 1)]


class PolyFamily:
    """A named polynomial family with uniform member access, for table rendering."""

    def __init__(self, name: str, member: Callable[[int], XPoly]):
        self.name = name
        self._member = member

    def member(self, n: int) -> XPoly:
        return self._member(n)


def make_family(kind: str, m: int = 1, r=1) -> PolyFamily:
    """Family lookup by CLI name; m and r are consumed only by the Dowling kinds."""
    if kind == "bell":
        return PolyFamily(kind, bell_degenerate)
    if kind == "dowling":
        return PolyFamily(kind, lambda n: dowling(m, n))
    if kind == "r-dowling":
        return PolyFamily(kind, lambda n: dowling_r(m, r, n))
    raise ValueError(f"unknown family kind {kind!r}")


FAMILY_KINDS = ("bell", "dowling", "r-dowling")
