"""Differential-operator model of the boson pair on truncated series.

a acts as d/dx and ad as multiplication by x on polynomials truncated
at a fixed degree bound N.  Truncation loses information: every
application records how far the coefficients can still be trusted via
valid_up_to, and comparisons refuse to look past that point.  For a
single term (ad)^i a^j acting on a series trusted through v the output
is trusted through min(v + i - j, N); a sum of terms takes the min.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Iterable, Optional, Tuple

from .polynomials import bell_degenerate, dowling, dowling_r
from .rings import LambdaPoly, XPoly
from .weyl import NormalForm, degenerate_power


class TruncatedSeries:
    """Coefficients s_0..s_N in Q[L], trusted only through valid_up_to."""

    __slots__ = ("_coeffs", "_valid")

    def __init__(self, coeffs: Iterable, valid_up_to: int):
        cs = []
        for c in coeffs:
            if isinstance(c, (int, Fraction)):
                c = LambdaPoly.const(c)
            if not isinstance(c, LambdaPoly):
                raise TypeError(f"coefficient of type {type(c).__name__}")
            cs.append(c)
        if not cs:
            raise ValueError("a series needs at least the constant coefficient")
        self._coeffs = tuple(cs)
        self._valid = min(max(valid_up_to, -1), self.degree_bound)

    @property
    def degree_bound(self) -> int:
        return len(self._coeffs) - 1

    @property
    def valid_up_to(self) -> int:
        return self._valid

    @property
    def coeffs(self) -> Tuple[LambdaPoly, ...]:
        return self._coeffs

    def coeff(self, l: int) -> LambdaPoly:
        return self._coeffs[l]

    def apply(self, op: NormalForm) -> "TruncatedSeries":
        """Act with a normal-ordered operator, x^l -> (l)_j x^(l-j+i) per term."""
        n = self.degree_bound
        out = [LambdaPoly() for _ in range(n + 1)]
        if op.is_zero():
            return TruncatedSeries(out, n)
        v_new = n
        for (i, j), c in op.terms.items():
            v_new = min(v_new, self._valid + i - j)
            for lp in range(i, n + 1):
                l = lp - i + j
                if l > n:
                    continue
                s = self._coeffs[l]
                if s.is_zero():
                    continue
                w = 1
                for t in range(j):
                    w *= l - t
                if w == 0:
                    continue
                out[lp] = out[lp] + c * s * w
        return TruncatedSeries(out, v_new)

    def times_xpoly(self, p: XPoly) -> "TruncatedSeries":
        """Multiply by a polynomial in x, dropping degrees past the bound."""
        n = self.degree_bound
        out = [LambdaPoly() for _ in range(n + 1)]
        kmin = None
        for k, pk in enumerate(p.coeffs):
            if pk.is_zero():
                continue
            if kmin is None:
                kmin = k
            for l in range(0, n + 1 - k):
                out[l + k] = out[l + k] + pk * self._coeffs[l]
        if kmin is None:
            return TruncatedSeries(out, n)
        return TruncatedSeries(out, min(self._valid + kmin, n))

    def agrees_with(self, other: "TruncatedSeries", through: Optional[int] = None) -> bool:
        """Coefficientwise equality over the mutually trusted range.

        Raises ValueError when that range is empty, so a vacuous
        comparison can never pass silently.
        """
        mutual = min(self._valid, other._valid)
        if through is not None:
            mutual = min(mutual, through)
        if mutual < 0:
            raise ValueError("no mutually valid coefficients to compare")
        return all(self._coeffs[l] == other._coeffs[l] for l in range(mutual + 1))

    def __repr__(self):
        return f"TruncatedSeries(N={self.degree_bound}, valid_up_to={self._valid})"


def vacuum_coherent(degree_bound: int) -> TruncatedSeries:
    """sum_l x^l / l! through the bound; the model of exp(ad) applied to the vacuum."""
    if degree_bound < 0:
        raise ValueError("degree bound must be nonnegative")
    return TruncatedSeries(
        [Fraction(1, factorial(l)) for l in range(degree_bound + 1)],
        degree_bound,
    )


def check_annihilation_fixed_point(degree_bound: int, k: int) -> bool:
    """a^k applied to the exponential series reproduces it through degree N - k."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    e = vacuum_coherent(degree_bound)
    hit = e.apply(NormalForm.monomial(0, k))
    if hit.valid_up_to != degree_bound - k:
        return False
    return hit.agrees_with(e, through=degree_bound - k)


def check_number_ff_on_coherent(degree_bound: int, n: int) -> bool:
    """(ad a)(ad a - L)... applied to e^x matches the Bell-family multiple of e^x."""
    e = vacuum_coherent(degree_bound)
    lhs = e.apply(degenerate_power(NormalForm.number(), n))
    rhs = e.times_xpoly(bell_degenerate(n))
    return lhs.agrees_with(rhs)


def check_dowling_fock(degree_bound: int, m: int, l: int, r=None) -> bool:
    """(m ad a + r)_{l,L} applied to e^x matches the Dowling family at argument mx.

    r defaults to 1 (plain Dowling); any nonnegative rational is accepted.
    """
    shift = 1 if r is None else Fraction(r)
    e = vacuum_coherent(degree_bound)
    op = degenerate_power(NormalForm.number() * m + shift, l)
    lhs = e.apply(op)
    if r is None:
        fam = dowling(m, l)
    else:
        fam = dowling_r(m, r, l)
    rhs = e.times_xpoly(fam.scale_x(m))
    return lhs.agrees_with(rhs)
