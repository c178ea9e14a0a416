"""Exact scalars and polynomial rings: Q, Q[L] and Q[L][x].

L is the deformation step of the generalized falling factorial
x(x - L)(x - 2L)..., kept symbolic so that an identity verified here
holds for every numeric value of L at once.  x is adjoined on top of
Q[L].  All values are immutable and all operations are pure, so the
whole module is safe for concurrent use.

Floats are rejected everywhere; the entire point of the ring tower is
exactness.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction]

CLASSICAL = "classical"
DEGENERATE = "degenerate"


def _as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


def rat(text: str) -> Fraction:
    """Parse a rational written as "p" or "p/q"."""
    return Fraction(text)


class LambdaPoly:
    """Dense univariate polynomial in L over Q.

    Canonical form: no trailing zero coefficients; the zero polynomial
    has an empty coefficient tuple and degree -1.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        cs = [_as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def const(cls, value: Scalar) -> "LambdaPoly":
        return cls((value,))

    @property
    def coeffs(self) -> Sequence[Fraction]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return Fraction(0)

    def is_zero(self) -> bool:
        return not self._coeffs

    def is_one(self) -> bool:
        return self._coeffs == (Fraction(1),)

    def constant_value(self) -> Fraction:
        """The value of a degree <= 0 polynomial; error otherwise."""
        if len(self._coeffs) > 1:
            raise ValueError("polynomial is not constant")
        return self._coeffs[0] if self._coeffs else Fraction(0)

    def subst(self, value: Scalar) -> Fraction:
        """Evaluate at a numeric L; realizes every L -> value limit."""
        value = _as_fraction(value)
        acc = Fraction(0)
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def __add__(self, other):
        if isinstance(other, LambdaPoly):
            a, b = self._coeffs, other._coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] += c
            return LambdaPoly(out)
        if isinstance(other, (int, Fraction)):
            return self + LambdaPoly.const(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return LambdaPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self + (-other if isinstance(other, LambdaPoly) else LambdaPoly.const(-_as_fraction(other)))
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (int, Fraction)):
            return LambdaPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, LambdaPoly):
            if self.is_zero() or other.is_zero():
                return LambdaPoly()
            out = [Fraction(0)] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] += a * b
            return LambdaPoly(out)
        if isinstance(other, (int, Fraction)):
            q = _as_fraction(other)
            return LambdaPoly(c * q for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = LambdaPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, LambdaPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (int, Fraction)):
            return self == LambdaPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"LambdaPoly({[str(c) for c in self._coeffs]})"


LAM = LambdaPoly((0, 1))


def _as_lambda_poly(value) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaPoly.const(value)
    raise TypeError(f"cannot coerce {type(value).__name__} into Q[L]")


class XPoly:
    """Dense polynomial in x with LambdaPoly coefficients.

    Same canonical form as LambdaPoly: no trailing zeros, zero is empty.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [_as_lambda_poly(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self._coeffs = tuple(cs)

    @classmethod
    def const(cls, value) -> "XPoly":
        return cls((value,))

    @property
    def coeffs(self) -> Sequence[LambdaPoly]:
        return self._coeffs

    @property
    def degree(self) -> int:
        return len(self._coeffs) - 1

    def coeff(self, k: int) -> LambdaPoly:
        if 0 <= k < len(self._coeffs):
            return self._coeffs[k]
        return LambdaPoly()

    def is_zero(self) -> bool:
        return not self._coeffs

    def subst_lambda(self, value: Scalar) -> "XPoly":
        return XPoly(c.subst(value) for c in self._coeffs)

    def eval_x(self, value) -> LambdaPoly:
        """Substitute a Q[L] value for x."""
        value = _as_lambda_poly(value)
        acc = LambdaPoly()
        for c in reversed(self._coeffs):
            acc = acc * value + c
        return acc

    def scale_x(self, factor) -> "XPoly":
        """p(factor * x), i.e. multiply the x^k coefficient by factor^k."""
        factor = _as_lambda_poly(factor)
        out = []
        power = LambdaPoly.const(1)
        for c in self._coeffs:
            out.append(c * power)
            power = power * factor
        return XPoly(out)

    def __add__(self, other):
        if isinstance(other, XPoly):
            a, b = self._coeffs, other._coeffs
            if len(a) < len(b):
                a, b = b, a
            out = list(a)
            for i, c in enumerate(b):
                out[i] = out[i] + c
            return XPoly(out)
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self + XPoly.const(other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return XPoly(-c for c in self._coeffs)

    def __sub__(self, other):
        if isinstance(other, (XPoly, LambdaPoly, int, Fraction)):
            other = other if isinstance(other, XPoly) else XPoly.const(other)
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return XPoly.const(other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, XPoly):
            if self.is_zero() or other.is_zero():
                return XPoly()
            out = [LambdaPoly()] * (len(self._coeffs) + len(other._coeffs) - 1)
            for i, a in enumerate(self._coeffs):
                for j, b in enumerate(other._coeffs):
                    out[i + j] = out[i + j] + a * b
            return XPoly(out)
        if isinstance(other, (LambdaPoly, int, Fraction)):
            q = _as_lambda_poly(other)
            return XPoly(c * q for c in self._coeffs)
        return NotImplemented

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = XPoly.const(1)
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self._coeffs == other._coeffs
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self == XPoly.const(other)
        return NotImplemented

    def __hash__(self):
        return hash(self._coeffs)

    def __repr__(self):
        return f"XPoly({[repr(c) for c in self._coeffs]})"


X = XPoly((LambdaPoly(), LambdaPoly.const(1)))


def binomial(n: int, k: int) -> int:
    """Exact binomial coefficient; 0 outside 0 <= k <= n."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def ff_degenerate(n: int) -> XPoly:
    """Generalized falling factorial x(x - L)(x - 2L)...((n-1) factors after x)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = XPoly.const(1)
    for i in range(n):
        out = out * XPoly((LAM * (-i), 1))
    return out


def ff_classical(n: int) -> XPoly:
    """Classical falling factorial x(x - 1)...(x - n + 1)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = XPoly.const(1)
    for i in range(n):
        out = out * XPoly((Fraction(-i), 1))
    return out


def gff_scalar(base, n: int) -> LambdaPoly:
    """Product (base)(base - L)...(base - (n-1)L) in Q[L].

    The empty product (n = 0) is 1 for every base, including base = 0.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    base = _as_lambda_poly(base)
    out = LambdaPoly.const(1)
    for i in range(n):
        out = out * (base - LAM * i)
    return out


def _basis_node(k: int, basis: str) -> LambdaPoly:
    if basis == CLASSICAL:
        return LambdaPoly.const(k)
    if basis == DEGENERATE:
        return LAM * k
    raise ValueError(f"unknown basis {basis!r}")


def to_falling_basis(p: XPoly, basis: str) -> list:
    """Coefficients of p in the falling-factorial basis.

    basis "classical" uses (x)_k = x(x-1)...(x-k+1), "degenerate" uses
    (x)_{k,L} = x(x-L)...(x-(k-1)L).  Works by repeated synthetic
    division by the monic linear factors x - node_k; exact in Q[L].
    Returns deg(p) + 1 coefficients.
    """
    out = []
    cur = list(p.coeffs)
    k = 0
    while cur:
        node = _basis_node(k, basis)
        # divide cur by (x - node): Horner from the top down
        quot = [LambdaPoly()] * (len(cur) - 1)
        carry = LambdaPoly()
        for i in range(len(cur) - 1, 0, -1):
            carry = cur[i] + node * carry
            quot[i - 1] = carry
        out.append(cur[0] + node * carry)
        cur = quot
        k += 1
    return out


def from_falling_basis(coeffs: Iterable, basis: str) -> XPoly:
    """Re-expand falling-basis coefficients into an XPoly (inverse of to_falling_basis)."""
    out = XPoly()
    factor = XPoly.const(1)
    for k, c in enumerate(coeffs):
        out = out + factor * c
        factor = factor * XPoly((-_basis_node(k, basis), 1))
    return out


def subst_lambda(p, value: Scalar):
    """Substitute a numeric value for L.

    LambdaPoly -> Rational, XPoly -> XPoly with constant coefficients.
    Substituting 0 realizes the classical (L -> 0) limit exactly.
    """
    if isinstance(p, XPoly):
        return p.subst_lambda(value)
    if isinstance(p, LambdaPoly):
        return p.subst(value)
    raise TypeError(f"cannot substitute into {type(p).__name__}")
