"""Normal ordering in the boson algebra a ad - ad a = 1.

Elements are kept in the normal-ordered basis (ad)^i a^j with Q[L]
coefficients.  Products use the closed-form reordering

    a^j (ad)^i = sum_s C(j,s) C(i,s) s! (ad)^(i-s) a^(j-s)

while normal_order_word reduces a raw symbol word by rewriting the
leftmost a*ad pair one step at a time; the two routes are independent
and the tests compare them.
"""

from __future__ import annotations

from fractions import Fraction
from math import factorial
from typing import Dict, Sequence, Tuple

from .rings import LAM, LambdaPoly, binomial
from .triangles import (
    stirling2_degenerate,
    whitney_degenerate,
    whitney_r_degenerate,
)

A = "a"
AD = "ad"


def _as_coeff(value) -> LambdaPoly:
    if isinstance(value, LambdaPoly):
        return value
    if isinstance(value, (int, Fraction)):
        return LambdaPoly.const(value)
    raise TypeError(f"cannot use {type(value).__name__} as a coefficient")


class NormalForm:
    """A finite sum of terms coeff * (ad)^i a^j, keyed by (i, j).

    Instances are immutable; arithmetic returns new objects.  Zero
    coefficients are dropped so equality is plain dict equality.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Dict[Tuple[int, int], LambdaPoly] = None):
        clean: Dict[Tuple[int, int], LambdaPoly] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("exponents must be nonnegative")
            c = _as_coeff(c)
            if not c.is_zero():
                clean[(i, j)] = c
        self._terms = clean

    @classmethod
    def zero(cls) -> "NormalForm":
        return cls()

    @classmethod
    def identity(cls) -> "NormalForm":
        return cls.monomial(0, 0)

    @classmethod
    def creation(cls) -> "NormalForm":
        return cls.monomial(1, 0)

    @classmethod
    def annihilation(cls) -> "NormalForm":
        return cls.monomial(0, 1)

    @classmethod
    def number(cls) -> "NormalForm":
        """The product ad a."""
        return cls.monomial(1, 1)

    @classmethod
    def monomial(cls, i: int, j: int, coeff=1) -> "NormalForm":
        return cls({(i, j): _as_coeff(coeff)})

    @property
    def terms(self) -> Dict[Tuple[int, int], LambdaPoly]:
        return dict(self._terms)

    def coeff(self, i: int, j: int) -> LambdaPoly:
        return self._terms.get((i, j), LambdaPoly())

    def is_zero(self) -> bool:
        return not self._terms

    def sorted_terms(self) -> Sequence[Tuple[Tuple[int, int], LambdaPoly]]:
        """Terms ordered by total degree then creation degree, highest first."""
        return sorted(self._terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0][0]), reverse=True)

    def __add__(self, other):
        if isinstance(other, NormalForm):
            out = dict(self._terms)
            for key, c in other._terms.items():
                out[key] = out.get(key, LambdaPoly()) + c
            return NormalForm(out)
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self + NormalForm.monomial(0, 0, other)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return NormalForm({k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        if isinstance(other, (NormalForm, LambdaPoly, int, Fraction)):
            other = other if isinstance(other, NormalForm) else NormalForm.monomial(0, 0, other)
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return NormalForm.monomial(0, 0, other) - self
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, NormalForm):
            out: Dict[Tuple[int, int], LambdaPoly] = {}
            for (i1, j1), c1 in self._terms.items():
                for (i2, j2), c2 in other._terms.items():
                    c = c1 * c2
                    for s in range(min(j1, i2) + 1):
                        w = binomial(j1, s) * binomial(i2, s) * factorial(s)
                        key = (i1 + i2 - s, j1 + j2 - s)
                        out[key] = out.get(key, LambdaPoly()) + c * w
            return NormalForm(out)
        if isinstance(other, (LambdaPoly, int, Fraction)):
            c = _as_coeff(other)
            return NormalForm({k: v * c for k, v in self._terms.items()})
        return NotImplemented

    def __rmul__(self, other):
        # scalars are central, so scalar * nf == nf * scalar
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self * other
        return NotImplemented

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        out = NormalForm.identity()
        for _ in range(n):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, NormalForm):
            return self._terms == other._terms
        if isinstance(other, (LambdaPoly, int, Fraction)):
            return self == NormalForm.monomial(0, 0, other)
        return NotImplemented

    def __hash__(self):
        return hash(tuple(sorted(self._terms.items())))

    def __repr__(self):
        parts = [f"({i},{j}): {c!r}" for (i, j), c in self.sorted_terms()]
        return "NormalForm({" + ", ".join(parts) + "})"


def normal_order_word(word: Sequence[str], coeff=1) -> NormalForm:
    """Normal-order a product of raw symbols by single commutation steps.

    word is a sequence of "a" / "ad".  Each step rewrites the leftmost
    adjacent a*ad pair via a ad = ad a + 1, branching into a swapped
    word and a shortened word.  Terminates because each step reduces
    the number of inversions; the result equals the closed-form
    product but is computed without it.
    """
    pending: Dict[Tuple[str, ...], LambdaPoly] = {tuple(word): _as_coeff(coeff)}
    for sym in word:
        if sym not in (A, AD):
            raise ValueError(f"unknown symbol {sym!r}")
    done: Dict[Tuple[int, int], LambdaPoly] = {}
    while pending:
        w, c = pending.popitem()
        pos = -1
        for idx in range(len(w) - 1):
            if w[idx] == A and w[idx + 1] == AD:
                pos = idx
                break
        if pos < 0:
            i = sum(1 for s in w if s == AD)
            key = (i, len(w) - i)
            done[key] = done.get(key, LambdaPoly()) + c
            continue
        swapped = w[:pos] + (AD, A) + w[pos + 2:]
        dropped = w[:pos] + w[pos + 2:]
        pending[swapped] = pending.get(swapped, LambdaPoly()) + c
        pending[dropped] = pending.get(dropped, LambdaPoly()) + c
    return NormalForm(done)


def nf_multiply(p: NormalForm, q: NormalForm) -> NormalForm:
    """Canonical product; same as p * q, exposed as a named operation."""
    return p * q


def degenerate_power(op: NormalForm, n: int) -> NormalForm:
    """Left-to-right product op (op - L) (op - 2L) ... with n factors."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = NormalForm.identity()
    for i in range(n):
        out = out * (op - LAM * i)
    return out


def classical_ff_power(op: NormalForm, n: int) -> NormalForm:
    """Left-to-right product op (op - 1) (op - 2) ... with n factors."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    out = NormalForm.identity()
    for i in range(n):
        out = out * (op - i)
    return out


def commutator(x: NormalForm, y: NormalForm) -> NormalForm:
    return x * y - y * x


def check_number_ff_expansion(n: int) -> bool:
    """(ad a)(ad a - L)... with n factors == sum_k S2_L(n,k) (ad)^k a^k."""
    lhs = degenerate_power(NormalForm.number(), n)
    rhs = NormalForm.zero()
    for k in range(n + 1):
        rhs = rhs + NormalForm.monomial(k, k, stirling2_degenerate(n, k))
    return lhs == rhs


def check_ordered_power(k: int) -> bool:
    """(ad a)(ad a - 1)...(ad a - k + 1) == (ad)^k a^k."""
    return classical_ff_power(NormalForm.number(), k) == NormalForm.monomial(k, k)


def check_commutator_rule(k: int) -> bool:
    """[a, (ad)^k] == k (ad)^(k-1)."""
    if k < 1:
        raise ValueError("k must be positive")
    lhs = commutator(NormalForm.annihilation(), NormalForm.creation() ** k)
    return lhs == NormalForm.monomial(k - 1, 0, k)


def check_creation_shift(m: int, n: int, k: int) -> bool:
    """Moving an L-stepped power of the number operator past creations.

    Main display: (ad a - mL)_{n,L} (ad)^k == (ad)^k (ad a + k - mL)_{n,L}.
    Companion, at j = k: m (ad a) (ad)^k == (ad)^k (m ad a + mk).
    True only when both hold.
    """
    if m < 0 or n < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    num = NormalForm.number()
    adk = NormalForm.creation() ** k
    lhs = degenerate_power(num - LAM * m, n) * adk
    rhs = adk * degenerate_power(num + (LambdaPoly.const(k) - LAM * m), n)
    if lhs != rhs:
        return False
    comp_lhs = (num * m) * adk
    comp_rhs = adk * (num * m + m * k)
    return comp_lhs == comp_rhs


def check_ff_splitting(m: int, n: int) -> bool:
    """(ad a)_{m+n,L} == (ad a - mL)_{n,L} * (ad a)_{m,L}."""
    num = NormalForm.number()
    lhs = degenerate_power(num, m + n)
    rhs = nf_multiply(degenerate_power(num - LAM * m, n), degenerate_power(num, m))
    return lhs == rhs


def check_index_splitting(n: int, m: int) -> bool:
    """The operator identity behind the Bell-family index splitting.

    (ad a)_{m+n,L} == sum_j S2_L(m,j) (ad)^j (ad a + j - mL)_{n,L} a^j
    """
    if n < 0 or m < 0:
        raise ValueError("n and m must be nonnegative")
    num = NormalForm.number()
    lhs = degenerate_power(num, n + m)
    rhs = NormalForm.zero()
    for j in range(m + 1):
        s2 = stirling2_degenerate(m, j)
        if s2.is_zero():
            continue
        adj = NormalForm.creation() ** j
        aj = NormalForm.annihilation() ** j
        mid = degenerate_power(num + (LambdaPoly.const(j) - LAM * m), n)
        rhs = rhs + adj * mid * aj * s2
    return lhs == rhs


def check_whitney_expansion(m: int, n: int, r=None) -> bool:
    """(m ad a + r)_{n,L} == sum_k W(n,k) m^k (ad)^k a^k, with r = 1 by default.

    With r given, the right side uses the shifted-base triangle; r may
    be any nonnegative rational.
    """
    if m < 1:
        raise ValueError("m must be a positive integer")
    if r is not None and Fraction(r) < 0:
        raise ValueError("r must be nonnegative")
    shift = 1 if r is None else Fraction(r)
    base = NormalForm.number() * m + shift
    lhs = degenerate_power(base, n)
    rhs = NormalForm.zero()
    for k in range(n + 1):
        if r is None:
            w = whitney_degenerate(m, n, k)
        else:
            w = whitney_r_degenerate(m, r, n, k)
        rhs = rhs + NormalForm.monomial(k, k, w * (m ** k))
    return lhs == rhs
