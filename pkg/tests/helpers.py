"""Independent oracles used by the test suite.

Everything here recomputes values through a route the library does not
use: set-partition enumeration with per-block weights, finite
differences, matrix inversion by back substitution.  Agreement between
these and the library is the point of the tests, so nothing below may
import the routines it is meant to check, beyond the shared coefficient
ring.
"""

from fractions import Fraction
from math import comb, factorial
from typing import Iterator, List, Tuple

from degenbell.rings import LAM, LambdaPoly, XPoly, ff_degenerate


def set_partitions(n: int) -> Iterator[List[List[int]]]:
    """All partitions of {0..n-1} into nonempty blocks.

    Element i is appended to each existing block in turn, then opens a
    new one; for n = 0 the single empty partition is yielded.
    """
    if n == 0:
        yield []
        return
    for part in set_partitions(n - 1):
        for b in range(len(part)):
            part[b].append(n - 1)
            yield part
            part[b].pop()
        part.append([n - 1])
        yield part
        part.pop()


def _block_weight(size: int) -> LambdaPoly:
    # (1)_{size,L} = 1 (1 - L)(1 - 2L) ... , the weight a block of this
    # size carries in the degenerate exponential formula
    out = LambdaPoly.const(1)
    for i in range(size):
        out = out * (LambdaPoly.const(1) - LAM * i)
    return out


def stirling2_deg_partition_oracle(n: int, k: int) -> LambdaPoly:
    """Sum over partitions of an n-set into k blocks of the product of
    block weights (1)_{|B|,L}; at L = 0 this counts partitions."""
    total = LambdaPoly()
    for part in set_partitions(n):
        if len(part) != k:
            continue
        w = LambdaPoly.const(1)
        for block in part:
            w = w * _block_weight(len(block))
        total = total + w
    return total


def bell_poly_partition_oracle(n: int) -> XPoly:
    """Sum over all partitions of an n-set of x^(#blocks) times the
    block-weight product."""
    total = XPoly()
    for part in set_partitions(n):
        w = LambdaPoly.const(1)
        for block in part:
            w = w * _block_weight(len(block))
        total = total + XPoly([LambdaPoly()] * len(part) + [w])
    return total


def bell_number_partition_oracle(n: int) -> int:
    return sum(1 for _ in set_partitions(n))


def stirling2_deg_fd_oracle(n: int, k: int) -> LambdaPoly:
    """Finite-difference form: (1/k!) sum_j (-1)^(k-j) C(k,j) (j)_{n,L}."""
    total = LambdaPoly()
    for j in range(k + 1):
        term = ff_degenerate(n).eval_x(Fraction(j))
        sign = -1 if (k - j) % 2 else 1
        total = total + term * (sign * comb(k, j))
    return total * Fraction(1, factorial(k))


def whitney_r_fd_oracle(m: int, r, n: int, k: int) -> LambdaPoly:
    """(1/(m^k k!)) sum_j (-1)^(k-j) C(k,j) (mj + r)_{n,L}.

    Follows from applying the k-th forward difference at 0 to both
    sides of the defining expansion in the falling basis.
    """
    r = Fraction(r)
    total = LambdaPoly()
    for j in range(k + 1):
        term = ff_degenerate(n).eval_x(m * j + r)
        sign = -1 if (k - j) % 2 else 1
        total = total + term * (sign * comb(k, j))
    return total * Fraction(1, factorial(k) * m ** k)


def stirling1_rows_by_inversion(n_max: int, s2_entry) -> List[List[LambdaPoly]]:
    """Rows 0..n_max of the inverse of the unitriangular matrix whose
    (i, j) entry is s2_entry(i, j), computed by back substitution."""
    rows: List[List[LambdaPoly]] = []
    for n in range(n_max + 1):
        row = [LambdaPoly() for _ in range(n + 1)]
        for j in range(n, -1, -1):
            acc = LambdaPoly.const(1) if n == j else LambdaPoly()
            for k in range(j, n):
                acc = acc - s2_entry(n, k) * rows[k][j]
            row[j] = acc
        rows.append(row)
    return rows


def stirling1_classical_signed(n: int, k: int) -> int:
    """Signed first-kind numbers via s(n+1,k) = s(n,k-1) - n s(n,k)."""
    if k < 0 or k > n:
        return 0
    row = [1]
    for i in range(n):
        nxt = [0] * (i + 2)
        for j, v in enumerate(row):
            nxt[j + 1] += v
            nxt[j] -= i * v
        row = nxt
    return row[k]


def random_word(rng, max_len: int) -> Tuple[str, ...]:
    return tuple(rng.choice(("a", "ad")) for _ in range(rng.randint(0, max_len)))


def random_lambda_poly(rng, max_deg: int = 2, span: int = 5) -> LambdaPoly:
    return LambdaPoly([Fraction(rng.randint(-span, span),
                                rng.choice((1, 1, 2, 3)))
                       for _ in range(rng.randint(1, max_deg + 1))])


def random_normal_form(rng, max_total: int = 4, max_terms: int = 4):
    from degenbell.weyl import NormalForm

    terms = {}
    for _ in range(rng.randint(0, max_terms)):
        i = rng.randint(0, max_total)
        j = rng.randint(0, max_total - i)
        terms[(i, j)] = random_lambda_poly(rng)
    return NormalForm(terms)
