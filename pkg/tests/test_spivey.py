"""Two-index recurrences for the Bell and Dowling families, as exact
certificates in Q[L][x]."""

from fractions import Fraction

import pytest

from degenbell.polynomials import bell_degenerate, bell_number, dowling, dowling_r
from degenbell.rings import LambdaPoly, X, XPoly
from degenbell.spivey import (
    IDENTITY_NAMES,
    VerificationCertificate,
    make_certificate,
    r_dowling_classical_limit,
    run_identity,
    spivey_classical,
    spivey_degenerate_bell,
    spivey_degenerate_dowling,
    spivey_degenerate_r_dowling,
)


def test_identity_names():
    assert IDENTITY_NAMES == (
        "spivey-classical",
        "spivey-deg-bell",
        "spivey-deg-dowling",
        "spivey-deg-r-dowling",
    )


def test_classical_point_examples():
    c = spivey_classical(1, 1)
    assert c.passed
    assert c.lhs == XPoly.const(2)
    assert spivey_classical(2, 2).lhs == XPoly.const(15)
    for n in range(6):
        assert spivey_classical(n, 0).passed
        assert spivey_classical(0, n).passed


def test_classical_grid():
    for n in range(9):
        for m in range(9 - n):
            c = spivey_classical(n, m)
            assert c.passed, (n, m)
            assert c.lhs == XPoly.const(bell_number(n + m))


def test_degenerate_bell_point_examples():
    c = spivey_degenerate_bell(1, 1)
    assert c.passed
    assert c.lhs == X * X + X * LambdaPoly([1, -1])
    assert c.rhs == c.lhs
    # m = 0 and n = 0 collapse to the family itself
    for n in range(6):
        assert spivey_degenerate_bell(n, 0).passed
        assert spivey_degenerate_bell(0, n).passed


def test_degenerate_bell_grid():
    for n in range(9):
        for m in range(9 - n):
            assert spivey_degenerate_bell(n, m).passed, (n, m)


def test_degenerate_bell_implies_classical():
    # substituting L = 0 and x = 1 in both sides gives the numeric recurrence
    for n in range(6):
        for m in range(6 - n):
            c = spivey_degenerate_bell(n, m)
            lhs = c.lhs.subst_lambda(0).eval_x(1).constant_value()
            rhs = c.rhs.subst_lambda(0).eval_x(1).constant_value()
            assert lhs == rhs == bell_number(n + m)


def test_degenerate_dowling_points():
    for m in (1, 2, 3):
        for n in range(5):
            assert spivey_degenerate_dowling(m, n, 0).passed
            assert spivey_degenerate_dowling(m, 0, n).passed
    c = spivey_degenerate_dowling(2, 1, 1)
    assert c.passed
    assert c.lhs == dowling(2, 2)


def test_degenerate_dowling_grid():
    for m in (1, 2, 3):
        for n in range(7):
            for l in range(7 - n):
                assert spivey_degenerate_dowling(m, n, l).passed, (m, n, l)


def test_r_dowling_reduces_to_dowling_at_r_one():
    for n in range(4):
        for l in range(4):
            a = spivey_degenerate_r_dowling(2, 1, n, l)
            b = spivey_degenerate_dowling(2, n, l)
            assert a.lhs == b.lhs and a.rhs == b.rhs


def test_r_dowling_points():
    c = spivey_degenerate_r_dowling(2, 3, 1, 1)
    assert c.passed
    assert c.lhs == dowling_r(2, 3, 2)
    for m in (1, 2):
        for r in (Fraction(0), Fraction(5, 2)):
            for nl in range(5):
                assert spivey_degenerate_r_dowling(m, r, nl, 0).passed
                assert spivey_degenerate_r_dowling(m, r, 0, nl).passed


def test_r_dowling_grid():
    for m in (1, 2):
        for r in (Fraction(0), Fraction(5, 2)):
            for n in range(6):
                for l in range(6 - n):
                    assert spivey_degenerate_r_dowling(m, r, n, l).passed


def test_classical_limit_certificates():
    for m in (1, 2):
        for r in (Fraction(0), Fraction(2), Fraction(5, 2)):
            for n in range(4):
                for l in range(4 - n):
                    deg = spivey_degenerate_r_dowling(m, r, n, l)
                    lim = r_dowling_classical_limit(m, r, n, l)
                    assert lim.passed, (m, r, n, l)
                    assert lim.identity == "r-dowling-classical-limit"
                    # the limit certificate's sides are the L = 0 shadow
                    assert lim.lhs == deg.lhs.subst_lambda(0)


def test_certificate_json_shape():
    c = spivey_degenerate_r_dowling(2, Fraction(5, 2), 1, 1)
    d = c.to_json_dict()
    assert d["identity"] == "spivey-deg-r-dowling"
    assert d["pass"] is True
    assert d["params"] == {"l": 1, "m": 2, "n": 1, "r": "5/2"}
    assert d["lhs"] == d["rhs"]
    d = spivey_degenerate_r_dowling(2, 2, 1, 1).to_json_dict()
    assert d["params"]["r"] == 2  # integral r serializes as an int


def test_certificate_failure_is_detected():
    c = make_certificate("spivey-deg-bell", {"n": 1, "m": 1},
                         bell_degenerate(2), bell_degenerate(3))
    assert not c.passed
    assert c.to_json_dict()["pass"] is False


def test_run_identity_dispatch():
    assert run_identity("spivey-classical", n=2, m=2).passed
    assert run_identity("spivey-deg-bell", n=2, m=2).passed
    assert run_identity("spivey-deg-dowling", m=2, n=1, l=2).passed
    assert run_identity("spivey-deg-r-dowling", m=2, r=Fraction(1, 2), n=1, l=2).passed
    assert run_identity("r-dowling-classical-limit", m=2, r=1, n=1, l=2).passed
    with pytest.raises(ValueError):
        run_identity("nope", n=1)


def test_certificates_are_hashable_and_frozen():
    c = spivey_classical(1, 1)
    assert isinstance(hash(c), int)
    with pytest.raises(AttributeError):
        c.identity = "other"


def test_preconditions():
    with pytest.raises(ValueError):
        spivey_degenerate_bell(-1, 0)
    with pytest.raises(ValueError):
        spivey_degenerate_dowling(0, 1, 1)
    with pytest.raises(ValueError):
        spivey_degenerate_r_dowling(2, Fraction(-1, 2), 1, 1)
