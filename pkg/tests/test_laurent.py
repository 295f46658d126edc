from hypothesis import given
import pytest

from knotpair.laurent import LaurentPoly, parse_laurent, ONE, ZERO, T

from conftest import laurent_polys

P = parse_laurent


def test_products():
    assert (ONE - T) * T == T - T * T
    assert P("t^2-t+1") * P("t^2+t+1") == P("t^4+t^2+1")


def test_bar_examples():
    assert P("t^2-t+1").bar() == P("t^-2-t^-1+1")
    assert ZERO.bar() == ZERO
    p = P("2t^2-3t+2")
    assert p.bar().normalize()[0] == p


def test_normalize_examples():
    assert P("-t^-1+1-t").normalize() == (P("t^2-t+1"), P("-t"))
    assert P("t^2-3t+1").normalize() == (P("t^2-3t+1"), ONE)
    assert P("5t^7").normalize() == (P("5"), P("t^-7"))


def test_divexact_examples():
    assert P("t^4+t^2+1").divexact(P("t^2-t+1")) == P("t^2+t+1")
    assert P("t^2-t+1").divexact(P("t^2-t+1")) == ONE
    assert P("t+1").divexact(P("t^2-t+1")) is None


def test_evaluate():
    d = P("t^2-t+1")
    assert d.evaluate(1) == 1
    assert d.evaluate(-1) == 3
    assert ZERO.evaluate(5) == 0


def test_parser_forms():
    assert P("(t^2-t+1)^2") == P("t^4-2t^3+3t^2-2t+1")
    assert P("t^{-1}") == T.bar()
    assert P("3*t") == 3 * T
    with pytest.raises(ValueError):
        P("t^")


def test_units():
    assert P("-t^3").is_unit()
    assert not P("2t").is_unit()
    assert not (ONE + T).is_unit()


@given(laurent_polys(), laurent_polys(), laurent_polys())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + (-a) == ZERO


@given(laurent_polys(), laurent_polys())
def test_bar_is_ring_involution(a, b):
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()
    assert (a + b).bar() == a.bar() + b.bar()


@given(laurent_polys(), laurent_polys())
def test_divexact_inverts_multiplication(a, b):
    if b.is_zero():
        return
    assert (a * b).divexact(b) == a


@given(laurent_polys())
def test_normalize_unit_and_idempotence(a):
    if a.is_zero():
        return
    n, u = a.normalize()
    assert u.is_unit()
    assert a * u == n
    assert n.normalize() == (n, ONE)
    assert n.min_exp() == 0 and n.coeff(0) > 0


@given(laurent_polys())
def test_text_round_trip(a):
    assert P(str(a)) == a


@given(laurent_polys(), laurent_polys())
def test_evaluate_is_homomorphism(a, b):
    for x in (1, -1, 2):
        assert (a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x)


def test_normalize_rejects_zero():
    with pytest.raises((ValueError, ZeroDivisionError)):
        ZERO.normalize()
