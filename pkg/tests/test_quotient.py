from hypothesis import given, strategies as st
import pytest

from knotpair.laurent import parse_laurent, ONE, ZERO, T, LaurentPoly
from knotpair.quotient import (Modulus, QElem, ModulusMismatch, ZERO_CLASS, UNIT,
                               ZERO_DIVISOR, REGULAR_NONUNIT, vector_divide)

from conftest import laurent_polys

P = parse_laurent
TREFOIL = Modulus(P("t^2-t+1"))
FIG8 = Modulus(P("t^2-3t+1"))
M52 = Modulus(P("2t^2-3t+2"))
MODULI = [TREFOIL, FIG8, M52, Modulus(P("t^4-t^3+t^2-t+1")), Modulus(P("(t^2-t+1)^2"))]


def test_modulus_invariants():
    for m in MODULI:
        assert m.delta.min_exp() == 0
        assert m.delta.content() == 1
        assert abs(m.delta.evaluate(1)) == 1
        assert m.conj_twist * m.delta.bar() == m.delta
    assert TREFOIL.degree == 2


def test_modulus_rejections():
    with pytest.raises(ValueError):
        Modulus(P("2t^2+2"))
    with pytest.raises(ValueError):
        Modulus(P("t^2+1"))
    with pytest.raises(ValueError):
        Modulus(ZERO)
    assert Modulus(P("t^2+1"), knot=False).delta == P("t^2+1")


def test_equality_examples():
    m = TREFOIL
    assert m(T.bar()) == m(ONE - T)
    assert m(T) != m(ONE)
    x = m(P("3t^5-t"))
    assert x == x


def test_mismatched_moduli_raise():
    with pytest.raises(ModulusMismatch):
        TREFOIL(T) + FIG8(T)
    with pytest.raises(ModulusMismatch):
        TREFOIL(T) == FIG8(T)


def test_inverse_examples():
    m = TREFOIL
    assert m(ONE - T).inverse() == m(T)
    assert m.one().inverse() == m.one()
    assert m(ONE + T).inverse() is None


def test_inverse_of_one_plus_t_has_no_small_solution():
    # exhaustive check over a small coefficient box: (a + b t)(1 + t) is never 1
    m = TREFOIL
    hits = [(a, b) for a in range(-6, 7) for b in range(-6, 7)
            if m(a + b * T) * m(ONE + T) == m.one()]
    assert hits == []


def test_divide_examples():
    m = TREFOIL
    res = m(3 * T).divide(m(ONE + T))
    assert res.value == m(ONE + T) and res.unique
    res = m.one().divide(m(ONE - T))
    assert res.value == m(T) and res.unique
    assert m.zero().divide(m(ONE + T)).value.is_zero()


def test_divide_by_zero_divisor_is_not_unique():
    m = Modulus(P("(t^2-t+1)^2"))
    d = m(P("t^2-t+1"))
    res = m.zero().divide(d)
    assert res.value.is_zero() and not res.unique


def test_classify_examples():
    assert Modulus(P("(t^2-t+1)^2"))(P("t-1+t^-1")).classify() == ZERO_DIVISOR
    assert TREFOIL(ONE - T).classify() == UNIT
    assert Modulus(P("t^4-t^3+t^2-t+1"))(P("t^-1+2+t")).classify() == REGULAR_NONUNIT
    assert TREFOIL(P("t^2-t+1")).classify() == ZERO_CLASS


def test_conj_examples():
    m = TREFOIL
    assert m(T).conj() == m(ONE - T)
    assert m(LaurentPoly(5)).conj() == m(LaurentPoly(5))


def test_text_round_trip():
    x = FIG8(P("2t^3-t+4"))
    y = QElem.from_text(x.to_text())
    assert y == x
    with pytest.raises(ValueError):
        QElem.from_text("1 + t")


def test_vector_divide():
    m = TREFOIL
    g = [m(ONE), m(T)]
    lam = m(ONE - T)
    res = vector_divide([lam * g[0], lam * g[1]], g, m)
    assert res.value == lam


moduli = st.sampled_from(MODULI)


@given(moduli, laurent_polys(), laurent_polys(), laurent_polys())
def test_equality_is_a_congruence(m, a, b, k):
    shifted = a + k * m.delta
    assert m(a) == m(shifted)
    assert m(a) * m(b) == m(shifted) * m(b)
    assert m(a) + m(b) == m(shifted + b)


@given(moduli, laurent_polys(), laurent_polys())
def test_conj_is_ring_involution(m, a, b):
    x, y = m(a), m(b)
    assert x.conj().conj() == x
    assert (x * y).conj() == x.conj() * y.conj()
    assert (x + y).conj() == x.conj() + y.conj()


@given(moduli, laurent_polys(lo=-2, hi=2, bound=4, max_terms=3))
def test_inverse_multiplies_to_one(m, a):
    x = m(a)
    if x.is_zero():
        return
    inv = x.inverse()
    if inv is not None:
        assert inv * x == m.one()
        assert x.classify() == UNIT


@given(moduli, st.integers(-5, 5), st.sampled_from([1, -1]), laurent_polys())
def test_classify_products(m, k, s, a):
    u = m(LaurentPoly.monomial(s, k))
    assert (u * m(ONE - T)).classify() == UNIT
    assert (m.zero() * m(a)).classify() == ZERO_CLASS


@given(moduli, laurent_polys(lo=-2, hi=2, bound=5, max_terms=3),
       laurent_polys(lo=-2, hi=2, bound=5, max_terms=3))
def test_divide_postcondition(m, a, d):
    x, y = m(a), m(d)
    if y.is_zero():
        return
    res = (x * y).divide(y)
    assert res is not None
    assert res.value * y == x * y
