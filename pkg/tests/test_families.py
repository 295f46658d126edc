from hypothesis import given, strategies as st
import pytest

from knotpair.laurent import parse_laurent, ONE, ZERO, T
from knotpair.quotient import Modulus
from knotpair.seifert import alexander_from_seifert
from knotpair.diagram import diagram_alexander, is_coloring
from knotpair.families import (PretzelParams, TorusParams, pretzel_seifert, pretzel_delta,
                               pretzel_core, pretzel_grams, pretzel_cbl_computed, pretzel_sign,
                               pretzel_reference_unit, pretzel_diagram, torus_delta,
                               torus_q_coefficient, torus_diagram, torus_family,
                               torus_coloring_generators, torus_weight_unit, bezout_pairs,
                               geometric)

P = parse_laurent

odd = st.integers(-9, 9).filter(lambda x: x % 2)
triples = st.tuples(odd, odd, odd).map(lambda x: PretzelParams(*x)).filter(
    lambda par: pretzel_delta(par).span() > 0)


def test_pretzel_small_case():
    par = PretzelParams(1, 1, 1)
    assert pretzel_seifert(par) == [[1, 1], [0, 1]]
    assert Modulus(pretzel_delta(par), knot=False).delta == P("t^2-t+1")
    assert pretzel_core(par) == [[ONE - T, -ONE], [T, ONE - T]]


def test_pretzel_params_must_be_odd():
    with pytest.raises(ValueError):
        PretzelParams(2, 3, 5)


def test_pretzel_delta_two_routes():
    par = PretzelParams(3, 5, 7)
    assert alexander_from_seifert(pretzel_seifert(par)).delta == \
        Modulus(pretzel_delta(par), knot=False).delta


@given(triples)
def test_pretzel_closed_form_matches_seifert(par):
    s, gc, gq = pretzel_grams(par)
    assert gc == pretzel_cbl_computed(par)
    m = s.modulus
    num, den = m(ONE + T.bar()), m(ONE - T.bar())
    for i in range(2):
        for j in range(2):
            assert gq.entries[i][j] * den == gc.entries[i][j] * num


@given(triples)
def test_pretzel_reference_sign(par):
    u = pretzel_reference_unit(par)
    assert u == pretzel_sign(par)
    # against the normalized Delta the computed Gram picks up that sign
    norm = pretzel_cbl_computed(par, reference="normalized")
    closed = pretzel_cbl_computed(par)
    assert all(a * pretzel_sign(par) == b for ra, rb in zip(norm.entries, closed.entries)
               for a, b in zip(ra, rb))


def test_pretzel_diagram_has_the_same_delta():
    for t in [(1, 1, 1), (3, 5, 7), (-3, 5, -7)]:
        par = PretzelParams(*t)
        kd = pretzel_diagram(par)
        assert len(kd) == sum(abs(x) for x in t)
        assert Modulus(diagram_alexander(kd), knot=False).delta == \
            Modulus(pretzel_delta(par), knot=False).delta


def test_torus_delta_examples():
    assert torus_delta(TorusParams(2, 3)).delta == P("t^2-t+1")
    assert torus_delta(TorusParams(2, 5)).delta == P("t^4-t^3+t^2-t+1")
    d = torus_delta(TorusParams(3, 4)).delta
    assert d.span() == 6 and d.evaluate(1) == 1


def test_torus_params_validation():
    with pytest.raises(ValueError):
        TorusParams(2, 4)
    with pytest.raises(ValueError):
        TorusParams(2, 3, 1, 1)
    assert TorusParams(2, 3).a * 3 + TorusParams(2, 3).b * 2 == 1


def test_torus_coefficient_trefoil():
    res = torus_q_coefficient(TorusParams(2, 3, 1, -1))
    m = torus_delta(TorusParams(2, 3))
    assert res.value == m(ONE + T) and res.unique


@pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (3, 4), (3, 5), (4, 5), (5, 7)])
def test_torus_coefficient_postcondition_and_bezout(m, n):
    mod = torus_delta(TorusParams(m, n))
    vals = []
    for a, b in bezout_pairs(n, m, bound=2 * n)[:3]:
        par = TorusParams(m, n, a, b)
        c = torus_q_coefficient(par).value
        lhs = c * mod((ONE - T ** (b * m) if b * m >= 0 else ONE - T.bar() ** (-b * m))
                      * (ONE - T ** (a * n) if a * n >= 0 else ONE - T.bar() ** (-a * n)))
        assert lhs == mod((ONE - T.bar()) * (n * m))
        vals.append(c)
    assert all(v == vals[0] for v in vals)
    assert mod.delta.span() == (m - 1) * (n - 1)


def test_geometric_sums():
    assert geometric(2, 1) == ZERO
    assert geometric(2, 3) == ONE + T ** 2
    for i in range(2, 6):
        assert geometric(3, i + 1) - geometric(3, i) == T ** (3 * (i - 1))


def test_torus_families():
    par = TorusParams(2, 3)
    mod = torus_delta(par)
    kd = torus_diagram(par)
    mono = torus_family(par, ZERO, ONE)
    assert len({str(v) for v in mono.values()}) == 1
    col = torus_family(par, ONE, ZERO)
    assert is_coloring(kd, col)
    assert len(torus_coloring_generators(par)) == 2


@pytest.mark.parametrize("m,n", [(2, 3), (2, 5), (3, 4)])
def test_torus_weight_unit(m, n):
    assert torus_weight_unit(TorusParams(m, n)) == -T
