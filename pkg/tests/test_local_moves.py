from hypothesis import given, strategies as st
import pytest

from knotpair.cocycle import FiniteAlexanderQuandle, QuandleError
from knotpair.local_moves import (LocalCrossing, double_delta_fragment, double_delta_closed,
                                  twist_tangle, twist_progression, twist_weight_closed,
                                  twist_weight_literal, local_weight, local_move_checks)

Q5 = FiniteAlexanderQuandle(5, 2)
Q7 = FiniteAlexanderQuandle(7, 3)
quandles = st.sampled_from([Q5, Q7, FiniteAlexanderQuandle(11, 2)])
colors = st.integers(0, 10)


def test_crossing_alpha_roles():
    assert LocalCrossing(1, "a", "b", "c").alpha() == "a"
    assert LocalCrossing(-1, "a", "b", "c").alpha() == "c"


@given(quandles, colors, colors, colors, colors, colors, colors, colors)
def test_double_delta_identity(q, a, b, c, d, c2, d2, s):
    qc = q.conjugate()
    s = s % q.n or 1
    f1 = double_delta_fragment(q, c, d, b, a)
    f2 = double_delta_fragment(qc, c2, d2, b, a)
    assert f1.check(q) and f2.check(qc)
    assert local_weight(f1, f2, q, s) == double_delta_closed(q, a, b, c2, d2, s)


@given(quandles, colors, colors, colors, colors)
def test_double_delta_vanishes_when_a_equals_b(q, a, c, d, c2):
    qc = q.conjugate()
    f1 = double_delta_fragment(q, c, d, a, a)
    f2 = double_delta_fragment(qc, c2, d, a, a)
    assert local_weight(f1, f2, q) == 0


@given(quandles, st.integers(0, 5), colors, colors, colors, colors, colors, colors)
def test_twist_colors_follow_progression(q, nh, a, x, y, a2, x2, y2):
    nc = 2 * nh + 1
    tg = twist_tangle(q, nc, a + x, a + y)
    assert tg.check(q)
    assert tg.colors["L0"] == twist_progression(q, a, x, y, 0, "alpha")
    assert tg.colors["R0"] == twist_progression(q, a, x, y, 0, "beta")


@given(quandles, st.integers(0, 5), colors, colors, colors, colors, colors, colors)
def test_twist_weight_closed_form(q, nh, a1, x1, y1, a2, x2, y2):
    qc = q.conjugate()
    nc = 2 * nh + 1
    t1 = twist_tangle(q, nc, a1 + x1, a1 + y1)
    t2 = twist_tangle(qc, nc, a2 + x2, a2 + y2)
    assert local_weight(t1, t2, q) == twist_weight_closed(q, nh, a2, x1, y1, x2, y2)


def test_single_crossing_twist():
    q, qc = Q5, Q5.conjugate()
    t1 = twist_tangle(q, 1, 3, 1)
    t2 = twist_tangle(qc, 1, 4, 2)
    cr1, cr2 = t1.crossings[0], t2.crossings[0]
    direct = cr1.sign * (t1.colors[cr1.alpha()] - t1.colors[cr1.over]) * (1 - q.t) \
        * t2.colors[cr2.over]
    assert local_weight(t1, t2, q) == direct % q.n


def test_first_term_with_y2_differs():
    # the variant with (a2 + y2) in the first term disagrees whenever x2 != y2 contributes
    q = Q7
    assert twist_weight_literal(q, 0, 1, 2, 0, 3, 1) != twist_weight_closed(q, 0, 1, 2, 0, 3, 1)


@pytest.mark.parametrize("n,t", [(5, 2), (7, 3)])
def test_randomized_driver(n, t):
    rep = local_move_checks(n, t, trials=300, seed=7)
    assert rep.ok
    assert rep.double_delta_fail == rep.twist_fail == rep.twist_coloring_fail == 0
    assert rep.twist_literal_fail > 0
    assert "status: pass" in rep.to_text()


def test_driver_is_reproducible():
    a = local_move_checks(5, 2, trials=50, seed=3)
    b = local_move_checks(5, 2, trials=50, seed=3)
    assert a.twist_literal_fail == b.twist_literal_fail


def test_driver_rejects_non_unit():
    with pytest.raises(QuandleError):
        local_move_checks(6, 3, trials=1)
