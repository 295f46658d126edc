from hypothesis import given, strategies as st
import pytest

from knotpair.laurent import parse_laurent, ONE, ZERO, T, LaurentPoly
from knotpair.linalg import matmul, transpose, int_det
from knotpair.quotient import QElem
from knotpair.seifert import (seifert_data, alexander_from_seifert, blanchfield_gram, cbl_gram,
                              kappa_apply, kappa_vectors, congruent, SeifertError, GramForm,
                              HERMITIAN)

P = parse_laurent
TREFOIL_V = [[-1, 1], [0, -1]]


def test_alexander_examples():
    assert alexander_from_seifert(TREFOIL_V).delta == P("t^2-t+1")
    assert alexander_from_seifert([[1, 1], [0, -1]]).delta == P("t^2-3t+1")
    assert alexander_from_seifert([[1, 1], [0, 1]]).delta == P("t^2-t+1")


def test_seifert_errors():
    with pytest.raises(SeifertError):
        seifert_data([[1]])
    with pytest.raises(SeifertError):
        seifert_data([[1, 0], [0]])
    with pytest.raises(SeifertError):
        seifert_data([[0, 0], [0, 0]])


def test_trefoil_blanchfield_entry():
    s = seifert_data(TREFOIL_V)
    m = s.modulus
    # (1 - t) adj_11 = (1 - t)^2 = -t mod Delta against the raw determinant
    assert QElem((ONE - T) * s.adj[0][0], m) == m(-T)
    g = blanchfield_gram(s)
    # stored against the symmetric representative Delta_s = t^-1 det
    assert s.ref_unit == T.bar()
    assert g.entries[0][0] == m(-T) * m(s.ref_unit)
    assert g.entries[0][0] == m(-ONE)
    assert g.symmetry == HERMITIAN and g.unit == ONE


def test_unknot_is_empty():
    s = seifert_data([])
    assert blanchfield_gram(s).entries == []
    assert cbl_gram(s).entries == []


def test_kappa_examples():
    s = seifert_data(TREFOIL_V)
    m = s.modulus
    assert all(x.is_zero() for x in kappa_apply(s, [ZERO, ZERO]))
    assert kappa_apply(s, [ONE, ZERO]) == [m(ONE - T), m(ONE)]
    with pytest.raises(ValueError):
        kappa_apply(s, [ONE])


def test_kappa_is_linear():
    s = seifert_data([[1, 1], [0, -1]])
    m = s.modulus
    a, v, w = m(P("2-t")), [P("t"), P("3")], [P("1-t^2"), P("t^-1")]
    lhs = kappa_apply(s, [a.rep * x + y for x, y in zip(v, w)])
    rhs = [a * x + y for x, y in zip(kappa_apply(s, v), kappa_apply(s, w))]
    assert lhs == rhs


def test_cbl_rejects_foreign_sections():
    s = seifert_data(TREFOIL_V)
    with pytest.raises(ValueError):
        cbl_gram(s, sections=[[ONE, ONE], [ONE, ONE]])


def test_cbl_section_independence():
    s = seifert_data(TREFOIL_V)
    d = s.modulus.delta
    base = [[s.adj[i][j] for i in range(2)] for j in range(2)]
    shifted = [[x + d * T for x in col] for col in base]
    assert cbl_gram(s, sections=shifted).entries == cbl_gram(s).entries


def test_gram_text_round_trip():
    g = blanchfield_gram(seifert_data([[1, 1], [0, -1]]))
    h = GramForm.from_text(g.to_text())
    assert h.entries == g.entries


# genus one: V - V' is the standard symplectic form whatever a, b, c are
genus_one = st.tuples(st.integers(-4, 4), st.integers(-4, 4), st.integers(-4, 4)).map(
    lambda abc: [[abc[0], abc[1]], [abc[1] - 1, abc[2]]])

unimodular = st.lists(st.tuples(st.integers(0, 1), st.integers(-2, 2)), min_size=1, max_size=4).map(
    lambda ops: _elementary_product(ops))


def _elementary_product(ops):
    p = [[1, 0], [0, 1]]
    for which, k in ops:
        e = [[1, k], [0, 1]] if which == 0 else [[1, 0], [k, 1]]
        p = matmul(p, e)
    return p


def _nontrivial(v):
    return seifert_data(v).modulus.degree > 0


@given(genus_one)
def test_cbl_equals_blanchfield_random(v):
    if not _nontrivial(v):
        return
    s = seifert_data(v)
    assert cbl_gram(s).entries == blanchfield_gram(s).entries


@given(genus_one)
def test_kernel_membership_random(v):
    if not _nontrivial(v):
        return
    s = seifert_data(v)
    for vec in kappa_vectors(s):
        for row in s.presentation:
            acc = ZERO
            for a, x in zip(row, vec):
                acc = acc + a * x.rep
            assert QElem(acc, s.modulus).is_zero()


@given(genus_one, unimodular)
def test_congruence_naturality(v, p):
    if not _nontrivial(v):
        return
    assert abs(int_det(p)) == 1
    s, s2 = seifert_data(v), seifert_data(congruent(v, p))
    assert s2.modulus == s.modulus
    g, g2 = blanchfield_gram(s), blanchfield_gram(s2)
    m = s.modulus
    # A' = P' A P gives A'^-1 = P^-1 A^-1 P^-T; with det P = 1 adj'(A') = adj(P) adj(A) adj(P')
    pinv = [[p[1][1], -p[0][1]], [-p[1][0], p[0][0]]]
    sgn = int_det(p)
    lhs = [[g2.entries[i][j] for j in range(2)] for i in range(2)]
    rhs = [[sum((g.entries[k][l] * (pinv[i][k] * pinv[j][l] * sgn * sgn)
                 for k in range(2) for l in range(2)), m.zero()) for j in range(2)] for i in range(2)]
    assert lhs == rhs
