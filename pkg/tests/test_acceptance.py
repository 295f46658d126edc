"""
Acceptance suite: one PASS/FAIL line per criterion, collected in the
terminal summary.  Criteria that the implementation does not meet are
marked xfail(strict=True) with the observed numbers; their assertions
are the criteria as stated, not relaxed versions.
"""

import random
import time

import pytest

from knotpair.laurent import parse_laurent, ONE, ZERO, T, LaurentPoly
from knotpair.quotient import Modulus, ZERO_DIVISOR
from knotpair.seifert import (seifert_data, blanchfield_gram, cbl_gram, cbl_pair,
                              HERMITIAN, ANTIHERMITIAN)
from knotpair.diagram import diagram_alexander, coloring_generators, weight_gram
from knotpair.analysis import analyze
from knotpair.families import (PretzelParams, TorusParams, pretzel_grams, pretzel_seifert,
                               pretzel_delta, pretzel_kernel_vectors, pretzel_reference_unit,
                               torus_q_coefficient, torus_weight_unit, bezout_pairs)
from knotpair.local_moves import local_move_checks
from knotpair.cocycle import (FiniteAlexanderQuandle, cocycle_check, phi_from_psi, product_psi,
                              cocycle_invariant, colorings_linear, colorings_brute,
                              diagonal_weight)
from knotpair.suites import small_quandles, valid_psis

from conftest import ACCEPTANCE_LINES

P = parse_laurent

# (Delta, alpha) per knot of crossing number < 8
SMALL_KNOTS = {
    "3_1": ("t^2-t+1", "1"),
    "4_1": ("t^2-3t+1", "1"),
    "5_1": ("t^4-t^3+t^2-t+1", "t^{-1}+2+t"),
    "5_2": ("2t^2-3t+2", "1"),
    "6_1": ("2t^2-5t+2", "1"),
    "6_2": ("t^4-3t^3+3t^2-3t+1", "3t^{-1}-7+3t"),
    "6_3": ("t^4-3t^3+5t^2-3t+1", "t+t^{-1}"),
    "7_1": ("t^6-t^5+t^4-t^3+t^2-t+1", "3t^{-2}-2t^{-1}+4-2t+3t^2"),
    "7_2": ("3t^2-5t+3", "2t^{-1}-3+2t"),
    "7_3": ("2t^4-3t^3+3t^2-3t+2", "(-3+2t)(-2+3t^{-1})"),
    "7_4": ("4t^2-7t+4", "1"),
    "7_5": ("2t^4-4t^3+5t^2-4t+2", "2(2t^{-1}-3+2t)"),
    "7_6": ("t^4-5t^3+7t^2-5t+1", "t^{-1}-5+t"),
    "7_7": ("t^4-5t^3+9t^2-5t+1", "t^{-1}-4+t"),
}
SMALL_KNOTS_SECONDS = 120.0
SQUARE_DELTA_SECONDS = 60.0
LOCAL_TRIALS = 1000
LOCAL_SEED = 7


def record(n, ok, detail):
    line = f"criterion {n:2d}: {'PASS' if ok else 'FAIL'} - {detail}"
    ACCEPTANCE_LINES[n] = line
    print(line)
    return ok


_GRAMS = {}


def grams(rec):
    if rec.name not in _GRAMS:
        s = rec.seifert_data
        bl, cb = blanchfield_gram(s), cbl_gram(s)
        qg = weight_gram(rec.diagram, coloring_generators(rec.diagram, s.modulus))
        _GRAMS[rec.name] = (bl, cb, qg)
    return _GRAMS[rec.name]


def _witness_ok(rep):
    w = rep.witness
    target = rep.delta(P(rep.expected))
    return w is not None and rep.alpha.raw == target * w.multiplier * w.sign


@pytest.mark.xfail(strict=True, reason="5_1 and 7_3: computed alpha lies outside the norm orbit "
                                       "of the tabulated value")
def test_criterion_01_small_knots(db):
    t0 = time.perf_counter()
    misses = []
    for name, (delta, entry) in SMALL_KNOTS.items():
        rec = db.get(name)
        assert rec.modulus.delta == Modulus(P(delta)).delta
        assert rec.expected_alpha_value() == rec.modulus(P(entry))
        rep = analyze(rec)
        if not _witness_ok(rep):
            misses.append(f"{name} (got {rep.alpha.alpha})")
    secs = time.perf_counter() - t0
    ok = not misses and secs < SMALL_KNOTS_SECONDS
    record(1, ok, f"{len(SMALL_KNOTS) - len(misses)}/{len(SMALL_KNOTS)} match in {secs:.1f}s "
                  f"(limit {SMALL_KNOTS_SECONDS:.0f}s); misses: {', '.join(misses) or 'none'}")
    assert ok


@pytest.mark.xfail(strict=True, reason="8_20: computed alpha is 2(t^-1 - 1 + t), twice the tabulated value")
def test_criterion_02_square_delta_knots(db):
    t0 = time.perf_counter()
    parts, ok = [], True
    for name, entry in (("8_20", "t-1+t^{-1}"), ("11_73", "0")):
        rec = db.get(name)
        assert rec.modulus.delta == P("(t^2-t+1)^2")
        assert rec.expected_alpha_value() == rec.modulus(P(entry))
        rep = analyze(rec)
        match = _witness_ok(rep)
        verdict = rep.verdict.label == "not recoverable"
        ok = ok and match and verdict
        parts.append(f"{rec.name}: alpha {rep.alpha.alpha} vs {entry} "
                     f"{'match' if match else 'MISMATCH'}, verdict {rep.verdict.label}")
    secs = time.perf_counter() - t0
    ok = ok and secs < SQUARE_DELTA_SECONDS
    record(2, ok, "; ".join(parts) + f"; {secs:.1f}s (limit {SQUARE_DELTA_SECONDS:.0f}s)")
    assert ok


def test_criterion_03_two_blanchfield_formulas(db):
    bad = []
    for rec in db:
        bl, cb, _ = grams(rec)
        n = len(bl)
        if not all(bl.entries[i][j] == cb.entries[i][j] for i in range(n) for j in range(n)):
            bad.append(rec.name)
    ok = record(3, not bad and len(db) > 0,
                f"{len(db) - len(bad)}/{len(db)} records agree entrywise")
    assert ok


def test_criterion_04_alexander_routes(db):
    bad = []
    for rec in db:
        d_seifert = Modulus(seifert_data(rec.seifert).det).delta
        for kd in [rec.diagram] + rec.alt_diagrams:
            d_diag = diagram_alexander(kd)
            u = d_diag.divexact(d_seifert)
            if u is None or not u.is_unit():
                bad.append(rec.name)
        if abs(d_seifert.evaluate(1)) != 1:
            bad.append(rec.name + " (Delta(1))")
    ok = record(4, not bad, f"{len(db)} records, Seifert and diagram routes agree up to +-t^k, "
                            f"Delta(1) = +-1; failures: {bad or 'none'}")
    assert ok


def test_criterion_05_single_symmetry_unit(db):
    u = ONE
    bad = []
    for rec in db:
        bl, _, qg = grams(rec)
        if not bl.holds(HERMITIAN, u):
            bad.append(rec.name + " Bl")
        if not qg.holds(ANTIHERMITIAN, u):
            bad.append(rec.name + " Q")
    ok = record(5, not bad, f"u = {u} across {len(db)} records; failures: {bad or 'none'}")
    assert ok


def _pretzel_triples(count, seed):
    rng = random.Random(seed)
    odd = [x for x in range(-9, 10) if x % 2]
    out = []
    while len(out) < count:
        par = PretzelParams(*(rng.choice(odd) for _ in range(3)))
        if pretzel_delta(par).span() > 0:
            out.append(par)
    return out


def test_criterion_06_pretzel_closed_forms():
    fails = []
    triples = _pretzel_triples(20, seed=20)
    for par in triples:
        s, gc, gq = pretzel_grams(par)
        m = s.modulus
        u = m(pretzel_reference_unit(par, s))
        vecs = pretzel_kernel_vectors(par)
        wv = [[m(x) for x in v] for v in vecs]
        # the Seifert-side value is recomputed here straight from the kernel lifts
        same = all(gc.entries[i][j] == cbl_pair(s, vecs[i], wv[j]) * u
                   for i in range(2) for j in range(2))
        num, den = m(ONE + T.bar()), m(ONE - T.bar())
        ratio = all(gq.entries[i][j] * den == gc.entries[i][j] * num
                    for i in range(2) for j in range(2))
        if not (same and ratio):
            fails.append((par.p, par.q, par.r))
    ok = record(6, not fails, f"{len(triples)} seeded odd triples with |p|,|q|,|r| <= 9; "
                              f"closed form = Seifert and q/cbl = (1+t^-1)/(1-t^-1); failures: {fails or 'none'}")
    assert ok


def test_criterion_07_torus():
    fails = []
    pairs = [(m, n) for n in range(3, 8) for m in range(2, n) if __import__("math").gcd(m, n) == 1]
    for m, n in pairs:
        vals = set()
        for a, b in bezout_pairs(n, m, bound=2 * n)[:4]:
            res = torus_q_coefficient(TorusParams(m, n, a, b))
            vals.add(res.value.coords())
            if not res.unique:
                fails.append((m, n, "not unique"))
        if len(vals) != 1:
            fails.append((m, n, "depends on the Bezout pair"))
    units = {str(torus_weight_unit(TorusParams(m, n)))
             for m, n in ((2, 3), (2, 5), (2, 7), (3, 4), (3, 5))}
    ok = not fails and len(units) == 1 and "None" not in units
    record(7, ok, f"{len(pairs)} coprime pairs, coefficient exists and is Bezout independent; "
                  f"weight Gram = u c conj(y1) y2 with u in {sorted(units)}; failures: {fails or 'none'}")
    assert ok


def _local_reports():
    return {(n, t): local_move_checks(n, t, trials=LOCAL_TRIALS, seed=LOCAL_SEED)
            for n, t in ((5, 2), (7, 3))}


@pytest.mark.xfail(strict=True, reason="the twist identity as printed, with (a2 + y2), fails; "
                                       "the double-delta identity and the (a2 + x2) form hold")
def test_criterion_08_local_moves():
    reps = _local_reports()
    dd = sum(r.double_delta_fail for r in reps.values())
    col = sum(r.twist_coloring_fail for r in reps.values())
    lit = {k: r.twist_literal_fail for k, r in reps.items()}
    cor = sum(r.twist_fail for r in reps.values())
    ok = dd == 0 and col == 0 and all(v == 0 for v in lit.values())
    record(8, ok, f"{LOCAL_TRIALS} trials each over Z_5 t=2 and Z_7 t=3, seed {LOCAL_SEED}: "
                  f"double delta failures {dd}; twist as printed failures "
                  f"{lit[(5, 2)]} and {lit[(7, 3)]}; twist with (a2 + x2) failures {cor}")
    assert ok


def test_criterion_08_supporting_identities_hold():
    reps = _local_reports()
    assert all(r.double_delta_fail == 0 and r.twist_coloring_fail == 0 and r.twist_fail == 0
               for r in reps.values())


def test_criterion_09_cocycles(db):
    nphi = 0
    ok = True
    for q in small_quandles(7):
        for s in valid_psis(q):
            ok = ok and cocycle_check(phi_from_psi(q, product_psi(q, s)))[0]
            nphi += 1
    same = True
    for name in ("3_1", "4_1"):
        rec = db.get(name)
        assert rec.alt_diagrams
        for q in small_quandles(7):
            for s in valid_psis(q):
                c = phi_from_psi(q, product_psi(q, s))
                base = cocycle_invariant(rec.diagram, c)
                same = same and all(cocycle_invariant(kd, c) == base for kd in rec.alt_diagrams)
    checked, mism = 0, 0
    for rec in db:
        if rec.optional or len(rec.diagram) > 8:
            continue
        for q in small_quandles(7):
            cols = colorings_linear(rec.diagram, q)
            for s in valid_psis(q):
                psi = product_psi(q, s)
                c = phi_from_psi(q, psi)
                for col in cols:
                    i_phi = sum(cr.sign * c(col[cr.roles()[0]], col[cr.roles()[1]])
                                for cr in rec.diagram.crossings) % q.n
                    checked += 1
                    mism += i_phi != diagonal_weight(rec.diagram, q, psi, col)
    r3 = FiniteAlexanderQuandle(3, 2)
    n9 = len(colorings_brute(db.get("3_1").diagram, r3))
    ok = ok and same and mism == 0 and n9 == 9
    record(9, ok, f"{nphi} phi_psi cocycles valid; multisets equal across alternative diagrams "
                  f"of 3_1, 4_1: {same}; I_Phi = Q_psi(C, C) on {checked} colorings, "
                  f"{mism} mismatches; trefoil over R_3: {n9} colorings")
    assert ok


def test_criterion_10_unit_facts():
    d = P("t^2-t+1")
    inv = Modulus(d)(ONE - T).inverse()
    # multiplication oracle on representatives: (1 - t) t - 1 must be a multiple of Delta
    a = inv is not None and ((ONE - T) * inv.rep - 1).divexact(d) is not None \
        and (inv.rep - T).divexact(d) is not None
    b = ((ONE + T) * T - (2 * T - 1)).divexact(d) is not None
    d2 = d * d
    x = P("t-1+t^-1")
    # x t = Delta, so x is nonzero mod Delta^2 and x * x t^2 = Delta^2
    c = (x * T) == d and x.divexact(d2) is None and (x * x * T * T).divexact(d2) == ONE \
        and Modulus(d2)(x).classify() == ZERO_DIVISOR
    ok = a and b and c
    record(10, ok, f"(1-t)^-1 = t: {a}; (1+t)(1-t)^-1 = 2t-1: {b}; "
                   f"t-1+t^-1 zero divisor mod (t^2-t+1)^2: {c}")
    assert ok
