import pytest

from knotpair.suites import (run_suite, SUITES, random_pretzel_triples, crossing_number,
                             small_quandles, valid_psis)


def test_suite_names():
    assert set(SUITES) == {"table1", "table2", "cor33", "alexander", "symmetry", "pretzel",
                           "torus", "local", "cocycle", "units"}
    with pytest.raises(KeyError):
        run_suite("nope", None)


@pytest.mark.parametrize("name", ["symmetry", "pretzel", "units", "alexander"])
def test_passing_suites(db, name):
    res = run_suite(name, db)
    assert res.ok, res.to_text()
    assert res.to_text().startswith(f"{name}: PASS")


def test_table2_reports_both_knots(db):
    res = run_suite("table2", db, include_optional=True)
    assert res.data["11_73"] == {"match": True, "verdict": "not recoverable"}
    assert res.data["8_20"]["verdict"] == "not recoverable"
    assert any("(optional)" in ln for ln in res.lines)


def test_helpers():
    assert crossing_number("11n_73") == 11
    assert crossing_number("7_4") == 7
    triples = random_pretzel_triples(5, seed=1)
    assert triples == random_pretzel_triples(5, seed=1)
    for q in small_quandles(5):
        for s in valid_psis(q):
            assert (s * (q.t * q.t - 1)) % q.n == 0
