import json
import random

from konno import staircase as st
from konno.corpus import (
    MAX_EXPONENT,
    ideal_corpus,
    pencil_corpus,
    random_pencil,
    run_corpus,
)


def test_ideal_corpus_shape():
    ideals = ideal_corpus(5, 200)
    assert len(ideals) == 200
    for J in ideals:
        assert J.has_finite_colength and not J.is_unit
        assert max(max(g) for g in J.generators) <= MAX_EXPONENT
    assert ideal_corpus(5, 200) == ideals


def test_pencils_have_rational_base_locus():
    rng = random.Random(3)
    for _ in range(10):
        P, r = random_pencil(rng, max_degree=4)
        assert 1 <= P.degree <= 4
        assert r.sums.sum_m_sq == P.degree ** 2
        assert r.genus >= 0


def test_run_corpus_small_passes():
    out = run_corpus(1, 10)
    assert list(out["suites"]) == ["hoskin_deligne", "multiplicity", "lech", "noether", "konno"]
    for s in out["suites"].values():
        assert s["failed"] == 0 and s["passed"] == 10


def test_same_seed_gives_identical_report():
    a = json.dumps(run_corpus(4, 8))
    b = json.dumps(run_corpus(4, 8))
    assert a == b


def test_mutation_hook_reports_one_failure():
    out = run_corpus(2, 1, mutate_index=0)
    failures = [(name, f) for name, s in out["suites"].items() for f in s["failures"]]
    assert len(failures) == 1
    name, dump = failures[0]
    assert name == "noether"
    assert dump["index"] == 0 and "f" in dump and "g" in dump


def test_pencil_corpus_deterministic():
    a = [(str(P.f), str(P.g)) for P, _ in pencil_corpus(9, 5)]
    b = [(str(P.f), str(P.g)) for P, _ in pencil_corpus(9, 5)]
    assert a == b


def test_corpus_contains_non_closed_ideals():
    ideals = ideal_corpus(1, 100)
    assert any(not st.is_integrally_closed(J) for J in ideals)
    assert any(st.is_integrally_closed(J) for J in ideals)
