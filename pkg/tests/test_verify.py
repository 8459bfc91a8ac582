import json

import pytest

from elastic_matroids import catalog, verify
from elastic_matroids.core import rank_function_equal
from elastic_matroids.documents import from_document
from elastic_matroids.elasticity import ElasticityReport, ElementVerdict
from elastic_matroids.errors import PreconditionError, ResourceError
from elastic_matroids.verify import (
    oracle_crosscheck,
    oracle_elasticity,
    oracle_rank_table,
    verify_bixby,
    verify_corollary2,
    verify_theorem1,
)

from conftest import small_corpus


@pytest.mark.parametrize("m", [catalog.wheel(5), catalog.theta(5), catalog.glued_theta()])
def test_bixby_examples(m):
    out = verify_bixby(m)
    assert out.passed and out.instances == m.size


def test_theorem1_wheel4_fan_disjunct():
    out = verify_theorem1(catalog.wheel(4))
    assert out.passed
    assert out.details["fired"]["ii"] > 0
    for row in out.details["triples"]:
        assert row["fired"]


def test_theorem1_glued_separator_disjunct(glued):
    out = verify_theorem1(glued)
    assert out.passed
    sep = set(catalog.theta_labels(4))
    rows = [r for r in out.details["triples"] if set(r["X"]) <= sep]
    assert rows and all("iii" in r["fired"] for r in rows)


def test_theorem1_u48_vacuous():
    out = verify_theorem1(catalog.uniform(4, 8))
    assert out.passed and out.instances == 0


def test_theorem1_deterministic():
    a = verify_theorem1(catalog.whirl(4)).to_dict()
    b = verify_theorem1(catalog.whirl(4)).to_dict()
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_corollary2_examples():
    out = verify_corollary2(catalog.mk4())
    assert out.passed and out.details == {"case": "small", "numElastic": 6}
    out = verify_corollary2(catalog.uniform(4, 8))
    assert out.passed and out.applicable and out.details["numElastic"] == 8
    out = verify_corollary2(catalog.wheel(4))
    assert out.passed and not out.applicable


def test_corollary2_tiny_not_applicable():
    out = verify_corollary2(catalog.uniform(1, 3))
    assert out.passed and not out.applicable


def test_verifiers_require_three_connected():
    for fn in (verify_bixby, verify_theorem1, verify_corollary2):
        with pytest.raises(PreconditionError):
            fn(catalog.theta(2))


@pytest.mark.parametrize("name", sorted(small_corpus()))
def test_crosscheck_small_corpus(corpus8, name):
    out = oracle_crosscheck(corpus8[name])
    assert out.passed, out.violations


def test_crosscheck_size_limit():
    with pytest.raises(ResourceError):
        oracle_crosscheck(catalog.uniform(3, 13))


def test_oracle_tables_stand_alone():
    m = catalog.theta(4)
    t = oracle_rank_table(m)
    assert t[m.ground] == 4 and t[0] == 0
    verdicts = oracle_elasticity(t, m.size)
    # w's are deletable only, z's contractible only
    assert verdicts == [(True, False)] * 4 + [(False, True)] * 4


def test_crosscheck_reports_a_planted_diff(monkeypatch):
    m = catalog.uniform(2, 4)
    real = verify.oracle_rank_table

    def broken(mm):
        t = list(real(mm))
        t[0b0011] = 1
        return t

    monkeypatch.setattr(verify, "oracle_rank_table", broken)
    out = oracle_crosscheck(m)
    assert not out.passed
    assert out.violations[0]["what"] == "rank"
    assert rank_function_equal(from_document(out.details["matroid"]), m)


def test_counterexample_round_trip(monkeypatch):
    m = catalog.random_linear(3, 3, 7, seed=5)

    def nothing_classified(mm):
        return ElasticityReport(mm.labels, tuple(ElementVerdict(e, False, False) for e in range(mm.size)))

    monkeypatch.setattr(verify, "elasticity_report", nothing_classified)
    out = verify_bixby(m)
    assert not out.passed and len(out.violations) == m.size
    cx = json.loads(json.dumps(out.to_dict()))["violations"][0]
    again = from_document(cx["matroid"])
    assert rank_function_equal(again, m)
    redo = verify_bixby(again)
    assert redo.violations[0]["e"] == cx["e"]
