import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from elastic_matroids import catalog
from elastic_matroids.connectivity import is_three_connected
from elastic_matroids.core import corank, dual
from elastic_matroids.elasticity import (
    contractible_by_definition,
    deletable_by_definition,
    elasticity_report,
    is_contractible,
    is_deletable,
    is_elastic,
)
from elastic_matroids.errors import PreconditionError
from elastic_matroids.structures import fans, theta_separators
from elastic_matroids.subsets import bit, elements

from conftest import small_corpus


def test_theta4_segment_and_cosegment_elements():
    m = catalog.theta(4)
    for i in range(1, 5):
        assert not is_contractible(m, m.index(f"w{i}"))
        assert not is_deletable(m, m.index(f"z{i}"))
        # Bixby: the other half holds
        assert is_deletable(m, m.index(f"w{i}"))
        assert is_contractible(m, m.index(f"z{i}"))


@pytest.mark.parametrize("m", [catalog.uniform(3, 6), catalog.uniform(3, 7), catalog.mk4(), catalog.random_linear(5, 3, 8, seed=4)])
def test_rank_three_all_contractible(m):
    assert m.rank() == 3
    assert all(is_contractible(m, e) for e in range(m.size))


@pytest.mark.parametrize("m", [catalog.uniform(4, 7), catalog.uniform(5, 8), catalog.random_linear(5, 5, 8, seed=4)])
def test_corank_three_all_deletable(m):
    assert corank(m, m.ground) == 3
    assert all(is_deletable(m, e) for e in range(m.size))


@pytest.mark.parametrize("name", sorted(small_corpus()))
def test_deletable_is_contractible_in_dual(corpus8, name):
    m = corpus8[name]
    d = dual(m)
    for e in range(m.size):
        assert is_deletable(m, e) == is_contractible(d, e)
        assert is_contractible(m, e) == is_deletable(d, e)


@pytest.mark.parametrize("name", sorted(small_corpus()))
def test_bixby_on_small_corpus(corpus8, name):
    rep = elasticity_report(corpus8[name])
    assert all(v.deletable or v.contractible for v in rep.verdicts)


def test_report_examples():
    assert elasticity_report(catalog.wheel(4)).num_elastic == 0
    assert elasticity_report(catalog.mk4()).num_elastic == 6
    assert elasticity_report(catalog.theta(4)).num_elastic == 0
    assert elasticity_report(catalog.uniform(4, 8)).counts() == (8, 8, 8)


def test_report_witnesses_present_exactly_when_failing():
    for m in (catalog.wheel(4), catalog.theta(4), catalog.glued_theta()):
        for v in elasticity_report(m).verdicts:
            assert (v.witness_cyclic is None) == v.deletable
            assert (v.witness_vertical is None) == v.contractible
            if v.witness_vertical:
                assert v.witness_vertical.e == v.element and v.witness_vertical.kind == "vertical"
            if v.witness_cyclic:
                assert v.witness_cyclic.kind == "cyclic"


def test_tiny_matroids_not_applicable():
    rep = elasticity_report(catalog.uniform(1, 3))
    assert not rep.applicable and rep.verdicts == ()
    with pytest.raises(PreconditionError):
        is_elastic(catalog.uniform(1, 3), 0)


def test_requires_three_connected():
    with pytest.raises(PreconditionError):
        elasticity_report(catalog.theta(2))
    with pytest.raises(PreconditionError):
        is_deletable(catalog.theta_minus(3), 0)


# -- elastic elements in fans -----------------------------------------------


def _fan_pattern_holds(m):
    elastic = set(elasticity_report(m).elastic)
    for f in fans(m):
        k = len(f)
        inside = {i for i, x in enumerate(f.order) if x in elastic}
        if k >= 6:
            assert not inside
        elif k == 5:
            assert inside <= {2}
        elif k == 4:
            assert inside in (set(), {1, 2})


@pytest.mark.parametrize("m", [catalog.wheel(4), catalog.wheel(5), catalog.whirl(4), catalog.whirl(5), catalog.glued_theta(4, 6)])
def test_fan_elastic_pattern(m):
    assert m.rank() >= 4 and corank(m, m.ground) >= 4
    _fan_pattern_holds(m)


def test_fan_elastic_pattern_on_random_instances():
    seen = 0
    for seed in range(40):
        m = catalog.random_linear(3, 4, 8, seed=seed)
        if corank(m, m.ground) < 4 or not any(len(f) >= 4 for f in fans(m)):
            continue
        _fan_pattern_holds(m)
        seen += 1
    assert seen


# -- elastic elements in theta-separators -----------------------------------


def test_theta_separator_has_no_elastic(glued):
    elastic = set(elasticity_report(glued).elastic)
    for s in theta_separators(glued):
        if s.kind == "theta" and s.n >= 4:
            assert not elastic & set(elements(s.elements))
    assert [glued.labels[e] for e in elastic] == ["e5"]


def test_theta_minus_separator_single_elastic(theta_minus_host):
    m = theta_minus_host
    assert is_three_connected(m)
    assert m.rank() >= 4 and corank(m, m.ground) >= 4
    elastic = set(elasticity_report(m).elastic)
    minus = [s for s in theta_separators(m) if s.kind == "theta-minus" and s.n >= 4 and s.side == "primal"]
    assert minus
    for s in minus:
        assert elastic & set(elements(s.elements)) == {s.unpartnered}
    assert m.labels[minus[0].unpartnered] == "z4"


# -- routes agree on random input ------------------------------------------


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(seed=st.integers(0, 10_000), shape=st.sampled_from([(3, 3, 6), (3, 3, 7), (5, 4, 8), (3, 4, 8)]))
def test_routes_agree_on_random_linear(seed, shape):
    p, r, n = shape
    m = catalog.random_linear(p, r, n, seed=seed)
    for e in range(m.size):
        # is_* raises ConsistencyError on disagreement
        assert is_deletable(m, e) == deletable_by_definition(m, e)
        assert is_contractible(m, e) == contractible_by_definition(m, e)
        assert is_deletable(m, e) or is_contractible(m, e)
