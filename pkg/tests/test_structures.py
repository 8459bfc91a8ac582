from itertools import combinations

import pytest

from elastic_matroids import catalog
from elastic_matroids.connectivity import is_three_connected
from elastic_matroids.core import delete, dual, rank_function_equal
from elastic_matroids.errors import PreconditionError
from elastic_matroids.structures import (
    TRIANGLE,
    cosegments,
    fan_witnesses,
    fans,
    has_fan_ordering,
    has_four_element_fan,
    is_fan_ordering,
    is_theta_restriction,
    segments,
    theta_separators,
    triads,
    triangles,
)
from elastic_matroids.subsets import bit, from_indices, popcount


def S(m, labels):
    return m.subset(labels.split())


def test_mk4_triangles_and_triads():
    m = catalog.mk4()
    # K4: 3-cycles are the vertex triples, 3-bonds are the vertex stars
    assert len(triangles(m)) == 4
    assert len(triads(m)) == 4
    stars = {from_indices(i for i, lab in enumerate(m.labels) if str(v) in lab) for v in range(1, 5)}
    assert set(triads(m)) == stars


def test_u48_no_triangles_or_triads():
    m = catalog.uniform(4, 8)
    assert triangles(m) == [] and triads(m) == []


def test_theta4_triangles_are_w_triples():
    m = catalog.theta(4)
    w = [m.index(f"w{i}") for i in range(1, 5)]
    assert set(triangles(m)) == {from_indices(c) for c in combinations(w, 3)}


def test_segments_and_cosegments_of_theta4():
    m = catalog.theta(4)
    assert [s.elements for s in segments(m)] == [S(m, "w1 w2 w3 w4")]
    assert [s.elements for s in cosegments(m)] == [S(m, "z1 z2 z3 z4")]
    assert segments(m)[0].closed


def test_u25_is_one_segment():
    m = catalog.uniform(2, 5)
    assert [s.elements for s in segments(m)] == [m.ground]


def test_u48_no_segments():
    m = catalog.uniform(4, 8)
    # every 3-subset has rank 3, so nothing of size 3 lies on a line
    assert all(m.rank(from_indices(c)) == 3 for c in combinations(range(8), 3))
    assert segments(m) == []


def test_segments_pick_one_per_parallel_class():
    from elastic_matroids.core import LinearMatroid

    m = LinearMatroid(5, [(1, 0), (2, 0), (0, 1), (1, 1)], ["a", "a2", "b", "c"])
    got = sorted(tuple(m.names(s.elements)) for s in segments(m))
    assert got == [("a", "b", "c"), ("a2", "b", "c")]


# -- fans -------------------------------------------------------------------


def test_wheel4_every_element_in_a_4_fan():
    m = catalog.wheel(4)
    covered = 0
    for f in fans(m):
        if len(f) >= 4:
            covered |= f.elements
    assert covered == m.ground


def test_theta4_has_no_4_fans():
    assert not has_four_element_fan(catalog.theta(4))
    assert all(len(f) == 3 for f in fans(catalog.theta(4)))


def test_theta3_minus_is_a_5_fan():
    m = catalog.theta_minus(3)
    found = fans(m, check=False)
    assert [len(f) for f in found] == [5]
    assert found[0].elements == m.ground


def test_fans_need_three_connected():
    with pytest.raises(PreconditionError):
        fans(catalog.theta_minus(3))


@pytest.mark.parametrize("m", [catalog.wheel(4), catalog.wheel(5), catalog.whirl(5), catalog.mk4(), catalog.glued_theta()])
def test_fan_witnesses_recomputed_and_reversible(m):
    tri = set(triangles(m))
    tad = set(triads(m))
    for f in fans(m):
        for i, kind in enumerate(f.witness_types):
            triple = from_indices(f.order[i : i + 3])
            assert triple in (tri if kind == TRIANGLE else tad)
        for a, b in zip(f.witness_types, f.witness_types[1:]):
            assert a != b
        assert is_fan_ordering(m, tuple(reversed(f.order)))
        assert f.order[0] <= f.order[-1]


def test_spoke_and_rim_ends():
    m = catalog.wheel(4)
    order = [m.index(x) for x in ("s1", "r1", "s2", "r2")]
    types = fan_witnesses(m, order)
    assert types == ("triangle", "triad")
    from elastic_matroids.structures import Fan

    f = Fan(tuple(order), types)
    assert f.spoke_end == m.index("s1")
    assert f.rim_end == m.index("r2")


def test_has_fan_ordering():
    m = catalog.wheel(4)
    assert has_fan_ordering(m, S(m, "s2 r1 s1 r2"))
    assert not has_fan_ordering(m, S(m, "s1 r1 s3 r3"))


# -- Theta ------------------------------------------------------------------


@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_theta_recognised_with_defining_sets(n):
    m = catalog.theta(n)
    w = m.subset(f"w{i}" for i in range(1, n + 1))
    z = m.subset(f"z{i}" for i in range(1, n + 1))
    wit = is_theta_restriction(m, w, z)
    assert wit is not None and wit.kind == "theta" and wit.n == n
    assert all(m.labels[a][1:] == m.labels[b][1:] for a, b in wit.partners)
    # self-duality: the roles swap in the dual
    back = is_theta_restriction(dual(m), z, w)
    assert back is not None and back.kind == "theta"


def test_theta5_minus_recognised():
    t = catalog.theta(5)
    m = delete(t, t.subset(["w1"]))
    w = m.subset(["w2", "w3", "w4", "w5"])
    z = m.subset(f"z{i}" for i in range(1, 6))
    wit = is_theta_restriction(m, w, z)
    assert wit.kind == "theta-minus" and wit.n == 5
    assert m.labels[wit.unpartnered] == "z1"


def test_theta3_restriction_is_mk4():
    m = catalog.theta(3)
    wit = is_theta_restriction(m, m.subset(["w1", "w2", "w3"]), m.subset(["z1", "z2", "z3"]))
    assert wit.n == 3
    mapping = {"w1": "23", "w2": "13", "w3": "12", "z1": "14", "z2": "24", "z3": "34"}
    assert rank_function_equal(m, catalog.mk4(), mapping)


def test_theta_restriction_rejects_wrong_sets():
    m = catalog.theta(4)
    assert is_theta_restriction(m, S(m, "w1 w2 w3 w4"), S(m, "z1 z2")) is None
    assert is_theta_restriction(m, S(m, "z1 z2 z3 z4"), S(m, "w1 w2 w3 w4")) is None


def test_theta_separators_of_glued(glued):
    seps = theta_separators(glued)
    full = [s for s in seps if s.kind == "theta" and s.side == "primal"]
    assert len(full) == 1
    assert full[0].n == 4
    assert glued.names(full[0].elements) == ["w1", "w2", "w3", "w4", "z1", "z2", "z3", "z4"]


@pytest.mark.parametrize("m", [catalog.uniform(4, 8)])
def test_no_separators_without_segments(m):
    assert segments(m) == [] and cosegments(m) == []
    assert theta_separators(m) == []


def test_wheel5_has_no_full_theta_separator():
    # rank >= 4 theta restrictions would need a 3-point line; the wheel has none
    m = catalog.wheel(5)
    assert segments(m) == [] or all(popcount(s.elements) == 3 for s in segments(m))
    assert all(s.n == 3 for s in theta_separators(m))
    assert not any(s.kind == "theta" for s in theta_separators(m))


def test_theta_separators_need_rank_and_corank_four():
    assert theta_separators(catalog.mk4()) == []
    assert theta_separators(catalog.uniform(3, 7)) == []


def test_theta_rank_identity_with_two_outside_elements():
    m = catalog.glued_theta(4, 7)
    checked = 0
    for s in theta_separators(m):
        if s.kind == "theta" and s.side == "primal":
            assert popcount(m.ground & ~s.elements) >= 2
            assert m.rank() == delete(m, s.elements).rank() + s.n - 2
            checked += 1
    assert checked == 1


def test_theta_rank_identity_needs_two_outside_elements(glued):
    # one element outside S may leave lambda(S) = 1; the identity then holds for M \ Z only
    for m in (glued, catalog.theta(5)):
        s = next(s for s in theta_separators(m) if s.kind == "theta" and s.side == "primal")
        assert popcount(m.ground & ~s.elements) <= 1
        assert m.rank() != delete(m, s.elements).rank() + s.n - 2
        assert m.rank() == delete(m, s.z).rank() + s.n - 2


@pytest.mark.parametrize("m", [catalog.theta(4), catalog.uniform(2, 6), catalog.glued_theta()])
def test_long_segment_elements_delete_to_3_connected(m):
    checked = 0
    for seg in segments(m):
        if popcount(seg.elements) >= 4:
            for i in range(m.size):
                if seg.elements >> i & 1:
                    assert is_three_connected(delete(m, bit(i)))
                    checked += 1
    assert checked
