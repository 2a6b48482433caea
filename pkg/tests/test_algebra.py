from fractions import Fraction
import itertools

import pytest
from hypothesis import given, strategies as st

from raddepth.algebra import AlgebraPresentation, Path, Quiver, Relation
from raddepth.errors import NonAdmissible
from conftest import algebra


def monomial_dimension(vertices, arrows, zero_paths, max_len=8):
    """Count paths avoiding every zero path as a contiguous subpath."""
    total = len(vertices)
    frontier = [(a,) for a in arrows]
    for _ in range(max_len):
        keep = []
        for p in frontier:
            names = [a[0] for a in p]
            if any(tuple(names[i:i + len(z)]) == z for z in zero_paths
                   for i in range(len(names) - len(z) + 1)):
                continue
            keep.append(p)
        total += len(keep)
        frontier = [p + (a,) for p in keep for a in arrows if a[1] == p[-1][2]]
    return total


def make(vertices, arrows, relations=()):
    q = Quiver(vertices, arrows)
    rels = [Relation(tuple((Fraction(c), Path.from_arrows(q, p)) for c, p in terms))
            for terms in relations]
    return AlgebraPresentation(q, rels)


@pytest.mark.parametrize("name, dim", [("A1", 1), ("A2", 3), ("A3", 6), ("N3", 3),
                                       ("QH4", 5), ("kronecker", 4), ("C3-bc0-231", 9)])
def test_preset_dimensions(name, dim):
    assert algebra(name).dim == dim


def test_commutative_square():
    alg = make(["1", "2", "3", "4"],
               [("a", "1", "2"), ("b", "2", "4"), ("c", "1", "3"), ("d", "3", "4")],
               [[(1, ["a", "b"]), (-1, ["c", "d"])]])
    assert alg.dim == 9
    assert len(alg.basis_paths("1", "4")) == 1
    x = alg.normal_form("1", ["a", "b"])
    assert x == alg.normal_form("1", ["c", "d"])


def test_loop_without_relation_is_not_admissible():
    with pytest.raises(NonAdmissible):
        make(["v"], [("x", "v", "v")])


def test_opposite_has_reversed_arrows():
    op = algebra("QH4").opposite()
    assert op.dim == algebra("QH4").dim
    assert op.opposite() is algebra("QH4")
    assert {(a.name, a.source, a.target) for a in op.arrows} == {("a", "2", "1"), ("b", "3", "2")}


@pytest.mark.parametrize("name", ["A3", "QH4", "N3", "C3-bc0-231"])
def test_projectives_and_injectives_sum_to_algebra(name):
    alg = algebra(name)
    assert sum(alg.projective(v).dim for v in alg.vertices) == alg.dim
    assert sum(alg.injective(v).dim for v in alg.vertices) == alg.dim


def test_projective_dimension_vectors():
    alg = algebra("A3")
    assert [alg.projective(v).dims for v in alg.vertices] == [(1, 1, 1), (0, 1, 1), (0, 0, 1)]
    assert [alg.injective(v).dims for v in alg.vertices] == [(1, 0, 0), (1, 1, 0), (1, 1, 1)]


CYCLE = [("a", "1", "2"), ("b", "2", "3"), ("c", "3", "1")]


@given(st.lists(st.sampled_from([("a", "b"), ("b", "c"), ("c", "a"), ("a", "b", "c"),
                                  ("b", "c", "a"), ("c", "a", "b")]), min_size=1, max_size=3))
def test_monomial_cycle_dimension_matches_path_count(zeros):
    alg = make(["1", "2", "3"], CYCLE, [[(1, list(z))] for z in zeros])
    assert alg.dim == monomial_dimension(["1", "2", "3"], CYCLE, [tuple(z) for z in zeros])


@given(st.integers(1, 3), st.integers(2, 5))
def test_truncated_loop(k, n):
    alg = make(["v"], [("x", "v", "v")], [[(1, ["x"] * n)]])
    assert alg.dim == n
    for m in range(n, n + k):
        assert not any(alg.normal_form("v", ["x"] * m))
