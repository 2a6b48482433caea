import itertools

import pytest

from raddepth.modules import (Morph, column_map, direct_sum, row_map, solve_composition,
                              solve_precomposition)
from raddepth.partitions import (POSTPROJECTIVE, PREINJECTIVE, is_splitting_injective,
                                 is_splitting_projective, postprojective_epi_chain,
                                 postprojective_partition, preinjective_mono_chain,
                                 preinjective_partition, radical_morphisms_between,
                                 verify_cocover, verify_cover, verify_propdan)
from raddepth.radical import depth
from conftest import FINITE_PRESETS, algebra, category, certificate

PRESETS = [p for p in FINITE_PRESETS if p != "A1"]


def named(c, levels):
    return [sorted(c.names[i] for i in level) for level in levels]


def test_a2_levels():
    c = category("A2")
    assert named(c, postprojective_partition(c).levels) == [["[0,1]", "[1,1]"], ["[1,0]"]]
    assert named(c, preinjective_partition(c).levels) == [["[1,0]", "[1,1]"], ["[0,1]"]]


def test_a3_levels():
    c = category("A3")
    post, pre = postprojective_partition(c), preinjective_partition(c)
    assert named(c, post.levels) == [["[0,0,1]", "[0,1,1]", "[1,1,1]"],
                                     ["[0,1,0]", "[1,1,0]"], ["[1,0,0]"]]
    assert named(c, pre.levels) == [["[1,0,0]", "[1,1,0]", "[1,1,1]"],
                                    ["[0,1,0]", "[0,1,1]"], ["[0,0,1]"]]


def test_n3_levels():
    c = category("N3")
    assert named(c, postprojective_partition(c).levels) == [["[3]"], ["[2]"], ["[1]"]]
    assert named(c, preinjective_partition(c).levels) == [["[3]"], ["[2]"], ["[1]"]]


def epis_onto(c, n, pool, width=1):
    """All maps onto ``n`` from sums of at most two pool objects, small coefficients."""
    for size in (1, 2):
        for combo in itertools.combinations_with_replacement(pool, size):
            homs = [c.hom(i, n) for i in combo]
            ranges = [itertools.product(range(-width, width + 1), repeat=h.dim) for h in homs]
            for coeffs in itertools.product(*ranges):
                maps = [h.element(x) for h, x in zip(homs, coeffs)]
                f = maps[0] if size == 1 else row_map(maps, direct_sum([m.source for m in maps]))
                if f.is_surjective():
                    yield f


def monos_from(c, n, pool, width=1):
    for size in (1, 2):
        for combo in itertools.combinations_with_replacement(pool, size):
            homs = [c.hom(n, i) for i in combo]
            ranges = [itertools.product(range(-width, width + 1), repeat=h.dim) for h in homs]
            for coeffs in itertools.product(*ranges):
                maps = [h.element(x) for h, x in zip(homs, coeffs)]
                f = maps[0] if size == 1 else column_map(maps,
                                                         direct_sum([m.target for m in maps]))
                if f.is_injective():
                    yield f


@pytest.mark.parametrize("name", PRESETS)
def test_splitting_projective_by_brute_force(name):
    c = category(name)
    for n in range(len(c)):
        ok, _ = is_splitting_projective(c, n)
        x = c.objects[n]
        if ok:
            for f in epis_onto(c, n, range(len(c))):
                assert solve_composition(Morph.identity(x), f) is not None
        else:
            rad = [g for i in range(len(c)) for g in radical_morphisms_between(c, i, n)]
            assert row_map(rad, direct_sum([g.source for g in rad])).is_surjective()


@pytest.mark.parametrize("name", PRESETS)
def test_splitting_injective_by_brute_force(name):
    c = category(name)
    for n in range(len(c)):
        ok, _ = is_splitting_injective(c, n)
        x = c.objects[n]
        if ok:
            for f in monos_from(c, n, range(len(c))):
                assert solve_precomposition(Morph.identity(x), f) is not None
        else:
            rad = [g for j in range(len(c)) for g in radical_morphisms_between(c, n, j)]
            assert column_map(rad, direct_sum([g.target for g in rad])).is_injective()


@pytest.mark.parametrize("name", PRESETS)
def test_every_level_covers_and_cocovers_minimally(name):
    c = category(name)
    for part, check in ((postprojective_partition(c), verify_cover),
                        (preinjective_partition(c), verify_cocover)):
        for k in range(len(part.levels)):
            rep = check(c, part, k)
            assert rep.covers and rep.minimal, (k, rep.failures, rep.redundant)


@pytest.mark.parametrize("name", PRESETS)
def test_propdan(name):
    c, table = category(name), certificate(name).table
    for which in (POSTPROJECTIVE, PREINJECTIVE):
        rep = verify_propdan(c, which, table)
        assert rep.passed, rep.violations


@pytest.mark.parametrize("name", PRESETS)
def test_chains_through_levels(name):
    c, table = category(name), certificate(name).table
    pre, post = preinjective_partition(c), postprojective_partition(c)
    for m in range(len(c)):
        chain = preinjective_mono_chain(c, pre, m)
        k = pre.level_of(m)
        assert len(chain.steps) == k
        if k:
            assert chain.composite.is_injective()
            for step in chain.steps:
                assert step.is_injective()
        chain = postprojective_epi_chain(c, post, m)
        k = post.level_of(m)
        assert len(chain.steps) == k
        if k:
            assert chain.composite.is_surjective()
