"""Splitting projectives and injectives, postprojective/preinjective partitions, covers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .category import IndexedCategory
from .errors import CoverFailure, EmptyLevelWithRemainder
from .linalg import Subspace, hstack, kernel, vstack
from .modules import (Morph, column_map, diagonal_map, direct_sum, radical_morphisms,
                      row_map, solve_composition)
from .radical import Clause, RadTable, rad_power_table

POSTPROJECTIVE = "POSTPROJECTIVE"
PREINJECTIVE = "PREINJECTIVE"


def restrict(c: IndexedCategory, removed) -> IndexedCategory:
    return c.remove(removed)


def radical_morphisms_between(c: IndexedCategory, i: int, j: int) -> list:
    if i == j:
        return radical_morphisms(c.objects[i])
    return c.hom(i, j).basis


def _image_spaces(target, maps: Sequence[Morph]) -> list:
    return [Subspace.column_space(hstack([f.mats[v] for f in maps], target.dims[v]))
            for v in range(len(target.dims))]


def _kernel_spaces(source, maps: Sequence[Morph]) -> list:
    return [kernel(vstack([f.mats[v] for f in maps], source.dims[v]))
            for v in range(len(source.dims))]


@dataclass
class TraceReject:
    index: int
    trace: list
    reject: list

    @property
    def trace_dim(self) -> int:
        return sum(s.dim for s in self.trace)

    @property
    def reject_dim(self) -> int:
        return sum(s.dim for s in self.reject)


def trace_reject(c: IndexedCategory, n: int) -> TraceReject:
    """Radical trace in and radical reject of object ``n`` relative to ``c``."""
    x = c.objects[n]
    into = [f for i in range(len(c)) for f in radical_morphisms_between(c, i, n)]
    out = [f for j in range(len(c)) for f in radical_morphisms_between(c, n, j)]
    return TraceReject(n, _image_spaces(x, into), _kernel_spaces(x, out))


def is_splitting_projective(c: IndexedCategory, n: int):
    """True iff no non-split epi from add ``c`` ends at ``n``, i.e. the radical trace is proper."""
    tr = trace_reject(c, n)
    return tr.trace_dim < c.objects[n].dim, tr


def is_splitting_injective(c: IndexedCategory, n: int):
    tr = trace_reject(c, n)
    return tr.reject_dim > 0, tr


@dataclass
class Partition:
    kind: str
    levels: list
    infinite_part: list = field(default_factory=list)
    names: Optional[list] = None

    @property
    def summary(self) -> int:
        return len(self.levels) - 1

    def level_of(self, index: int) -> int:
        for k, level in enumerate(self.levels):
            if index in level:
                return k
        raise KeyError(index)

    def truncated(self, k: int) -> list:
        """Object indices not in levels 0..k-1."""
        earlier = {i for level in self.levels[:k] for i in level}
        return sorted(i for level in self.levels for i in level if i not in earlier)

    def named_levels(self) -> list:
        return [[self.names[i] for i in level] for level in self.levels]


def _partition(c: IndexedCategory, kind: str) -> Partition:
    test = is_splitting_projective if kind == POSTPROJECTIVE else is_splitting_injective
    remaining = list(range(len(c)))
    levels = []
    while remaining:
        sub = c.restrict(remaining)
        level = [remaining[k] for k in range(len(sub)) if test(sub, k)[0]]
        if not level:
            raise EmptyLevelWithRemainder(
                f"{kind.lower()} level {len(levels)} is empty with {len(remaining)} objects left")
        levels.append(level)
        remaining = [i for i in remaining if i not in level]
    return Partition(kind, levels, [], list(c.names))


def postprojective_partition(c: IndexedCategory) -> Partition:
    return _partition(c, POSTPROJECTIVE)


def preinjective_partition(c: IndexedCategory) -> Partition:
    return _partition(c, PREINJECTIVE)


def _trace_of(c: IndexedCategory, sources: Sequence[int], x: int) -> int:
    maps = [f for d in sources for f in c.hom(d, x).basis]
    if not maps:
        return 0
    return sum(s.dim for s in _image_spaces(c.objects[x], maps))


def _reject_of(c: IndexedCategory, x: int, targets: Sequence[int]) -> int:
    maps = [f for d in targets for f in c.hom(x, d).basis]
    if not maps:
        return c.objects[x].dim
    return sum(s.dim for s in _kernel_spaces(c.objects[x], maps))


@dataclass
class CoverReport:
    kind: str
    level: int
    covers: bool
    failures: list
    minimal: bool
    redundant: list

    @property
    def passed(self) -> bool:
        return self.covers and self.minimal


def _verify(c: IndexedCategory, partition: Partition, k: int, cover: bool) -> CoverReport:
    level = partition.levels[k]
    truncated = partition.truncated(k)

    def ok(members, x):
        if cover:
            return _trace_of(c, members, x) == c.objects[x].dim
        return _reject_of(c, x, members) == 0

    failures = [c.names[x] for x in truncated if not ok(level, x)]
    redundant = []
    for d in level:
        rest = [e for e in level if e != d]
        if all(ok(rest, x) for x in truncated):
            redundant.append(c.names[d])
    return CoverReport("cover" if cover else "cocover", k, not failures, failures,
                       not redundant, redundant)


def verify_cover(c: IndexedCategory, partition: Partition, k: int) -> CoverReport:
    """Every object at or after level k is a quotient of a sum from level k, minimally."""
    return _verify(c, partition, k, True)


def verify_cocover(c: IndexedCategory, partition: Partition, k: int) -> CoverReport:
    return _verify(c, partition, k, False)


def _greedy(c: IndexedCategory, x: int, level: Sequence[int], epi: bool):
    """Pick Hom basis maps between ``x`` and level objects, best gain first.

    Returns the assembled map and the level objects used, in order.
    """
    obj = c.objects[x]
    if epi:
        candidates = [(d, f) for d in level for f in c.hom(d, x).basis]
        measure = lambda fs: obj.dim - sum(s.dim for s in _image_spaces(obj, fs))
    else:
        candidates = [(d, f) for d in level for f in c.hom(x, d).basis]
        measure = lambda fs: sum(s.dim for s in _kernel_spaces(obj, fs))
    chosen: list = []
    gap = obj.dim
    while gap > 0:
        best, best_gap = None, gap
        for cand in candidates:
            g = measure([f for _, f in chosen] + [cand[1]])
            if g < best_gap:
                best, best_gap = cand, g
        if best is None:
            raise CoverFailure(f"level does not {'cover' if epi else 'cocover'} {c.names[x]}")
        chosen.append(best)
        gap = best_gap
    maps = [f for _, f in chosen]
    if len(maps) == 1:
        return maps[0], [chosen[0][0]]
    if epi:
        return row_map(maps, direct_sum([f.source for f in maps], c.algebra)), \
            [d for d, _ in chosen]
    return column_map(maps, direct_sum([f.target for f in maps], c.algebra)), \
        [d for d, _ in chosen]


def epi_from_cover(c: IndexedCategory, partition: Partition, x: int, k: int) -> Morph:
    """Epi onto object ``x`` from a sum of level-k objects."""
    if x in partition.levels[k]:
        return Morph.identity(c.objects[x])
    return _greedy(c, x, partition.levels[k], True)[0]


def mono_into_cocover(c: IndexedCategory, partition: Partition, x: int, k: int) -> Morph:
    """Mono from object ``x`` into a sum of level-k objects."""
    if x in partition.levels[k]:
        return Morph.identity(c.objects[x])
    return _greedy(c, x, partition.levels[k], False)[0]


@dataclass
class MonoChain:
    """Monos ``m -> Z_{k-1} -> ... -> Z_0``; ``summands[s]`` lists the objects making up each term."""
    start: int
    steps: list
    summands: list

    @property
    def composite(self) -> Optional[Morph]:
        if not self.steps:
            return None
        out = self.steps[0]
        for s in self.steps[1:]:
            out = s @ out
        return out


def preinjective_mono_chain(c: IndexedCategory, partition: Partition, m: int) -> MonoChain:
    """Chain of monos from ``m`` in level k through sums of level k-1, ..., 0 objects."""
    k = partition.level_of(m)
    steps, summands = [], [[m]]
    current = [m]
    for level in range(k - 1, -1, -1):
        pieces, targets = [], []
        for x in current:
            mono, objs = _greedy(c, x, partition.levels[level], False)
            pieces.append(mono)
            targets.extend(objs)
        if len(pieces) == 1:
            step = pieces[0]
        else:
            step = diagonal_map(pieces, direct_sum([p.source for p in pieces], c.algebra),
                                direct_sum([p.target for p in pieces], c.algebra))
        steps.append(step)
        summands.append(targets)
        current = targets
    return MonoChain(m, steps, summands)


@dataclass
class EpiChain:
    """Epis ``Z_0 -> ... -> Z_{k-1} -> m``; ``summands[s]`` lists the objects of each term,
    starting from ``Z_0``."""
    end: int
    steps: list
    summands: list

    @property
    def composite(self) -> Optional[Morph]:
        if not self.steps:
            return None
        out = self.steps[0]
        for s in self.steps[1:]:
            out = s @ out
        return out


def postprojective_epi_chain(c: IndexedCategory, partition: Partition, m: int) -> EpiChain:
    """Chain of epis onto ``m`` in level k from sums of level k-1, ..., 0 objects."""
    k = partition.level_of(m)
    steps, summands = [], [[m]]
    current = [m]
    for level in range(k - 1, -1, -1):
        pieces, sources = [], []
        for x in current:
            epi, objs = _greedy(c, x, partition.levels[level], True)
            pieces.append(epi)
            sources.extend(objs)
        if len(pieces) == 1:
            step = pieces[0]
        else:
            step = diagonal_map(pieces, direct_sum([p.source for p in pieces], c.algebra),
                                direct_sum([p.target for p in pieces], c.algebra))
        steps.insert(0, step)
        summands.insert(0, sources)
        current = sources
    return EpiChain(m, steps, summands)


def lift_through_epi(f: Morph, g: Morph) -> Optional[Morph]:
    """Some ``h`` with ``g @ h == f``, or None."""
    return solve_composition(f, g)


@dataclass
class PropReport:
    kind: str
    clauses: list

    @property
    def passed(self) -> bool:
        return all(cl.passed for cl in self.clauses)

    @property
    def violations(self) -> list:
        return [cl for cl in self.clauses if not cl.passed]


def verify_propdan(c: IndexedCategory, which: str, table: Optional[RadTable] = None,
                   partition: Optional[Partition] = None) -> PropReport:
    """Hom(M, N) = rad^i(M, N) for M in P_0, N in P_i (dually M in I_j, N in I_0)."""
    if table is None:
        table = rad_power_table(c)
    if partition is None:
        partition = (postprojective_partition(c) if which == POSTPROJECTIVE
                     else preinjective_partition(c))
    clauses = []
    if c.is_full_module_category:
        alg = c.algebra
        ends = ([alg.projective(v) for v in alg.vertices] if which == POSTPROJECTIVE
                else [alg.injective(v) for v in alg.vertices])
        located = [c.locate(x) for x in ends]
        clauses.append(Clause("hypothesis: " + ("projectives" if which == POSTPROJECTIVE
                                                else "injectives") + " present",
                              all(loc is not None for loc in located)))
    for lvl in range(1, len(partition.levels)):
        for a in partition.levels[0]:
            for b in partition.levels[lvl]:
                m, n = (a, b) if which == POSTPROJECTIVE else (b, a)
                full = Subspace.full(c.hom(m, n).dim)
                ok = table.subspace(m, n, lvl) == full
                clauses.append(Clause(f"Hom({c.names[m]},{c.names[n]}) = rad^{lvl}", ok,
                                      f"dim Hom {full.dim}, dim rad^{lvl} "
                                      f"{table.subspace(m, n, lvl).dim}"))
    return PropReport(which, clauses)
