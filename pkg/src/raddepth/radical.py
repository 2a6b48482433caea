"""Radical powers of a finite indexed category, depth, and finite-type certificates."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from typing import Optional

from .ar import DEFAULT_MAX_DIM, DEFAULT_MAX_MODULES, enumerate_indecomposables
from .category import IndexedCategory
from .errors import EnumerationBound, PowerBound
from .linalg import Subspace
from .modules import Morph, hom_basis

log = logging.getLogger(__name__)

DEFAULT_MAX_POWER = 64
INFINITE = math.inf


def rad_basis(c: IndexedCategory, i: int, j: int) -> Subspace:
    """rad(X_i, X_j): all of Hom off the diagonal, rad End on it."""
    if i == j:
        return c.rad_end(i)
    return Subspace.full(c.hom(i, j).dim)


def _product(c: IndexedCategory, left: dict, right: dict, i: int, j: int) -> Subspace:
    """Span of ``g @ f`` with ``f`` in left(i,k) and ``g`` in right(k,j), over all k."""
    vecs = []
    for k in range(len(c)):
        a, b = left[(i, k)], right[(k, j)]
        if a.is_zero() or b.is_zero():
            continue
        for f in a.rows:
            for g in b.rows:
                vecs.append(c.compose(i, k, j, f, g))
    return Subspace(c.hom(i, j).dim, vecs)


@dataclass
class RadTable:
    """``powers[n-1][(i, j)]`` is rad^n(X_i, X_j) as a subspace of Hom coordinates."""
    category: IndexedCategory
    powers: list
    stabilization_index: Optional[int]
    rad_infinity: Optional[dict] = field(default=None)

    @property
    def stabilized(self) -> bool:
        return self.stabilization_index is not None

    def power(self, n: int) -> dict:
        if n < 1:
            raise ValueError("radical powers start at n = 1")
        if n <= len(self.powers):
            return self.powers[n - 1]
        if not self.stabilized:
            raise PowerBound(f"rad^{n} beyond the computed range", self)
        return self.powers[-1]

    def subspace(self, i: int, j: int, n: int) -> Subspace:
        return self.power(n)[(i, j)]

    def depth_of(self, i: int, j: int, coords) -> float:
        """Depth of the morphism with Hom(X_i, X_j) coordinates ``coords``."""
        if all(x == 0 for x in coords):
            return INFINITE
        n = 0
        while n < len(self.powers) and coords in self.powers[n][(i, j)]:
            n += 1
        if n == len(self.powers) and self.stabilized:
            return INFINITE
        return n

    def nonzero_pairs(self, n: int) -> list:
        return sorted(k for k, s in self.power(n).items() if not s.is_zero())


def rad_power_table(c: IndexedCategory, max_power: int = DEFAULT_MAX_POWER,
                    strict: bool = False) -> RadTable:
    """Iterate R^{n+1} = R^1 . R^n until every pair is fixed at once.

    With ``strict`` a missing fixed point raises :class:`PowerBound`; otherwise
    the table is returned unstabilized, as a lower approximation.
    """
    pairs = [(i, j) for i in range(len(c)) for j in range(len(c))]
    r1 = {p: rad_basis(c, *p) for p in pairs}
    powers = [r1]
    while len(powers) < max_power:
        prev = powers[-1]
        nxt = {(i, j): _product(c, r1, prev, i, j) for i, j in pairs}
        if nxt == prev:
            return RadTable(c, powers, len(powers), prev)
        powers.append(nxt)
    # one more product decides whether the last computed power is already fixed
    prev = powers[-1]
    if {(i, j): _product(c, r1, prev, i, j) for i, j in pairs} == prev:
        return RadTable(c, powers, len(powers), prev)
    table = RadTable(c, powers, None, None)
    if strict:
        raise PowerBound(f"no fixed point of the radical powers within max_power={max_power}",
                         table)
    log.info("radical powers did not stabilize within %d", max_power)
    return table


def locate_morphism(t: RadTable, f: Morph):
    """``(i, j, coords)`` of ``f`` in the table's Hom coordinates."""
    return t.category.transport(f)


def depth(t: RadTable, f: Morph) -> float:
    """Largest n with f in rad^n; 0 outside rad, ``math.inf`` on rad^infinity."""
    return t.depth_of(*locate_morphism(t, f))


def rad_inf_square(t: RadTable) -> dict:
    if not t.stabilized:
        raise PowerBound("rad^infinity needs a stabilized table", t)
    c = t.category
    return {(i, j): _product(c, t.rad_infinity, t.rad_infinity, i, j)
            for i in range(len(c)) for j in range(len(c))}


def is_rad_inf_square_zero(t: RadTable) -> bool:
    return all(s.is_zero() for s in rad_inf_square(t).values())


def is_rad_inf_zero(t: RadTable) -> bool:
    return t.stabilized and all(s.is_zero() for s in t.rad_infinity.values())


@dataclass
class SimpleEnvelope:
    vertex: str
    simple: object
    projective: object
    injective: object
    pi: Morph
    iota: Morph
    theta: Morph


def simple_envelopes(algebra) -> dict:
    """Projective cover, injective envelope and their composite for every simple."""
    out = {}
    for v in algebra.vertices:
        s = algebra.simple(v)
        p, i = algebra.projective(v), algebra.injective(v)
        # both Hom spaces are one-dimensional: top of P(v) and socle of I(v)
        pi = hom_basis(p, s).basis[0]
        iota = hom_basis(s, i).basis[0]
        out[v] = SimpleEnvelope(v, s, p, i, pi, iota, iota @ pi)
    return out


@dataclass
class Clause:
    name: str
    passed: bool
    detail: str = ""


@dataclass
class FiniteTypeCertificate:
    status: str
    count: int
    clauses: list
    table: Optional[RadTable]
    category: Optional[IndexedCategory]
    message: str = ""

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)


def _fmt(d) -> str:
    return "inf" if d == INFINITE else str(d)


def finite_type_certificate(algebra, max_modules: int = DEFAULT_MAX_MODULES,
                            max_dim: int = DEFAULT_MAX_DIM,
                            max_power: int = DEFAULT_MAX_POWER) -> FiniteTypeCertificate:
    """FINITE(count) with the per-simple depth clauses, or UNDETERMINED with a bounded table."""
    try:
        c = enumerate_indecomposables(algebra, max_modules=max_modules, max_dim=max_dim)
    except EnumerationBound as exc:
        partial = IndexedCategory.from_modules(algebra, exc.found, full=False)
        table = rad_power_table(partial, max_power=max_power)
        return FiniteTypeCertificate("UNDETERMINED", len(partial), [], table, partial, str(exc))
    table = rad_power_table(c, max_power=max_power)
    clauses = [Clause("radical powers stabilize", table.stabilized,
                      f"N0={table.stabilization_index}")]
    if not table.stabilized:
        return FiniteTypeCertificate("FAIL", len(c), clauses, table, c)
    square = rad_inf_square(table)
    for v, env in simple_envelopes(algebra).items():
        dp_pi, dp_iota = depth(table, env.pi), depth(table, env.iota)
        clauses.append(Clause(f"dp(pi_{v}) finite", dp_pi != INFINITE, _fmt(dp_pi)))
        clauses.append(Clause(f"dp(iota_{v}) finite", dp_iota != INFINITE, _fmt(dp_iota)))
        i, j, coords = locate_morphism(table, env.theta)
        clauses.append(Clause(f"theta_{v} not in (rad^inf)^2", coords not in square[(i, j)]))
        clauses.append(Clause(f"(rad^inf)^2(P_{v}, I_{v}) = 0", square[(i, j)].is_zero()))
    clauses.append(Clause("rad^inf = 0", is_rad_inf_zero(table)))
    clauses.append(Clause("(rad^inf)^2 = 0", all(s.is_zero() for s in square.values())))
    status = "FINITE" if all(cl.passed for cl in clauses) else "FAIL"
    return FiniteTypeCertificate(status, len(c), clauses, table, c)
