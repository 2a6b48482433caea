"""Standard and costandard modules, Delta-filtrations, characteristic tilting modules,
and the Delta-good subcategory with its relative radical and partitions."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .ar import ProjPresentation, dim_ext1, ext1, extension_from_cocycle, pushout
from .category import IndexedCategory
from .errors import NonVanishingSelfExt
from .linalg import Subspace, hstack
from .modules import (Morph, Rep, cokernel_of, diagonal_map, direct_sum, dual,
                      factor_through_mono, hom_basis, is_indecomposable, is_isomorphic,
                      kernel_of, projective_sum, quotient, row_map, solve_precomposition)
from .partitions import (POSTPROJECTIVE, Partition, postprojective_partition,
                         preinjective_mono_chain, preinjective_partition, verify_propdan)
from .radical import (DEFAULT_MAX_POWER, INFINITE, Clause, RadTable, depth,
                      is_rad_inf_square_zero, rad_power_table)

log = logging.getLogger(__name__)


def _order(algebra, order) -> list:
    order = list(order) if order is not None else list(algebra.vertices)
    if sorted(order) != sorted(algebra.vertices):
        raise ValueError(f"qh order {order} is not a permutation of the vertices")
    return order


def _trace_spaces(target: Rep, sources: Sequence[Rep]) -> list:
    maps = [f for s in sources for f in hom_basis(s, target).basis]
    return [Subspace.column_space(hstack([f.mats[v] for f in maps], target.dims[v]))
            if maps else Subspace.zero(target.dims[v]) for v in range(len(target.dims))]


def standard_modules(algebra, order=None):
    """``(delta, pi)``: Delta(i) is P(i) modulo the trace of the P(j) with j later in the order."""
    order = _order(algebra, order)
    delta, pi = [], []
    for i, v in enumerate(order):
        p = algebra.projective(v)
        later = [algebra.projective(w) for w in order[i + 1:]]
        d, q = quotient(p, _trace_spaces(p, later))
        delta.append(d)
        pi.append(q)
    return delta, pi


def costandard_modules(algebra, order=None) -> list:
    """Nabla(i) = D Delta^op(i), the largest submodule of I(i) with factors up to i."""
    order = _order(algebra, order)
    return [dual(d) for d in standard_modules(algebra.opposite(), order)[0]]


@dataclass
class DeltaFiltration:
    """``layers[s] = (inclusion of M_{s+1} into the module, j)`` with M_{s+1}/M_s = Delta(j).

    Indices ``j`` are positions in the qh order, counted from 0.
    """
    module: Rep
    layers: list

    @property
    def indices(self) -> list:
        return [j for _, j in self.layers]

    def verify(self, qh: "QHData") -> bool:
        """Each successive quotient is isomorphic to the named standard module."""
        prev = None
        for inc, j in self.layers:
            if prev is None:
                layer = inc.source
            else:
                step = factor_through_mono(prev, inc)
                if step is None:
                    return False
                layer = cokernel_of(step)[0]
            if is_isomorphic(layer, qh.delta[j]) is None:
                return False
            prev = inc
        if not self.layers:
            return self.module.dim == 0
        return self.layers[-1][0].is_iso()


@dataclass
class QHData:
    algebra: object
    order: list
    delta: list
    nabla: list
    pi: list
    T: list = field(default_factory=list)
    beta: list = field(default_factory=list)
    X: list = field(default_factory=list)

    @property
    def n(self) -> int:
        return len(self.order)

    def label(self, j: int) -> str:
        return self.order[j]


def qh_data(algebra, order=None) -> QHData:
    order = _order(algebra, order)
    delta, pi = standard_modules(algebra, order)
    return QHData(algebra, order, delta, costandard_modules(algebra, order), pi)


def _surjections(m: Rep, d: Rep) -> Optional[Morph]:
    """A surjection ``m -> d`` among Hom basis elements, if ``d`` has simple top and one exists.

    Maps with image in rad d form a subspace; outside it a map is onto by Nakayama,
    so if any surjection exists a basis element is one.
    """
    for f in hom_basis(m, d).basis:
        if f.is_surjective():
            return f
    return None


def delta_filtration(qh: QHData, m: Rep, allowed: Optional[Sequence[int]] = None
                     ) -> Optional[DeltaFiltration]:
    """Backtracking search for a filtration by standard modules, or None."""
    allowed = list(range(qh.n)) if allowed is None else list(allowed)

    def search(x: Rep):
        if x.dim == 0:
            return []
        for j in allowed:
            d = qh.delta[j]
            if d.dim > x.dim:
                continue
            f = _surjections(x, d)
            if f is None:
                continue
            k, inc = kernel_of(f)
            below = search(k)
            if below is not None:
                return [(inc @ sub, jj) for sub, jj in below] + [(Morph.identity(x), j)]
        return None

    layers = search(m)
    return None if layers is None else DeltaFiltration(m, layers)


def delta_membership(qh: QHData, m: Rep) -> bool:
    """Ext^1(m, Nabla(j)) = 0 for every j."""
    return all(dim_ext1(m, nb) == 0 for nb in qh.nabla)


@dataclass
class QHReport:
    clauses: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)

    @property
    def witness(self) -> Optional[str]:
        bad = [c.name for c in self.clauses if not c.passed]
        return bad[0] if bad else None


def is_quasi_hereditary(algebra, qh: QHData) -> QHReport:
    """End Delta(i) = k, and ker pi(i) is filtered by Delta(j) with j later than i."""
    clauses = []
    for i, d in enumerate(qh.delta):
        e = hom_basis(d, d).dim
        clauses.append(Clause(f"End(Delta({qh.label(i)})) = k", e == 1, f"dim {e}"))
    for i, p in enumerate(qh.pi):
        k = kernel_of(p)[0]
        filt = delta_filtration(qh, k, allowed=range(i + 1, qh.n))
        clauses.append(Clause(f"P({qh.label(i)}) filtered with top Delta({qh.label(i)})",
                              filt is not None,
                              "layers " + ",".join(qh.label(j) for j in filt.indices)
                              if filt else "no filtration of ker pi"))
    return QHReport(clauses)


@dataclass
class UniversalExtension:
    module: Rep
    mono: Morph
    epi: Morph
    multiplicity: int


def _power_presentation(pres: ProjPresentation, e: int) -> ProjPresentation:
    """Presentation of Delta^e assembled from one of Delta."""
    alg = pres.module.algebra
    target = direct_sum([pres.module] * e, alg)
    p0 = projective_sum(alg, list(pres.P0.vertices) * e)
    p0_sum = direct_sum([pres.P0.module] * e, alg)
    omega = direct_sum([pres.syzygy] * e, alg)
    p = diagonal_map([pres.p] * e, p0_sum, target)
    mono = diagonal_map([pres.syzygy_mono] * e, omega, p0_sum)
    p1 = projective_sum(alg, list(pres.P1.vertices) * e)
    d = diagonal_map([pres.d] * e, direct_sum([pres.P1.module] * e, alg), p0_sum)
    return ProjPresentation(target.module, p0, p1, p, d, omega.module, mono)


def universal_extension(qh: QHData, m: Rep, j: int) -> UniversalExtension:
    """``0 -> m -> E -> Delta(j)^e -> 0`` with e = dim Ext^1(Delta(j), m), killing that Ext."""
    d = qh.delta[j]
    if dim_ext1(d, d) != 0:
        raise NonVanishingSelfExt(f"Ext^1(Delta({qh.label(j)}), itself) is nonzero")
    ext = ext1(d, m)
    e = ext.dim
    if e == 0:
        ident = Morph.identity(m)
        zero = direct_sum([], m.algebra).module
        return UniversalExtension(m, ident, Morph.zero(m, zero), 0)
    pres = _power_presentation(ext.presentation, e)
    omega_sum = direct_sum([ext.presentation.syzygy] * e, m.algebra)
    xi = row_map(ext.representatives, omega_sum)
    seq = extension_from_cocycle(pres, xi)
    assert dim_ext1(d, seq.middle) == 0, "universal extension left Ext^1 nonzero"
    return UniversalExtension(seq.middle, seq.mono, seq.epi, e)


def characteristic_modules(qh: QHData):
    """``(T, beta, X)`` by universal extensions with Delta(j), j = i-1 down to the first.

    Extending by Delta(j) cannot revive Ext^1(Delta(l), -) for l > j, because
    Ext^1(Delta(l), Delta(j)) = 0 there; so one descending pass suffices.
    """
    if qh.T:
        return qh.T, qh.beta, qh.X
    for i in range(qh.n):
        c = qh.delta[i]
        beta = Morph.identity(c)
        for j in range(i - 1, -1, -1):
            u = universal_extension(qh, c, j)
            beta = u.mono @ beta
            c = u.module
        qh.T.append(c)
        qh.beta.append(beta)
        qh.X.append(cokernel_of(beta)[0])
    return qh.T, qh.beta, qh.X


def verify_characteristic(qh: QHData) -> list:
    T, beta, X = characteristic_modules(qh)
    clauses = []
    for i in range(qh.n):
        lab = qh.label(i)
        clauses.append(Clause(f"Ext^1(Delta, T({lab})) = 0",
                              all(dim_ext1(d, T[i]) == 0 for d in qh.delta)))
        clauses.append(Clause(f"T({lab}) in F(Delta)", delta_membership(qh, T[i])))
        clauses.append(Clause(f"T({lab}) indecomposable", is_indecomposable(T[i])))
        clauses.append(Clause(f"beta({lab}) mono", beta[i].is_injective()))
        filt = delta_filtration(qh, X[i], allowed=range(i))
        clauses.append(Clause(f"X({lab}) filtered by earlier Delta", filt is not None))
    return clauses


@dataclass
class DeltaGoodCategory:
    qh: QHData
    base: IndexedCategory
    members: list
    category: IndexedCategory
    rad_table: RadTable
    post: Partition
    pre: Partition

    @property
    def p_delta(self) -> int:
        return self.post.summary

    @property
    def q_delta(self) -> int:
        return self.pre.summary


class MembershipDisagreement(RuntimeError):
    """The Ext criterion and the constructive filtration disagree on a module."""


def delta_good_category(qh: QHData, base: Optional[IndexedCategory] = None,
                        max_power: int = DEFAULT_MAX_POWER, cross_check: bool = True
                        ) -> DeltaGoodCategory:
    """Indecomposables of F(Delta) with the relative radical table and both partitions."""
    if base is None:
        from .ar import enumerate_indecomposables
        base = enumerate_indecomposables(qh.algebra)
    members = []
    for i, x in enumerate(base.objects):
        inside = delta_membership(qh, x)
        if cross_check and inside != (delta_filtration(qh, x) is not None):
            raise MembershipDisagreement(f"membership tests disagree on {base.names[i]}")
        if inside:
            members.append(i)
    cat = base.restrict(members)
    table = rad_power_table(cat, max_power=max_power)
    return DeltaGoodCategory(qh, base, members, cat, table,
                             postprojective_partition(cat), preinjective_partition(cat))


def _located_set(cat: IndexedCategory, modules: Sequence[Rep]):
    out = []
    for x in modules:
        loc = cat.locate(x)
        out.append(None if loc is None else loc[0])
    return out


def _components(cat: IndexedCategory, f: Morph, targets: Sequence[int]) -> list:
    if len(targets) == 1:
        return [(targets[0], f)]
    ds = direct_sum([cat.objects[t] for t in targets], cat.algebra)
    return [(t, proj @ f) for t, proj in zip(targets, ds.projections)]


def _fmt(d) -> str:
    return "inf" if d == INFINITE else str(d)


@dataclass
class Section4Report:
    clauses: list
    dp_pi: list
    dp_beta: list

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.clauses)


def verify_section4(qh: QHData, dgc: DeltaGoodCategory) -> Section4Report:
    alg = qh.algebra
    cat, table = dgc.category, dgc.rad_table
    T, beta, _ = characteristic_modules(qh)
    clauses = list(verify_characteristic(qh))

    proj = _located_set(cat, [alg.projective(v) for v in alg.vertices])
    clauses.append(Clause("P0(Delta) = indecomposable projectives",
                          None not in proj and sorted(proj) == sorted(dgc.post.levels[0]),
                          f"P0 {[cat.names[i] for i in dgc.post.levels[0]]}"))
    tilt = _located_set(cat, T)
    clauses.append(Clause("I0(Delta) = {T(i)}",
                          None not in tilt and sorted(set(tilt)) == sorted(dgc.pre.levels[0]),
                          f"I0 {[cat.names[i] for i in dgc.pre.levels[0]]}, T "
                          f"{[cat.names[i] if i is not None else '?' for i in tilt]}"))

    # splitting injectives quantify over all monos, Ext-injectives only over those
    # with cokernel in F(Delta); both are reported so a mismatch is visible
    ext_inj = [i for i in range(len(cat))
               if all(dim_ext1(y, cat.objects[i]) == 0 for y in cat.objects)]
    clauses.append(Clause("Ext-injectives of F(Delta) = {T(i)}",
                          None not in tilt and sorted(set(tilt)) == ext_inj,
                          f"Ext-injective {[cat.names[i] for i in ext_inj]}"))

    dp_pi = [depth(table, p) for p in qh.pi]
    dp_beta = [depth(table, b) for b in beta]
    for i in range(qh.n):
        lab = qh.label(i)
        clauses.append(Clause(f"dp_Delta(pi({lab})) finite", dp_pi[i] != INFINITE,
                              _fmt(dp_pi[i])))
        clauses.append(Clause(f"dp_Delta(beta({lab})) finite", dp_beta[i] != INFINITE,
                              _fmt(dp_beta[i])))
    clauses.append(Clause("(rad_Delta^inf)^2 = 0",
                          table.stabilized and is_rad_inf_square_zero(table)))
    clauses.append(Clause("p(Delta) <= max dp_Delta(pi)", dgc.p_delta <= max(dp_pi),
                          f"{dgc.p_delta} <= {_fmt(max(dp_pi))}"))
    clauses.append(Clause("q(Delta) <= max dp_Delta(beta)", dgc.q_delta <= max(dp_beta),
                          f"{dgc.q_delta} <= {_fmt(max(dp_beta))}"))

    prop = verify_propdan(cat, POSTPROJECTIVE, table, dgc.post)
    clauses.append(Clause("Hom = rad_Delta^i from P0(Delta) to P_i(Delta)", prop.passed,
                          f"{len(prop.violations)} violations"))

    chain_ok, bad = True, []
    for m in range(len(cat)):
        level = dgc.pre.level_of(m)
        chain = preinjective_mono_chain(cat, dgc.pre, m)
        f = chain.composite or Morph.identity(cat.objects[m])
        comps = [(t, g) for t, g in _components(cat, f, chain.summands[-1]) if not g.is_zero()]
        ok = f.is_injective() and bool(comps) and all(
            depth(table, g) >= level for _, g in comps)
        if not ok:
            chain_ok = False
            bad.append(cat.names[m])
    clauses.append(Clause("mono chains into I0(Delta) reach depth >= level", chain_ok,
                          f"failing {bad}" if bad else ""))

    replay_ok, bad = True, []
    for j in range(qh.n):
        loc = cat.locate(qh.delta[j])
        if loc is None or tilt[j] is None:
            replay_ok = False
            bad.append(qh.label(j))
            continue
        idx, iso = loc
        chain = preinjective_mono_chain(cat, dgc.pre, idx)
        g = (chain.composite or Morph.identity(cat.objects[idx])) @ iso
        w, h, g_prime = pushout(g, beta[j])
        retraction = solve_precomposition(Morph.identity(T[j]), g_prime)
        if retraction is None or retraction @ h @ g != beta[j]:
            replay_ok = False
            bad.append(qh.label(j))
    clauses.append(Clause("beta(j) = h'hg through the pushout retraction", replay_ok,
                          f"failing {bad}" if bad else ""))
    return Section4Report(clauses, dp_pi, dp_beta)
