"""Syzygies, transpose, Auslander-Reiten translates, Ext^1 and almost split sequences."""

from __future__ import annotations

import logging
from collections import deque
from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import CocycleMismatch, EnumerationBound, NotAlmostSplit
from .linalg import ONE, ZERO, Mat, Subspace, kernel, solve, vstack
from .modules import (HomBasis, Morph, ProjectiveSum, Rep, column_map, cokernel_of,
                      direct_sum, dual, factor_through_epi, factor_through_mono,
                      generator_images, hom_basis, indecomposable_iso,
                      indecomposable_summands, is_injective, is_projective, kernel_of,
                      morph_from_projective, projective_cover, projective_sum,
                      radical_morphisms, radical_spaces, quotient, row_map, socle_spaces,
                      solve_composition, submodule)

log = logging.getLogger(__name__)

DEFAULT_MAX_MODULES = 500
DEFAULT_MAX_DIM = 60


@dataclass
class ProjPresentation:
    """Minimal presentation ``P1 --d--> P0 --p--> M -> 0`` with the syzygy."""
    module: Rep
    P0: ProjectiveSum
    P1: ProjectiveSum
    p: Morph
    d: Morph
    syzygy: Rep
    syzygy_mono: Morph


def min_presentation(m: Rep) -> ProjPresentation:
    if "presentation" in m._cache:
        return m._cache["presentation"]
    ps0, p = projective_cover(m)
    omega, inc = kernel_of(p)
    ps1, q = projective_cover(omega)
    pres = ProjPresentation(m, ps0, ps1, p, inc @ q, omega, inc)
    m._cache["presentation"] = pres
    return pres


def _split_by_summand(alg, ps: ProjectiveSum, vertex: str, vec: Sequence) -> list:
    """Cut an element of ``ps`` at ``vertex`` into its per-summand path coordinates."""
    out, off = [], 0
    for v in ps.vertices:
        n = len(alg.path_basis[(v, vertex)])
        out.append(tuple(vec[off:off + n]))
        off += n
    return out


def transpose(m: Rep) -> Rep:
    """Tr M = cokernel of Hom(d, A), a representation of the opposite algebra."""
    alg = m.algebra
    op = alg.opposite()
    pres = min_presentation(m)
    q0 = projective_sum(op, pres.P0.vertices)
    q1 = projective_sum(op, pres.P1.vertices)
    if not pres.P1.vertices:
        return cokernel_of(Morph.identity(q0.module))[0]
    # x[l][k]: component of d from the l-th summand of P1 to the k-th of P0
    x = [_split_by_summand(alg, pres.P0, w, g)
         for w, g in zip(pres.P1.vertices, generator_images(pres.P1, pres.d))]
    gens = []
    for k, v in enumerate(pres.P0.vertices):
        g = []
        for l, w in enumerate(pres.P1.vertices):
            g.extend(alg.reversed_path_coordinates(v, w, x[l][k]))
        gens.append(tuple(g))
    dstar = morph_from_projective(q0, q1.module, gens)
    return cokernel_of(dstar)[0]


def tau(m: Rep) -> Rep:
    """Auslander-Reiten translate D Tr."""
    if "tau" not in m._cache:
        m._cache["tau"] = dual(transpose(m))
    return m._cache["tau"]


def tau_inverse(m: Rep) -> Rep:
    """Inverse translate Tr D."""
    if "tau_inv" not in m._cache:
        m._cache["tau_inv"] = transpose(dual(m))
    return m._cache["tau_inv"]


class Ext1Space:
    """Ext^1(M, N) as Hom(Omega M, N) modulo restrictions from Hom(P0, N).

    Classes are written in coordinates on the canonical complement of the
    coboundaries; ``representatives`` are the matching cocycles.
    """

    def __init__(self, m: Rep, n: Rep):
        self.m = m
        self.n = n
        self.presentation = pres = min_presentation(m)
        self.hom_omega: HomBasis = hom_basis(pres.syzygy, n)
        restricted = []
        for k, v in enumerate(pres.P0.vertices):
            vi = m.algebra.quiver.vertex_index(v)
            for j in range(n.dims[vi]):
                gens = [tuple(ZERO for _ in range(n.dims[m.algebra.quiver.vertex_index(u)]))
                        for u in pres.P0.vertices]
                gens[k] = tuple(ONE if i == j else ZERO for i in range(n.dims[vi]))
                h = morph_from_projective(pres.P0, n, gens)
                restricted.append(self.hom_omega.coordinates(h @ pres.syzygy_mono))
        self.boundaries = Subspace(self.hom_omega.dim, restricted)
        self._free = self.boundaries.complement_indices()

    @property
    def dim(self) -> int:
        return self.hom_omega.dim - self.boundaries.dim

    @property
    def representatives(self) -> list:
        out = []
        for j in self._free:
            e = [ZERO] * self.hom_omega.dim
            e[j] = ONE
            out.append(self.hom_omega.element(e))
        return out

    def class_of(self, cocycle: Morph) -> tuple:
        if cocycle.source.dims != self.presentation.syzygy.dims or \
                cocycle.target.dims != self.n.dims:
            raise CocycleMismatch("cocycle must map the syzygy of M into N")
        return self.boundaries.quotient_coordinates(self.hom_omega.coordinates(cocycle))

    def cocycle(self, coords: Sequence) -> Morph:
        if len(coords) != self.dim:
            raise CocycleMismatch(f"expected {self.dim} coordinates, got {len(coords)}")
        e = [ZERO] * self.hom_omega.dim
        for j, c in zip(self._free, coords):
            e[j] = c
        return self.hom_omega.element(e)


def ext1(m: Rep, n: Rep) -> Ext1Space:
    return Ext1Space(m, n)


def dim_ext1(m: Rep, n: Rep) -> int:
    return Ext1Space(m, n).dim


@dataclass
class ShortExact:
    left: Rep
    middle: Rep
    right: Rep
    mono: Morph
    epi: Morph

    def is_exact(self) -> bool:
        if not (self.mono.is_injective() and self.epi.is_surjective()):
            return False
        if not (self.epi @ self.mono).is_zero():
            return False
        return self.middle.dim == self.left.dim + self.right.dim

    def is_split(self) -> bool:
        return solve_composition(Morph.identity(self.right), self.epi) is not None


def pushout(f: Morph, g: Morph):
    """Pushout of ``X <-f- Z -g-> Y``: ``(W, X -> W, Y -> W)``."""
    ds = direct_sum([f.target, g.target])
    h = column_map([f, -g], ds)
    w, q = cokernel_of(h)
    return w, q @ ds.inclusions[0], q @ ds.inclusions[1]


def extension_from_cocycle(pres: ProjPresentation, xi: Morph) -> ShortExact:
    """Pushout of ``0 -> Omega -> P0 -> M -> 0`` along ``xi: Omega -> N``."""
    n = xi.target
    ds = direct_sum([n, pres.P0.module])
    w, q = cokernel_of(column_map([xi, -pres.syzygy_mono], ds))
    epi = factor_through_epi(row_map([Morph.zero(n, pres.module), pres.p], ds), q)
    return ShortExact(n, w, pres.module, q @ ds.inclusions[0], epi)


def build_extension(ext: Ext1Space, xi) -> ShortExact:
    """Realize a class (coordinates or a cocycle) as ``0 -> N -> E -> M -> 0``."""
    if isinstance(xi, Morph):
        ext.class_of(xi)
        cocycle = xi
    else:
        cocycle = ext.cocycle(list(xi))
    return extension_from_cocycle(ext.presentation, cocycle)


def _endo_on_syzygy(pres: ProjPresentation, phi: Morph) -> Morph:
    """Restriction to Omega M of a lift of ``phi`` along the projective cover."""
    m = pres.module
    gens = []
    for v, g in zip(pres.P0.vertices, generator_images(pres.P0, pres.p)):
        vi = m.algebra.quiver.vertex_index(v)
        img = phi.mats[vi].apply(g)
        lift = solve(pres.p.mats[vi], img)
        gens.append(lift)
    phi_tilde = morph_from_projective(pres.P0, pres.P0.module, gens)
    out = factor_through_mono(phi_tilde @ pres.syzygy_mono, pres.syzygy_mono)
    assert out is not None
    return out


def radical_maps_into(x: Rep, n: Rep) -> list:
    """Basis of rad(X, N) for indecomposable X and N."""
    iso = indecomposable_iso(x, n)
    if iso is None:
        return hom_basis(x, n).basis
    return [iso @ r for r in radical_morphisms(x)]


def right_almost_split_failures(epi: Morph, known: Sequence[Rep]) -> list:
    """Indecomposables with a radical map into the target not factoring through ``epi``."""
    bad = []
    for idx, x in enumerate(known):
        for f in radical_maps_into(x, epi.target):
            if solve_composition(f, epi) is None:
                bad.append(idx)
                break
    return bad


def almost_split_sequence(n: Rep, known: Optional[Sequence[Rep]] = None) -> ShortExact:
    """The almost split sequence ``0 -> tau N -> E -> N -> 0``.

    The class is taken from the part of Ext^1(N, tau N) killed by the radicals
    of both endomorphism rings, then checked: the epi must not split and every
    radical map from ``known`` indecomposables into N must factor through it.
    """
    if "ar_sequence" in n._cache and known is None:
        return n._cache["ar_sequence"]
    t = tau(n)
    if t.dim == 0:
        raise ValueError("almost split sequences end only at non-projective modules")
    ext = Ext1Space(n, t)
    pres = ext.presentation
    reps = ext.representatives
    rows = []
    for phi in radical_morphisms(n):
        hat = _endo_on_syzygy(pres, phi)
        cols = [ext.class_of(r @ hat) for r in reps]
        rows.extend(Mat.from_columns(cols, ext.dim).data)
    for psi in radical_morphisms(t):
        cols = [ext.class_of(psi @ r) for r in reps]
        rows.extend(Mat.from_columns(cols, ext.dim).data)
    socle = kernel(Mat(rows, len(rows), ext.dim)) if rows else Subspace.full(ext.dim)
    for xi in socle.rows:
        seq = build_extension(ext, xi)
        if seq.is_split():
            continue
        if known and right_almost_split_failures(seq.epi, known):
            continue
        if known is None:
            n._cache["ar_sequence"] = seq
        return seq
    raise NotAlmostSplit(f"no class in the socle of Ext^1(N, tau N) passed verification for {n!r}")


def radical_module(m: Rep) -> Rep:
    return submodule(m, radical_spaces(m))[0]


def socle_quotient(m: Rep) -> Rep:
    return quotient(m, socle_spaces(m))[0]


def enumerate_indecomposables(algebra, max_modules: int = DEFAULT_MAX_MODULES,
                              max_dim: int = DEFAULT_MAX_DIM):
    """Close the indecomposable projectives and injectives under the AR operations.

    Raises :class:`EnumerationBound` (carrying the partial list) when a module
    exceeds ``max_dim`` or more than ``max_modules`` are found.
    """
    from .category import IndexedCategory

    found: list = []
    queue: deque = deque()

    def admit(x: Rep) -> None:
        if x.dim == 0:
            return
        for s in indecomposable_summands(x):
            if s.dim > max_dim:
                raise EnumerationBound(
                    f"indecomposable of dimension {s.dim} exceeds max_dim={max_dim}", found)
            if any(f.dims == s.dims and indecomposable_iso(f, s) is not None for f in found):
                continue
            found.append(s)
            queue.append(s)
            if len(found) > max_modules:
                raise EnumerationBound(f"more than max_modules={max_modules} indecomposables",
                                       found)

    for v in algebra.vertices:
        admit(algebra.projective(v))
    for v in algebra.vertices:
        admit(algebra.injective(v))
    while queue:
        x = queue.popleft()
        proj = is_projective(x)
        inj = is_injective(x)
        if proj:
            admit(radical_module(x))
        if inj:
            admit(socle_quotient(x))
        if not proj:
            admit(tau(x))
            admit(almost_split_sequence(x, known=list(found)).middle)
        if not inj:
            admit(tau_inverse(x))
        log.debug("enumeration: %d found, %d queued", len(found), len(queue))
    return IndexedCategory.from_modules(algebra, found, full=True)
