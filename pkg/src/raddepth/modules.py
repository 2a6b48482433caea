"""Representations, morphisms, Hom spaces and Krull-Schmidt decomposition."""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .errors import DivisionAlgebraEnd
from .linalg import (ONE, ZERO, Mat, Subspace, _rat, hstack, inverse, kernel, solve,
                     solve_matrix, subspace_sum, vstack)


class Rep:
    """A finite-dimensional representation of a bound quiver.

    ``dims`` is ordered like ``algebra.vertices`` and ``maps`` like
    ``algebra.arrows``; the map of ``a: u -> v`` has shape ``dims[v] x dims[u]``.
    """

    __slots__ = ("algebra", "dims", "maps", "_cache")

    def __init__(self, algebra, dims: Sequence[int], maps: Sequence[Mat], check: bool = True):
        self.algebra = algebra
        self.dims = tuple(int(d) for d in dims)
        self.maps = tuple(maps)
        self._cache: dict = {}
        if check:
            q = algebra.quiver
            if len(self.dims) != len(q.vertices) or len(self.maps) != len(q.arrows):
                raise ValueError("dimension or map count does not match the quiver")
            if any(d < 0 for d in self.dims):
                raise ValueError("negative dimension")
            for a, m in zip(q.arrows, self.maps):
                shape = (self.dims[q.vertex_index(a.target)], self.dims[q.vertex_index(a.source)])
                if m.shape != shape:
                    raise ValueError(f"map of arrow {a.name} has shape {m.shape}, expected {shape}")
            bad = self.violated_relations()
            if bad:
                raise ValueError(f"relations not satisfied: {bad}")

    def __repr__(self) -> str:
        return f"Rep{list(self.dims)}"

    @property
    def dim(self) -> int:
        return sum(self.dims)

    def is_zero(self) -> bool:
        return self.dim == 0

    def vdim(self, v: str) -> int:
        return self.dims[self.algebra.quiver.vertex_index(v)]

    def map(self, arrow: str) -> Mat:
        return self.maps[self.algebra.quiver.arrow_index(arrow)]

    def dim_vector(self) -> dict:
        return dict(zip(self.algebra.vertices, self.dims))

    def path_matrix(self, source: str, arrows: Sequence[str]) -> Mat:
        m = Mat.identity(self.vdim(source))
        for a in arrows:
            m = self.map(a) @ m
        return m

    def act(self, vec: Sequence, arrows: Sequence[str]) -> tuple:
        v = tuple(vec)
        for a in arrows:
            v = self.map(a).apply(v)
        return v

    def violated_relations(self) -> list:
        bad = []
        for i, r in enumerate(self.algebra.relations):
            s = self.vdim(r.source)
            t = self.vdim(r.target)
            total = Mat.zeros(t, s)
            for c, p in r.terms:
                total = total + self.path_matrix(p.source, p.arrows).scale(c)
            if not total.is_zero():
                bad.append(i)
        return bad

    def same_as(self, other: "Rep") -> bool:
        return (self.algebra is other.algebra and self.dims == other.dims
                and self.maps == other.maps)


class Morph:
    """A module homomorphism given by one matrix per vertex."""

    __slots__ = ("source", "target", "mats")

    def __init__(self, source: Rep, target: Rep, mats: Sequence[Mat], check: bool = True):
        self.source = source
        self.target = target
        self.mats = tuple(mats)
        if check:
            if source.algebra is not target.algebra:
                raise ValueError("morphism between modules over different algebras")
            for v, m in enumerate(self.mats):
                if m.shape != (target.dims[v], source.dims[v]):
                    raise ValueError(f"vertex {v}: shape {m.shape}, expected "
                                     f"{(target.dims[v], source.dims[v])}")
            if not self.intertwines():
                raise ValueError("matrices do not intertwine the arrow maps")

    def __repr__(self) -> str:
        return f"Morph({self.source!r} -> {self.target!r})"

    def intertwines(self) -> bool:
        q = self.source.algebra.quiver
        for a, sa, ta in zip(q.arrows, self.source.maps, self.target.maps):
            u = q.vertex_index(a.source)
            v = q.vertex_index(a.target)
            if ta @ self.mats[u] != self.mats[v] @ sa:
                return False
        return True

    @classmethod
    def identity(cls, m: Rep) -> "Morph":
        return cls(m, m, [Mat.identity(d) for d in m.dims], check=False)

    @classmethod
    def zero(cls, m: Rep, n: Rep) -> "Morph":
        return cls(m, n, [Mat.zeros(b, a) for a, b in zip(m.dims, n.dims)], check=False)

    def __matmul__(self, other: "Morph") -> "Morph":
        """Composition: ``g @ f`` is ``g`` after ``f``."""
        if other.target is not self.source and not other.target.same_as(self.source):
            raise ValueError("composition of non-composable morphisms")
        return Morph(other.source, self.target,
                     [g @ f for g, f in zip(self.mats, other.mats)], check=False)

    def __add__(self, other: "Morph") -> "Morph":
        return Morph(self.source, self.target,
                     [a + b for a, b in zip(self.mats, other.mats)], check=False)

    def __sub__(self, other: "Morph") -> "Morph":
        return Morph(self.source, self.target,
                     [a - b for a, b in zip(self.mats, other.mats)], check=False)

    def __neg__(self) -> "Morph":
        return Morph(self.source, self.target, [-a for a in self.mats], check=False)

    def scale(self, c) -> "Morph":
        return Morph(self.source, self.target, [a.scale(c) for a in self.mats], check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Morph):
            return NotImplemented
        return self.mats == other.mats and self.source.dims == other.source.dims \
            and self.target.dims == other.target.dims

    __hash__ = None

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.mats)

    def rank(self) -> int:
        return sum(m.rank() for m in self.mats)

    def is_injective(self) -> bool:
        return self.rank() == self.source.dim

    def is_surjective(self) -> bool:
        return self.rank() == self.target.dim

    def is_iso(self) -> bool:
        return self.source.dims == self.target.dims and self.rank() == self.source.dim

    def inverse(self) -> Optional["Morph"]:
        if not self.is_iso():
            return None
        return Morph(self.target, self.source, [inverse(m) for m in self.mats], check=False)

    def vector(self) -> tuple:
        return tuple(x for m in self.mats for x in m.flat())

    @classmethod
    def from_vector(cls, source: Rep, target: Rep, vec: Sequence) -> "Morph":
        mats = []
        off = 0
        for a, b in zip(source.dims, target.dims):
            mats.append(Mat.from_flat(vec[off:off + a * b], b, a))
            off += a * b
        return cls(source, target, mats, check=False)


def _hom_offsets(m: Rep, n: Rep) -> list:
    offs = []
    off = 0
    for a, b in zip(m.dims, n.dims):
        offs.append(off)
        off += a * b
    offs.append(off)
    return offs


class HomBasis:
    """Canonical basis of Hom(source, target) in flattened coordinates."""

    def __init__(self, source: Rep, target: Rep, space: Subspace):
        self.source = source
        self.target = target
        self.space = space
        self._basis = None

    def __repr__(self) -> str:
        return f"HomBasis({self.source!r} -> {self.target!r}, dim={self.dim})"

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def basis(self) -> list:
        if self._basis is None:
            self._basis = [Morph.from_vector(self.source, self.target, r) for r in self.space.rows]
        return self._basis

    def __iter__(self):
        return iter(self.basis)

    def __len__(self) -> int:
        return self.dim

    def coordinates(self, f: Morph) -> tuple:
        c = self.space.coordinates(f.vector())
        if c is None:
            raise ValueError("morphism is not in this Hom space")
        return c

    def element(self, coords: Sequence) -> Morph:
        return Morph.from_vector(self.source, self.target, self.space.combine(coords))


def hom_basis(m: Rep, n: Rep) -> HomBasis:
    """All intertwiners ``m -> n``, as the kernel of the stacked intertwining system."""
    cache = m._cache.setdefault("hom", {})
    hit = cache.get(id(n))
    if hit is not None and hit[0] is n:
        return hit[1]
    if m.algebra is not n.algebra:
        raise ValueError("Hom between modules over different algebras")
    q = m.algebra.quiver
    offs = _hom_offsets(m, n)
    nvars = offs[-1]
    rows = []
    for a, ma, na in zip(q.arrows, m.maps, n.maps):
        u = q.vertex_index(a.source)
        v = q.vertex_index(a.target)
        mu, mv, nu, nv = m.dims[u], m.dims[v], n.dims[u], n.dims[v]
        for r in range(nv):
            for c in range(mu):
                row = [ZERO] * nvars
                for k in range(nu):
                    x = na.data[r][k]
                    if x:
                        row[offs[u] + k * mu + c] += x
                for k in range(mv):
                    x = ma.data[k][c]
                    if x:
                        row[offs[v] + r * mv + k] -= x
                if any(row):
                    rows.append(row)
    space = kernel(Mat(rows, len(rows), nvars)) if rows else Subspace.full(nvars)
    hb = HomBasis(m, n, space)
    cache[id(n)] = (n, hb)
    return hb


def dim_hom(m: Rep, n: Rep) -> int:
    return hom_basis(m, n).dim


@dataclass
class DirectSum:
    module: Rep
    summands: list
    inclusions: list
    projections: list


def direct_sum(reps: Sequence[Rep], algebra=None) -> DirectSum:
    if not reps:
        if algebra is None:
            raise ValueError("empty direct sum needs an algebra")
        z = Rep(algebra, [0] * len(algebra.vertices),
                [Mat.zeros(0, 0) for _ in algebra.arrows], check=False)
        return DirectSum(z, [], [], [])
    alg = reps[0].algebra
    q = alg.quiver
    nv = len(q.vertices)
    dims = [sum(r.dims[v] for r in reps) for v in range(nv)]
    maps = []
    from .linalg import block_diag
    for k in range(len(q.arrows)):
        maps.append(block_diag([r.maps[k] for r in reps]))
    total = Rep(alg, dims, maps, check=False)
    incs, projs = [], []
    offs = [0] * nv
    for r in reps:
        inc, proj = [], []
        for v in range(nv):
            d = r.dims[v]
            rows = [[ONE if i == offs[v] + j else ZERO for j in range(d)] for i in range(dims[v])]
            e = Mat(rows, dims[v], d)
            inc.append(e)
            proj.append(e.T)
            offs[v] += d
        incs.append(Morph(r, total, inc, check=False))
        projs.append(Morph(total, r, proj, check=False))
    return DirectSum(total, list(reps), incs, projs)


def row_map(fs: Sequence[Morph], ds: DirectSum) -> Morph:
    """The map ``[f_1 ... f_n]`` from the direct sum to the common target."""
    tgt = fs[0].target if fs else None
    if tgt is None:
        raise ValueError("row_map needs at least one component")
    mats = [hstack([f.mats[v] for f in fs], tgt.dims[v]) for v in range(len(tgt.dims))]
    return Morph(ds.module, tgt, mats, check=False)


def column_map(fs: Sequence[Morph], ds: DirectSum) -> Morph:
    """The map ``[f_1; ...; f_n]`` from the common source into the direct sum."""
    src = fs[0].source
    mats = [vstack([f.mats[v] for f in fs], src.dims[v]) for v in range(len(src.dims))]
    return Morph(src, ds.module, mats, check=False)


def diagonal_map(fs: Sequence[Morph], src: DirectSum, tgt: DirectSum) -> Morph:
    from .linalg import block_diag
    mats = [block_diag([f.mats[v] for f in fs]) for v in range(len(src.module.dims))]
    return Morph(src.module, tgt.module, mats, check=False)


# -- submodules and quotients -------------------------------------------------

def submodule(m: Rep, spaces: Sequence[Subspace]):
    """The submodule with the given per-vertex subspaces, and its inclusion."""
    q = m.algebra.quiver
    maps = []
    for a, ma in zip(q.arrows, m.maps):
        u = q.vertex_index(a.source)
        v = q.vertex_index(a.target)
        cols = []
        for b in spaces[u].rows:
            c = spaces[v].coordinates(ma.apply(b))
            if c is None:
                raise ValueError(f"subspaces are not closed under arrow {a.name}")
            cols.append(c)
        maps.append(Mat.from_columns(cols, spaces[v].dim))
    sub = Rep(m.algebra, [s.dim for s in spaces], maps, check=False)
    inc = Morph(sub, m, [Mat.from_columns(s.rows, m.dims[v]) for v, s in enumerate(spaces)],
                check=False)
    return sub, inc


def quotient(m: Rep, spaces: Sequence[Subspace]):
    """The quotient by a submodule given per vertex, and the projection."""
    q = m.algebra.quiver
    projs, sections = [], []
    for v, s in enumerate(spaces):
        comp = s.complement_indices()
        cols = [s.quotient_coordinates([ONE if i == j else ZERO for i in range(m.dims[v])])
                for j in range(m.dims[v])]
        projs.append(Mat.from_columns(cols, len(comp)))
        sections.append(Mat.from_columns(
            [[ONE if i == j else ZERO for i in range(m.dims[v])] for j in comp], m.dims[v]))
    maps = []
    for a, ma in zip(q.arrows, m.maps):
        u = q.vertex_index(a.source)
        v = q.vertex_index(a.target)
        maps.append(projs[v] @ ma @ sections[u])
    quo = Rep(m.algebra, [p.rows for p in projs], maps, check=False)
    return quo, Morph(m, quo, projs, check=False)


def kernel_image_cokernel(f: Morph):
    """``(K, K -> src), (Im, Im -> tgt), (C, tgt -> C)`` for a morphism ``f``."""
    ker_spaces = [kernel(mat) for mat in f.mats]
    img_spaces = [Subspace.column_space(mat) for mat in f.mats]
    k = submodule(f.source, ker_spaces)
    i = submodule(f.target, img_spaces)
    c = quotient(f.target, img_spaces)
    return k, i, c


def kernel_of(f: Morph):
    return submodule(f.source, [kernel(mat) for mat in f.mats])


def image_of(f: Morph):
    return submodule(f.target, [Subspace.column_space(mat) for mat in f.mats])


def cokernel_of(f: Morph):
    return quotient(f.target, [Subspace.column_space(mat) for mat in f.mats])


def radical_spaces(m: Rep) -> list:
    q = m.algebra.quiver
    out = []
    for v, name in enumerate(q.vertices):
        imgs = [Subspace.column_space(ma) for a, ma in zip(q.arrows, m.maps) if a.target == name]
        out.append(subspace_sum(imgs, m.dims[v]))
    return out


def socle_spaces(m: Rep) -> list:
    q = m.algebra.quiver
    out = []
    for v, name in enumerate(q.vertices):
        outgoing = [ma for a, ma in zip(q.arrows, m.maps) if a.source == name]
        if outgoing:
            out.append(kernel(vstack(outgoing, m.dims[v])))
        else:
            out.append(Subspace.full(m.dims[v]))
    return out


def radical_top_socle(m: Rep):
    """``(rad M, mono), (top M, epi), (soc M, mono)``."""
    rad = radical_spaces(m)
    return submodule(m, rad), quotient(m, rad), submodule(m, socle_spaces(m))


# -- projectives, injectives, duality ------------------------------------------

def dual(m: Rep) -> Rep:
    """The vector-space dual, a representation of the opposite algebra."""
    return Rep(m.algebra.opposite(), m.dims, [a.T for a in m.maps], check=False)


def dual_morph(f: Morph) -> Morph:
    return Morph(dual(f.target), dual(f.source), [a.T for a in f.mats], check=False)


@dataclass
class ProjectiveSum:
    """``P(v_1) + ... + P(v_k)`` with its generator vertices recorded."""
    vertices: list
    sum: DirectSum

    @property
    def module(self) -> Rep:
        return self.sum.module


def projective_sum(algebra, vertices: Sequence[str]) -> ProjectiveSum:
    return ProjectiveSum(list(vertices),
                         direct_sum([algebra.projective(v) for v in vertices], algebra))


def morph_from_projective(ps: ProjectiveSum, target: Rep, gens: Sequence[Sequence]) -> Morph:
    """The map sending the generator ``e_{v_k}`` of the k-th summand to ``gens[k]``."""
    alg = target.algebra
    nv = len(alg.vertices)
    cols = [[] for _ in range(nv)]
    for v_k, g in zip(ps.vertices, gens):
        for u_idx, u in enumerate(alg.vertices):
            for p in alg.path_basis[(v_k, u)]:
                cols[u_idx].append(target.act(g, p.arrows))
    mats = [Mat.from_columns(cols[u], target.dims[u]) for u in range(nv)]
    return Morph(ps.module, target, mats, check=False)


def generator_images(ps: ProjectiveSum, f: Morph) -> list:
    """Images of the summand generators under ``f``; inverse of ``morph_from_projective``."""
    alg = f.source.algebra
    out = []
    offs = [0] * len(alg.vertices)
    for v_k in ps.vertices:
        for u_idx, u in enumerate(alg.vertices):
            n = len(alg.path_basis[(v_k, u)])
            if u == v_k:
                # e_v is the first basis path at (v, v)
                out.append(f.mats[u_idx].col(offs[u_idx]))
            offs[u_idx] += n
    return out


def projective_cover(m: Rep):
    """``(ProjectiveSum, epi)`` with kernel inside the radical."""
    rad = radical_spaces(m)
    vertices, gens = [], []
    for v_idx, v in enumerate(m.algebra.vertices):
        for j in rad[v_idx].complement_indices():
            vertices.append(v)
            gens.append(tuple(ONE if i == j else ZERO for i in range(m.dims[v_idx])))
    ps = projective_sum(m.algebra, vertices)
    return ps, morph_from_projective(ps, m, gens)


def injective_envelope(m: Rep):
    """``(I, mono)`` where ``I`` is a sum of indecomposable injectives."""
    ps, epi = projective_cover(dual(m))
    return ps, dual_morph(epi)


def is_projective(m: Rep) -> bool:
    return projective_cover(m)[0].module.dim == m.dim


def is_injective(m: Rep) -> bool:
    return injective_envelope(m)[0].module.dim == m.dim


# -- solving for morphisms ------------------------------------------------------

def factor_through_mono(f: Morph, mono: Morph) -> Optional[Morph]:
    """``g`` with ``mono @ g == f``, if ``f`` lands in the image of ``mono``."""
    mats = []
    for a, b in zip(mono.mats, f.mats):
        x = solve_matrix(a, b)
        if x is None:
            return None
        mats.append(x)
    return Morph(f.source, mono.source, mats, check=False)


def factor_through_epi(f: Morph, epi: Morph) -> Optional[Morph]:
    """``g`` with ``g @ epi == f``, if ``f`` vanishes on the kernel of ``epi``."""
    mats = []
    for a, b in zip(epi.mats, f.mats):
        x = solve_matrix(a.T, b.T)
        if x is None:
            return None
        mats.append(x.T)
    return Morph(epi.target, f.target, mats, check=False)


def solve_composition(f: Morph, g: Morph) -> Optional[Morph]:
    """Some ``h`` in Hom(f.source, g.source) with ``g @ h == f``."""
    hb = hom_basis(f.source, g.source)
    if hb.dim == 0:
        return Morph.zero(f.source, g.source) if f.is_zero() else None
    cols = [(g @ h).vector() for h in hb.basis]
    x = solve(Mat.from_columns(cols, len(f.vector())), f.vector())
    if x is None:
        return None
    return hb.element(x)


def solve_precomposition(f: Morph, g: Morph) -> Optional[Morph]:
    """Some ``h`` in Hom(g.target, f.target) with ``h @ g == f``."""
    hb = hom_basis(g.target, f.target)
    if hb.dim == 0:
        return Morph.zero(g.target, f.target) if f.is_zero() else None
    cols = [(h @ g).vector() for h in hb.basis]
    x = solve(Mat.from_columns(cols, len(f.vector())), f.vector())
    if x is None:
        return None
    return hb.element(x)


# -- endomorphism algebras ----------------------------------------------------

@dataclass
class EndAlgebra:
    module: Rep
    hom: HomBasis
    table: list  # table[i][j] = coordinates of basis[i] @ basis[j]

    @property
    def dim(self) -> int:
        return self.hom.dim


def end_algebra(m: Rep) -> EndAlgebra:
    if "end" not in m._cache:
        hb = hom_basis(m, m)
        b = hb.basis
        table = [[hb.coordinates(x @ y) for y in b] for x in b]
        m._cache["end"] = EndAlgebra(m, hb, table)
    return m._cache["end"]


def radical_of_end(m: Rep) -> Subspace:
    """rad End(M): kernel of the trace form (x, y) -> tr_M(xy); valid in characteristic 0."""
    if "rad_end" not in m._cache:
        hb = hom_basis(m, m)
        b = hb.basis
        gram = [[sum(((x.mats[v] @ y.mats[v]).trace() for v in range(len(m.dims))), ZERO)
                 for y in b] for x in b]
        m._cache["rad_end"] = kernel(Mat(gram, hb.dim, hb.dim)) if b else Subspace.zero(0)
    return m._cache["rad_end"]


def radical_morphisms(m: Rep) -> list:
    hb = hom_basis(m, m)
    return [hb.element(r) for r in radical_of_end(m).rows]


def _poly_at(coeffs: Sequence, phi: Morph) -> Morph:
    acc = Morph.zero(phi.source, phi.source)
    ident = Morph.identity(phi.source)
    for c in reversed(coeffs):
        acc = phi @ acc + ident.scale(c)
    return acc


def _minimal_polynomial(phi: Morph, hb: HomBasis) -> list:
    powers = [Morph.identity(phi.source)]
    coords = [hb.coordinates(powers[0])]
    while True:
        nxt = phi @ powers[-1]
        c = hb.coordinates(nxt)
        x = solve(Mat.from_columns(coords, hb.dim), c)
        if x is not None:
            return [-t for t in x] + [ONE]
        powers.append(nxt)
        coords.append(c)


_X = sympy.Symbol("x")


def _factor(coeffs: Sequence) -> list:
    """Irreducible factors over Q as ``(coeffs lowest first, multiplicity)``."""
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                      _X, domain="QQ")
    _, facs = poly.factor_list()
    out = []
    for f, mult in facs:
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
              for c in reversed(f.all_coeffs())]
        lead = cs[-1]
        out.append(([c / lead for c in cs], mult))
    return out


def _poly_mul(a: Sequence, b: Sequence) -> list:
    out = [ZERO] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def _poly_pow(a: Sequence, k: int) -> list:
    out = [ONE]
    for _ in range(k):
        out = _poly_mul(out, a)
    return out


def _splitting_candidates(hb: HomBasis, rad: Subspace):
    basis = hb.basis
    outside = [f for f, r in zip(basis, hb.space.rows) if not rad.contains(hb.coordinates(f))]
    yield from outside
    for f, g in itertools.combinations(basis, 2):
        yield f + g
    rng = random.Random(20240917)
    for width in (3, 10, 50):
        for _ in range(25):
            coeffs = [rng.randint(-width, width) for _ in basis]
            yield hb.element(coeffs)


@dataclass
class Summand:
    """An indecomposable summand with split mono/epi witnesses into/out of the parent."""
    module: Rep
    mono: Morph
    epi: Morph
    division_algebra: bool = False


def _fitting_split(m: Rep, phi: Morph, g1: Sequence, g2: Sequence):
    k1, i1 = kernel_of(_poly_at(g1, phi))
    k2, i2 = kernel_of(_poly_at(g2, phi))
    p1, p2 = [], []
    for v in range(len(m.dims)):
        b = hstack([i1.mats[v], i2.mats[v]], m.dims[v])
        inv = inverse(b)
        d1 = k1.dims[v]
        p1.append(Mat(inv.data[:d1], d1, m.dims[v]))
        p2.append(Mat(inv.data[d1:], k2.dims[v], m.dims[v]))
    return (k1, i1, Morph(m, k1, p1, check=False)), (k2, i2, Morph(m, k2, p2, check=False))


def _split_fully(m: Rep, allow_division: bool = True) -> list:
    if m.dim == 0:
        return []
    ident = Morph.identity(m)
    hb = hom_basis(m, m)
    rad = radical_of_end(m)
    top = hb.dim - rad.dim
    if top == 1:
        return [Summand(m, ident, ident)]
    field_degree = 0
    for phi in _splitting_candidates(hb, rad):
        facs = _factor(_minimal_polynomial(phi, hb))
        if len(facs) >= 2:
            f1, e1 = facs[0]
            g1 = _poly_pow(f1, e1)
            g2 = [ONE]
            for f, e in facs[1:]:
                g2 = _poly_mul(g2, _poly_pow(f, e))
            out = []
            for k, inc, proj in _fitting_split(m, phi, g1, g2):
                for s in _split_fully(k, allow_division):
                    out.append(Summand(s.module, inc @ s.mono, s.epi @ proj, s.division_algebra))
            return out
        field_degree = max(field_degree, len(facs[0][0]) - 1)
        if field_degree == top:
            break
    if field_degree == top and allow_division:
        # End/rad is generated by one element with irreducible minimal polynomial: a field
        return [Summand(m, ident, ident, division_algebra=True)]
    raise DivisionAlgebraEnd(
        f"End/rad of dimension {top} was neither split nor certified as a field")


def indecomposable_iso(x: Rep, y: Rep) -> Optional[Morph]:
    """Certified isomorphism test between indecomposables (local endomorphism rings).

    ``x`` and ``y`` are isomorphic iff some ``g f`` with ``f: x -> y`` and
    ``g: y -> x`` from the Hom bases lies outside rad End(x).
    """
    if x.algebra is not y.algebra or x.dims != y.dims:
        return None
    fwd = hom_basis(x, y)
    if fwd.dim == 0:
        return None
    back = hom_basis(y, x)
    hx = hom_basis(x, x)
    rad = radical_of_end(x)
    for f in fwd.basis:
        for g in back.basis:
            if not rad.contains(hx.coordinates(g @ f)):
                if f.is_iso():
                    return f
    return None


@dataclass
class DecompositionClass:
    module: Rep
    multiplicity: int
    witnesses: list  # (mono: module -> M, epi: M -> module) per copy
    division_algebra: bool = False


def decompose(m: Rep, allow_division: bool = True) -> list:
    """Krull-Schmidt decomposition grouped into isomorphism classes.

    The monos of all witnesses, composed with their epis, give orthogonal
    idempotents of End(M) summing to the identity.
    """
    classes: list = []
    for s in _split_fully(m, allow_division):
        for cls in classes:
            iso = indecomposable_iso(cls.module, s.module)
            if iso is not None:
                inv = iso.inverse()
                cls.witnesses.append((s.mono @ iso, inv @ s.epi))
                cls.multiplicity += 1
                break
        else:
            classes.append(DecompositionClass(s.module, 1, [(s.mono, s.epi)], s.division_algebra))
    return classes


def indecomposable_summands(m: Rep) -> list:
    return [s.module for s in _split_fully(m)]


def is_indecomposable(m: Rep) -> bool:
    if m.dim == 0:
        return False
    return len(_split_fully(m)) == 1


def _combos(hb: HomBasis):
    yield from hb.basis
    rng = random.Random(7)
    for width in (2, 5, 20, 100):
        for _ in range(12):
            yield hb.element([rng.randint(-width, width) for _ in range(hb.dim)])


def is_isomorphic(m: Rep, n: Rep) -> Optional[Morph]:
    """An explicit isomorphism ``m -> n`` or None."""
    if m.algebra is not n.algebra or m.dims != n.dims:
        return None
    if m.dim == 0:
        return Morph.zero(m, n)
    hb = hom_basis(m, n)
    if hb.dim == 0 or hb.dim != hom_basis(m, m).dim:
        return None
    for f in _combos(hb):
        if f.is_iso():
            return f
    # certified fallback: compare Krull-Schmidt decompositions
    dm, dn = decompose(m), decompose(n)
    if sorted(c.multiplicity for c in dm) != sorted(c.multiplicity for c in dn):
        return None
    total = Morph.zero(m, n)
    used = set()
    for cm in dm:
        for j, cn in enumerate(dn):
            if j in used or cn.multiplicity != cm.multiplicity:
                continue
            iso = indecomposable_iso(cm.module, cn.module)
            if iso is None:
                continue
            used.add(j)
            for (mono_m, epi_m), (mono_n, epi_n) in zip(cm.witnesses, cn.witnesses):
                total = total + mono_n @ iso @ epi_m
            break
        else:
            return None
    return total if total.is_iso() else None
