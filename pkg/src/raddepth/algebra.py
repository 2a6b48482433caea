"""Bound quiver algebras ``A = kQ/I`` over the rationals.

Convention used everywhere: a path lists its arrows in traversal order, and a
module is a representation with one space per vertex and a map
``M_a: M_u -> M_v`` per arrow ``a: u -> v``.  Paths act by composing arrow maps
in traversal order, so the indecomposable projective ``P(v)`` is spanned by the
basis paths starting at ``v``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import NonAdmissible
from .linalg import ONE, ZERO, Mat, Rat, Subspace, _rat

DEFAULT_MAX_LEN = 30


@dataclass(frozen=True)
class Arrow:
    name: str
    source: str
    target: str


@dataclass(frozen=True)
class Quiver:
    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(
            a if isinstance(a, Arrow) else Arrow(*a) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex names must be unique")
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        vs = set(self.vertices)
        for a in self.arrows:
            if a.source not in vs or a.target not in vs:
                raise ValueError(f"arrow {a.name} has an endpoint outside the vertex list")

    def vertex_index(self, v: str) -> int:
        return self.vertices.index(v)

    def arrow(self, name: str) -> Arrow:
        for a in self.arrows:
            if a.name == name:
                return a
        raise KeyError(name)

    def arrow_index(self, name: str) -> int:
        for i, a in enumerate(self.arrows):
            if a.name == name:
                return i
        raise KeyError(name)

    def opposite(self) -> "Quiver":
        return Quiver(self.vertices, tuple(Arrow(a.name, a.target, a.source) for a in self.arrows))


@dataclass(frozen=True)
class Path:
    source: str
    target: str
    arrows: tuple = ()

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(self.arrows))
        if not self.arrows and self.source != self.target:
            raise ValueError("a trivial path must start and end at the same vertex")

    def __len__(self) -> int:
        return len(self.arrows)

    @classmethod
    def from_arrows(cls, quiver: Quiver, names: Sequence[str]) -> "Path":
        if not names:
            raise ValueError("use Path(v, v) for a trivial path")
        arrows = [quiver.arrow(n) for n in names]
        for a, b in zip(arrows, arrows[1:]):
            if a.target != b.source:
                raise ValueError(f"arrows {a.name} and {b.name} do not compose")
        return cls(arrows[0].source, arrows[-1].target, tuple(names))

    def __str__(self) -> str:
        return "*".join(self.arrows) if self.arrows else f"e_{self.source}"


@dataclass(frozen=True)
class Relation:
    terms: tuple

    def __post_init__(self):
        terms = tuple((_rat(c), p) for c, p in self.terms if _rat(c) != 0)
        object.__setattr__(self, "terms", terms)
        if not terms:
            raise ValueError("a relation needs at least one nonzero coefficient")
        src = {p.source for _, p in terms}
        tgt = {p.target for _, p in terms}
        if len(src) != 1 or len(tgt) != 1:
            raise ValueError("relation paths are not parallel")
        if any(len(p) < 2 for _, p in terms):
            raise ValueError("relation paths must have length at least 2")

    @property
    def source(self) -> str:
        return self.terms[0][1].source

    @property
    def target(self) -> str:
        return self.terms[0][1].target

    def opposite(self) -> "Relation":
        return Relation(tuple((c, Path(p.target, p.source, tuple(reversed(p.arrows))))
                              for c, p in self.terms))


def _paths_from(quiver: Quiver, max_len: int) -> dict:
    """All paths of length <= max_len, keyed by (source, target)."""
    out_arrows = {v: [a for a in quiver.arrows if a.source == v] for v in quiver.vertices}
    by_pair: dict = {}
    frontier = [(v, v, ()) for v in quiver.vertices]
    for length in range(max_len + 1):
        nxt = []
        for s, t, arrs in frontier:
            by_pair.setdefault((s, t), []).append(arrs)
            if length < max_len:
                for a in out_arrows[t]:
                    nxt.append((s, a.target, arrs + (a.name,)))
        frontier = nxt
    return by_pair


class AlgebraPresentation:
    """The algebra ``kQ/I`` with a normal-form path basis.

    ``path_basis[(u, v)]`` lists the basis paths from ``u`` to ``v`` in
    degree-then-lexicographic order.  Every path of length at most
    ``nilpotency_bound`` has a stored normal form; longer paths are zero.
    """

    def __init__(self, quiver: Quiver, relations: Sequence[Relation] = (), name: str = "",
                 max_len: int = DEFAULT_MAX_LEN):
        self.quiver = quiver
        self.relations = tuple(relations)
        self.name = name
        for r in self.relations:
            for _, p in r.terms:
                Path.from_arrows(quiver, p.arrows)
                if p.source != quiver.arrow(p.arrows[0]).source:
                    raise ValueError(f"relation path {p} has a wrong source")
        self._op: Optional[AlgebraPresentation] = None
        self._projective: dict = {}
        self._injective: dict = {}
        self._compute_basis(max_len)

    def __repr__(self) -> str:
        return f"AlgebraPresentation({self.name or '?'}, dim={self.dim})"

    @property
    def vertices(self) -> tuple:
        return self.quiver.vertices

    @property
    def arrows(self) -> tuple:
        return self.quiver.arrows

    def _order_key(self, arrs: tuple) -> tuple:
        return (len(arrs), tuple(self._arrow_rank[a] for a in arrs))

    def _ideal_space(self, by_pair: dict, bound: int) -> dict:
        """Span of ``u r w`` truncated below length ``bound``, per vertex pair.

        Columns are ordered greatest path first, so pivots are leading terms.
        """
        columns = {}
        for pair, paths in by_pair.items():
            cols = sorted((p for p in paths if len(p) < bound), key=self._order_key, reverse=True)
            columns[pair] = (cols, {p: i for i, p in enumerate(cols)})
        gens: dict = {pair: [] for pair in columns}
        into = {}
        for (s, t), paths in by_pair.items():
            into.setdefault(t, []).extend((s, p) for p in paths)
        for r in self.relations:
            minlen = min(len(p) for _, p in r.terms)
            for s, u in into.get(r.source, ()):
                if len(u) + minlen >= bound:
                    continue
                for (s2, t), ws in by_pair.items():
                    if s2 != r.target:
                        continue
                    for w in ws:
                        if len(u) + minlen + len(w) >= bound:
                            continue
                        cols, index = columns[(s, t)]
                        vec = [ZERO] * len(cols)
                        for c, p in r.terms:
                            full = u + p.arrows + w
                            if len(full) < bound:
                                vec[index[full]] += c
                        if any(vec):
                            gens[(s, t)].append(vec)
        return {pair: (columns[pair][0], Subspace(len(columns[pair][0]), gens[pair]))
                for pair in columns}

    def _compute_basis(self, max_len: int) -> None:
        self._arrow_rank = {a.name: i for i, a in enumerate(self.quiver.arrows)}
        previous = None
        for bound in range(1, max_len + 2):
            by_pair = _paths_from(self.quiver, bound)
            spaces = self._ideal_space(by_pair, bound + 1)
            # paths of length == bound must all lie in I + J^(bound+1)
            extinct = True
            for pair, (cols, sub) in spaces.items():
                for i, p in enumerate(cols):
                    if len(p) == bound:
                        e = [ZERO] * len(cols)
                        e[i] = ONE
                        if not sub.contains(e):
                            extinct = False
                            break
                if not extinct:
                    break
            if extinct:
                if previous is None:
                    previous = self._ideal_space(_paths_from(self.quiver, bound - 1), bound)
                self._install_basis(previous, bound - 1)
                return
            previous = spaces
        raise NonAdmissible(
            f"paths of length {max_len} survive modulo the relations; "
            "the presentation is infinite-dimensional or not admissible")

    def _install_basis(self, spaces: dict, bound: int) -> None:
        self.nilpotency_bound = bound
        self.path_basis = {}
        self._nf = {}
        for u in self.vertices:
            for v in self.vertices:
                self.path_basis[(u, v)] = ()
        for (s, t), (cols, sub) in spaces.items():
            piv = set(sub.pivots)
            free = [cols[j] for j in range(len(cols)) if j not in piv]
            free.sort(key=self._order_key)
            self.path_basis[(s, t)] = tuple(Path(s, t, p) for p in free)
            pos = {p: i for i, p in enumerate(free)}
            for p in free:
                vec = [ZERO] * len(free)
                vec[pos[p]] = ONE
                self._nf[(s, p)] = tuple(vec)
            for row, pj in zip(sub.rows, sub.pivots):
                vec = [ZERO] * len(free)
                for j, x in enumerate(row):
                    if x and j != pj:
                        vec[pos[cols[j]]] = -x
                self._nf[(s, cols[pj])] = tuple(vec)
        self._basis_index = {pair: {p.arrows: i for i, p in enumerate(b)}
                             for pair, b in self.path_basis.items()}
        self.dim = sum(len(b) for b in self.path_basis.values())

    def basis_paths(self, u: str, v: str) -> tuple:
        return self.path_basis[(u, v)]

    def normal_form(self, source: str, arrows: Sequence[str]) -> tuple:
        """Coordinates of a path in the basis of its vertex pair."""
        arrows = tuple(arrows)
        target = self.quiver.arrow(arrows[-1]).target if arrows else source
        if len(arrows) > self.nilpotency_bound:
            return (ZERO,) * len(self.path_basis[(source, target)])
        return self._nf[(source, arrows)]

    def multiply(self, u: str, x: Sequence, v: str, y: Sequence, w: str) -> tuple:
        """Product of ``x`` in e_u A e_v and ``y`` in e_v A e_w (x first, then y)."""
        out = [ZERO] * len(self.path_basis[(u, w)])
        for cx, p in zip(x, self.path_basis[(u, v)]):
            if not cx:
                continue
            for cy, q in zip(y, self.path_basis[(v, w)]):
                if not cy:
                    continue
                nf = self.normal_form(u, p.arrows + q.arrows)
                c = cx * cy
                for k, z in enumerate(nf):
                    if z:
                        out[k] += c * z
        return tuple(out)

    def opposite(self) -> "AlgebraPresentation":
        if self._op is None:
            op = AlgebraPresentation(self.quiver.opposite(),
                                     [r.opposite() for r in self.relations],
                                     name=f"{self.name}^op")
            op._op = self
            self._op = op
        return self._op

    def reversed_path_coordinates(self, source: str, target: str, x: Sequence) -> tuple:
        """Coordinates in the opposite algebra of the reverse of ``x`` in e_source A e_target."""
        op = self.opposite()
        out = [ZERO] * len(op.path_basis[(target, source)])
        for c, p in zip(x, self.path_basis[(source, target)]):
            if not c:
                continue
            nf = op.normal_form(target, tuple(reversed(p.arrows)))
            for k, z in enumerate(nf):
                if z:
                    out[k] += c * z
        return tuple(out)

    def projective(self, v: str):
        from .modules import Rep
        if v not in self._projective:
            dims = [len(self.path_basis[(v, u)]) for u in self.vertices]
            maps = []
            for a in self.arrows:
                src = self.path_basis[(v, a.source)]
                cols = [self.normal_form(v, p.arrows + (a.name,)) for p in src]
                maps.append(Mat.from_columns(cols, len(self.path_basis[(v, a.target)])))
            self._projective[v] = Rep(self, dims, maps)
        return self._projective[v]

    def simple(self, v: str):
        from .modules import Rep
        dims = [1 if u == v else 0 for u in self.vertices]
        maps = [Mat.zeros(dims[self.quiver.vertex_index(a.target)],
                          dims[self.quiver.vertex_index(a.source)]) for a in self.arrows]
        return Rep(self, dims, maps)

    def injective(self, v: str):
        from .modules import dual
        if v not in self._injective:
            self._injective[v] = dual(self.opposite().projective(v))
        return self._injective[v]

    def summary(self) -> dict:
        return {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [[a.name, a.source, a.target] for a in self.arrows],
            "relations": len(self.relations),
            "dim": self.dim,
            "nilpotency_bound": self.nilpotency_bound,
        }


def compute_path_basis(quiver: Quiver, relations: Sequence[Relation] = (),
                       max_len: int = DEFAULT_MAX_LEN, name: str = "") -> AlgebraPresentation:
    return AlgebraPresentation(quiver, relations, name=name, max_len=max_len)


def opposite(a: AlgebraPresentation) -> AlgebraPresentation:
    return a.opposite()


def projective(a: AlgebraPresentation, v: str):
    return a.projective(v)


def injective(a: AlgebraPresentation, v: str):
    return a.injective(v)


def simple(a: AlgebraPresentation, v: str):
    return a.simple(v)
