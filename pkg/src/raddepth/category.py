"""Finite lists of pairwise non-isomorphic indecomposables with their Hom spaces."""

from __future__ import annotations

from collections import Counter
from typing import Optional, Sequence

from .linalg import ZERO, Subspace
from .modules import Morph, Rep, hom_basis, indecomposable_iso, radical_of_end


def dim_vector_name(dims: Sequence[int]) -> str:
    return "[" + ",".join(str(d) for d in dims) + "]"


def assign_names(modules: Sequence[Rep]) -> list:
    """Dimension-vector names, with ``#k`` appended when a dimension vector repeats."""
    counts = Counter(m.dims for m in modules)
    seen: Counter = Counter()
    names = []
    for m in modules:
        base = dim_vector_name(m.dims)
        if counts[m.dims] > 1:
            seen[m.dims] += 1
            base = f"{base}#{seen[m.dims]}"
        names.append(base)
    return names


class IndexedCategory:
    """An ordered list of indecomposables standing for a full subcategory.

    Hom spaces are computed on first use and cached on the modules, so
    restrictions share them with the parent.
    """

    def __init__(self, algebra, objects: Sequence[Rep], names: Optional[Sequence[str]] = None,
                 full: bool = False):
        self.algebra = algebra
        self.objects = list(objects)
        self.names = list(names) if names is not None else assign_names(self.objects)
        self.is_full_module_category = full

    @classmethod
    def from_modules(cls, algebra, modules: Sequence[Rep], full: bool = False) -> "IndexedCategory":
        order = sorted(range(len(modules)), key=lambda i: (modules[i].dim, modules[i].dims, i))
        return cls(algebra, [modules[i] for i in order], full=full)

    def __len__(self) -> int:
        return len(self.objects)

    def __repr__(self) -> str:
        return f"IndexedCategory({len(self)} objects: {', '.join(self.names)})"

    def index(self, name: str) -> int:
        return self.names.index(name)

    def hom(self, i: int, j: int):
        return hom_basis(self.objects[i], self.objects[j])

    def rad_end(self, i: int) -> Subspace:
        return radical_of_end(self.objects[i])

    def locate(self, x: Rep):
        """``(index, iso x -> object)`` for an indecomposable ``x``, or None."""
        for i, obj in enumerate(self.objects):
            if obj is x:
                return i, Morph.identity(x)
        for i, obj in enumerate(self.objects):
            if obj.dims == x.dims:
                iso = indecomposable_iso(x, obj)
                if iso is not None:
                    return i, iso
        return None

    def transport(self, f: Morph):
        """``(i, j, coords)`` of ``f`` moved onto the table objects by isomorphisms."""
        src = self.locate(f.source)
        tgt = self.locate(f.target)
        if src is None or tgt is None:
            raise KeyError("morphism endpoints are not objects of the category")
        i, a = src
        j, b = tgt
        moved = b @ f @ a.inverse()
        return i, j, self.hom(i, j).coordinates(moved)

    def composition_tensor(self, i: int, k: int, j: int) -> list:
        """``T[p][q]``: coordinates of (basis q of Hom(k,j)) after (basis p of Hom(i,k))."""
        xi, xk, xj = self.objects[i], self.objects[k], self.objects[j]
        cache = xi._cache.setdefault("comp", {})
        key = (id(xk), id(xj))
        hit = cache.get(key)
        if hit is not None and hit[0] is xk and hit[1] is xj:
            return hit[2]
        hik, hkj, hij = self.hom(i, k), self.hom(k, j), self.hom(i, j)
        table = [[hij.coordinates(g @ f) for g in hkj.basis] for f in hik.basis]
        cache[key] = (xk, xj, table)
        return table

    def compose(self, i: int, k: int, j: int, a: Sequence, b: Sequence) -> tuple:
        """Coordinates of ``g @ f`` for ``f`` in Hom(i,k) and ``g`` in Hom(k,j)."""
        t = self.composition_tensor(i, k, j)
        out = [ZERO] * self.hom(i, j).dim
        for p, ap in enumerate(a):
            if not ap:
                continue
            row = t[p]
            for q, bq in enumerate(b):
                if not bq:
                    continue
                c = ap * bq
                for r, x in enumerate(row[q]):
                    if x:
                        out[r] += c * x
        return tuple(out)

    def restrict(self, keep: Sequence[int]) -> "IndexedCategory":
        keep = sorted(keep)
        return IndexedCategory(self.algebra, [self.objects[i] for i in keep],
                               [self.names[i] for i in keep], full=False)

    def remove(self, removed) -> "IndexedCategory":
        removed = set(removed)
        return self.restrict([i for i in range(len(self)) if i not in removed])
