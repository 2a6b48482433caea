"""YAML algebra files and the bundled presets.

Format::

    name: A2
    vertices: ["1", "2"]
    arrows:
      - {name: a, from: "1", to: "2"}
    relations:
      - terms:
          - {coeff: "1", path: [a, b]}
    qh_order: ["1", "2"]        # optional

Coefficients are strings such as ``"-1/2"`` (or integers); floats are rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from importlib import resources
from typing import Optional

import yaml

from .algebra import DEFAULT_MAX_LEN, AlgebraPresentation, Path, Quiver, Relation


class ParseError(ValueError):
    def __init__(self, message, line=None, field=None):
        loc = []
        if line is not None:
            loc.append(f"line {line}")
        if field is not None:
            loc.append(f"field {field}")
        super().__init__(f"{message} ({', '.join(loc)})" if loc else message)
        self.line = line
        self.field = field


class ValidationError(ValueError):
    pass


@dataclass
class AlgebraFile:
    name: str
    vertices: list
    arrows: list                      # (name, source, target)
    relations: list                   # each a list of (Fraction, [arrow names])
    qh_order: Optional[list] = None
    description: str = ""

    @property
    def order(self) -> list:
        return list(self.qh_order) if self.qh_order else list(self.vertices)

    def presentation(self, max_len: int = DEFAULT_MAX_LEN) -> AlgebraPresentation:
        q = Quiver(self.vertices, self.arrows)
        rels = [Relation(tuple((c, Path.from_arrows(q, p)) for c, p in terms))
                for terms in self.relations]
        return AlgebraPresentation(q, rels, name=self.name, max_len=max_len)

    def to_dict(self) -> dict:
        out = {
            "name": self.name,
            "vertices": list(self.vertices),
            "arrows": [{"name": n, "from": s, "to": t} for n, s, t in self.arrows],
            "relations": [{"terms": [{"coeff": str(c), "path": list(p)} for c, p in terms]}
                          for terms in self.relations],
        }
        if self.qh_order:
            out["qh_order"] = list(self.qh_order)
        if self.description:
            out["description"] = self.description
        return out


def dump_algebra(af: AlgebraFile) -> str:
    return yaml.safe_dump(af.to_dict(), sort_keys=False)


def _coeff(raw, where: str) -> Fraction:
    if isinstance(raw, bool) or isinstance(raw, float):
        raise ValidationError(f"{where}: coefficient must be an integer or a 'p/q' string")
    if isinstance(raw, int):
        return Fraction(raw)
    if isinstance(raw, str):
        try:
            return Fraction(raw.strip().replace("−", "-"))
        except (ValueError, ZeroDivisionError):
            raise ValidationError(f"{where}: cannot read {raw!r} as a rational") from None
    raise ValidationError(f"{where}: coefficient must be an integer or a 'p/q' string")


def _names(raw, where: str) -> list:
    if not isinstance(raw, list) or not raw:
        raise ValidationError(f"{where}: expected a non-empty list")
    return [str(x) for x in raw]


def parse_algebra(text: str) -> AlgebraFile:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        mark = getattr(exc, "problem_mark", None)
        raise ParseError(str(getattr(exc, "problem", exc)),
                         line=mark.line + 1 if mark else None) from None
    if not isinstance(doc, dict):
        raise ParseError("top level must be a mapping")
    unknown = set(doc) - {"name", "vertices", "arrows", "relations", "qh_order", "description"}
    if unknown:
        raise ParseError("unknown keys", field=",".join(sorted(unknown)))
    for key in ("vertices", "arrows"):
        if key not in doc:
            raise ParseError("missing required key", field=key)

    vertices = _names(doc["vertices"], "vertices")
    if len(set(vertices)) != len(vertices):
        raise ValidationError("vertices: names must be unique")
    arrows = []
    raw_arrows = doc["arrows"] or []
    if not isinstance(raw_arrows, list):
        raise ValidationError("arrows: expected a list")
    for k, a in enumerate(raw_arrows):
        where = f"arrows[{k}]"
        if not isinstance(a, dict) or set(a) != {"name", "from", "to"}:
            raise ValidationError(f"{where}: needs exactly name, from, to")
        name, s, t = str(a["name"]), str(a["from"]), str(a["to"])
        for v in (s, t):
            if v not in vertices:
                raise ValidationError(f"{where}: unknown vertex {v!r}")
        arrows.append((name, s, t))
    if len({a[0] for a in arrows}) != len(arrows):
        raise ValidationError("arrows: names must be unique")
    ends = {n: (s, t) for n, s, t in arrows}

    relations = []
    for k, r in enumerate(doc.get("relations") or []):
        where = f"relations[{k}]"
        if not isinstance(r, dict) or "terms" not in r or not isinstance(r["terms"], list):
            raise ValidationError(f"{where}: needs a list of terms")
        terms = []
        for m, term in enumerate(r["terms"]):
            tw = f"{where}.terms[{m}]"
            if not isinstance(term, dict) or set(term) != {"coeff", "path"}:
                raise ValidationError(f"{tw}: needs exactly coeff and path")
            path = _names(term["path"], f"{tw}.path")
            for n in path:
                if n not in ends:
                    raise ValidationError(f"{tw}.path: unknown arrow {n!r}")
            for a, b in zip(path, path[1:]):
                if ends[a][1] != ends[b][0]:
                    raise ValidationError(f"{tw}.path: arrows {a} and {b} do not compose")
            if len(path) < 2:
                raise ValidationError(f"{tw}.path: relation paths need length at least 2")
            terms.append((_coeff(term["coeff"], f"{tw}.coeff"), path))
        if not any(c for c, _ in terms):
            raise ValidationError(f"{where}: needs a nonzero coefficient")
        if len({(ends[p[0]][0], ends[p[-1]][1]) for _, p in terms}) != 1:
            raise ValidationError(f"{where}: relation paths are not parallel")
        relations.append(terms)

    qh_order = doc.get("qh_order")
    if qh_order is not None:
        qh_order = _names(qh_order, "qh_order")
        if sorted(qh_order) != sorted(vertices):
            raise ValidationError("qh_order: must list every vertex exactly once")
    return AlgebraFile(str(doc.get("name", "")), vertices, arrows, relations, qh_order,
                       str(doc.get("description", "")))


def load_algebra(path: str) -> AlgebraFile:
    with open(path, encoding="utf-8") as fh:
        return parse_algebra(fh.read())


def preset_names() -> list:
    files = resources.files("raddepth") / "presets"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".yaml"))


def preset_text(name: str) -> str:
    path = resources.files("raddepth") / "presets" / f"{name}.yaml"
    if not path.is_file():
        raise KeyError(f"unknown preset {name!r}; known: {', '.join(preset_names())}")
    return path.read_text(encoding="utf-8")


def load_preset(name: str) -> AlgebraFile:
    return parse_algebra(preset_text(name))


def presets() -> dict:
    return {n: load_preset(n) for n in preset_names()}
