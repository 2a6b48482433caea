"""Report payloads for the command-line subcommands.

Every builder returns ``(payload, status)`` with plain JSON-able values and
stable ordering; statuses are FINITE, UNDETERMINED, FAIL or OK.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ar import enumerate_indecomposables
from .category import IndexedCategory
from .errors import EnumerationBound
from .modules import is_isomorphic
from .partitions import (POSTPROJECTIVE, PREINJECTIVE, postprojective_epi_chain,
                         postprojective_partition, preinjective_mono_chain,
                         preinjective_partition, verify_cocover, verify_cover, verify_propdan)
from .qh import (characteristic_modules, delta_good_category, is_quasi_hereditary, qh_data,
                 verify_characteristic, verify_section4)
from .radical import (INFINITE, depth, finite_type_certificate, is_rad_inf_square_zero,
                      rad_power_table, simple_envelopes)

FINITE, UNDETERMINED, FAIL, OK = "FINITE", "UNDETERMINED", "FAIL", "OK"
EXIT_CODES = {FINITE: 0, OK: 0, UNDETERMINED: 2, FAIL: 1}


@dataclass
class Limits:
    max_dim: int = 60
    max_modules: int = 500
    max_power: int = 64


class Undetermined(Exception):
    def __init__(self, bound: EnumerationBound, partial: IndexedCategory):
        super().__init__(str(bound))
        self.bound = bound
        self.partial = partial


def _depth(d):
    return "inf" if d == INFINITE else d


def _clauses(clauses) -> list:
    return [{"clause": c.name, "result": "PASS" if c.passed else "FAIL",
             **({"detail": c.detail} if c.detail else {})} for c in clauses]


def _status(clauses) -> str:
    return FINITE if all(c.passed for c in clauses) else FAIL


def algebra_summary(af, alg) -> dict:
    return {"name": af.name, "vertices": list(alg.vertices),
            "arrows": [[a.name, a.source, a.target] for a in alg.quiver.arrows],
            "relations": len(alg.relations), "dim": alg.dim,
            "qh_order": af.order}


class Session:
    """Lazily computed shared objects for one algebra."""

    def __init__(self, af, limits: Limits):
        self.af = af
        self.limits = limits
        self.algebra = af.presentation()
        self._cat = None
        self._table = None
        self._qh = None
        self._dgc = None

    def category(self) -> IndexedCategory:
        if self._cat is None:
            try:
                self._cat = enumerate_indecomposables(self.algebra, self.limits.max_modules,
                                                      self.limits.max_dim)
            except EnumerationBound as exc:
                raise Undetermined(exc, IndexedCategory.from_modules(
                    self.algebra, exc.found, full=False)) from None
        return self._cat

    def table(self):
        if self._table is None:
            self._table = rad_power_table(self.category(), self.limits.max_power)
        return self._table

    def qh(self):
        if self._qh is None:
            self._qh = qh_data(self.algebra, self.af.order)
        return self._qh

    def dgc(self):
        if self._dgc is None:
            self._dgc = delta_good_category(self.qh(), self.category(), self.limits.max_power)
        return self._dgc

    def name_of(self, module, cat=None) -> str:
        cat = cat or self.category()
        loc = cat.locate(module)
        return cat.names[loc[0]] if loc else "?"

    def index_of(self, name: str, cat=None) -> int:
        cat = cat or self.category()
        try:
            return cat.index(name)
        except ValueError:
            raise ValueError(f"unknown module {name!r}; known: {', '.join(cat.names)}") from None


def cmd_basis(s: Session, args) -> tuple:
    alg = s.algebra
    basis = {f"{u}->{v}": [str(p) for p in alg.path_basis[(u, v)]]
             for u in alg.vertices for v in alg.vertices if alg.path_basis[(u, v)]}
    return {"path_basis": basis, "dim": alg.dim,
            "nilpotency_bound": alg.nilpotency_bound}, OK


def _module_list(cat: IndexedCategory) -> list:
    return [{"name": n, "dims": list(x.dims)} for n, x in zip(cat.names, cat.objects)]


def cmd_indec(s: Session, args) -> tuple:
    cat = s.category()
    return {"count": len(cat), "modules": _module_list(cat)}, FINITE


def _table_payload(cat, table, pairs=None, power=None) -> dict:
    out = {"stabilization_index": table.stabilization_index,
           "stabilized": table.stabilized}
    rows = []
    for i in range(len(cat)):
        for j in range(len(cat)):
            if pairs and (i, j) not in pairs:
                continue
            h = cat.hom(i, j).dim
            if h == 0:
                continue
            if power is not None:
                dims = [table.subspace(i, j, power).dim]
            else:
                dims = [table.subspace(i, j, n).dim for n in range(1, len(table.powers) + 1)]
            rows.append({"source": cat.names[i], "target": cat.names[j], "hom": h,
                         "rad_dims": dims})
    out["pairs"] = rows
    if table.stabilized:
        out["rad_inf_zero"] = all(x.is_zero() for x in table.rad_infinity.values())
        out["rad_inf_square_zero"] = is_rad_inf_square_zero(table)
    return out


def cmd_radical(s: Session, args) -> tuple:
    cat, table = s.category(), s.table()
    pairs = None
    if args.pair:
        pairs = {(s.index_of(args.pair[0]), s.index_of(args.pair[1]))}
    payload = _table_payload(cat, table, pairs, args.power)
    if args.power is not None:
        payload["power"] = args.power
    return payload, FINITE if table.stabilized else FAIL


def _parse_morphism(spec: str):
    kind, _, label = spec.partition(":")
    if kind not in ("pi", "iota", "theta", "beta", "deltapi") or not label:
        raise ValueError(f"bad morphism {spec!r}; use pi:S, iota:S, theta:S, beta:i or deltapi:i")
    return kind, label


def cmd_depth(s: Session, args) -> tuple:
    kind, label = _parse_morphism(args.morphism)
    if kind in ("pi", "iota", "theta"):
        env = simple_envelopes(s.algebra)
        if label not in env:
            raise ValueError(f"unknown vertex {label!r}")
        f = getattr(env[label], kind)
        d = depth(s.table(), f)
        return {"morphism": args.morphism, "relative_to": "mod A",
                "source": s.name_of(f.source), "target": s.name_of(f.target),
                "depth": _depth(d)}, FINITE
    qh = s.qh()
    if label not in qh.order:
        raise ValueError(f"unknown vertex {label!r}")
    i = qh.order.index(label)
    dgc = s.dgc()
    f = characteristic_modules(qh)[1][i] if kind == "beta" else qh.pi[i]
    d = depth(dgc.rad_table, f)
    return {"morphism": args.morphism, "relative_to": "F(Delta)",
            "source": s.name_of(f.source, dgc.category),
            "target": s.name_of(f.target, dgc.category), "depth": _depth(d)}, FINITE


def _partition_payload(cat, part, cover) -> tuple:
    checks = [(verify_cover if cover else verify_cocover)(cat, part, k)
              for k in range(len(part.levels))]
    ok = all(r.passed for r in checks)
    return {"levels": part.named_levels(), "summary": part.summary,
            "checks": [{"level": r.level, "kind": r.kind,
                        "result": "PASS" if r.passed else "FAIL",
                        **({"uncovered": r.failures} if r.failures else {}),
                        **({"redundant": r.redundant} if r.redundant else {})}
                       for r in checks]}, ok


def cmd_partitions(s: Session, args) -> tuple:
    cat = s.category()
    payload, ok = {}, True
    if args.kind in ("post", "both"):
        payload["postprojective"], good = _partition_payload(
            cat, postprojective_partition(cat), True)
        ok &= good
    if args.kind in ("pre", "both"):
        payload["preinjective"], good = _partition_payload(
            cat, preinjective_partition(cat), False)
        ok &= good
    return payload, FINITE if ok else FAIL


def cmd_certify(s: Session, args) -> tuple:
    lim = s.limits
    cert = finite_type_certificate(s.algebra, lim.max_modules, lim.max_dim, lim.max_power)
    payload = {"count": cert.count, "clauses": _clauses(cert.clauses)}
    if cert.status == UNDETERMINED:
        cat, table = cert.category, cert.table
        payload["reason"] = cert.message
        payload["note"] = "radical powers relative to the enumerated subcategory only"
        payload["modules"] = _module_list(cat)
        payload["nonzero_pairs_by_power"] = [
            {"power": n, "pairs": [[cat.names[i], cat.names[j]]
                                   for i, j in table.nonzero_pairs(n)]}
            for n in range(1, len(table.powers) + 1)]
    else:
        payload["stabilization_index"] = cert.table.stabilization_index
    return payload, cert.status


def _dims(mods) -> list:
    return [list(m.dims) for m in mods]


def cmd_qh(s: Session, args) -> tuple:
    qh = s.qh()
    rep = is_quasi_hereditary(s.algebra, qh)
    return {"order": qh.order, "delta": _dims(qh.delta), "nabla": _dims(qh.nabla),
            "clauses": _clauses(rep.clauses)}, OK if rep.passed else FAIL


def cmd_tilting(s: Session, args) -> tuple:
    qh = s.qh()
    T, beta, X = characteristic_modules(qh)
    clauses = verify_characteristic(qh)
    rows = [{"vertex": qh.label(i), "T": list(T[i].dims), "X": list(X[i].dims),
             "beta_rank": beta[i].rank()} for i in range(qh.n)]
    return {"order": qh.order, "modules": rows,
            "clauses": _clauses(clauses)}, OK if all(c.passed for c in clauses) else FAIL


def cmd_fdelta(s: Session, args) -> tuple:
    dgc = s.dgc()
    cat = dgc.category
    table = dgc.rad_table
    return {"members": cat.names,
            "outside": [n for i, n in enumerate(dgc.base.names) if i not in dgc.members],
            "postprojective": dgc.post.named_levels(),
            "preinjective": dgc.pre.named_levels(),
            "p_delta": dgc.p_delta, "q_delta": dgc.q_delta,
            "P0": [cat.names[i] for i in dgc.post.levels[0]],
            "I0": [cat.names[i] for i in dgc.pre.levels[0]],
            "stabilization_index": table.stabilization_index}, FINITE


def _suite_propdan(s: Session) -> list:
    cat, table = s.category(), s.table()
    out = []
    for which in (POSTPROJECTIVE, PREINJECTIVE):
        rep = verify_propdan(cat, which, table)
        from .radical import Clause
        out.append(Clause(f"Hom = rad^i ({which.lower()})", rep.passed,
                          f"{len(rep.clauses)} checks, {len(rep.violations)} violations"))
    return out


def _suite_section3(s: Session) -> list:
    lim = s.limits
    cert = finite_type_certificate(s.algebra, lim.max_modules, lim.max_dim, lim.max_power)
    if cert.status == UNDETERMINED:
        raise Undetermined(EnumerationBound(cert.message), cert.category)
    return cert.clauses


def _suite_section4(s: Session) -> list:
    qh = s.qh()
    rep = is_quasi_hereditary(s.algebra, qh)
    if not rep.passed:
        return rep.clauses
    return rep.clauses + verify_section4(qh, s.dgc()).clauses


def cmd_verify(s: Session, args) -> tuple:
    suites = ["propdan", "section3", "section4"] if args.suite == "all" else [args.suite]
    runners = {"propdan": _suite_propdan, "section3": _suite_section3,
               "section4": _suite_section4}
    payload, ok = {}, True
    for name in suites:
        clauses = runners[name](s)
        payload[name] = _clauses(clauses)
        ok &= all(c.passed for c in clauses)
    return payload, FINITE if ok else FAIL


def cmd_chain(s: Session, args) -> tuple:
    cat = s.category()
    m = s.index_of(args.module)
    if args.kind == "mono":
        part = preinjective_partition(cat)
        chain = preinjective_mono_chain(cat, part, m)
        terms = [[cat.names[i] for i in t] for t in chain.summands]
    else:
        part = postprojective_partition(cat)
        chain = postprojective_epi_chain(cat, part, m)
        terms = [[cat.names[i] for i in t] for t in chain.summands]
    comp = chain.composite
    table = s.table()
    payload = {"module": args.module, "kind": args.kind, "level": part.level_of(m),
               "terms": terms}
    if comp is not None:
        payload["composite_injective"] = comp.is_injective()
        payload["composite_surjective"] = comp.is_surjective()
        payload["component_depths"] = _component_depths(cat, table, comp, chain, args.kind)
    return payload, FINITE


def _component_depths(cat, table, comp, chain, kind) -> list:
    from .modules import direct_sum
    ends = chain.summands[-1] if kind == "mono" else chain.summands[0]
    if len(ends) == 1:
        return [_depth(depth(table, comp))]
    ds = direct_sum([cat.objects[i] for i in ends], cat.algebra)
    if kind == "mono":
        parts = [p @ comp for p in ds.projections]
    else:
        parts = [comp @ inc for inc in ds.inclusions]
    return [_depth(depth(table, f)) if not f.is_zero() else "zero" for f in parts]


COMMANDS = {
    "basis": cmd_basis, "indec": cmd_indec, "radical": cmd_radical, "depth": cmd_depth,
    "partitions": cmd_partitions, "certify": cmd_certify, "qh": cmd_qh,
    "tilting": cmd_tilting, "fdelta": cmd_fdelta, "verify": cmd_verify, "chain": cmd_chain,
}


def build_report(command: str, argv, af, limits: Limits, args) -> tuple:
    """``(report dict, exit code)`` for one subcommand."""
    s = Session(af, limits)
    report = {"command": list(argv), "algebra": algebra_summary(af, s.algebra)}
    try:
        payload, status = COMMANDS[command](s, args)
    except Undetermined as exc:
        payload = {"reason": str(exc), "partial_count": len(exc.partial),
                   "modules": _module_list(exc.partial),
                   "note": "finiteness undetermined within the enumeration limits"}
        status = UNDETERMINED
    report["result"] = payload
    report["status"] = status
    return report, EXIT_CODES[status]
