"""Command-line entry point: ``raddepth <command> --preset NAME | --algebra FILE``."""

from __future__ import annotations

import argparse
import json
import logging
import sys

from .io import ParseError, ValidationError, load_algebra, load_preset, preset_names
from .reports import COMMANDS, EXIT_CODES, FAIL, Limits, build_report

log = logging.getLogger("raddepth")


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    src = p.add_mutually_exclusive_group(required=True)
    src.add_argument("--algebra", metavar="FILE", help="YAML algebra file")
    src.add_argument("--preset", metavar="NAME", help="bundled preset name")
    p.add_argument("--max-dim", type=int, default=60)
    p.add_argument("--max-modules", type=int, default=500)
    p.add_argument("--max-power", type=int, default=64)
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="raddepth",
        description="Radical depth, partitions and Delta-good structure of quiver algebras.",
        epilog="presets: " + ", ".join(preset_names()))
    sub = parser.add_subparsers(dest="command", required=True)
    common = _common()
    helps = {
        "basis": "path basis of the algebra",
        "indec": "enumerate indecomposable modules",
        "radical": "radical power tables",
        "depth": "depth of a distinguished morphism",
        "partitions": "postprojective and preinjective partitions of mod A",
        "certify": "finite-type certificate",
        "qh": "standard and costandard modules, quasi-hereditary checks",
        "tilting": "characteristic tilting modules T(i) and beta(i)",
        "fdelta": "the category F(Delta), its partitions, p(Delta) and q(Delta)",
        "verify": "run a verification suite",
        "chain": "mono or epi chain through partition levels",
    }
    cmds = {name: sub.add_parser(name, parents=[common], help=h) for name, h in helps.items()}
    cmds["radical"].add_argument("--pair", nargs=2, metavar=("M", "N"))
    cmds["radical"].add_argument("--power", type=int)
    cmds["depth"].add_argument("--morphism", required=True,
                               help="pi:S, iota:S, theta:S (vertex S), beta:i or deltapi:i")
    cmds["partitions"].add_argument("--kind", choices=("post", "pre", "both"), default="both")
    cmds["verify"].add_argument("--suite", choices=("propdan", "section3", "section4", "all"),
                                default="all")
    cmds["chain"].add_argument("--module", required=True, help="module name, e.g. [1,1,0]")
    cmds["chain"].add_argument("--kind", choices=("mono", "epi"), default="mono")
    return parser


def render_text(value, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(value, dict):
        lines = []
        for k in sorted(value):
            v = value[k]
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_inline(v)}")
        return "\n".join(lines)
    if isinstance(value, list):
        lines = []
        for item in value:
            if isinstance(item, (dict, list)) and not _flat(item):
                body = render_text(item, indent + 1).lstrip()
                lines.append(f"{pad}- {body}")
            else:
                lines.append(f"{pad}- {_inline(item)}")
        return "\n".join(lines)
    return pad + _inline(value)


def _flat(v) -> bool:
    if isinstance(v, dict):
        return False
    return all(not isinstance(x, (dict, list)) or (isinstance(x, list) and _flat(x)) for x in v)


def _inline(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_inline(x) for x in v) + "]"
    if isinstance(v, bool):
        return "true" if v else "false"
    return str(v)


def run_command(argv) -> tuple:
    """``(report dict or None, exit code, rendered output)``."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        af = load_algebra(args.algebra) if args.algebra else load_preset(args.preset)
        limits = Limits(args.max_dim, args.max_modules, args.max_power)
        report, code = build_report(args.command, argv, af, limits, args)
    except (ParseError, ValidationError, KeyError, ValueError, OSError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else str(exc)
        report = {"command": list(argv), "status": FAIL, "error": msg}
        code = EXIT_CODES[FAIL]
    if args.format == "json":
        out = json.dumps(report, sort_keys=True, indent=2, default=str)
    else:
        out = render_text(report)
    return report, code, out


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    _, code, out = run_command(argv)
    print(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
