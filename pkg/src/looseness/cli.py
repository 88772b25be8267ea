"""Command-line front end.

Exit codes: 0 Loose, 1 NotLoose, 2 Unknown, 64 usage error, 65 data-file error.
Commands that compute a number rather than a verdict exit 0 on success;
``sweep`` exits 0 when every row matches its closed form and 1 otherwise.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Optional, TextIO

from . import __version__
from .abelian import FgAbGroup
from .bundles import PlaneBundleInput, decide_cp_tensor, decide_plane_bundle
from .grassmann import euler_grassmann, euler_schubert_oracle, stiefel_dims, in_stable_range
from .spheres import SphereMapInput, decide_sphere_map
from .stems import (
    InconsistentFacts,
    StemTable,
    TableError,
    becker_schultz_constraint,
    default_table,
    load_table,
    refine,
)
from .stiefel import corollary_sweep, decide_stiefel
from .verdict import Outcome, Verdict

EXIT_CODES = {Outcome.LOOSE: 0, Outcome.NOT_LOOSE: 1, Outcome.UNKNOWN: 2}
EXIT_USAGE = 64
EXIT_DATA = 65


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class Report:
    query: dict[str, Any]
    verdict: Optional[Verdict] = None
    result: Optional[dict[str, Any]] = None
    versions: dict[str, str] = field(default_factory=dict)

    def to_dict(self) -> dict[str, Any]:
        return {
            "query": self.query,
            "verdict": self.verdict.to_dict() if self.verdict else None,
            "result": self.result,
            "versions": self.versions,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> Report:
        verdict = data.get("verdict")
        return cls(
            query=data["query"],
            verdict=Verdict.from_dict(verdict) if verdict else None,
            result=data.get("result"),
            versions=data.get("versions", {}),
        )

    @classmethod
    def from_json(cls, text: str) -> Report:
        return cls.from_dict(json.loads(text))

    def render(self) -> str:
        lines = ["query: " + ", ".join(f"{k}={v}" for k, v in self.query.items())]
        if self.verdict is not None:
            lines.append(self.verdict.render())
        if self.result is not None:
            lines.extend(_render_result(self.result))
        lines.append("versions: " + ", ".join(f"{k}={v}" for k, v in self.versions.items()))
        return "\n".join(lines)


def _render_result(result: dict[str, Any]) -> list[str]:
    lines = []
    for key, value in result.items():
        if key == "rows":
            for row in value:
                mark = "ok" if row["agrees"] else "MISMATCH"
                lines.append(
                    f"  r={row['r']:>4}  {row['outcome']:<9} expected {row['expected']:<9} "
                    f"{row['rule']:<32} {mark}"
                )
        else:
            lines.append(f"{key}: {value}")
    return lines


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(f"{self.prog}: {message}")


def _int_list(text: str) -> list[int]:
    text = text.strip()
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit the report as JSON")
    common.add_argument("--table", metavar="PATH", default=argparse.SUPPRESS,
                        help="stems data file to use instead of the bundled one")

    parser = _Parser(prog="looseness", description="Decide whether maps can be deformed off themselves.")
    parser.add_argument("--version", action="version", version=f"looseness {__version__}")
    parser.add_argument("--json", action="store_true", help="emit the report as JSON")
    parser.add_argument("--table", metavar="PATH", help="stems data file to use instead of the bundled one")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("stiefel", parents=[common], help="projection V_{r,k} -> G_{r,k}")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--oriented", action="store_true", help="target the oriented Grassmannian")

    p = sub.add_parser("bundle", help="circle-bundle projections")
    bsub = p.add_subparsers(dest="bundle_kind", required=True, parser_class=_Parser)
    b = bsub.add_parser("plane", parents=[common], help="oriented plane bundle over N")
    b.add_argument("--chi", type=int, required=True, help="Euler number of N")
    b.add_argument("--evals", type=_int_list, required=True,
                   help="Euler class on generators of H_2(N;Z), comma-separated ('' for none)")
    b.add_argument("--w2", type=_int_list, default=[], help="w_2 on torsion generators (trace only)")
    b.add_argument("--dim", type=int, default=2, help="dimension of N")
    b = bsub.add_parser("cp", parents=[common], help="tensor power of the canonical bundle over CP(q)")
    b.add_argument("--q", type=int, required=True)
    b.add_argument("--power", type=int, required=True)

    p = sub.add_parser("sphere-map", parents=[common], help="map S^m -> N given its stable class")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--class", dest="cls", type=_int_list, required=True,
                   help="coordinates of the stable class in the table group for stem m-n")
    p.add_argument("--chi", type=int, help="Euler number of N (default: N = S^n)")

    p = sub.add_parser("euler", help="Euler characteristics")
    esub = p.add_subparsers(dest="space", required=True, parser_class=_Parser)
    e = esub.add_parser("grassmann", parents=[common])
    e.add_argument("--r", type=int, required=True)
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--oriented", action="store_true")

    p = sub.add_parser("dims", parents=[common], help="dimensions of V_{r,k}, G_{r,k}, SO(k)")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("sweep", parents=[common], help="check closed forms for k = 2, 3, 5")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--r-max", type=int, required=True)

    p = sub.add_parser("constraints", parents=[common], help="Becker-Schultz: chi(B/G)[G] = 0")
    p.add_argument("--chi", type=int, required=True, help="Euler number of B/G")
    p.add_argument("--k", type=int, help="refine against the table facts for [SO(k)]")
    return parser


def _versions(table: StemTable) -> dict[str, str]:
    return {"tool": f"looseness {__version__}", "data": table.identifier}


def _dispatch(args: argparse.Namespace, table: StemTable) -> tuple[Report, int]:
    versions = _versions(table)
    cmd = args.command

    if cmd == "stiefel":
        query = {"command": "stiefel", "r": args.r, "k": args.k, "oriented": args.oriented}
        verdict = decide_stiefel(args.r, args.k, args.oriented, table=table)
        return Report(query, verdict, versions=versions), EXIT_CODES[verdict.outcome]

    if cmd == "bundle" and args.bundle_kind == "plane":
        query = {"command": "bundle plane", "chi": args.chi, "evals": args.evals,
                 "w2": args.w2, "dim": args.dim}
        verdict = decide_plane_bundle(PlaneBundleInput(args.chi, args.evals, args.w2, args.dim))
        return Report(query, verdict, versions=versions), EXIT_CODES[verdict.outcome]

    if cmd == "bundle":
        query = {"command": "bundle cp", "q": args.q, "power": args.power}
        verdict = decide_cp_tensor(args.q, args.power)
        return Report(query, verdict, versions=versions), EXIT_CODES[verdict.outcome]

    if cmd == "sphere-map":
        query = {"command": "sphere-map", "m": args.m, "n": args.n, "class": args.cls, "chi": args.chi}
        if args.m < args.n:
            raise ValueError(f"need m >= n, got m={args.m}, n={args.n}")
        group = table.stem_group(args.m - args.n)
        if group is None:
            raise TableError(f"table incomplete: no entry for stem {args.m - args.n} = m - n")
        data = SphereMapInput(args.m, args.n, group.element(args.cls), args.chi)
        verdict = decide_sphere_map(data, table)
        return Report(query, verdict, versions=versions), EXIT_CODES[verdict.outcome]

    if cmd == "euler":
        query = {"command": "euler grassmann", "r": args.r, "k": args.k, "oriented": args.oriented}
        result: dict[str, Any] = {"chi": euler_grassmann(args.r, args.k, args.oriented)}
        if args.oriented:
            result["convention"] = "derived: double cover of the unoriented Grassmannian for 0 < k < r"
        else:
            result["schubert_oracle"] = euler_schubert_oracle(args.r, args.k)
        return Report(query, result=result, versions=versions), 0

    if cmd == "dims":
        query = {"command": "dims", "r": args.r, "k": args.k}
        data = stiefel_dims(args.r, args.k)
        result = {
            "m": data.m, "n": data.n, "d": data.d, "chi": data.chi,
            "stable_range": data.stable_range,
            "stable_range_by_threshold": in_stable_range(args.r, args.k),
        }
        return Report(query, result=result, versions=versions), 0

    if cmd == "sweep":
        query = {"command": "sweep", "k": args.k, "r_max": args.r_max}
        rows = corollary_sweep(args.k, args.r_max, table=table)
        all_agree = all(row.agrees for row in rows)
        result = {
            "all_agree": all_agree,
            "rows": [
                {
                    "r": row.r,
                    "outcome": row.verdict.outcome.value,
                    "expected": row.expected.value,
                    "agrees": row.agrees,
                    "rule": row.verdict.deciding_rule,
                    "note": row.note,
                    "verdict": row.verdict.to_dict(),
                }
                for row in rows
            ],
        }
        return Report(query, result=result, versions=versions), 0 if all_agree else 1

    if cmd == "constraints":
        query = {"command": "constraints", "chi": args.chi, "k": args.k}
        bound = becker_schultz_constraint(args.chi)
        result = {"constraint": str(bound) if bound else "no information"}
        if args.k is not None:
            known = table.so_class_order(args.k)
            result["table_fact"] = str(known)
            result["refined"] = str(refine(bound, known))
        return Report(query, result=result, versions=versions), 0

    raise UsageError(f"unknown command {cmd!r}")


def _strip_verdicts(result: dict[str, Any]) -> dict[str, Any]:
    if "rows" not in result:
        return result
    return {**result, "rows": [{k: v for k, v in row.items() if k != "verdict"} for row in result["rows"]]}


def run(argv: list[str], out: Optional[TextIO] = None, err: Optional[TextIO] = None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = _build_parser().parse_args(argv)
    except UsageError as exc:
        print(exc, file=err)
        return EXIT_USAGE

    try:
        table = load_table(args.table) if args.table else default_table()
        report, code = _dispatch(args, table)
    except (TableError, InconsistentFacts) as exc:
        print(f"data error: {exc}", file=err)
        return EXIT_DATA
    except (ValueError, UsageError) as exc:
        print(f"usage error: {exc}", file=err)
        return EXIT_USAGE

    if args.json:
        print(report.to_json(), file=out)
    else:
        if report.result is not None:
            report = Report(report.query, report.verdict, _strip_verdicts(report.result), report.versions)
        print(report.render(), file=out)
    return code


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
