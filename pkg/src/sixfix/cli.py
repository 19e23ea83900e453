"""Command-line front end: ``sixfix {delta,blowup-table,fixed-points,plane-scan,verify-paper}``.

Exit status is 0 on success, 1 when a check fails and 2 on bad input.
Results go to stdout, diagnostics to stderr.
"""

from __future__ import annotations

import argparse
import logging
import sys

from sixfix import blowup, forms, planecurve, torus
from sixfix.io import (
    InputError,
    cubic_from_json,
    cubic_to_json,
    dumps,
    json_int,
    load_scenario,
    loads,
    report_to_json,
)
from sixfix.verify import verify_paper

log = logging.getLogger("sixfix")

EXIT_OK, EXIT_CHECK, EXIT_INPUT = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INPUT)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc


def _md_table(header: list[str], rows: list[list]) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(str(c) for c in row) + " |" for row in rows]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# delta


def _cmd_delta(args, out) -> int:
    if args.json is not None:
        if any(v is not None for v in (args.a0, args.a1, args.a2, args.a3)):
            raise InputError("give either --json or --a0..--a3, not both")
        cubic, c1, recorded = cubic_from_json(loads(_read(args.json), args.json))
    else:
        missing = [n for n in ("a0", "a1", "a2", "a3") if getattr(args, n) is None]
        if missing:
            raise InputError(f"missing --{', --'.join(missing)}")
        cubic = forms.CubicData(args.a0, args.a1, args.a2, args.a3)
        c1, recorded = (tuple(args.c1) if args.c1 else None), {}
    value = forms.delta(cubic)
    zero = forms.has_cube_zero_class(cubic)
    status = EXIT_OK
    if "delta" in recorded and int(recorded["delta"]) != value:
        log.error("recorded delta %s differs from computed %s", recorded["delta"], value)
        status = EXIT_CHECK
    if "cube_zero_class" in recorded:
        rec = recorded["cube_zero_class"]
        if (None if rec is None else tuple(int(v) for v in rec)) != zero:
            log.error("recorded cube-zero class %s differs from computed %s", rec, zero)
            status = EXIT_CHECK

    if args.format == "text":
        out.write(f"{value}\n")
    elif args.format == "json":
        obj = cubic_to_json(cubic, c1)
        obj["delta"] = json_int(value)
        obj["cube_zero_class"] = None if zero is None else [json_int(v) for v in zero]
        out.write(dumps(obj))
    else:
        rows = [[*cubic.as_tuple(), value, zero if zero is not None else "none"]]
        out.write(_md_table(["a0", "a1", "a2", "a3", "Delta", "cube-zero class"], rows))
    return status


# ---------------------------------------------------------------------------
# blowup-table


def _blowup_table(base_name: str, kmax: int) -> dict:
    base = blowup.get_base(base_name)
    scan = blowup.delta_family_scan(base, kmax)
    rows = []
    for k, dval in scan.values:
        coh = blowup.curve_blowup(blowup.CurveBlowupSpec(base, k))
        rows.append(
            {
                "k": k,
                "cubic": cubic_to_json(coh.cubic, coh.c1),
                "delta": json_int(dval),
                "normal_degree": coh.normal_degree,
                "chi": coh.chi,
            }
        )
    return {
        "base": base_name.lower(),
        "kmax": kmax,
        "rows": rows,
        "maximum": json_int(scan.maximum),
        "argmax": scan.argmax,
        "threshold": scan.threshold,
        "decreasing_past_threshold": scan.decreasing_past_threshold,
    }


def _cmd_blowup_table(args, out) -> int:
    previous = None
    if args.from_file:
        previous = loads(_read(args.from_file), args.from_file)
        if not isinstance(previous, dict) or "base" not in previous or "kmax" not in previous:
            raise InputError("expected a blowup-table JSON document with base and kmax", args.from_file)
        base_name, kmax = previous["base"], previous["kmax"]
    else:
        if args.base is None or args.kmax is None:
            raise InputError("--base and --kmax are required unless --from is given")
        base_name, kmax = args.base, args.kmax
    if not isinstance(kmax, int) or kmax < 1:
        raise InputError("kmax must be a positive integer")
    try:
        table = _blowup_table(base_name, kmax)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    status = EXIT_OK if table["decreasing_past_threshold"] else EXIT_CHECK
    if previous is not None and previous != table:
        log.error("recomputed table differs from %s", args.from_file)
        status = EXIT_CHECK
    if args.format == "json":
        out.write(dumps(table))
    else:
        rows = [
            [r["k"], tuple(r["cubic"][f"a{i}"] for i in range(4)), r["delta"], r["normal_degree"], r["chi"]]
            for r in table["rows"]
        ]
        out.write(f"Curve blow-ups of {table['base'].upper()}, k = 1..{kmax}\n\n")
        out.write(_md_table(["k", "cubic (h, e)", "Delta", "c1(N)", "chi"], rows))
        out.write(
            f"\nmax Delta = {table['maximum']} at k = {table['argmax']}; "
            f"strictly decreasing from k = {table['threshold']}: {table['decreasing_past_threshold']}\n"
        )
    return status


# ---------------------------------------------------------------------------
# fixed-points


def _compute_report(scen):
    if scen.curve is not None:
        return torus.blowup_fixed_report(scen.action, scen.ambient, scen.curve)
    if isinstance(scen.ambient, torus.Hypersurface):
        return torus.fixed_points_on_hypersurface(scen.action, scen.ambient)
    return torus.fixed_locus(scen.action)


def _cmd_fixed_points(args, out) -> int:
    scen, previous = load_scenario(loads(_read(args.scenario), args.scenario))
    report = _compute_report(scen)
    payload = {"scenario": scen.raw, "report": report_to_json(report)}
    status = EXIT_OK
    if scen.expected_chi is not None:
        ok = report.isolated and torus.euler_consistency(report, scen.expected_chi, dim=scen.dimension)
        payload["euler_consistent"] = ok
        if not ok:
            log.error("fixed-point count %s does not match chi = %s", report.count, scen.expected_chi)
            status = EXIT_CHECK
    if previous is not None and previous != payload["report"]:
        log.error("recomputed report differs from the one in %s", args.scenario)
        status = EXIT_CHECK
    if args.format == "json":
        out.write(dumps(payload))
    else:
        rep = payload["report"]
        out.write(f"isolated: {rep['isolated']}, count: {rep['count']}\n\n")
        rows = [[p["label"], p["coords"], p["tangent_weights"], p["multiplicity"]] for p in rep["isolated_points"]]
        out.write(_md_table(["point", "coords", "tangent weights", "mult"], rows))
        if rep["positive_dim_components"]:
            out.write("\n")
            rows = [[c["supports"], c["dim"], c["note"]] for c in rep["positive_dim_components"]]
            out.write(_md_table(["support", "dim", "note"], rows))
        for note in rep["notes"]:
            out.write(f"\n- {note}")
        if rep["notes"]:
            out.write("\n")
    return status


# ---------------------------------------------------------------------------
# plane-scan


def _witness_json(w):
    point, desc = w
    return {"point": list(point) if point is not None else None, "description": desc}


def _plane_scan(bmax: int) -> dict:
    rows = []
    for row in planecurve.plane_scan(bmax):
        rows.append(
            {
                "a": row.a,
                "b": row.b,
                "components": [c.note for c in row.components],
                "monomial_verdict": {
                    "class": row.monomial_verdict.cls,
                    "witnesses": [_witness_json(w) for w in row.monomial_verdict.witnesses],
                },
                "max_nodal_degree": row.max_nodal.degree,
                "max_nodal_union": [c.note or str(c.line) for c in row.max_nodal.components],
            }
        )
    return {"bmax": bmax, "rows": rows, "bound_holds": all(r["max_nodal_degree"] <= 3 for r in rows)}


def _cmd_plane_scan(args, out) -> int:
    previous = None
    if args.from_file:
        previous = loads(_read(args.from_file), args.from_file)
        if not isinstance(previous, dict) or not isinstance(previous.get("bmax"), int):
            raise InputError("expected a plane-scan JSON document with bmax", args.from_file)
        bmax = previous["bmax"]
    else:
        if args.bmax is None:
            raise InputError("--bmax is required unless --from is given")
        bmax = args.bmax
    if bmax < 1:
        raise InputError("bmax must be a positive integer")
    scan = _plane_scan(bmax)
    status = EXIT_OK if scan["bound_holds"] else EXIT_CHECK
    if previous is not None and previous != scan:
        log.error("recomputed scan differs from %s", args.from_file)
        status = EXIT_CHECK
    if args.format == "json":
        out.write(dumps(scan))
    else:
        rows = [
            [r["a"], r["b"], r["monomial_verdict"]["class"], r["max_nodal_degree"], "; ".join(r["max_nodal_union"])]
            for r in scan["rows"]
        ]
        out.write(_md_table(["a", "b", "orbit closure", "max nodal degree", "witness"], rows))
    return status


# ---------------------------------------------------------------------------
# verify-paper


def _cmd_verify(args, out) -> int:
    result = verify_paper(seed=args.seed, scenario_dir=args.scenario_dir)
    if args.format == "json":
        out.write(dumps({"passed": result.passed, "checks": [c.as_dict() for c in result.checks]}))
    else:
        rows = [[c.id, c.status.upper(), c.title, c.basis, c.actual] for c in result.checks]
        out.write(_md_table(["id", "status", "check", "basis", "actual"], rows))
    for c in result.checks:
        if c.status != "pass":
            log.error("%s %s: expected %s, got %s", c.id, c.status, c.expected, c.actual)
    return EXIT_OK if result.passed else EXIT_CHECK


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="sixfix", description="Exact invariants and fixed points of torus-action 3-folds.")
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("delta", help="Delta-invariant and cube-zero class of a cubic form")
    for name in ("a0", "a1", "a2", "a3"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--c1", type=int, nargs=2, metavar=("X", "Y"))
    p.add_argument("--json", metavar="FILE", help="read the form from a JSON object ('-' for stdin)")
    p.add_argument("--format", choices=["text", "json", "md"], default="text")
    p.set_defaults(func=_cmd_delta)

    p = sub.add_parser("blowup-table", help="cubic forms and Delta of curve blow-ups")
    p.add_argument("--base", choices=["cp3", "q", "v5", "v22"])
    p.add_argument("--kmax", type=int)
    p.add_argument("--from", dest="from_file", metavar="FILE", help="recompute and compare a previous JSON table")
    p.add_argument("--format", choices=["json", "md"], default="json")
    p.set_defaults(func=_cmd_blowup_table)

    p = sub.add_parser("fixed-points", help="fixed locus of a torus scenario")
    p.add_argument("--scenario", required=True, metavar="FILE")
    p.add_argument("--format", choices=["json", "md"], default="json")
    p.set_defaults(func=_cmd_fixed_points)

    p = sub.add_parser("plane-scan", help="invariant plane curves for 1 <= a <= b <= bmax")
    p.add_argument("--bmax", type=int)
    p.add_argument("--from", dest="from_file", metavar="FILE", help="recompute and compare a previous JSON scan")
    p.add_argument("--format", choices=["json", "md"], default="json")
    p.set_defaults(func=_cmd_plane_scan)

    p = sub.add_parser("verify-paper", help="run every cross-check")
    p.add_argument("--format", choices=["json", "md"], default="md")
    p.add_argument("--seed", type=int, default=None, help="defaults to $SIXFIX_SEED or 0")
    p.add_argument("--scenario-dir", default=None)
    p.set_defaults(func=_cmd_verify)
    return parser


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="sixfix: %(levelname)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        return args.func(args, out)
    except InputError as exc:
        print(f"sixfix: input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (torus.TorusError, ValueError, TypeError) as exc:
        print(f"sixfix: invalid input: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())
