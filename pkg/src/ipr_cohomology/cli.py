"""Command-line front end.

    ipr-cc <command> <series> <rank> --parabolic i,j,... [--format text|json|csv]
           [--out PATH] [--max-weyl N]

The parabolic is given as the set I of simple roots whose root vectors are
removed from the Levi factor (equivalently, the grading element is the sum of
the dual coweights over I).
"""
from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from itertools import combinations
from typing import Dict, List, Optional, Sequence, Tuple

from . import render
from .ce_oracle import OracleTooLarge, build_lie_structure, ce_cohomology_dims
from .kostant import CohomologyTable, cohomology_table
from .layout import ResolutionConditionError, double_complex, resolution_shape
from .root_system import CartanType, InvalidCartanType, root_system
from .schubert_cc import cc_dual_report
from .weyl import ParabolicSpec, WeylGroupTooLarge

COMMANDS = ("table", "invariants", "vhs", "cc-dual", "layout", "resolution", "oracle", "sweep")
FORMATS = ("text", "json", "csv")

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_SCALE = 3
EXIT_ORACLE = 4
EXIT_RESOLUTION = 5


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class JobSpec:
    command: str
    series: str
    rank: int
    parabolic: Tuple[int, ...] = ()
    format: str = "text"
    output_path: Optional[str] = None
    max_weyl: Optional[int] = None
    p: int = 0
    with_oracle: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.format not in FORMATS:
            raise UsageError(f"unknown format {self.format!r}")
        try:
            CartanType(self.series, self.rank)
        except InvalidCartanType as exc:
            raise UsageError(str(exc)) from None
        if self.command != "sweep":
            if not self.parabolic:
                raise UsageError("--parabolic is required")
            bad = [i for i in self.parabolic if not 1 <= i <= self.rank]
            if bad:
                raise UsageError(f"parabolic indices {bad} outside [1, {self.rank}]")
        if self.format == "csv" and self.command != "sweep":
            raise UsageError("csv output is only available for sweep")


def parse_parabolic(text: str) -> Tuple[int, ...]:
    try:
        vals = [int(tok) for tok in text.replace(" ", "").split(",") if tok]
    except ValueError:
        raise UsageError(f"cannot parse parabolic {text!r}; expected e.g. 1,3") from None
    if not vals:
        raise UsageError("parabolic must be nonempty")
    return tuple(sorted(set(vals)))


def oracle_rows(table: CohomologyTable, oracle: Dict[Tuple[int, int], int]) -> List[Dict]:
    kost = table.cell_dims()
    rows = []
    for l, m in sorted(set(kost) | set(oracle)):
        a, b = kost.get((l, m), 0), oracle.get((l, m), 0)
        rows.append({"l": l, "m": m, "kostant": a, "oracle": b, "status": "PASS" if a == b else "FAIL"})
    return rows


def _spec(job: JobSpec, indices: Sequence[int]) -> ParabolicSpec:
    return ParabolicSpec(root_system(job.series, job.rank), indices)


def all_parabolics(rank: int) -> List[Tuple[int, ...]]:
    return [c for k in range(1, rank + 1) for c in combinations(range(1, rank + 1), k)]


def _run_sweep(job: JobSpec) -> Tuple[int, str]:
    rows, status = [], EXIT_OK
    ls = build_lie_structure(root_system(job.series, job.rank)) if job.with_oracle else None
    for I in all_parabolics(job.rank):
        p = _spec(job, I)
        table = cohomology_table(p, max_weyl=job.max_weyl)
        row = render.sweep_row(table, cc_dual_report(table))
        if ls is not None:
            ok = all(r["status"] == "PASS" for r in oracle_rows(table, ce_cohomology_dims(ls, p)))
            row["oracle"] = "PASS" if ok else "FAIL"
            status = status if ok else EXIT_ORACLE
        rows.append(row)
    if job.format == "json":
        doc = {"schema": render.SCHEMA_VERSION, "type": f"{job.series}{job.rank}", "rows": rows}
        return status, render.emit_json(doc) + "\n"
    fields = render.SWEEP_FIELDS + (["oracle"] if ls is not None else [])
    return status, render.sweep_csv(rows, fields)


def run(job: JobSpec) -> Tuple[int, str]:
    """Execute one job; returns ``(exit status, rendered output)``."""
    if job.command == "sweep":
        return _run_sweep(job)
    p = _spec(job, job.parabolic)
    # the oracle's size guard is cheap; check it before enumerating W^p
    ls = build_lie_structure(p.root_system) if job.command == "oracle" else None
    table = cohomology_table(p, max_weyl=job.max_weyl)
    as_json = job.format == "json"
    cmd = job.command
    if cmd == "table":
        out = render.emit_json(render.table_json(table)) if as_json else render.table_text(table)
    elif cmd == "invariants":
        out = render.emit_json(render.invariants_json(table)) if as_json else render.invariants_text(table)
    elif cmd == "vhs":
        out = render.emit_json(render.vhs_json(table)) if as_json else render.vhs_text(table)
    elif cmd == "cc-dual":
        rep = cc_dual_report(table)
        out = render.emit_json(render.cc_json(rep)) if as_json else render.cc_text(rep)
    elif cmd == "layout":
        lay = double_complex(table)
        out = render.emit_json(render.layout_json(table, lay)) if as_json else render.layout_text(table, lay)
    elif cmd == "resolution":
        try:
            res = resolution_shape(table, job.p)
        except ResolutionConditionError as exc:
            if as_json:
                doc = render.refusal_json(table, str(exc), exc.cells)
                return EXIT_RESOLUTION, render.emit_json(doc) + "\n"
            return EXIT_RESOLUTION, f"{p.label()}: resolution refused: {exc}\n"
        out = render.emit_json(render.resolution_json(table, res)) if as_json else render.resolution_text(table, res)
    else:  # oracle
        rows = oracle_rows(table, ce_cohomology_dims(ls, p))
        out = render.emit_json(render.oracle_json(table, rows)) if as_json else render.oracle_text(table, rows)
        if any(r["status"] != "PASS" for r in rows):
            return EXIT_ORACLE, out if out.endswith("\n") else out + "\n"
    return EXIT_OK, out if out.endswith("\n") else out + "\n"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    ap = _Parser(prog="ipr-cc", description="Graded Lie algebra cohomology of parabolic nilradicals.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("series", help="Cartan series letter A-G")
    ap.add_argument("rank", type=int)
    ap.add_argument("--parabolic", "-I", help="comma-separated simple roots in I (Bourbaki numbering)")
    ap.add_argument("--format", default="text", choices=FORMATS)
    ap.add_argument("--out", help="write output to PATH instead of stdout")
    ap.add_argument("--max-weyl", type=int, help="refuse Weyl groups larger than N (env IPR_MAX_WEYL)")
    ap.add_argument("--p", type=int, default=0, help="resolution: use O(H^p_p)")
    ap.add_argument("--with-oracle", action="store_true", help="sweep: also cross-check against the oracle")
    return ap


def parse_job(argv: Sequence[str]) -> JobSpec:
    ns = build_parser().parse_args(list(argv))
    return JobSpec(
        command=ns.command,
        series=ns.series.upper(),
        rank=ns.rank,
        parabolic=parse_parabolic(ns.parabolic) if ns.parabolic is not None else (),
        format=ns.format,
        output_path=ns.out,
        max_weyl=ns.max_weyl,
        p=ns.p,
        with_oracle=ns.with_oracle,
    )


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        job = parse_job(argv)
    except UsageError as exc:
        build_parser().print_usage(sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        status, out = run(job)
    except (WeylGroupTooLarge, OracleTooLarge) as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_SCALE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if job.output_path:
        with open(job.output_path, "w", encoding="utf-8") as fh:
            fh.write(out)
    else:
        sys.stdout.write(out)
    return status


if __name__ == "__main__":
    sys.exit(main())
