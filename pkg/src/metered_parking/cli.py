"""Command-line front end.

    metered-park simulate --n 2 --t 1 --prefs 1,1,1
    metered-park count --m 5 --n 3 --t 2
    metered-park table --t-rule fixed:3 --m-max 7 --n-max 7 --format csv
    metered-park check --suite all --n-max 5

Exit codes: 0 member / all checks pass, 1 non-member or failed check,
2 bad input, 3 no applicable formula, 4 budget refused, 5 formula/oracle
mismatch.  The env var METERED_PARK_BUDGET overrides the default step
budget.  Nothing is written to disk unless --out is given.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, field
from datetime import datetime, timezone

from . import enumeration, verify
from .enumeration import DEFAULT_BUDGET, TableGrid, brute_count, build_table, count
from .errors import (
    BudgetError,
    DomainError,
    InputError,
    MeteredParkingError,
    PrecisionError,
    VerificationError,
)
from .parksim import FAIL, ParkingInstance, simulate_classical, simulate_metered, statistics

SCHEMA_VERSION = "1"

EXIT_OK = 0
EXIT_NON_MEMBER = 1
EXIT_INPUT = 2
EXIT_NO_FORMULA = 3
EXIT_BUDGET = 4
EXIT_MISMATCH = 5


@dataclass
class OutputRecord:
    """Machine-readable result of one invocation."""

    command: str
    parameters: dict
    results: dict
    schema_version: str = SCHEMA_VERSION
    generated_at: str = field(
        default_factory=lambda: datetime.now(timezone.utc).isoformat()
    )

    def to_json(self) -> str:
        payload = {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "results": self.results,
            "generated_at": self.generated_at,
        }
        return json.dumps(payload, indent=2)


def _emit(text: str, out_path: str | None) -> None:
    print(text)
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")


def _parse_prefs(raw: str) -> tuple:
    try:
        return tuple(int(part) for part in raw.split(","))
    except ValueError:
        raise InputError(f"could not parse preference list {raw!r}") from None


def _token(entry) -> str:
    return "X" if entry is FAIL else str(entry)


def _default_budget() -> int:
    raw = os.environ.get("METERED_PARK_BUDGET")
    if raw is None:
        return DEFAULT_BUDGET
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"METERED_PARK_BUDGET={raw!r} is not an integer") from None


# ---------------------------------------------------------------- simulate


def cmd_simulate(args: argparse.Namespace) -> int:
    prefs = _parse_prefs(args.prefs)
    m = args.m if args.m is not None else len(prefs)
    if args.scheme == "metered" and args.t is None:
        raise InputError("the metered scheme requires --t")
    t = args.t if args.t is not None else 0
    inst = ParkingInstance(m, args.n, t)
    if args.scheme == "classical":
        outcome = simulate_classical(inst, prefs)
    else:
        outcome = simulate_metered(inst, prefs)
    member = FAIL not in outcome
    stats = statistics(outcome, prefs)
    record = OutputRecord(
        command="simulate",
        parameters={
            "m": m,
            "n": args.n,
            "t": t,
            "scheme": args.scheme,
            "prefs": list(prefs),
        },
        results={
            "outcome": [_token(p) for p in outcome],
            "member": member,
            "lucky_count": stats.lucky_count,
            "displacements": [
                d if d is not None else None for d in stats.displacements
            ],
            "total_displacement": stats.total_displacement,
        },
    )
    if args.json:
        _emit(record.to_json(), args.out)
    else:
        lines = [
            f"outcome: {','.join(_token(p) for p in outcome)}",
            f"member: {'yes' if member else 'no'}",
            f"lucky cars: {stats.lucky_count}",
            "displacements: "
            + ",".join("-" if d is None else str(d) for d in stats.displacements),
        ]
        _emit("\n".join(lines), args.out)
    return EXIT_OK if member else EXIT_NON_MEMBER


# ------------------------------------------------------------------- count


def cmd_count(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    if args.method == "brute":
        value, method = (
            brute_count(args.m, args.n, args.t, budget=budget, workers=args.workers),
            "brute",
        )
    else:
        res = count(args.m, args.n, args.t, budget=budget, workers=args.workers)
        if args.method == "formula" and res.method == "brute":
            print(
                f"no applicable formula for (m={args.m}, n={args.n}, t={args.t})",
                file=sys.stderr,
            )
            return EXIT_NO_FORMULA
        value, method = res.value, res.method
    record = OutputRecord(
        command="count",
        parameters={
            "m": args.m,
            "n": args.n,
            "t": args.t,
            "method": args.method,
            "budget": budget,
        },
        results={"value": str(value), "method": method},
    )
    if args.json:
        _emit(record.to_json(), args.out)
    else:
        _emit(f"{value} via {method}", args.out)
    return EXIT_OK


# ------------------------------------------------------------------- table


def _grid_csv(grid: TableGrid) -> str:
    lines = [",".join([grid.row_label] + [str(c) for c in grid.cols])]
    for row, cells in zip(grid.rows, grid.cells):
        lines.append(",".join([str(row)] + [str(cell.value) for cell in cells]))
    return "\n".join(lines)


def _grid_json_record(grid: TableGrid, parameters: dict) -> OutputRecord:
    return OutputRecord(
        command="table",
        parameters=parameters,
        results={
            "t_rule": grid.t_rule,
            "row_label": grid.row_label,
            "rows": list(grid.rows),
            "cols": list(grid.cols),
            "cells": [
                [
                    {
                        "value": str(cell.value),
                        "method": cell.method,
                        "defined": cell.defined,
                    }
                    for cell in row_cells
                ]
                for row_cells in grid.cells
            ],
        },
    )


def _grid_pretty(grid: TableGrid) -> str:
    width = max(
        [len(str(c)) for c in grid.cols]
        + [len(str(cell.value)) + (1 if not cell.defined else 0)
           for row in grid.cells for cell in row]
        + [len(grid.row_label) + 2]
    ) + 2
    header = f"counts under t-rule {grid.t_rule} (rows {grid.row_label}, cols n)"
    lines = [header]
    lines.append(
        f"{grid.row_label + chr(92) + 'n':>{width}}"
        + "".join(f"{c:>{width}}" for c in grid.cols)
    )
    flagged = False
    for row, cells in zip(grid.rows, grid.cells):
        rendered = []
        for cell in cells:
            text = str(cell.value) + ("*" if not cell.defined else "")
            flagged = flagged or not cell.defined
            rendered.append(f"{text:>{width}}")
        lines.append(f"{row:>{width}}" + "".join(rendered))
    if flagged:
        lines.append("* rule undefined at this position; shown as 0")
    return "\n".join(lines)


def cmd_table(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    method = "both" if args.verify else args.method
    grid = build_table(
        args.t_rule,
        range(1, args.m_max + 1),
        range(1, args.n_max + 1),
        method,
        budget=budget,
        workers=args.workers,
    )
    parameters = {
        "t_rule": grid.t_rule,
        "m_max": args.m_max,
        "n_max": args.n_max,
        "method": method,
        "budget": budget,
    }
    if args.format == "csv":
        _emit(_grid_csv(grid), args.out)
    elif args.format == "json":
        _emit(_grid_json_record(grid, parameters).to_json(), args.out)
    else:
        _emit(_grid_pretty(grid), args.out)
    return EXIT_OK


# ------------------------------------------------------------------- check


def cmd_check(args: argparse.Namespace) -> int:
    budget = args.budget if args.budget is not None else _default_budget()
    suites = (
        ["characterizations", "formulas", "invariants", "conjecture"]
        if args.suite == "all"
        else [args.suite]
    )
    outcomes = verify.run_suites(
        suites,
        m_max=args.m_max,
        n_max=args.n_max,
        t_max=args.t_max,
        budget=budget,
        workers=args.workers,
    )
    all_pass = True
    lines = []
    for oc in outcomes:
        status = "PASS" if oc.passed else "FAIL"
        if oc.name.startswith("conjecture"):
            status = "REPORT"
        lines.append(f"{status} {oc.name} (checked {oc.checked})")
        for failure in oc.failures:
            lines.append(f"    {failure}")
        for notetext in oc.notes:
            lines.append(f"    {notetext}")
        if not oc.passed:
            all_pass = False
    record = OutputRecord(
        command="check",
        parameters={
            "suite": args.suite,
            "m_max": args.m_max,
            "n_max": args.n_max,
            "t_max": args.t_max,
        },
        results={
            "outcomes": [
                {
                    "name": oc.name,
                    "passed": oc.passed,
                    "checked": oc.checked,
                    "failures": oc.failures,
                    "notes": oc.notes,
                }
                for oc in outcomes
            ]
        },
    )
    if args.json:
        _emit(record.to_json(), args.out)
    else:
        _emit("\n".join(lines), args.out)
    return EXIT_OK if all_pass else EXIT_NON_MEMBER


# ------------------------------------------------------------------ parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="metered-park",
        description="Simulate and count t-metered (m,n)-parking functions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--json", action="store_true", help="emit a JSON record")
        p.add_argument("--out", metavar="PATH", help="also write the output to PATH")

    sim = sub.add_parser("simulate", help="park one preference list")
    sim.add_argument("--m", type=int, help="car count (default: length of --prefs)")
    sim.add_argument("--n", type=int, required=True, help="spot count")
    sim.add_argument("--t", type=int, help="meter length (required for metered)")
    sim.add_argument("--prefs", required=True, help="comma-separated preferences")
    sim.add_argument(
        "--scheme", choices=("classical", "metered"), default="metered"
    )
    add_common(sim)
    sim.set_defaults(func=cmd_simulate)

    cnt = sub.add_parser("count", help="count members for one (m, n, t)")
    cnt.add_argument("--m", type=int, required=True)
    cnt.add_argument("--n", type=int, required=True)
    cnt.add_argument("--t", type=int, required=True)
    cnt.add_argument("--method", choices=("auto", "brute", "formula"), default="auto")
    cnt.add_argument("--budget", type=int, help="max simulated car-steps")
    cnt.add_argument("--workers", type=int, default=1)
    add_common(cnt)
    cnt.set_defaults(func=cmd_count)

    tab = sub.add_parser("table", help="emit a grid of counts")
    tab.add_argument(
        "--t-rule",
        dest="t_rule",
        required=True,
        help="fixed:<t>, m-2, n-1 or diag-t",
    )
    tab.add_argument("--m-max", dest="m_max", type=int, default=7)
    tab.add_argument("--n-max", dest="n_max", type=int, default=7)
    tab.add_argument("--format", choices=("csv", "json", "pretty"), default="pretty")
    tab.add_argument(
        "--method", choices=("brute", "formula", "both"), default="brute"
    )
    tab.add_argument(
        "--verify",
        action="store_true",
        help="run formulas and brute force, failing on any mismatch",
    )
    tab.add_argument("--budget", type=int)
    tab.add_argument("--workers", type=int, default=1)
    add_common(tab)
    tab.set_defaults(func=cmd_table)

    chk = sub.add_parser("check", help="run the exhaustive verification suites")
    chk.add_argument(
        "--suite",
        choices=("characterizations", "formulas", "invariants", "conjecture", "all"),
        default="all",
    )
    chk.add_argument("--m-max", dest="m_max", type=int, default=5)
    chk.add_argument("--n-max", dest="n_max", type=int, default=5)
    chk.add_argument("--t-max", dest="t_max", type=int, default=5)
    chk.add_argument("--budget", type=int)
    chk.add_argument("--workers", type=int, default=1)
    add_common(chk)
    chk.set_defaults(func=cmd_check)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except BudgetError as exc:
        print(f"budget refused: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except VerificationError as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH
    except (InputError, DomainError, PrecisionError) as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except MeteredParkingError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
