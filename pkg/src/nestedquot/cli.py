"""Command-line front end.

    python -m nestedquot compute --rank 2 --depth 2 --cap 3 --measure hodge_deligne -g 1
    python -m nestedquot verify -r 2 -d 2 -N 3
    python -m nestedquot euler-table -r 2 -d 1 -g 0 --format csv
    python -m nestedquot exp-check -r 3 -d 2 -N 3

Exit status: 0 on success, 1 when a check fails, 2 on bad usage.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from .exponential import curve_projective_argument, exp_plus
from .measures import KINDS, MeasureSpec, lift_measure_to_series
from .polys import grlex_key
from .series import TruncatedSeries
from .strata import enumerate_nested, euler_count, oracle_series
from .zeta import (QuotSeriesConfig, euler_closed_form, hodge_deligne_closed_form,
                   main_series, single_depth_product, suffix_restriction)

SUBCOMMANDS = ("compute", "verify", "euler-table", "exp-check")
FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class RunConfig:
    subcommand: str = "compute"
    r: int = 1
    d: int = 1
    genus: int = 0
    cap: int = 5
    measure: str = "universal"
    format: str = "text"

    def __post_init__(self):
        if self.r < 1 or self.d < 1:
            raise ValueError("rank and depth must be at least 1")
        if self.cap < 0 or self.genus < 0:
            raise ValueError("cap and genus must be non-negative")
        if self.subcommand not in SUBCOMMANDS:
            raise ValueError(f"unknown subcommand {self.subcommand!r}")
        if self.measure not in KINDS:
            raise ValueError(f"unknown measure {self.measure!r}")
        if self.format not in FORMATS:
            raise ValueError(f"unknown format {self.format!r}")

    @property
    def series_config(self) -> QuotSeriesConfig:
        return QuotSeriesConfig(self.r, self.d, (self.cap,) * self.d)


def first_difference(a: TruncatedSeries, b: TruncatedSeries):
    """First exponent (graded-lex) where two series differ, with both values."""
    for e in sorted(set(a.terms) | set(b.terms), key=grlex_key):
        va, vb = a.coefficient(e), b.coefficient(e)
        if va != vb:
            return e, va, vb
    return None


def _rows(cfg: RunConfig, series: TruncatedSeries) -> List[Tuple[Tuple[int, ...], object]]:
    return [(n, series.coefficient(n)) for n in enumerate_nested(cfg.d, cfg.cap)]


def _render(cfg: RunConfig, header: List[str], rows: List[Tuple[Tuple[int, ...], list]]) -> str:
    if cfg.format == "json":
        doc = {"r": cfg.r, "d": cfg.d, "genus": cfg.genus, "measure": cfg.measure,
               "cap": cfg.cap}
        if header == ["value"]:
            doc["coefficients"] = [{"n": list(n), "value": str(vals[0])} for n, vals in rows]
        else:
            doc["coefficients"] = [dict({"n": list(n)}, **{h: str(v) for h, v in zip(header, vals)})
                                   for n, vals in rows]
        return json.dumps(doc, indent=2) + "\n"
    if cfg.format == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow([f"n{i}" for i in range(1, cfg.d + 1)] + header)
        for n, vals in rows:
            w.writerow(list(n) + [v if isinstance(v, int) else str(v) for v in vals])
        return buf.getvalue()
    width = max(len(str(n)) for n, _ in rows)
    lines = [f"{str(n):<{width}}  " + " | ".join(str(v) for v in vals) for n, vals in rows]
    if header != ["value"]:
        lines.insert(0, f"{'n':<{width}}  " + " | ".join(header))
    return "\n".join(lines) + "\n"


def cmd_compute(cfg: RunConfig) -> Tuple[str, int]:
    series = main_series(cfg.series_config)
    series = lift_measure_to_series(series, MeasureSpec(cfg.measure, cfg.genus))
    rows = [(n, [v]) for n, v in _rows(cfg, series)]
    return _render(cfg, ["value"], rows), 0


def _check(name: str, a: TruncatedSeries, b: TruncatedSeries) -> Tuple[bool, str]:
    diff = first_difference(a, b)
    if diff is None:
        return True, f"PASS {name}"
    n, va, vb = diff
    return False, f"FAIL {name}: first difference at n={n}: {va} != {vb}"


def cmd_verify(cfg: RunConfig,
               oracle: Callable[[QuotSeriesConfig], TruncatedSeries] = oracle_series
               ) -> Tuple[str, int]:
    """Run every identity check for one ``(r, d, cap)``.

    ``oracle`` is injectable so the failure path can be exercised.
    """
    qc = cfg.series_config
    main = main_series(qc)
    results = [
        _check("oracle-equivalence", oracle(qc), main),
        _check("exp-reformulation", exp_plus(curve_projective_argument(cfg.r, cfg.d), qc.cap), main),
    ]
    hd = lift_measure_to_series(main, MeasureSpec("hodge_deligne", cfg.genus))
    results.append(_check("hodge-deligne-closed-form", hd,
                          hodge_deligne_closed_form(cfg.r, cfg.d, cfg.genus, qc.cap)))
    sp = lift_measure_to_series(main, MeasureSpec("signed_poincare", cfg.genus))
    results.append(_check("poincare-factorization", sp,
                          hd.map_coefficients(lambda c: c.diagonal(), sp.ring)))
    eu = lift_measure_to_series(main, MeasureSpec("euler", cfg.genus))
    results.append(_check("euler-factorization", eu,
                          hd.map_coefficients(lambda c: c.at_one(), eu.ring)))
    results.append(_check("depth-one-reduction", suffix_restriction(main),
                          single_depth_product(cfg.r, cfg.cap)))
    ok = all(passed for passed, _ in results)
    return "\n".join(line for _, line in results) + "\n", 0 if ok else 1


def cmd_euler_table(cfg: RunConfig) -> Tuple[str, int]:
    qc = cfg.series_config
    closed = euler_closed_form(cfg.r, cfg.d, cfg.genus, qc.cap)
    measured = lift_measure_to_series(main_series(qc), MeasureSpec("euler", cfg.genus))
    rows, ok = [], True
    for n in enumerate_nested(cfg.d, cfg.cap):
        a, b = closed.coefficient(n), measured.coefficient(n)
        c = euler_count(qc, n) if cfg.genus == 0 else None
        ok &= a == b and (c is None or c == a)
        rows.append((n, [a, b, "-" if c is None else c]))
    out = _render(cfg, ["closed_form", "measure", "count"], rows)
    if not ok:
        out += "FAIL euler-table: columns disagree\n"
    return out, 0 if ok else 1


def cmd_exp_check(cfg: RunConfig) -> Tuple[str, int]:
    qc = cfg.series_config
    passed, line = _check("exp-reformulation",
                          exp_plus(curve_projective_argument(cfg.r, cfg.d), qc.cap),
                          main_series(qc))
    return line + "\n", 0 if passed else 1


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify,
            "euler-table": cmd_euler_table, "exp-check": cmd_exp_check}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nestedquot",
                                description="Motives of nested Quot schemes of points on a curve.")
    p.add_argument("subcommand", choices=SUBCOMMANDS)
    p.add_argument("-r", "--rank", type=int, default=1)
    p.add_argument("-d", "--depth", type=int, default=1)
    p.add_argument("-g", "--genus", type=int, default=0)
    p.add_argument("-N", "--cap", type=int, default=5)
    p.add_argument("--measure", choices=KINDS, default="universal")
    p.add_argument("--format", choices=FORMATS, default="text")
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = RunConfig(args.subcommand, args.rank, args.depth, args.genus, args.cap,
                        args.measure, args.format)
    except ValueError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return 2
    text, status = COMMANDS[cfg.subcommand](cfg)
    sys.stdout.write(text)
    return status
