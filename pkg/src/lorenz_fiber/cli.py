"""Command-line front end.

Data goes to stdout, logs and timings to stderr.  Reals are printed with 12
significant digits and polynomials as bracketed coefficient lists, constant
term first.
"""
from __future__ import annotations

import argparse
import csv
import json
import logging
import os
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Iterator, Sequence

from .braid import build_braid
from .diagram import DiagramError, YoungDiagram, decompose, enumerate_all, enumerate_family, from_columns
from .dynamics import (BoundDegenerate, NotInFamilyRegime, external_lemma_check,
                       internal_lemma_check, theorem_bound_check)
from .homology import (alexander_polynomial, char_poly, monodromy_seifert_route,
                       monodromy_twist_route)
from .matrix import det, matmul, transpose
from .spectra import spectrum
from .surface import CycleBasis, SurfaceStats, cycle_basis, seifert_matrix, surface_stats

log = logging.getLogger("lorenz_fiber")

FIELDS = ("columns", "b", "l", "k", "cells", "strands", "crossings", "components", "euler",
          "betti1", "char_poly", "alexander", "rho", "rho_err", "mahler", "cyclotomic",
          "bound", "margin", "lemma_internal_ok", "lemma_external_ok")


def fmt_real(x: float | None) -> float | None:
    return None if x is None else float(f"{x:.12g}")


@dataclass(frozen=True)
class AnalysisRecord:
    columns: list[int]
    b: int
    l: int
    k: int
    cells: int
    strands: int
    crossings: int
    components: int
    euler: int
    betti1: int
    char_poly: list[int]
    alexander: list[int]
    rho: float
    rho_err: float
    mahler: float
    cyclotomic: bool
    bound: float | None
    margin: float | None
    lemma_internal_ok: bool
    lemma_external_ok: bool | None

    def to_dict(self) -> dict:
        return asdict(self)

    def csv_row(self) -> list[str]:
        out = []
        for name in FIELDS:
            v = getattr(self, name)
            if v is None:
                out.append("")
            elif isinstance(v, bool):
                out.append("true" if v else "false")
            elif isinstance(v, list):
                out.append("[" + ",".join(map(str, v)) + "]")
            elif isinstance(v, float):
                out.append(f"{v:.12g}")
            else:
                out.append(str(v))
        return out


@dataclass(frozen=True)
class Analysis:
    """Full pipeline output; the record plus the matrices behind it."""
    record: AnalysisRecord
    word: tuple[int, ...]
    stats: SurfaceStats
    basis: CycleBasis
    V: tuple
    J: tuple
    H: tuple
    H_inv: tuple
    log_dilatation_hom: float


def analyze_diagram(D: YoungDiagram) -> Analysis:
    B = build_braid(D)
    stats = surface_stats(D, B)
    S = seifert_matrix(B, cycle_basis(B, D))
    M = monodromy_twist_route(D, S)
    cp = char_poly(M)
    sr = spectrum(cp)
    fam = decompose(D)
    bound = margin = None
    if fam.k >= 2:
        rep = theorem_bound_check(D, S, M)
        bound, margin = rep.bound, rep.margin
    try:
        ext_ok: bool | None = external_lemma_check(D, S=S, M=M).ok
    except NotInFamilyRegime:
        ext_ok = None
    rec = AnalysisRecord(
        columns=list(D.columns), b=fam.b, l=fam.l, k=fam.k, cells=D.size,
        strands=B.n, crossings=len(B.word), components=stats.boundary_components,
        euler=stats.euler, betti1=stats.betti1,
        char_poly=cp.as_list(), alexander=alexander_polynomial(S).as_list(),
        rho=fmt_real(sr.spectral_radius), rho_err=fmt_real(sr.radius_error),
        mahler=fmt_real(sr.mahler_measure), cyclotomic=sr.is_unit_root_only,
        bound=fmt_real(bound), margin=fmt_real(margin),
        lemma_internal_ok=internal_lemma_check(D, S, M).ok, lemma_external_ok=ext_ok)
    return Analysis(record=rec, word=B.word, stats=stats, basis=S.basis, V=S.V, J=S.J,
                    H=M.H, H_inv=M.H_inv, log_dilatation_hom=fmt_real(sr.log_dilatation_hom))


def threads() -> int:
    raw = os.environ.get("LORENZ_FIBER_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            log.warning("ignoring LORENZ_FIBER_THREADS=%r", raw)
    return os.cpu_count() or 1


def parallel_map(fn: Callable, items: Iterable) -> Iterator:
    """Order-preserving map over a thread pool."""
    n = threads()
    if n == 1:
        yield from map(fn, items)
        return
    with ThreadPoolExecutor(max_workers=n) as pool:
        yield from pool.map(fn, items)


class UsageError(Exception):
    pass


def parse_columns(text: str) -> YoungDiagram:
    try:
        cols = [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise UsageError(f"columns: not a comma-separated integer list: {text!r}") from None
    try:
        return from_columns(cols)
    except DiagramError as exc:
        raise UsageError(f"columns: {exc}") from None


def parse_range(text: str, name: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            a, b = int(lo), int(hi)
        else:
            a = b = int(text)
    except ValueError:
        raise UsageError(f"{name}: expected N or A..B, got {text!r}") from None
    if a > b:
        raise UsageError(f"{name}: empty range {text!r}")
    return a, b


def _matrix_text(name: str, A) -> list[str]:
    width = max((len(str(x)) for row in A for x in row), default=1)
    lines = [f"{name}:"]
    lines.extend("  " + " ".join(str(x).rjust(width) for x in row) for row in A)
    return lines


def render_analysis(a: Analysis, fmt: str, matrices: bool) -> str:
    rec = a.record.to_dict()
    extra = {"n": a.record.strands, "word": list(a.word), "genus": a.stats.genus,
             "log_dilatation_hom": a.log_dilatation_hom, "H": [list(r) for r in a.H],
             "chi_convention": SurfaceStats.CHI_CONVENTION}
    if matrices:
        extra.update(basis=[list(c) for c in a.basis.cells], V=[list(r) for r in a.V],
                     J=[list(r) for r in a.J], H_inv=[list(r) for r in a.H_inv])
    if fmt == "json":
        return json.dumps({**rec, **extra}, ensure_ascii=False) + "\n"
    lines = []
    scalars = {**rec, **{k: v for k, v in extra.items() if k in ("n", "word", "genus", "log_dilatation_hom")}}
    width = max(map(len, scalars))
    for k, v in scalars.items():
        lines.append(f"{k.ljust(width)}  {json.dumps(v)}")
    lines.extend(_matrix_text("H", a.H))
    if matrices:
        lines.append("basis: " + " ".join(f"({r},{c})" for r, c in a.basis.cells))
        for name in ("V", "J", "H_inv"):
            lines.extend(_matrix_text(name, getattr(a, name)))
    return "\n".join(lines) + "\n"


def cmd_analyze(args) -> int:
    if args.columns is not None:
        D = parse_columns(args.columns)
    else:
        text = open(args.input).read() if args.input and args.input != "-" else sys.stdin.read()
        try:
            D = YoungDiagram.from_json(text)
        except DiagramError as exc:
            raise UsageError(f"columns: {exc}") from None
    sys.stdout.write(render_analysis(analyze_diagram(D), args.format, args.matrices))
    return 0


def family(b_range: tuple[int, int], k_max: int, l_range: tuple[int, int]) -> list[YoungDiagram]:
    if b_range[0] < 1 or k_max < 0 or l_range[0] < 1:
        raise UsageError(f"invalid family parameters b={b_range} k_max={k_max} l={l_range}")
    out = []
    for b in range(b_range[0], b_range[1] + 1):
        out.extend(enumerate_family(b, k_max, *l_range))
    out.sort(key=lambda D: (D.columns[-1], D.size - D.width * D.columns[-1], D.columns))
    return out


def write_records(records: Iterable[AnalysisRecord], fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "csv":
        w = csv.writer(out, lineterminator="\n")
        w.writerow(FIELDS)
        for r in records:
            w.writerow(r.csv_row())
    elif fmt == "json":
        for r in records:
            out.write(json.dumps(r.to_dict()) + "\n")
    else:
        rows = [list(FIELDS)] + [r.csv_row() for r in records]
        widths = [max(len(row[i]) for row in rows) for i in range(len(FIELDS))]
        for row in rows:
            out.write("  ".join(c.rjust(wd) for c, wd in zip(row, widths)).rstrip() + "\n")


def _records(diagrams: Sequence[YoungDiagram]) -> Iterator[AnalysisRecord]:
    for a in parallel_map(analyze_diagram, diagrams):
        yield a.record


def cmd_enumerate(args) -> int:
    diagrams = family(parse_range(args.b, "b"), args.k_max, parse_range(args.l, "l"))
    t0 = time.perf_counter()
    write_records(_records(diagrams), args.format)
    log.info("%d diagrams in %.2fs", len(diagrams), time.perf_counter() - t0)
    return 0


def cmd_table(args) -> int:
    args.format = "text"
    return cmd_enumerate(args)


def _verify_crossroute(D: YoungDiagram) -> dict:
    B = build_braid(D)
    S = seifert_matrix(B, cycle_basis(B, D))
    problems = []
    if abs(det(S.V)) != 1:
        problems.append("det V != ±1")
        return {"checks": 1, "violations": problems}
    seif = monodromy_seifert_route(S)
    twist = monodromy_twist_route(D, S)
    if seif != twist:
        problems.append("twist route != Seifert route")
    H = twist.H
    if matmul(matmul(transpose(H), S.J), H) != S.J:
        problems.append("H^T J H != J")
    if abs(det(H)) != 1:
        problems.append("det H != ±1")
    if char_poly(twist).normalized() != alexander_polynomial(S):
        problems.append("char poly != Alexander polynomial up to units")
    return {"checks": 5, "violations": problems}


def _verify_lemmas(zone: str) -> Callable[[YoungDiagram], dict]:
    def run(D: YoungDiagram) -> dict:
        reports = [internal_lemma_check(D)]
        try:
            reports.append(external_lemma_check(D, zone=zone))
        except NotInFamilyRegime:
            pass
        return {"checks": sum(r.checked for r in reports),
                "violations": [v for r in reports for v in r.to_dict()["violations"]],
                "reports": [r.to_dict() for r in reports]}
    return run


def _verify_bound(D: YoungDiagram) -> dict:
    try:
        rep = theorem_bound_check(D)
    except BoundDegenerate:
        return {"checks": 0, "violations": []}
    out = {"checks": 1, "violations": [] if rep.holds else ["log rho > bound"]}
    out["bound_report"] = {k: fmt_real(v) if isinstance(v, float) else v
                           for k, v in asdict(rep).items()}
    return out


def cmd_verify(args) -> int:
    if args.b is not None:
        diagrams = family(parse_range(args.b, "b"), args.k_max, parse_range(args.l, "l"))
    else:
        if args.max_cells < 1:
            raise UsageError("max-cells must be ≥ 1")
        diagrams = list(enumerate_all(args.max_cells))
    check = {"crossroute": _verify_crossroute, "lemmas": _verify_lemmas(args.zone),
             "bound": _verify_bound}[args.suite]
    t0 = time.perf_counter()
    records = []
    for D, res in zip(diagrams, parallel_map(check, diagrams)):
        records.append({"columns": list(D.columns), **res})
    checks = sum(r["checks"] for r in records)
    bad = [r for r in records if r["violations"]]
    violations = sum(len(r["violations"]) for r in records)
    elapsed = time.perf_counter() - t0
    summary = {"suite": args.suite, "diagrams": len(records), "checks": checks,
               "violations": violations, "failing_diagrams": [r["columns"] for r in bad]}
    if args.report:
        with open(args.report, "w") as fh:
            json.dump({**summary, "records": records}, fh, indent=1)
    sys.stdout.write(json.dumps(summary) + "\n")
    log.info("%s: %d diagrams, %d checks, %d violations, %.2fs",
             args.suite, len(records), checks, violations, elapsed)
    return 1 if violations else 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="lorenz-fiber",
                                description="Lorenz links from hanging Young diagrams.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="full pipeline on one diagram")
    src = a.add_mutually_exclusive_group()
    src.add_argument("--columns", help="comma-separated column lengths, e.g. 4,3,1")
    src.add_argument("input", nargs="?", help='JSON file {"columns": [...]} (default stdin)')
    a.add_argument("--matrices", action="store_true", help="also print basis, V, J, H_inv")
    a.add_argument("--format", choices=("json", "text"), default="json")
    a.set_defaults(func=cmd_analyze)

    for name, func, formats, default in (("enumerate", cmd_enumerate, ("csv", "json"), "csv"),
                                         ("table", cmd_table, None, None)):
        e = sub.add_parser(name, help="one record per family member")
        e.add_argument("--b", required=True, help="width, N or A..B")
        e.add_argument("--k-max", type=int, required=True)
        e.add_argument("--l", required=True, help="shortest column length, N or A..B")
        if formats:
            e.add_argument("--format", choices=formats, default=default)
        e.set_defaults(func=func)

    v = sub.add_parser("verify", help="run a verification suite")
    v.add_argument("suite", choices=("lemmas", "bound", "crossroute"))
    v.add_argument("--max-cells", type=int, default=10,
                   help="corpus of all diagrams up to this size (when --b is not given)")
    v.add_argument("--b", help="family scope: width, N or A..B")
    v.add_argument("--k-max", type=int, default=4)
    v.add_argument("--l", default="2..6")
    v.add_argument("--zone", choices=("mixing", "widened"), default="mixing",
                   help="external-lemma target region")
    v.add_argument("--report", help="write per-diagram records to this JSON file")
    v.set_defaults(func=cmd_verify)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(message)s")
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
