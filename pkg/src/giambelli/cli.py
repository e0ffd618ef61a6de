"""Command-line front end.

Machine output goes to stdout and diagnostics to stderr. Exit status is 0 on
success, 1 when a verification fails and 2 when the input cannot be parsed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import List, Optional, Sequence

from . import gmatrix, shapes, strips, symfun
from .checks import (
    chain_suite,
    determinant_suite,
    gluing_suite,
    oracle_suite,
    round_trip_suite,
    twist_case_suite,
)
from .shapes import SkewShape, parse_shape
from .stabeq import chain, twist_transform_ops
from .stabeq.builder import stages
from .stabeq.ops import dumps as log_dumps
from .stabeq.ops import trace

FORMATS = ("ascii", "json", "tex")


class UsageError(Exception):
    """Bad input on the command line; reported with exit status 2."""


def _shape(text: str) -> SkewShape:
    try:
        return parse_shape(text)
    except ValueError as exc:
        raise UsageError(f"cannot parse shape {text!r}: {exc}") from exc


def _decomposition(shape: SkewShape, directions: Optional[str]) -> strips.OutsideDecomposition:
    """The decomposition selected by ``--directions``, or the horizontal one."""
    if directions is None:
        return strips.horizontal_decomposition(shape)
    try:
        return strips.decomposition_from_cutting_strip(shape, strips.CuttingStrip(0, directions))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def _nvars(shape: SkewShape, requested: Optional[int]) -> int:
    if requested is None:
        return max(shape.size, 1)
    if requested < shape.size:
        raise UsageError(
            f"--vars {requested} is below the degree {shape.size}; the result would not determine s_{shape}"
        )
    return requested


def _emit(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _render_matrix(m: gmatrix.SymMatrix, fmt: str) -> str:
    if fmt == "json":
        return gmatrix.dumps(m)
    if fmt == "tex":
        return gmatrix.render_tex(m)
    return gmatrix.render_ascii(m)


def _poly_text(poly: symfun.SymPoly, fmt: str) -> str:
    if fmt == "json":
        return symfun.dumps(poly)
    return repr(poly)


# subcommands --------------------------------------------------------------


def cmd_diagram(args) -> int:
    s = _shape(args.shape)
    if args.format == "json":
        _emit(json.dumps({"shape": str(s), "boxes": sorted(list(b) for b in s.boxes)}, sort_keys=True))
    else:
        _emit(shapes.render_ascii(s))
    return 0


def cmd_decompose(args) -> int:
    s = _shape(args.shape)
    if args.directions is not None:
        found = [_decomposition(s, args.directions)]
    else:
        try:
            found = list(strips.enumerate_decompositions(s))
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(json.dumps([strips.decomposition_to_json(pi) for pi in found], sort_keys=True))
    else:
        for pi in found:
            _emit(f"{pi.cutting.steps or '-'}  {strips.format_decomposition(pi)}")
    return 0


def _matrix_for(args, s: SkewShape) -> gmatrix.SymMatrix:
    if args.kind == "jacobi-trudi":
        return gmatrix.jacobi_trudi(s)
    if args.kind == "dual":
        return gmatrix.dual_jacobi_trudi(s)
    return gmatrix.giambelli_matrix(_decomposition(s, args.directions))


def cmd_matrix(args) -> int:
    s = _shape(args.shape)
    m = _matrix_for(args, s)
    _emit(_render_matrix(m, args.format))
    if args.det:
        n = _nvars(s, args.vars)
        det = gmatrix.determinant(gmatrix.evaluate(m, n), n)
        _emit(_poly_text(det, args.format))
        if det != symfun.schur_poly(s, n):
            print("determinant differs from the skew Schur function", file=sys.stderr)
            return 1
    return 0


def cmd_canonical(args) -> int:
    s = _shape(args.shape)
    pi = _decomposition(s, args.directions)
    c = gmatrix.canonical_form(pi)
    sign = gmatrix.canonical_sign(pi)
    if args.format == "json":
        out = gmatrix.matrix_to_json(c)
        out.update(row_perm=list(c.row_perm), col_perm=list(c.col_perm), sign=sign)
        _emit(json.dumps(out, sort_keys=True))
    else:
        _emit(_render_matrix(c, args.format))
        _emit(f"rows {list(c.row_perm)} cols {list(c.col_perm)} sign {sign:+d}")
    return 0


def cmd_twist(args) -> int:
    s = _shape(args.shape)
    pi = _decomposition(s, args.directions)
    try:
        new, log = twist_transform_ops(pi, args.at)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    if args.format == "json":
        _emit(log_dumps(log))
        return 0
    _emit(f"{strips.format_decomposition(pi)} -> {strips.format_decomposition(new)}  case {log.cases[0]}")
    _emit(trace(log))
    _emit(_render_matrix(gmatrix.canonical_form(new), args.format))
    return 0


def _stage_records(s: SkewShape) -> list:
    log = chain(s)
    out = []
    for c in stages(log):
        out.append(
            {
                "note": c.note,
                "strips": [[p, q] for p, q in sorted(c.decomposition.labels, key=lambda x: -x[0])],
                "directions": c.decomposition.cutting.steps if c.decomposition.cutting else "",
                "matrix": gmatrix.matrix_to_json(gmatrix.canonical_form(c.decomposition)),
            }
        )
    return out


def _stage_name(k: int) -> str:
    return f"stage_{k:02d}.json"


def cmd_chain(args) -> int:
    s = _shape(args.shape)
    log = chain(s)
    if args.golden or args.check_golden:
        records = _stage_records(s)
        texts = [json.dumps(r, sort_keys=True, indent=1, ensure_ascii=False) + "\n" for r in records]
        if args.golden:
            out = Path(args.golden)
            out.mkdir(parents=True, exist_ok=True)
            for k, text in enumerate(texts):
                (out / _stage_name(k)).write_text(text, encoding="utf-8")
            (out / "log.json").write_text(log_dumps(log) + "\n", encoding="utf-8")
        if args.check_golden:
            ref = Path(args.check_golden)
            bad = []
            for k, text in enumerate(texts):
                f = ref / _stage_name(k)
                if not f.exists() or f.read_text(encoding="utf-8") != text:
                    bad.append(f.name)
            extra = sorted(p.name for p in ref.glob("stage_*.json") if p.name not in {_stage_name(k) for k in range(len(texts))})
            bad += extra
            if bad:
                print(f"golden mismatch: {', '.join(bad)}", file=sys.stderr)
                return 1
    if args.format == "json":
        _emit(log_dumps(log))
        return 0
    if args.trace:
        _emit(trace(log))
        return 0
    for k, c in enumerate(stages(log)):
        _emit(f"stage {k + 1}: {strips.format_decomposition(c.decomposition)}  ({c.note})")
        _emit(_render_matrix(gmatrix.canonical_form(c.decomposition), args.format))
        _emit("")
    return 0


def _corpus(args) -> List[SkewShape]:
    if args.shapes:
        return [_shape(t) for t in args.shapes]
    return list(shapes.enumerate_skew_shapes(args.max_boxes, connected=args.connected))


def cmd_verify(args) -> int:
    corpus = _corpus(args)
    connected = [s for s in corpus if shapes.is_edgewise_connected(s)]
    seed = int(os.environ.get("GIAMBELLI_SEED", "0"))
    results = []
    results += determinant_suite(connected)
    results.append(oracle_suite(connected))
    results.append(round_trip_suite(connected))
    results.append(twist_case_suite(connected))
    results.append(gluing_suite(seed))
    if not args.skip_chain:
        results.append(chain_suite(connected if args.connected else corpus, args.vars))
    for r in results:
        _emit(r.line())
    return 0 if all(r.ok for r in results) else 1


def cmd_oracle(args) -> int:
    s = _shape(args.shape)
    n = _nvars(s, args.vars)
    poly = symfun.ssyt_expansion(s, n)
    _emit(_poly_text(poly, args.format))
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="giambelli",
        description="Outside decompositions, Giambelli-type matrices and Jacobi-Trudi stable equivalence logs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name: str, func, help_text: str, shape: bool = True) -> argparse.ArgumentParser:
        p = sub.add_parser(name, help=help_text)
        if shape:
            p.add_argument("shape", help='skew shape such as "6,5,3,1/4,4,3"')
        p.add_argument("--format", choices=FORMATS, default="ascii")
        p.set_defaults(func=func)
        return p

    add("diagram", cmd_diagram, "draw the diagram")
    p = add("decompose", cmd_decompose, "list outside decompositions")
    p.add_argument("--directions", help="select one decomposition by its cutting-strip steps, e.g. RRU")
    p = add("matrix", cmd_matrix, "print a Giambelli-type or Jacobi-Trudi matrix")
    p.add_argument("--directions")
    p.add_argument("--kind", choices=("giambelli", "jacobi-trudi", "dual"), default="giambelli")
    p.add_argument("--det", action="store_true", help="also print the determinant")
    p.add_argument("--vars", type=int, help="number of variables (default: box count)")
    p = add("canonical", cmd_canonical, "print the canonical form and its sorting permutations")
    p.add_argument("--directions")
    p = add("twist", cmd_twist, "twist at one content and print the operation log")
    p.add_argument("--at", type=int, required=True, help="content of the diagonal to twist")
    p.add_argument("--directions")
    p = add("chain", cmd_chain, "run the full twist chain")
    p.add_argument("--trace", action="store_true", help="print every operation instead of the stages")
    p.add_argument("--golden", metavar="DIR", help="write stage files to DIR")
    p.add_argument("--check-golden", metavar="DIR", help="compare stage files against DIR")
    p = add("verify", cmd_verify, "run the verification suites over a corpus", shape=False)
    p.add_argument("shapes", nargs="*", help="shapes to check instead of the enumerated corpus")
    p.add_argument("--max-boxes", type=int, default=5)
    p.add_argument("--connected", action="store_true", help="restrict the corpus to connected shapes")
    p.add_argument("--vars", type=int)
    p.add_argument("--skip-chain", action="store_true")
    p = add("oracle", cmd_oracle, "expand a skew Schur function by tableau enumeration")
    p.add_argument("--vars", type=int)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
