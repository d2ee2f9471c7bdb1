"""Command-line front end.

Exit codes: 0 success, 1 domain validation failure (bad object, point
outside a polytope, failed check), 2 I/O or parse error, 3 internal
assertion failure.  MAGOGLAB_THREADS sets the worker count for counting;
MAGOGLAB_CEILING_OVERRIDE=1 unlocks the large-n resource guards.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import enumeration, golden, polytope, serialize
from .core import SignMatrix, ValidationFailure, classify, magog_triangle_to_matrix, matrix_to_magog_triangle
from .enumeration import CeilingExceeded, DEFAULT_CEILING
from .lp import LPError
from .polytope import DecompositionError

KIND_FLAGS = {
    "magog-matrix": "magog_matrix",
    "magog-triangle": "magog_triangle",
    "square-sign": "square_sign",
    "asm": "asm",
    "boolean-triangle": "boolean_triangle",
    "gapless": "gapless",
}

STAT_FLAGS = {
    "neg-ones": "neg_ones",
    "inv": "inv",
    "posinv": "posinv",
    "first-row-one": "first_row_one",
    "first-col-one": "first_col_one",
    "last-row-one": "last_row_one",
}


def _env_threads() -> int:
    try:
        return max(1, int(os.environ.get("MAGOGLAB_THREADS", "1")))
    except ValueError:
        return 1


def _env_override() -> bool:
    return os.environ.get("MAGOGLAB_CEILING_OVERRIDE", "") not in ("", "0")


def _ceiling() -> int:
    return 64 if _env_override() else DEFAULT_CEILING


def _emit(text: str):
    sys.stdout.write(text + "\n")


def _cmd_enumerate(args) -> int:
    kind = KIND_FLAGS[args.kind]
    if args.count:
        _emit(str(enumeration.count(kind, args.n, ceiling=_ceiling(), threads=_env_threads())))
        return 0
    for obj in enumeration.enumerate_objects(kind, args.n, ceiling=_ceiling()):
        _emit(serialize.dumps(obj))
    return 0


def _cmd_stats(args) -> int:
    kind = "magog_matrix" if args.kind == "magog" else "asm"
    stat = STAT_FLAGS[args.stat]
    table = enumeration.distribution(kind, stat, args.n, ceiling=_ceiling())
    if args.format == "csv":
        for value, count in table.items():
            _emit(f"{value},{count}")
    else:
        _emit(json.dumps({
            "kind": args.kind,
            "statistic": args.stat,
            "n": table.n,
            "start": table.start,
            "counts": list(table.counts),
        }, separators=(",", ":")))
    return 0


def _cmd_map(args) -> int:
    obj = serialize.load_path(args.input)
    if args.source == "matrix":
        if not isinstance(obj, SignMatrix):
            raise ValidationFailure("map --from matrix expects an integer matrix document")
        _emit(serialize.dumps(matrix_to_magog_triangle(obj)))
    else:
        _emit(serialize.dumps(magog_triangle_to_matrix(obj)))
    return 0


def _cmd_classify(args) -> int:
    obj = serialize.load_path(args.input)
    if not isinstance(obj, SignMatrix):
        raise ValidationFailure("classify expects an integer matrix document")
    c = classify(obj)
    _emit(json.dumps(
        {"square_sign": c.square_sign, "magog": c.magog, "asm": c.asm},
        separators=(",", ":")))
    return 0


def _load_triangle_point(path) -> polytope.RationalTrianglePoint:
    obj = serialize.load_path(path)
    if isinstance(obj, polytope.RationalTrianglePoint):
        return obj
    if hasattr(obj, "rows"):
        return polytope.RationalTrianglePoint.from_rows(obj.n, obj.rows)
    raise ValidationFailure("expected a triangle-shaped document")


def _load_matrix_point(path) -> polytope.RationalMatrixPoint:
    obj = serialize.load_path(path)
    if isinstance(obj, polytope.RationalMatrixPoint):
        return obj
    if isinstance(obj, SignMatrix):
        return polytope.RationalMatrixPoint.from_rows(obj.entries)
    raise ValidationFailure("expected a matrix-shaped document")


def _cmd_polytope(args) -> int:
    if args.action == "membership":
        if args.input is None:
            raise ValidationFailure("membership requires --input")
        if args.polytope == "btp":
            point = _load_triangle_point(args.input)
            report = polytope.btp_contains(point)
            if report.valid:
                _emit(json.dumps({"member": True}, separators=(",", ":")))
                return 0
            _emit(json.dumps({
                "member": False,
                "violations": [[cid, list(idx)] for cid, idx in report.violations],
            }, separators=(",", ":")))
            return 1
        point = _load_matrix_point(args.input)
        vertices = list(enumeration.enumerate_objects("magog_matrix", point.n, ceiling=_ceiling()))
        outcome = polytope.lp_membership(point, vertices)
        if isinstance(outcome, polytope.ConvexDecomposition):
            _emit(serialize.dumps(outcome))
            return 0
        _emit(serialize.dumps(outcome))
        return 1
    if args.action == "decompose":
        if args.input is None:
            raise ValidationFailure("decompose requires --input")
        point = _load_triangle_point(args.input)
        report = polytope.btp_contains(point)
        if not report.valid:
            _emit(json.dumps({
                "member": False,
                "violations": [[cid, list(idx)] for cid, idx in report.violations],
            }, separators=(",", ":")))
            return 1
        if args.step:
            step = polytope.btp_split(point)
            total = step.step_up + step.step_down
            _emit(json.dumps({
                "step_up": str(step.step_up),
                "step_down": str(step.step_down),
                "weights": [str(step.step_down / total), str(step.step_up / total)],
                "children": [
                    serialize.to_document(polytope.RationalTrianglePoint(point.n, step.child_up)),
                    serialize.to_document(polytope.RationalTrianglePoint(point.n, step.child_down)),
                ],
            }, separators=(",", ":")))
            return 0
        _emit(serialize.dumps(polytope.btp_decompose(point)))
        return 0
    if args.action == "certify":
        report = polytope.verify_vertex_certificates(args.n, args.polytope, ceiling=_ceiling())
        _emit(report.line())
        return 0 if report.passed else 1
    if args.action == "facets":
        report = polytope.btp_facet_audit(args.n)
        _emit(report.line())
        return 0 if report.passed else 1
    raise ValidationFailure(f"unknown polytope action {args.action!r}")


def _cmd_ehrhart(args) -> int:
    allow = _env_override()
    n = args.n
    samples = []
    for t in range(args.tmax + 1):
        c = polytope.lattice_points_in_dilate(args.polytope, t, n=n, allow_large=allow)
        samples.append((t, c))
        _emit(f"{t},{c}")
    if args.interpolate:
        poly = polytope.ehrhart_interpolate(samples)
        _emit(json.dumps({
            "degree": poly.degree,
            "coefficients": [str(c) for c in poly.coefficients],
            "normalized_volume": str(poly.normalized_volume()),
            "text": str(poly),
        }, separators=(",", ":")))
    return 0


def _table_rows(n_max: int, wanted: set | None = None):
    """Computed-vs-golden cell stream for the reproduction report."""
    ceiling = _ceiling()

    def want(*tables):
        return wanted is None or any(t in wanted for t in tables)

    for n in range(3, n_max + 1):
        if n not in golden.TABLE1:
            continue
        if want("table1", "table3", "table5"):
            bundle = enumeration.distribution_bundle("magog_matrix", n, ceiling=ceiling)
            yield ("table1", n, "neg_ones", bundle["neg_ones"].counts, golden.TABLE1[n])
            for stat in ("first_row_one", "first_col_one", "last_row_one"):
                yield ("table3", n, stat, bundle[stat].counts, golden.TABLE3[n][stat])
            yield ("table5", n, "posinv", bundle["posinv"].counts, golden.TABLE5[n]["posinv"])
            yield ("table5", n, "inv", bundle["inv"].counts, golden.TABLE5[n]["inv"])
        if want("table2", "table4", "table6"):
            asm = enumeration.distribution_bundle("asm", n, ceiling=ceiling)
            yield ("table2", n, "neg_ones", asm["neg_ones"].counts, golden.TABLE2[n])
            for stat in ("first_row_one", "first_col_one", "last_row_one"):
                yield ("table4", n, stat, asm[stat].counts, golden.TABLE4[n])
            yield ("table6", n, "posinv", asm["posinv"].counts, golden.TABLE6[n]["posinv"])
            yield ("table6", n, "inv", asm["inv"].counts, golden.TABLE6[n]["inv"])
    for n in range(2, min(n_max, 5) + 1):
        if want("table7"):
            mats = list(enumeration.enumerate_objects("magog_matrix", n, ceiling=ceiling))
            yield ("table7", n, "dimension", polytope.affine_dimension(mats), golden.TABLE7_DIMENSION[n])
            yield ("table7", n, "vertices", len(mats), golden.TABLE7_VERTICES[n])
        if want("table8"):
            asms = list(enumeration.enumerate_objects("asm", n, ceiling=ceiling))
            yield ("table8", n, "dimension", polytope.affine_dimension(asms), golden.TABLE8_DIMENSION[n])
            yield ("table8", n, "vertices", len(asms), golden.TABLE8_VERTICES[n])
        if want("table9"):
            tris = list(enumeration.enumerate_objects("boolean_triangle", n, ceiling=ceiling))
            yield ("table9", n, "dimension", polytope.affine_dimension(tris), golden.TABLE9_DIMENSION[n])
            yield ("table9", n, "vertices", len(tris), golden.TABLE9_VERTICES[n])
            if n in golden.TABLE9_FACETS:
                yield ("table9", n, "facets", polytope.btp_facet_audit(n).certified, golden.TABLE9_FACETS[n])
    if want("table9"):
        for n in (2, 3, 4):
            if n > n_max or n not in golden.TABLE9_EHRHART:
                continue
            dim = golden.TABLE9_DIMENSION[n]
            samples = [(t, polytope.lattice_points_in_dilate("btp", t, n=n)) for t in range(dim + 1)]
            poly = polytope.ehrhart_interpolate(samples)
            yield ("table9", n, "ehrhart", poly.coefficients, golden.TABLE9_EHRHART[n])
            if n in golden.TABLE9_VOLUME:
                yield ("table9", n, "volume", poly.normalized_volume(), Fraction(golden.TABLE9_VOLUME[n]))
    if n_max >= 3 and want("table7"):
        samples = [(t, polytope.lattice_points_in_dilate("tsscpp3", t)) for t in range(5)]
        poly = polytope.ehrhart_interpolate(samples)
        yield ("table7", 3, "ehrhart", poly.coefficients, golden.TABLE7_EHRHART[3])
        yield ("table7", 3, "volume", poly.normalized_volume(), Fraction(golden.TABLE7_VOLUME[3]))


def _cmd_check(args) -> int:
    if args.suite == "theorems":
        report = enumeration.theorem_suite(args.n_max, ceiling=_ceiling())
        for line in report.lines():
            _emit(line)
        return 0 if report.passed else 1
    if args.suite == "conjectures":
        report = enumeration.conjecture_suite(args.n_max, ceiling=_ceiling())
        for check in report.checks:
            mark = "agrees" if check.passed else "DISAGREES"
            _emit(f"[{mark}] n={check.n} {check.claim}: conjectured {check.expected}, computed {check.computed}")
        _emit(f"conjecture suite: {sum(c.passed for c in report.checks)}/{len(report.checks)} agree")
        return 0
    # tables
    wanted = None
    if args.tables and args.tables != "all":
        wanted = {t.strip() for t in args.tables.split(",")}
        unknown = wanted - {f"table{i}" for i in range(1, 10)}
        if unknown:
            raise ValidationFailure(f"unknown table selector(s): {sorted(unknown)}")
    mismatches = 0
    out_rows: dict[str, list[str]] = {}
    for table, n, label, computed, expected in _table_rows(args.n_max, wanted):
        if wanted is not None and table not in wanted:
            continue
        comp = tuple(computed) if isinstance(computed, tuple) else computed
        exp = tuple(expected) if isinstance(expected, tuple) else expected
        ok = comp == exp
        if not ok:
            mismatches += 1
        _emit(f"{table} n={n} {label}: {'ok' if ok else f'MISMATCH computed={comp} golden={exp}'}")
        if isinstance(comp, tuple):
            cells = ",".join(str(v) for v in comp)
        else:
            cells = str(comp)
        out_rows.setdefault(table, []).append(f"{n},{label},{cells}")
    not_computed = ("f-vector interior entries", "diameter", "starred volumes",
                    "tsscpp ehrhart for n>=4", "btp ehrhart for n>=5")
    for item in not_computed:
        _emit(f"not computed: {item}")
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for table, lines in sorted(out_rows.items()):
            with open(os.path.join(args.out_dir, f"{table}.csv"), "w", encoding="utf-8") as fh:
                fh.write("\n".join(lines) + "\n")
    _emit(f"table check: {mismatches} mismatch(es)")
    return 0 if mismatches == 0 else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="magoglab",
                                     description="exact toolkit for magog matrices and their polytopes")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enumerate", help="stream a family or count it")
    p.add_argument("--kind", required=True, choices=sorted(KIND_FLAGS))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--count", action="store_true")
    p.add_argument("--format", choices=("json",), default="json")
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("stats", help="statistic distribution over a family")
    p.add_argument("--kind", required=True, choices=("magog", "asm"))
    p.add_argument("--stat", required=True, choices=sorted(STAT_FLAGS))
    p.add_argument("--n", required=True, type=int)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=_cmd_stats)

    p = sub.add_parser("map", help="apply the matrix/triangle bijection")
    p.add_argument("--from", dest="source", required=True, choices=("matrix", "triangle"))
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_map)

    p = sub.add_parser("classify", help="square-sign / magog / asm membership flags")
    p.add_argument("--input", required=True)
    p.set_defaults(func=_cmd_classify)

    p = sub.add_parser("polytope", help="membership, decomposition, certificates, facets")
    p.add_argument("action", choices=("membership", "decompose", "certify", "facets"))
    p.add_argument("--polytope", choices=("btp", "tsscpp"), default="btp")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--input")
    p.add_argument("--step", action="store_true",
                   help="emit one splitting step instead of the full decomposition")
    p.set_defaults(func=_cmd_polytope)

    p = sub.add_parser("ehrhart", help="lattice point counts in dilates")
    p.add_argument("--polytope", required=True, choices=("btp", "tsscpp3"))
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--tmax", required=True, type=int)
    p.add_argument("--interpolate", action="store_true")
    p.set_defaults(func=_cmd_ehrhart)

    p = sub.add_parser("check", help="verification suites and golden tables")
    p.add_argument("--suite", required=True, choices=("theorems", "conjectures", "tables"))
    p.add_argument("--n-max", dest="n_max", required=True, type=int)
    p.add_argument("--tables", default="all",
                   help="comma-separated table selectors (table1..table9), or 'all'")
    p.add_argument("--out-dir")
    p.set_defaults(func=_cmd_check)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (DecompositionError, LPError, AssertionError) as exc:
        sys.stderr.write(f"internal error: {exc}\n")
        return 3
    except (OSError, json.JSONDecodeError) as exc:
        sys.stderr.write(f"input error: {exc}\n")
        return 2
    except (ValidationFailure, CeilingExceeded, ValueError, TypeError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
