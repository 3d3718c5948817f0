"""Command-line front end.

    nrspaces validate FILE
    nrspaces analyze FILE [FILE ...] [--jobs N]
    nrspaces classify-op --signature lorentz|neutral --matrix FILE [--metric FILE]
    nrspaces constraints --op FILE --family lorentz|neutral-orthonormal|neutral-witt
    nrspaces catalog list
    nrspaces catalog make FAMILY [name=value ...] [--param name=value] [--format structure|algebra] [--out FILE]

Exit status: 0 ok/valid, 1 invalid structure or operator, 2 malformed input.
"""
from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path

from .analysis import analyze, validation_to_json
from .catalog import FamilySpec, ParamOutOfDomain, list_families, make_family
from .metric_space import lorentz_space, neutral_space, signature
from .normal_forms import NormalFormError, classify_lorentz, classify_neutral
from .serialization import (FormatError, dumps, loads, matrix_from_json, metric_from_json,
                            rat, split_to_json, structure_from_json, structure_to_json, tag_to_json)
from .structure import TORSION_FAMILIES, MetricMismatch, cached_validation, torsion_constraints

EXIT_OK, EXIT_INVALID, EXIT_MALFORMED = 0, 1, 2


class CliError(Exception):
    def __init__(self, message: str, code: int):
        super().__init__(message)
        self.code = code


def _read_json(path: str):
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CliError(f"{path}: {exc.strerror}", EXIT_MALFORMED) from None
    try:
        return loads(text)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def _load_structure(path: str):
    data = _read_json(path)
    try:
        return structure_from_json(data)
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def _load_matrix(path: str, field: str = "matrix"):
    """A bare list of rows, or an object with 'matrix' and optionally 'metric'."""
    data = _read_json(path)
    metric = None
    try:
        if isinstance(data, dict):
            if field not in data:
                raise FormatError(field, "missing")
            if "metric" in data:
                metric = metric_from_json(data["metric"])
            data = data[field]
        return matrix_from_json(data, field, (4, 4)), metric
    except FormatError as exc:
        raise CliError(f"{path}: {exc}", EXIT_MALFORMED) from None


def _emit(obj, out: str | None = None) -> None:
    text = dumps(obj)
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _say(args, msg: str) -> None:
    if args.verbose:
        print(msg, file=sys.stderr)


# verbs ----------------------------------------------------------------------

def cmd_validate(args) -> int:
    s = _load_structure(args.file)
    rep = cached_validation(s)
    _emit(validation_to_json(rep))
    _say(args, f"{args.file}: " + ("valid" if rep.valid else "invalid: " + ", ".join(rep.failed())))
    return EXIT_OK if rep.valid else EXIT_INVALID


def _analyze_file(path: str) -> dict:
    return analyze(_load_structure(path)).to_json()


def cmd_analyze(args) -> int:
    files = args.files
    if args.jobs > 1 and len(files) > 1:
        # parse everything up front so malformed input fails before any work starts
        for f in files:
            _load_structure(f)
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            reports = list(pool.map(_analyze_file, files))
    else:
        reports = [_analyze_file(f) for f in files]
    for f, r in zip(files, reports):
        if r["valid"]:
            _say(args, f"{f}: flat={r['flat']} locally_symmetric={r['locally_symmetric']} "
                       f"holonomy_dim={r['holonomy_dim']} {r['decomposable']}")
        else:
            _say(args, f"{f}: invalid")
    if len(files) == 1:
        _emit(reports[0])
    else:
        _emit([{"file": f, "report": r} for f, r in zip(files, reports)])
    return EXIT_OK if all(r["valid"] for r in reports) else EXIT_INVALID


def cmd_classify_op(args) -> int:
    mat, metric = _load_matrix(args.matrix)
    if args.metric:
        data = _read_json(args.metric)
        try:
            metric = metric_from_json(data.get("metric", data) if isinstance(data, dict) else data)
        except FormatError as exc:
            raise CliError(f"{args.metric}: {exc}", EXIT_MALFORMED) from None
    if args.signature == "lorentz":
        space, fn, want = metric or lorentz_space(), classify_lorentz, (1, 3)
    else:
        space, fn, want = metric or neutral_space(), classify_neutral, (2, 2)
    if space.dim != 4 or signature(space.gram) != want:
        raise CliError(f"metric: signature {signature(space.gram)} does not match {args.signature}",
                       EXIT_MALFORMED)
    try:
        tag = fn(mat, space)
    except NormalFormError as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    _emit(tag_to_json(tag))
    _say(args, f"{args.matrix}: {tag.family}")
    return EXIT_OK


def cmd_constraints(args) -> int:
    mat, _ = _load_matrix(args.op, "op")
    try:
        sol = torsion_constraints(mat, args.family)
    except MetricMismatch as exc:
        raise CliError(str(exc), EXIT_INVALID) from None
    _emit({"family": args.family, "parameters": ["a", "b", "c", "d"], "dimension": sol.dim,
           "basis": [[rat(x) for x in v] for v in sol.basis()]})
    _say(args, f"{args.family}: solution space of dimension {sol.dim}")
    return EXIT_OK


def _parse_params(items) -> dict:
    out = {}
    for item in items:
        name, sep, value = item.partition("=")
        if not sep or not name:
            raise CliError(f"parameter {item!r}: expected name=value", EXIT_MALFORMED)
        if name in out:
            raise CliError(f"parameter {name!r} given twice", EXIT_MALFORMED)
        out[name] = value
    return out


def cmd_catalog(args) -> int:
    if args.catalog_verb == "list":
        _emit(list_families())
        return EXIT_OK
    params = _parse_params(list(args.assignments) + list(args.param or []))
    try:
        inst = make_family(FamilySpec(args.family, params))
    except ParamOutOfDomain as exc:
        raise CliError(str(exc), EXIT_MALFORMED) from None
    if args.format == "algebra":
        doc = split_to_json(inst.split)
        doc["h_labels"] = list(inst.h_labels)
    else:
        doc = structure_to_json(inst.structure)
    _emit(doc, args.out)
    _say(args, f"{args.family} {', '.join(f'{k}={rat(v)}' for k, v in inst.spec.params.items())}"
               + (f" -> {args.out}" if args.out else ""))
    return EXIT_OK


# parser ---------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nrspaces",
                                description="Exact analysis of 4-dimensional naturally reductive structures.")
    p.add_argument("--verbose", "-v", action="store_true", help="summary on standard error")
    sub = p.add_subparsers(dest="verb", required=True)

    v = sub.add_parser("validate", help="run the consistency checks on a structure file")
    v.add_argument("file")
    v.set_defaults(func=cmd_validate)

    a = sub.add_parser("analyze", help="full report for one or more structure files")
    a.add_argument("files", nargs="+")
    a.add_argument("--jobs", type=int, default=1)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("classify-op", help="normal form of a skew-adjoint operator")
    c.add_argument("--signature", choices=["lorentz", "neutral"], required=True)
    c.add_argument("--matrix", required=True)
    c.add_argument("--metric", help="metric file (default: diagonal orthonormal)")
    c.set_defaults(func=cmd_classify_op)

    k = sub.add_parser("constraints", help="torsion parameters annihilated by an operator")
    k.add_argument("--op", required=True)
    k.add_argument("--family", choices=sorted(TORSION_FAMILIES), required=True)
    k.set_defaults(func=cmd_constraints)

    cat = sub.add_parser("catalog", help="parametric families")
    csub = cat.add_subparsers(dest="catalog_verb", required=True)
    csub.add_parser("list")
    mk = csub.add_parser("make")
    mk.add_argument("family")
    mk.add_argument("assignments", nargs="*", metavar="name=value")
    mk.add_argument("--param", action="append", metavar="name=value")
    mk.add_argument("--format", choices=["structure", "algebra"], default="structure")
    mk.add_argument("--out")
    cat.set_defaults(func=cmd_catalog)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_MALFORMED if exc.code else EXIT_OK
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code


if __name__ == "__main__":
    sys.exit(main())
