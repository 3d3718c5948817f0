"""JSON encodings. Rationals are strings ``"n"`` or ``"n/d"``; tensor indices are 1-based.

Structure::

    {"metric": {"labels": [...], "gram": [[...]]},
     "torsion": {"i,j": {"k": "r", ...}, ...},
     "curvature": {"i,j": [[...]], ...}}

Lie algebra::

    {"labels": [...], "brackets": {"i,j": {"k": "r"}}}

Omitted pairs are zero.
"""
from __future__ import annotations

import json
from fractions import Fraction

from .exact_linalg import Matrix, format_rational, parse_rational
from .lie_algebra import LieAlgebra, ReductiveSplit
from .metric_space import MetricError, MetricSpace, validate_metric
from .structure import CurvatureTensor, NRStructure, StructureError, TorsionTensor


class FormatError(ValueError):
    """Malformed input; ``field`` names the offending location."""

    def __init__(self, field: str, message: str, line: int | None = None):
        where = f"{field}" + (f" (line {line})" if line else "")
        super().__init__(f"{where}: {message}")
        self.field = field
        self.line = line


def loads(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError("<document>", exc.msg, exc.lineno) from None


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


# scalars and matrices --------------------------------------------------------

def rat(x) -> str:
    return format_rational(Fraction(x))


def parse_rat(value, field: str) -> Fraction:
    if isinstance(value, bool) or not isinstance(value, (str, int)):
        raise FormatError(field, f"expected a rational string, got {value!r}")
    try:
        return parse_rational(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise FormatError(field, str(exc)) from None


def matrix_to_json(m: Matrix) -> list:
    return [[rat(x) for x in r] for r in m.rows]


def matrix_from_json(data, field: str, shape: tuple | None = None) -> Matrix:
    if not isinstance(data, list) or not data or not all(isinstance(r, list) for r in data):
        raise FormatError(field, "expected a non-empty list of rows")
    rows = [[parse_rat(x, f"{field}[{i}][{j}]") for j, x in enumerate(r)] for i, r in enumerate(data)]
    if any(len(r) != len(rows[0]) for r in rows):
        raise FormatError(field, "rows have different lengths")
    m = Matrix(rows)
    if shape is not None and m.shape != shape:
        raise FormatError(field, f"expected shape {shape}, got {m.shape}")
    return m


def vector_to_json(v) -> list:
    return [rat(x) for x in v]


# metric ----------------------------------------------------------------------

def metric_to_json(s: MetricSpace) -> dict:
    return {"labels": list(s.labels), "gram": matrix_to_json(s.gram)}


def metric_from_json(data, field: str = "metric") -> MetricSpace:
    if not isinstance(data, dict):
        raise FormatError(field, "expected an object with 'gram'")
    if "gram" not in data:
        raise FormatError(f"{field}.gram", "missing")
    gram = matrix_from_json(data["gram"], f"{field}.gram")
    labels = data.get("labels")
    if labels is not None and (not isinstance(labels, list) or not all(isinstance(x, str) for x in labels)):
        raise FormatError(f"{field}.labels", "expected a list of strings")
    try:
        return validate_metric(gram, labels)
    except MetricError as exc:
        raise FormatError(f"{field}.gram", str(exc)) from None


# index keys ------------------------------------------------------------------

def _pair_key(i: int, j: int) -> str:
    return f"{i + 1},{j + 1}"


def _parse_pair(key, n: int, field: str) -> tuple[int, int]:
    try:
        a, b = (int(x) for x in str(key).split(","))
    except ValueError:
        raise FormatError(f"{field}.{key}", "expected a key of the form 'i,j'") from None
    if not (1 <= a <= n and 1 <= b <= n):
        raise FormatError(f"{field}.{key}", f"indices must lie in 1..{n}")
    return a - 1, b - 1


def _parse_index(key, n: int, field: str) -> int:
    try:
        k = int(key)
    except ValueError:
        raise FormatError(f"{field}.{key}", "expected an integer index") from None
    if not 1 <= k <= n:
        raise FormatError(f"{field}.{key}", f"index must lie in 1..{n}")
    return k - 1


def _sparse_vector(v) -> dict:
    return {str(k + 1): rat(x) for k, x in enumerate(v) if x}


def _vector_from_sparse(data, n: int, field: str) -> tuple:
    if not isinstance(data, dict):
        raise FormatError(field, "expected an object {'k': rational}")
    v = [Fraction(0)] * n
    for k, x in data.items():
        v[_parse_index(k, n, field)] += parse_rat(x, f"{field}.{k}")
    return tuple(v)


# structures ------------------------------------------------------------------

def structure_to_json(s: NRStructure) -> dict:
    torsion = {_pair_key(i, j): _sparse_vector(v) for (i, j), v in s.torsion.values().items() if any(v)}
    curvature = {_pair_key(i, j): matrix_to_json(m) for (i, j), m in s.curvature.values().items()
                 if not m.is_zero()}
    return {"metric": metric_to_json(s.space), "torsion": torsion, "curvature": curvature}


def structure_from_json(data) -> NRStructure:
    if not isinstance(data, dict):
        raise FormatError("<document>", "expected an object with 'metric', 'torsion', 'curvature'")
    if "metric" not in data:
        raise FormatError("metric", "missing")
    space = metric_from_json(data["metric"])
    n = space.dim
    tdata = data.get("torsion", {})
    rdata = data.get("curvature", {})
    if not isinstance(tdata, dict):
        raise FormatError("torsion", "expected an object keyed by 'i,j'")
    if not isinstance(rdata, dict):
        raise FormatError("curvature", "expected an object keyed by 'i,j'")
    try:
        tvals = {}
        for key, val in tdata.items():
            ij = _parse_pair(key, n, "torsion")
            if ij in tvals or ij[::-1] in tvals:
                raise FormatError(f"torsion.{key}", "pair given twice")
            tvals[ij] = _vector_from_sparse(val, n, f"torsion.{key}")
        rvals = {}
        for key, val in rdata.items():
            ij = _parse_pair(key, n, "curvature")
            if ij in rvals or ij[::-1] in rvals:
                raise FormatError(f"curvature.{key}", "pair given twice")
            rvals[ij] = matrix_from_json(val, f"curvature.{key}", (n, n))
        return NRStructure(space, TorsionTensor(space, tvals), CurvatureTensor(space, rvals))
    except StructureError as exc:
        raise FormatError("torsion/curvature", str(exc)) from None


# Lie algebras ----------------------------------------------------------------

def algebra_to_json(g: LieAlgebra) -> dict:
    return {"labels": list(g.labels),
            "brackets": {_pair_key(i, j): _sparse_vector(v) for (i, j), v in g.brackets().items()}}


def algebra_from_json(data) -> LieAlgebra:
    if not isinstance(data, dict) or "labels" not in data:
        raise FormatError("labels", "missing")
    labels = data["labels"]
    if not isinstance(labels, list) or not all(isinstance(x, str) for x in labels):
        raise FormatError("labels", "expected a list of strings")
    n = len(labels)
    bdata = data.get("brackets", {})
    if not isinstance(bdata, dict):
        raise FormatError("brackets", "expected an object keyed by 'i,j'")
    br = {}
    for key, val in bdata.items():
        i, j = _parse_pair(key, n, "brackets")
        v = _vector_from_sparse(val, n, f"brackets.{key}")
        if i > j:
            i, j, v = j, i, tuple(-x for x in v)
        if (i, j) in br:
            raise FormatError(f"brackets.{key}", "pair given twice")
        if i == j and any(v):
            raise FormatError(f"brackets.{key}", "[e_i, e_i] must vanish")
        br[(i, j)] = v
    return LieAlgebra(n, br, labels)


def split_to_json(sp: ReductiveSplit) -> dict:
    return {"algebra": algebra_to_json(sp.algebra),
            "m": [i + 1 for i in sp.m_indices], "h": [i + 1 for i in sp.h_indices],
            "metric": metric_to_json(sp.metric_on_m)}


def tag_to_json(tag) -> dict:
    params = {}
    for k, v in tag.parameters.items():
        params[k] = [rat(x) for x in v] if isinstance(v, tuple) else rat(v)
    out = {"family": tag.family, "parameters": params, "char_poly": [rat(x) for x in tag.char_poly]}
    if tag.nilpotency_index is not None:
        out["nilpotency_index"] = tag.nilpotency_index
    if tag.notes:
        out["notes"] = list(tag.notes)
    if tag.reducible is not None:
        out["reducible"] = tag.reducible
    return out
