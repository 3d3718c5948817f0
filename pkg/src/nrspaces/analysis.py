"""One-call analysis of a structure, with a JSON rendering."""
from __future__ import annotations

from dataclasses import dataclass, field

from .decomposition import Decomposition, decompose
from .geometry import classify_geometry, holonomy, levi_civita_curvature
from .normal_forms import NormalFormError, classify
from .serialization import matrix_to_json, rat, tag_to_json
from .structure import NRStructure, ValidationReport, cached_validation


@dataclass
class AnalysisReport:
    validation: ValidationReport
    flat: bool | None = None
    locally_symmetric: bool | None = None
    reason: str | None = None
    holonomy_dim: int | None = None
    holonomy_basis: list = field(default_factory=list)
    decomposition: Decomposition | None = None
    curvature_tags: dict = field(default_factory=dict)

    @property
    def valid(self) -> bool:
        return self.validation.valid

    def to_json(self) -> dict:
        out = {"valid": self.valid, "checks": validation_to_json(self.validation)["checks"]}
        if not self.valid:
            return out
        d = self.decomposition
        out.update({
            "flat": self.flat,
            "locally_symmetric": self.locally_symmetric,
            "reason": self.reason,
            "holonomy_dim": self.holonomy_dim,
            "holonomy_basis": [matrix_to_json(m) for m in self.holonomy_basis],
            "decomposable": d.verdict,
            "decomposition": {
                "method": d.method,
                "witness": [[rat(x) for x in v] for v in d.witness.basis] if d.witness else None,
                "complement": [[rat(x) for x in v] for v in d.complement.basis] if d.complement else None,
                "obstruction": [rat(x) for x in d.obstruction] if d.obstruction else None,
                "notes": list(d.notes),
            },
            "curvature_tags": self.curvature_tags,
        })
        return out


def validation_to_json(rep: ValidationReport) -> dict:
    return {"valid": rep.valid,
            "checks": {c.name: {"ok": c.ok, "failures": [list(f) for f in c.failures]}
                       for c in rep.checks}}


def _tags(s: NRStructure) -> dict:
    out = {}
    if s.dim != 4:
        return out
    for (i, j), m in s.curvature.values().items():
        if m.is_zero():
            continue
        key = f"{i + 1},{j + 1}"
        try:
            out[key] = tag_to_json(classify(m, s.space))
        except NormalFormError as exc:
            out[key] = {"error": str(exc)}
    return out


def analyze(s: NRStructure) -> AnalysisReport:
    rep = cached_validation(s)
    if not rep.valid:
        return AnalysisReport(rep)
    geo = classify_geometry(s)
    hol = holonomy(s, levi_civita_curvature(s, check=False), check=False)
    return AnalysisReport(rep, geo.flat, geo.locally_symmetric, geo.reason, hol.dim, hol.basis(),
                          decompose(s, hol), _tags(s))
