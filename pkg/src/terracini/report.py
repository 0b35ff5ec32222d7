"""Text tables and canonical JSON for defect profiles and classifications."""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import __version__
from .classifier import Check, ClassificationReport, bound_checks
from .secant import DefectProfile

UNCLASSIFIED = "UNCLASSIFIED"


@dataclass(frozen=True)
class ReportDocument:
    spec: str
    n: int
    N: int
    k0: int
    delta: tuple[int, ...]
    zeta: tuple[int, ...]
    fiber_dims: tuple[int, ...]
    checks: tuple[Check, ...]
    verdict: str
    prime: int
    samples: int
    seed: int
    version: str = __version__
    notes: tuple[str, ...] = ()

    @property
    def secant_dims(self) -> tuple[int, ...]:
        n = self.n
        return (n,) + tuple((k + 1) * n + k - d for k, d in enumerate(self.delta, start=1))

    def to_dict(self) -> dict:
        return {
            "spec": self.spec,
            "n": self.n,
            "N": self.N,
            "k0": self.k0,
            "delta": list(self.delta),
            "zeta": list(self.zeta),
            "fiberDims": list(self.fiber_dims),
            "checks": [c.as_dict() for c in self.checks],
            "verdict": self.verdict,
            "notes": list(self.notes),
            "meta": {
                "prime": str(self.prime),
                "samples": self.samples,
                "seed": str(self.seed),
                "version": self.version,
            },
        }

    @classmethod
    def from_dict(cls, d: dict) -> ReportDocument:
        meta = d["meta"]
        return cls(
            spec=d["spec"],
            n=d["n"],
            N=d["N"],
            k0=d["k0"],
            delta=tuple(d["delta"]),
            zeta=tuple(d["zeta"]),
            fiber_dims=tuple(d["fiberDims"]),
            checks=tuple(Check(**c) for c in d["checks"]),
            verdict=d["verdict"],
            prime=int(meta["prime"]),
            samples=meta["samples"],
            seed=int(meta["seed"]),
            version=meta["version"],
            notes=tuple(d.get("notes", ())),
        )

    def profile_dict(self) -> dict:
        return {k: v for k, v in self.to_dict().items() if k in ("n", "N", "k0", "delta", "zeta", "fiberDims")}


def document_from_profile(profile: DefectProfile, spec: str | None = None) -> ReportDocument:
    return ReportDocument(
        spec=spec if spec is not None else profile.spec,
        n=profile.n,
        N=profile.N,
        k0=profile.k0,
        delta=profile.delta,
        zeta=profile.zeta,
        fiber_dims=profile.fiber_dims,
        checks=tuple(bound_checks(profile)),
        verdict=UNCLASSIFIED,
        prime=profile.prime,
        samples=profile.samples,
        seed=profile.seed,
        notes=("input was degenerate; reduced to its linear span",) if profile.reduced else (),
    )


def document_from_report(report: ClassificationReport, spec: str | None = None) -> ReportDocument:
    base = document_from_profile(report.profile, spec)
    return ReportDocument(
        **{**base.__dict__, "checks": report.checks, "verdict": report.verdict.value, "notes": report.notes}
    )


def canonical_json(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def emit_json(doc: ReportDocument) -> str:
    return canonical_json(doc.to_dict())


def parse_json(text: str) -> ReportDocument:
    return ReportDocument.from_dict(json.loads(text))


def _fmt_seq(seq) -> str:
    return "(" + ",".join(str(v) for v in seq) + ")"


def emit_text(doc: ReportDocument) -> str:
    lines = [f"spec: {doc.spec}", f"n = {doc.n}   N = {doc.N}   k0 = {doc.k0}"]
    if not doc.delta:
        lines.append(f"variety is linear; k₀={doc.k0}")
    else:
        lines.append("")
        header = f"{'k':>3} {'dim S^k':>8} {'delta_k':>8} {'zeta_k':>7} {'fiber':>6}"
        lines += [header, "-" * len(header)]
        dims = doc.secant_dims
        for k in range(1, doc.k0 + 1):
            lines.append(
                f"{k:>3} {dims[k]:>8} {doc.delta[k - 1]:>8} {doc.zeta[k - 1]:>7} {doc.fiber_dims[k - 1]:>6}"
            )
        lines.append("")
    for c in doc.checks:
        if c.name in ("additivity", "superadditivity"):
            lines.append(f"{c.name}: {str(c.passed).lower()}")
        else:
            mark = "ok" if c.passed else "FAIL"
            lines.append(f"{c.name}: {c.lhs} {c.rel} {c.rhs} [{mark}]")
    if doc.verdict != UNCLASSIFIED:
        lines.append(f"verdict: {doc.verdict}")
    lines += [f"note: {note}" for note in doc.notes]
    lines.append(f"prime={doc.prime} samples={doc.samples} seed={doc.seed} version={doc.version}")
    return "\n".join(lines) + "\n"
