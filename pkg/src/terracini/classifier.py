"""Dimension bounds and fingerprint-level classification of 1-defective varieties."""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from math import comb
from typing import Sequence

from .sampling import SampleConfig
from .secant import DefectProfile, defect_profile, tangential_projection, vertex_dimension
from .varieties import VarietySpec, ambient_span_dim, reduce_to_span, resolve_config


class Verdict(str, Enum):
    VERONESE_FULL = "VERONESE_FULL"
    VERONESE_PROJECTED_OR_Bn = "VERONESE_PROJECTED_OR_Bn"
    OUTSIDE_HYPOTHESES = "OUTSIDE_HYPOTHESES"
    NOT_1_DEFECTIVE = "NOT_1_DEFECTIVE"
    BOUND_VIOLATION_SUSPECT_INPUT = "BOUND_VIOLATION_SUSPECT_INPUT"


class SurfaceType(str, Enum):
    VERONESE_SURFACE = "VERONESE_SURFACE"
    CONE_OVER_CURVE = "CONE_OVER_CURVE"
    INCONCLUSIVE = "INCONCLUSIVE"


def n_scorza(n: int) -> int:
    """Span dimension of the quadratic Veronese embedding of P^n."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    return comb(n + 2, 2) - 1


def phi_bound(n: int, k0: int, delta1: int) -> int:
    if n < 1 or k0 < 1 or delta1 < 0:
        raise ValueError(f"invalid arguments n={n}, k0={k0}, delta1={delta1}")
    # k0(k0-1) is even, so the last term is an exact integer
    return n * (k0 + 1) - k0 * (delta1 - 1) - delta1 * (k0 * (k0 - 1) // 2)


def zak_bound(n: int, delta1: int) -> int:
    """Upper bound on N for smooth X with 1-secant defect ``delta1 > 0``."""
    if delta1 < 1:
        raise ValueError("the bound only applies to 1-defective varieties (delta1 >= 1)")
    r0 = n % delta1
    num = n * (n + delta1 + 2) + r0 * (delta1 - r0 - 2)
    q, rem = divmod(num, 2 * delta1)
    if rem:
        raise ArithmeticError(f"bound is not integral for n={n}, delta1={delta1}")
    return q


def check_superadditivity(delta: Sequence[int]) -> bool:
    if not delta:
        return True
    d1 = delta[0]
    prev = 0
    for k, dk in enumerate(delta, start=1):
        if dk < prev + k * d1:
            return False
        prev = dk
    return True


def check_additivity(delta: Sequence[int]) -> bool:
    if not delta:
        return True
    d1 = delta[0]
    return all(dk == d1 * k * (k + 1) // 2 for k, dk in enumerate(delta, start=1))


@dataclass(frozen=True)
class Check:
    name: str
    lhs: int
    rel: str
    rhs: int
    passed: bool

    @classmethod
    def compare(cls, name: str, lhs: int, rel: str, rhs: int) -> Check:
        ops = {"<=": lhs <= rhs, ">=": lhs >= rhs, "==": lhs == rhs, "<": lhs < rhs}
        return cls(name, lhs, rel, rhs, ops[rel])

    def as_dict(self) -> dict:
        return {"name": self.name, "lhs": self.lhs, "rel": self.rel, "rhs": self.rhs, "passed": self.passed}


def bound_checks(profile: DefectProfile) -> list[Check]:
    """Additivity, superadditivity and the phi and Zak bounds, both sides evaluated."""
    n, N, k0, delta = profile.n, profile.N, profile.k0, profile.delta
    if k0 == 0:
        return []
    d1 = profile.delta1
    additive_target = d1 * k0 * (k0 + 1) // 2
    checks = [
        Check("additivity", delta[-1], "==", additive_target, check_additivity(delta)),
        Check("superadditivity", delta[-1], ">=", additive_target, check_superadditivity(delta)),
        Check.compare("phi_bound", N, "<=", phi_bound(n, k0, d1)),
    ]
    if d1 >= 1:
        checks.append(Check.compare("zak_bound", N, "<=", zak_bound(n, d1)))
    return checks


@dataclass(frozen=True)
class ClassificationReport:
    profile: DefectProfile
    checks: tuple[Check, ...]
    verdict: Verdict
    notes: tuple[str, ...] = field(default=())


def _construction_note(provenance: str, n: int) -> str | None:
    last = provenance.rsplit("|", 1)[-1]
    if provenance.startswith("veronese:") and provenance.endswith(",d=2|project:inner"):
        return f"inner projection by construction => B^{n}"
    if provenance.startswith("veronese:") and provenance.endswith(",d=2|project:general"):
        return f"general point projection by construction => projected v2(P^{n})"
    if last.startswith("project"):
        return "projection of unknown kind; B^n vs. projected Veronese needs a degree computation"
    return None


def classify(x: VarietySpec, cfg: SampleConfig | None = None) -> ClassificationReport:
    """Match the defect profile of X against the quadratic Veronese fingerprints.

    Only necessary numerical fingerprints are checked; smoothness is taken
    on trust.
    """
    cfg = resolve_config(x, cfg)
    notes: list[str] = []
    if ambient_span_dim(x, cfg) < x.ncoords - 1:
        x = reduce_to_span(x, cfg)
        notes.append("input was degenerate; reduced to its linear span")
    prof = defect_profile(x, cfg)
    n, N, k0 = prof.n, prof.N, prof.k0
    Nn = n_scorza(n)
    checks = [Check.compare("1-defective", prof.delta1, ">=", 1)]
    checks.append(Check.compare("hypothesis N >= N(n)-1", N, ">=", Nn - 1))
    checks.append(Check.compare("hypothesis N >= 2n+1", N, ">=", 2 * n + 1))
    bounds = bound_checks(prof)
    checks.extend(bounds)

    full = N == Nn and k0 == n
    projected = N == Nn - 1 and k0 == n - 1
    checks.append(Check("fingerprint (N,k0) in {(N(n),n),(N(n)-1,n-1)}", N, "in", Nn if full else Nn - 1, full or projected))
    drop_ones = bool(prof.zeta) and all(z == 1 for z in prof.zeta)
    checks.append(Check("drop sequence constant 1", sum(prof.zeta), "==", k0, drop_ones))

    cones_ok = True
    if prof.delta1 >= 1 and (full or projected) and drop_ones:
        xk = x
        for k in range(k0):
            if k:
                xk = tangential_projection(x, k, cfg)
            v = vertex_dimension(xk, cfg)
            checks.append(Check.compare(f"vertex_dim(X_{k})", v, "==", -1))
            cones_ok &= v == -1

    hyp_ok = checks[1].passed and checks[2].passed
    bounds_ok = all(c.passed for c in bounds if c.name in ("phi_bound", "zak_bound"))
    if prof.delta1 < 1:
        verdict = Verdict.NOT_1_DEFECTIVE
    elif drop_ones and cones_ok and full:
        verdict = Verdict.VERONESE_FULL
    elif drop_ones and cones_ok and projected and k0 >= 1:
        verdict = Verdict.VERONESE_PROJECTED_OR_Bn
    elif not bounds_ok:
        verdict = Verdict.BOUND_VIOLATION_SUSPECT_INPUT
    elif not hyp_ok:
        verdict = Verdict.OUTSIDE_HYPOTHESES
    else:
        verdict = Verdict.BOUND_VIOLATION_SUSPECT_INPUT

    if verdict in (Verdict.VERONESE_FULL, Verdict.VERONESE_PROJECTED_OR_Bn):
        notes.append("fingerprint-level match (dimensions, spans, sequences), not an isomorphism test")
        if not hyp_ok:
            notes.append(f"N={N} is below the classified range max(N(n)-1, 2n+1)={max(Nn - 1, 2 * n + 1)}")
    if verdict == Verdict.VERONESE_PROJECTED_OR_Bn:
        note = _construction_note(x.provenance, n)
        notes.append(note or "B^n vs. projected Veronese is undetermined without a degree computation")
    return ClassificationReport(prof, tuple(checks), verdict, tuple(notes))


def identify_defective_surface(x: VarietySpec, cfg: SampleConfig | None = None) -> SurfaceType:
    """Sort a 1-defective surface into cone over a curve or Veronese surface."""
    cfg = resolve_config(x, cfg)
    prof = defect_profile(x, cfg)
    if prof.n != 2:
        raise ValueError(f"expected a surface, got dimension {prof.n}")
    if prof.delta1 < 1:
        raise ValueError("surface is not 1-defective")
    if prof.N < 5:
        return SurfaceType.INCONCLUSIVE
    if vertex_dimension(x, cfg) >= 0:
        return SurfaceType.CONE_OVER_CURVE
    if (prof.N, prof.k0, prof.zeta) == (5, 2, (1, 1)):
        return SurfaceType.VERONESE_SURFACE
    return SurfaceType.INCONCLUSIVE
