"""The reproduction criteria behind ``terracini verify --suite paper``.

Each criterion returns ``(passed, details)``; details hold the computed
values so a transcript shows what was compared, not only the outcome.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from . import __version__
from .classifier import Verdict, check_additivity, classify, n_scorza, phi_bound, zak_bound
from .grammar import build_spec
from .report import canonical_json
from .sampling import SampleConfig
from .secant import (
    defect_profile,
    drop_sequence_direct,
    second_differences,
    secant_dimension,
    secant_dimension_by_join,
    tangent_variety_dimension,
    tangential_projection,
    vertex_dimension,
)
from .varieties import ambient_span_dim, projective_dimension

VERONESE_NS = range(2, 7)
SEGRE_PAIRS = ((1, 1), (1, 2), (2, 2), (2, 3), (3, 3))
PLUECKER_RS = (3, 4, 5, 6)
MODES = ("general", "inner")


def veronese_specs() -> list[str]:
    return [f"veronese:n={n},d=2" for n in VERONESE_NS]


def projected_specs() -> list[str]:
    return [f"veronese:n={n},d=2|project:{mode}" for n in VERONESE_NS for mode in MODES]


def segre_specs() -> list[str]:
    return [f"segre:{a}x{b}" for a, b in SEGRE_PAIRS]


def pluecker_specs() -> list[str]:
    return [f"pluecker:r={r}" for r in PLUECKER_RS]


def family_specs() -> list[str]:
    """Every spec of the Veronese, projected Veronese, Segre and Pluecker tables."""
    return veronese_specs() + projected_specs() + segre_specs() + pluecker_specs()


def smooth_catalog() -> list[str]:
    return family_specs() + ["scroll:1,4", "scroll:1,5"]


def expected_veronese_delta(n: int) -> tuple[int, ...]:
    return tuple(k * (k + 1) // 2 for k in range(1, n + 1))


def expected_pluecker_k0(r: int) -> int:
    return r // 2 - 1 if r % 2 == 0 else (r - 1) // 2


ZAK_SHARP = set(veronese_specs()) | {"segre:2x2", "segre:2x3"} | set(pluecker_specs())


class _Suite:
    def __init__(self, cfg: SampleConfig):
        self.cfg = cfg
        self._specs: dict = {}
        self._profiles: dict = {}

    def spec(self, text: str):
        if text not in self._specs:
            self._specs[text] = build_spec(text, self.cfg)
        return self._specs[text]

    def profile(self, text: str):
        if text not in self._profiles:
            self._profiles[text] = defect_profile(self.spec(text), self.cfg)
        return self._profiles[text]


def _c1(s: _Suite):
    rows, ok = {}, True
    for n, text in zip(VERONESE_NS, veronese_specs()):
        p = s.profile(text)
        good = (
            p.N == n_scorza(n)
            and p.k0 == n
            and p.delta == expected_veronese_delta(n)
            and p.zeta == (1,) * n
        )
        rows[text] = {"N": p.N, "k0": p.k0, "delta": list(p.delta), "zeta": list(p.zeta)}
        ok &= good
    return ok, rows


def _c2(s: _Suite):
    rows, ok = {}, True
    for text in projected_specs():
        n = int(text.split("n=")[1].split(",")[0])
        p = s.profile(text)
        ok &= p.N == n_scorza(n) - 1 and p.k0 == n - 1 and p.zeta == (1,) * (n - 1)
        rows[text] = {"N": p.N, "k0": p.k0, "zeta": list(p.zeta)}
    return ok, rows


def _c3(s: _Suite):
    rows, ok = {}, True
    for (a, b), text in zip(SEGRE_PAIRS, segre_specs()):
        p = s.profile(text)
        ok &= p.delta1 == 2 and p.k0 == min(a, b) and check_additivity(p.delta)
        rows[text] = {"delta1": p.delta1, "k0": p.k0, "additive": check_additivity(p.delta)}
    return ok, rows


def _c4(s: _Suite):
    rows, ok = {}, True
    for r, text in zip(PLUECKER_RS, pluecker_specs()):
        p = s.profile(text)
        ok &= p.delta1 == 4 and p.k0 == expected_pluecker_k0(r) and check_additivity(p.delta)
        rows[text] = {"delta1": p.delta1, "k0": p.k0, "additive": check_additivity(p.delta)}
    return ok, rows


def _c5(s: _Suite):
    rows, ok = {}, True
    for text in family_specs() + ["scroll:1,4", "scroll:1,5"]:
        direct = drop_sequence_direct(s.spec(text), s.cfg)
        expected = second_differences(s.profile(text).delta)
        ok &= direct == expected
        rows[text] = {"direct": list(direct), "d2delta": list(expected)}
    return ok, rows


def _c6(s: _Suite):
    rows, ok = {}, True
    for text in family_specs():
        x, p = s.spec(text), s.profile(text)
        pairs = []
        for k in range(1, p.k0 + 1):
            lhs = p.n - projective_dimension(tangential_projection(x, k, s.cfg), s.cfg)
            rhs = p.fiber_dims[k - 1]
            ok &= lhs == rhs
            pairs.append([lhs, rhs])
        rows[text] = pairs
    return ok, rows


def _c7(s: _Suite):
    rows, ok = {}, True
    for text in smooth_catalog():
        p = s.profile(text)
        phi = phi_bound(p.n, p.k0, p.delta1)
        additive = check_additivity(p.delta)
        ok &= p.N <= phi and (p.N == phi) == additive
        rows[text] = {"N": p.N, "phi": phi, "additive": additive}
    p = s.profile("scroll:1,4")
    ok &= (p.N, phi_bound(p.n, p.k0, p.delta1)) == (6, 8)
    return ok, rows


def _c8(s: _Suite):
    rows, ok = {}, True
    for text in smooth_catalog():
        p = s.profile(text)
        if p.delta1 < 1:
            continue
        zak = zak_bound(p.n, p.delta1)
        ok &= p.N <= zak
        if text in ZAK_SHARP:
            ok &= p.N == zak
        rows[text] = {"N": p.N, "zak": zak}
    return ok, rows


def _c9(s: _Suite):
    rows, ok = {}, True
    for q in (4, 5):
        x1 = tangential_projection(s.spec(f"scroll:1,{q}"), 1, s.cfg)
        dim, span, vert = projective_dimension(x1, s.cfg), ambient_span_dim(x1, s.cfg), vertex_dimension(x1, s.cfg)
        ok &= dim == 2 and span == q - 1 and vert == 0 and dim < span
        rows[f"scroll:1,{q}"] = {"dim": dim, "span": span, "vertex": vert}
    return ok, rows


def _c10(s: _Suite):
    text = "veronese:n=1,d=5|cone"
    x = s.spec(text)
    d1 = s.profile(text).delta1
    z = tangential_projection(x, 1, s.cfg)
    dz = defect_profile(z, s.cfg).delta1
    return d1 == 1 and dz == 0, {"delta1(X)": d1, "delta1(X_1)": dz}


def _c11(s: _Suite):
    text = "veronese:n=2,d=2|cone"
    d1 = s.profile(text).delta1
    vert = vertex_dimension(s.spec(text), s.cfg)
    return d1 == 2 and vert == 0, {"delta1": d1, "vertex": vert}


def _c12(s: _Suite):
    rows, ok = {}, True
    for text in smooth_catalog():
        if s.profile(text).delta1 < 1:
            continue
        x = s.spec(text)
        t, sec = tangent_variety_dimension(x, s.cfg), secant_dimension(x, 1, s.cfg)
        ok &= t == sec
        rows[text] = {"tangent": t, "secant": sec}
    cubic = s.spec("veronese:n=1,d=3")
    t, sec = tangent_variety_dimension(cubic, s.cfg), secant_dimension(cubic, 1, s.cfg)
    ok &= (t, sec) == (2, 3)
    rows["veronese:n=1,d=3"] = {"tangent": t, "secant": sec}
    return ok, rows


def _c13(s: _Suite):
    expected = {}
    for n in range(2, 6):
        expected[f"veronese:n={n},d=2"] = Verdict.VERONESE_FULL
        for mode in MODES:
            expected[f"veronese:n={n},d=2|project:{mode}"] = Verdict.VERONESE_PROJECTED_OR_Bn
    expected["segre:2x2"] = Verdict.OUTSIDE_HYPOTHESES
    expected["pluecker:r=5"] = Verdict.OUTSIDE_HYPOTHESES
    rows, ok = {}, True
    for text, verdict in expected.items():
        got = classify(s.spec(text), s.cfg).verdict
        ok &= got == verdict
        rows[text] = got.value
    return ok, rows


def _c14(s: _Suite):
    rows, ok = {}, True
    for text in family_specs():
        x, p = s.spec(text), s.profile(text)
        pairs = []
        for k in range(p.k0 + 1):
            oracle = secant_dimension_by_join(x, k, s.cfg)
            ok &= oracle == p.secant_dims[k]
            pairs.append([p.secant_dims[k], oracle])
        rows[text] = pairs
    return ok, rows


def _c15(s: _Suite):
    first = transcript_json(run_suite(s.cfg, upto=14), s.cfg)
    second = transcript_json(run_suite(s.cfg, upto=14), s.cfg)
    return first == second, {"bytes": len(first)}


@dataclass(frozen=True)
class Criterion:
    number: int
    name: str
    run: Callable[[_Suite], tuple[bool, object]]


CRITERIA = (
    Criterion(1, "veronese table", _c1),
    Criterion(2, "projected veronese", _c2),
    Criterion(3, "segre family", _c3),
    Criterion(4, "pluecker family", _c4),
    Criterion(5, "drop sequence = second differences of delta", _c5),
    Criterion(6, "fiber identity", _c6),
    Criterion(7, "phi bound", _c7),
    Criterion(8, "zak bound", _c8),
    Criterion(9, "scroll counterexample", _c9),
    Criterion(10, "smoothness counterexample", _c10),
    Criterion(11, "cone defect formula", _c11),
    Criterion(12, "fulton-hansen dichotomy", _c12),
    Criterion(13, "classification", _c13),
    Criterion(14, "oracle equivalence", _c14),
    Criterion(15, "determinism", _c15),
)


@dataclass(frozen=True)
class CriterionResult:
    number: int
    name: str
    passed: bool
    details: object
    error: str | None = None

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f" ({self.error})" if self.error else ""
        return f"[{mark}] {self.number:>2} {self.name}{tail}"


def run_criterion(crit: Criterion, suite: _Suite) -> CriterionResult:
    try:
        passed, details = crit.run(suite)
    except Exception as exc:  # a crash is a failed criterion, reported by name
        return CriterionResult(crit.number, crit.name, False, None, f"{type(exc).__name__}: {exc}")
    return CriterionResult(crit.number, crit.name, bool(passed), details)


def run_suite(cfg: SampleConfig, upto: int | None = None, only: set[int] | None = None) -> list[CriterionResult]:
    suite = _Suite(cfg)
    out = []
    for crit in CRITERIA:
        if upto is not None and crit.number > upto:
            continue
        if only is not None and crit.number not in only:
            continue
        out.append(run_criterion(crit, suite))
    return out


def transcript_json(results: list[CriterionResult], cfg: SampleConfig) -> str:
    return canonical_json(
        {
            "suite": "paper",
            "meta": {"prime": str(cfg.prime), "samples": cfg.samples, "seed": str(cfg.seed), "version": __version__},
            "criteria": [
                {"number": r.number, "name": r.name, "passed": r.passed, "details": r.details, "error": r.error}
                for r in results
            ],
            "passed": all(r.passed for r in results),
        }
    )
