"""Text grammar for varieties: ``family:params`` followed by ``|modifier`` steps.

Families::

    veronese:n=3,d=2    segre:2x3    pluecker:r=5    scroll:1,4

Modifiers, applied left to right::

    |cone  |project:general  |project:inner  |reduce  |tangent:K

An explicit variety can be given as a JSON object (text starting with ``{``);
see :func:`terracini.varieties.from_json`.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .sampling import SampleConfig
from . import varieties as V


class SpecParseError(ValueError):
    def __init__(self, token: str, reason: str):
        super().__init__(f"cannot parse {token!r}: {reason}")
        self.token = token


@dataclass(frozen=True)
class SpecExpr:
    family: str
    params: tuple[int, ...]
    modifiers: tuple[str, ...] = ()


_FAMILY_PATTERNS = {
    "veronese": re.compile(r"n=(\d+),d=(\d+)"),
    "segre": re.compile(r"(\d+)x(\d+)"),
    "pluecker": re.compile(r"r=(\d+)"),
    "scroll": re.compile(r"(\d+),(\d+)"),
}
_MODIFIER = re.compile(r"cone|reduce|project:(general|inner)|tangent:[1-9]\d*")


def parse_spec(text: str) -> SpecExpr:
    parts = [part.strip() for part in text.strip().split("|")]
    head, mods = parts[0], parts[1:]
    family, sep, args = head.partition(":")
    if family not in _FAMILY_PATTERNS:
        raise SpecParseError(family or head, "unknown family; expected one of " + ", ".join(_FAMILY_PATTERNS))
    if not sep:
        raise SpecParseError(head, "missing ':' and parameters")
    if family == "veronese":
        fields = dict(kv.partition("=")[::2] for kv in args.split(","))
        if set(fields) != {"n", "d"} or not all(v.isdigit() for v in fields.values()):
            raise SpecParseError(args, "veronese expects n=<int>,d=<int>")
        params = (int(fields["n"]), int(fields["d"]))
    else:
        match = _FAMILY_PATTERNS[family].fullmatch(args)
        if match is None:
            raise SpecParseError(args, f"bad parameters for {family}")
        params = tuple(int(g) for g in match.groups())
    for mod in mods:
        if not _MODIFIER.fullmatch(mod):
            raise SpecParseError(mod, "unknown modifier")
    return SpecExpr(family, params, tuple(mods))


def format_spec(expr: SpecExpr) -> str:
    p = expr.params
    head = {
        "veronese": lambda: f"veronese:n={p[0]},d={p[1]}",
        "segre": lambda: f"segre:{p[0]}x{p[1]}",
        "pluecker": lambda: f"pluecker:r={p[0]}",
        "scroll": lambda: f"scroll:{p[0]},{p[1]}",
    }[expr.family]()
    return "|".join((head,) + expr.modifiers)


def build_family(expr: SpecExpr, prime: int) -> V.VarietySpec:
    ctor = {
        "veronese": V.veronese,
        "segre": V.segre,
        "pluecker": V.pluecker_lines,
        "scroll": V.scroll,
    }[expr.family]
    return ctor(*expr.params, prime=prime)


def apply_modifier(x: V.VarietySpec, mod: str, cfg: SampleConfig) -> V.VarietySpec:
    if mod == "cone":
        return V.cone_over(x)
    if mod == "reduce":
        return V.reduce_to_span(x, cfg)
    kind, _, arg = mod.partition(":")
    if kind == "project":
        return V.project_from_point(x, arg, cfg)
    if kind == "tangent":
        from .secant import tangential_projection

        return tangential_projection(x, int(arg), cfg)
    raise SpecParseError(mod, "unknown modifier")


def build_spec(text: str | SpecExpr, cfg: SampleConfig | None = None) -> V.VarietySpec:
    """Parse (if needed) and construct a variety over ``cfg.prime``."""
    cfg = cfg or SampleConfig()
    if isinstance(text, str) and text.lstrip().startswith("{"):
        return V.from_json(text, prime=cfg.prime)
    expr = parse_spec(text) if isinstance(text, str) else expr_or_raise(text)
    try:
        x = build_family(expr, cfg.prime)
    except ValueError as exc:
        raise SpecParseError(format_spec(expr), str(exc)) from exc
    for mod in expr.modifiers:
        x = apply_modifier(x, mod, cfg)
    return x


def expr_or_raise(expr: SpecExpr) -> SpecExpr:
    if expr.family not in _FAMILY_PATTERNS:
        raise SpecParseError(expr.family, "unknown family")
    return expr
