"""Command line interface: ``terracini analyze|classify|table|verify``.

Exit codes: 0 success, 2 parse error, 3 sampling pathology, 4 verification failure.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path
from typing import Callable, Sequence, TypeVar

from . import acceptance
from .classifier import check_additivity, classify
from .grammar import SpecParseError, build_spec
from .linalg import DEFAULT_PRIME, check_prime
from .report import document_from_profile, document_from_report, emit_json, emit_text
from .sampling import SampleConfig, SamplingError
from .secant import defect_profile

EXIT_OK, EXIT_PARSE, EXIT_SAMPLING, EXIT_VERIFY = 0, 2, 3, 4
PRIME_ENV = "TERRACINI_PRIME"

T = TypeVar("T")


def _prime_arg(text: str) -> int:
    try:
        return check_prime(int(text))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _add_sampling_flags(p: argparse.ArgumentParser):
    p.add_argument("--prime", type=_prime_arg, default=None, help=f"field modulus (default ${PRIME_ENV} or {DEFAULT_PRIME})")
    p.add_argument("--samples", type=int, default=3, help="independent repetitions per generic rank")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="terracini", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    for name, help_ in (("analyze", "defect profile of a variety"), ("classify", "classify a variety")):
        p = sub.add_parser(name, help=help_)
        p.add_argument("spec", help='e.g. "veronese:n=3,d=2|project:inner", inline JSON, or @file.json')
        _add_sampling_flags(p)
        p.add_argument("--json", action="store_true", help="emit canonical JSON")

    p = sub.add_parser("table", help="defect table for a built-in family")
    p.add_argument("--family", required=True, choices=["veronese", "veronese-projected", "segre", "pluecker"])
    p.add_argument("--max", type=int, required=True, dest="max_param")
    _add_sampling_flags(p)

    p = sub.add_parser("verify", help="run the reproduction criteria suite")
    p.add_argument("--suite", choices=["paper"], default="paper")
    _add_sampling_flags(p)
    p.add_argument("--json", action="store_true", help="emit the JSON transcript")
    return parser


def config_from_args(args: argparse.Namespace) -> SampleConfig:
    prime = args.prime
    if prime is None:
        env = os.environ.get(PRIME_ENV)
        prime = check_prime(int(env)) if env else DEFAULT_PRIME
    return SampleConfig(prime=prime, samples=args.samples, seed=args.seed)


def _read_spec(text: str) -> str:
    if text.startswith("@"):
        return Path(text[1:]).read_text()
    return text


def with_fallback(fn: Callable[[SampleConfig], T], cfg: SampleConfig) -> T:
    """Run ``fn``; on a sampling failure retry once over the fallback prime."""
    try:
        return fn(cfg)
    except SamplingError:
        return fn(cfg.fallback())


def _cmd_analyze(args, cfg) -> int:
    text = _read_spec(args.spec)

    def run(c: SampleConfig):
        x = build_spec(text, c)
        return document_from_profile(defect_profile(x, c), x.provenance)

    doc = with_fallback(run, cfg)
    sys.stdout.write(emit_json(doc) if args.json else emit_text(doc))
    return EXIT_OK


def _cmd_classify(args, cfg) -> int:
    text = _read_spec(args.spec)

    def run(c: SampleConfig):
        x = build_spec(text, c)
        return document_from_report(classify(x, c), x.provenance)

    doc = with_fallback(run, cfg)
    sys.stdout.write(emit_json(doc) if args.json else emit_text(doc))
    return EXIT_OK


def _family_members(family: str, top: int) -> list[str]:
    if family == "veronese":
        return [f"veronese:n={n},d=2" for n in range(2, top + 1)]
    if family == "veronese-projected":
        return [f"veronese:n={n},d=2|project:{m}" for n in range(2, top + 1) for m in ("general", "inner")]
    if family == "segre":
        return [f"segre:{a}x{b}" for a in range(1, top + 1) for b in range(a, top + 1)]
    return [f"pluecker:r={r}" for r in range(3, top + 1)]


def _cmd_table(args, cfg) -> int:
    members = _family_members(args.family, args.max_param)
    width = max([len(m) for m in members] + [6])
    header = f"{'member':<{width}} {'n':>3} {'N':>4} {'delta1':>6} {'k0':>3}  {'zeta':<16} additive"
    lines = [header, "-" * len(header)]
    for text in members:
        prof = with_fallback(lambda c: defect_profile(build_spec(text, c), c), cfg)
        zeta = "(" + ",".join(map(str, prof.zeta)) + ")"
        lines.append(
            f"{text:<{width}} {prof.n:>3} {prof.N:>4} {prof.delta1:>6} {prof.k0:>3}  {zeta:<16} "
            f"{str(check_additivity(prof.delta)).lower()}"
        )
    sys.stdout.write("\n".join(lines) + "\n")
    return EXIT_OK


def _cmd_verify(args, cfg) -> int:
    results = acceptance.run_suite(cfg)
    if args.json:
        sys.stdout.write(acceptance.transcript_json(results, cfg))
    else:
        for r in results:
            print(r.line())
        failed = [r for r in results if not r.passed]
        print(f"{len(results) - len(failed)}/{len(results)} criteria passed")
        for r in failed:
            print(f"failed criterion {r.number}: {r.name}", file=sys.stderr)
    return EXIT_OK if all(r.passed for r in results) else EXIT_VERIFY


COMMANDS = {"analyze": _cmd_analyze, "classify": _cmd_classify, "table": _cmd_table, "verify": _cmd_verify}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        cfg = config_from_args(args)
        return COMMANDS[args.command](args, cfg)
    except SpecParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except SamplingError as exc:
        print(f"sampling pathology: {exc}", file=sys.stderr)
        return EXIT_SAMPLING
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
