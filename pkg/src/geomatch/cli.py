"""Command line: gen, construct, verify, pack and render.

Exit codes are 0 when everything passed, 1 when a check or construction
precondition failed and 2 for usage, parse or consistency errors.
"""

from __future__ import annotations

import argparse
import sys
import time
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import configurations as cfg
from . import constructions as cons
from . import oracle, verification
from .geometry import Config, GeneralPositionError, PointSet
from .matching import MatchingFamily
from .render import render_svg
from .serialization import (
    FormatError,
    dumps,
    family_from_json,
    family_to_json,
    load_json_file,
    packing_to_json,
    pointset_from_json,
    pointset_to_json,
    write_text,
)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

GEN_CONFIGS = ("convex", "wheel", "rposition", "rposition-twelve", "general", "prism")
METHODS = ("auto", "convex-parallel", "wheel-b2", "wheel-b3", "rposition-parallel", "general-recursive", "prism")


class UsageError(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    inputs: dict[str, str] = field(default_factory=dict)
    checks: list[dict] = field(default_factory=list)
    counters: dict[str, Any] = field(default_factory=dict)
    wall_time_s: float | None = None

    @property
    def passed(self) -> bool:
        return all(c["passed"] for c in self.checks)

    def to_json(self) -> dict:
        out = {
            "command": self.command,
            "inputs": self.inputs,
            "passed": self.passed,
            "checks": self.checks,
            "counters": self.counters,
        }
        if self.wall_time_s is not None:
            out["wall_time_s"] = self.wall_time_s
        return out


def _emit(text: str, path: str | None) -> None:
    if path:
        write_text(path, text)
    else:
        sys.stdout.write(text)


def _load_pointset(path: str):
    doc, sha = load_json_file(path)
    ps, cert = pointset_from_json(doc)
    return ps, cert, sha


def _load_family(path: str, ps: PointSet) -> tuple[MatchingFamily, str]:
    doc, sha = load_json_file(path)
    fam = family_from_json(doc)
    for i, m in enumerate(fam.matchings):
        for e in m.edges:
            if e.b >= ps.size:
                raise FormatError(f"matching {i} uses vertex {e.b} but the point set has {ps.size} points")
    return fam, sha


# -- subcommands ------------------------------------------------------------------


def cmd_gen(args) -> int:
    cert = None
    name = args.config
    if name == "convex":
        ps = cfg.gen_convex(args.size)
    elif name == "wheel":
        ps = cfg.gen_wheel(args.size)
    elif name == "rposition":
        ps, cert = cfg.gen_r_position(args.size, args.seed, spread=args.spread)
    elif name == "rposition-twelve":
        ps, cert = cfg.rposition_twelve()
    elif name == "general":
        ps = cfg.gen_general(args.size, args.seed)
    else:
        ps = cfg.gen_prism(args.size)
    _emit(dumps(pointset_to_json(ps, cert)), args.out)
    return EXIT_OK


def _auto_method(ps: PointSet) -> str:
    if ps.config is Config.CONVEX:
        return "convex-parallel"
    if ps.config is Config.WHEEL:
        return "wheel-b2"
    if ps.config is Config.RPOSITION:
        return "rposition-parallel"
    if cfg.is_prism_layout(ps):
        return "prism"
    return "general-recursive"


_METHOD_CONFIG = {
    "convex-parallel": (Config.CONVEX,),
    "wheel-b2": (Config.WHEEL,),
    "wheel-b3": (Config.WHEEL,),
    "rposition-parallel": (Config.RPOSITION,),
    "general-recursive": (Config.GENERAL, Config.RPOSITION),
    "prism": (Config.GENERAL,),
}


def construct(ps: PointSet, method: str) -> MatchingFamily:
    if method == "auto":
        method = _auto_method(ps)
    if ps.config not in _METHOD_CONFIG[method]:
        raise UsageError(f"method {method} does not apply to a {ps.config.value} point set")
    if method == "convex-parallel":
        return cons.convex_family(ps)
    if method == "wheel-b2":
        return cons.wheel_family_b2(ps)
    if method == "wheel-b3":
        return cons.wheel_family_b3(ps)
    if method == "rposition-parallel":
        return cons.rposition_family(ps)
    if method == "prism":
        if not cfg.is_prism_layout(ps):
            raise UsageError("method prism needs a point set generated with --config prism")
        return cons.prism_family(ps)
    return cons.general_family(ps)


def cmd_construct(args) -> int:
    ps, _, _ = _load_pointset(args.pointset)
    fam = construct(ps, args.method)
    _emit(dumps(family_to_json(fam)), args.out)
    return EXIT_OK


_GUARANTEES = {
    "convex-parallel": ["maximal"],
    "rposition-parallel": ["maximal"],
    "wheel-b2": ["boundary-count=2", "radial-consecutive"],
    "wheel-b3": ["boundary-count=3"],
    "prism": ["plane"],
}


def _check_names(raw: Sequence[str], ps: PointSet, fam: MatchingFamily) -> list[str]:
    """Expand 'default' and 'all'; 'all' adds what the family's method promises."""
    tokens: list[str] = []
    for item in raw:
        tokens.extend(s for s in item.split(",") if s)
    if not tokens:
        tokens = ["default"]
    names: list[str] = []
    for t in tokens:
        if t in ("default", "all"):
            names.extend(verification.DEFAULT_CHECKS)
            if t == "all":
                names.extend(_GUARANTEES.get(fam.method, []))
        else:
            names.append(t)
    for n in names:
        base, _, arg = n.partition("=")
        if base not in verification.KNOWN_CHECKS:
            raise UsageError(f"unknown check {n!r}; known: all, default, {', '.join(verification.KNOWN_CHECKS)}")
        if base == "boundary-count" and not arg.isdigit():
            raise UsageError("boundary-count needs a value, e.g. boundary-count=3")
        if base == "radial-consecutive" and ps.config is not Config.WHEEL:
            raise UsageError("radial-consecutive applies to wheel point sets only")
    return list(dict.fromkeys(names))


def cmd_verify(args, argv: list[str]) -> int:
    t0 = time.perf_counter()
    ps, cert, ps_sha = _load_pointset(args.pointset)
    fam, fam_sha = _load_family(args.family, ps)
    names = _check_names(args.checks, ps, fam)
    report = RunReport(["geomatch", *argv], {args.pointset: ps_sha, args.family: fam_sha})
    results = verification.run_checks(ps, fam, names)
    if ps.config is Config.RPOSITION and cert is not None:
        problems = cfg.r_position_diagnostics(ps, cert)
        results.insert(0, verification.CheckResult("r-position-certificate", not problems, problems or None))
        bad = cfg.rpost_hypothesis_violations(ps)
        results.insert(1, verification.CheckResult("same-side-hypothesis", not bad, [list(p) for p in bad[:8]] or None))
    report.checks = [r.to_json() for r in results]
    report.counters = {
        "points": ps.size,
        "matchings": len(fam),
        "edges": sum(len(m) for m in fam.matchings),
        "stones": len(fam.stones),
        "k": len(fam),
    }
    if not args.no_timing:
        report.wall_time_s = round(time.perf_counter() - t0, 4)
    _emit(dumps(report.to_json()), args.out)
    if not report.passed:
        for c in report.checks:
            if not c["passed"]:
                print(f"FAIL {c['name']}: {c.get('witness')}", file=sys.stderr)
    return EXIT_OK if report.passed else EXIT_FAIL


def cmd_pack(args) -> int:
    ps, _, _ = _load_pointset(args.pointset)
    result = oracle.max_packing(
        ps, args.constraint, witness_cap=args.witness_cap, exhaustive=args.exhaustive, override=args.force
    )
    _emit(dumps(packing_to_json(result)), args.out)
    return EXIT_OK


def cmd_render(args) -> int:
    ps, _, _ = _load_pointset(args.pointset)
    fam = _load_family(args.family, ps)[0] if args.family else None
    _emit(render_svg(ps, fam), args.out)
    return EXIT_OK


# -- entry point --------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geomatch", description="Edge-disjoint non-crossing perfect matchings.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a point set")
    g.add_argument("--config", required=True, choices=GEN_CONFIGS)
    g.add_argument("--size", type=int, default=12, help="number of points 2n (ignored for rposition-twelve)")
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--spread", type=float, default=0.0, help="radial jitter for rposition sets, 0 keeps convex position")
    g.add_argument("--out")

    c = sub.add_parser("construct", help="build a matching family")
    c.add_argument("pointset")
    c.add_argument("--method", default="auto", choices=METHODS)
    c.add_argument("--out")

    v = sub.add_parser("verify", help="check a family against a point set")
    v.add_argument("pointset")
    v.add_argument("family")
    v.add_argument("--checks", nargs="*", default=["default"], help="names, 'all', or boundary-count=N")
    v.add_argument("--no-timing", action="store_true", help="omit wall time so the report is reproducible")
    v.add_argument("--out")

    k = sub.add_parser("pack", help="exact maximum packing by exhaustive search")
    k.add_argument("pointset")
    k.add_argument("--constraint", default="none", choices=[c.value for c in oracle.Constraint])
    k.add_argument("--witness-cap", type=int, default=oracle.DEFAULT_WITNESS_CAP)
    k.add_argument("--exhaustive", action="store_true")
    k.add_argument("--force", action="store_true", help="override the oracle size limit")
    k.add_argument("--out")

    r = sub.add_parser("render", help="draw a point set and family as SVG")
    r.add_argument("pointset")
    r.add_argument("family", nargs="?")
    r.add_argument("--out")
    return p


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        if args.command == "gen":
            return cmd_gen(args)
        if args.command == "construct":
            return cmd_construct(args)
        if args.command == "verify":
            return cmd_verify(args, argv)
        if args.command == "pack":
            return cmd_pack(args)
        return cmd_render(args)
    except (UsageError, FormatError, oracle.OracleSizeError, cfg.ConfigurationError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (cons.ConstructionError, GeneralPositionError, verification.VerificationError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
