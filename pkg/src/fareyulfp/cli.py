"""Command-line front end.

Every subcommand prints a single RunReport JSON document on stdout.
Exit status: 0 on success, 2 on argument errors, 3 when a precondition
or theorem hypothesis is violated (the message names it).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from dataclasses import asdict, dataclass
from importlib import metadata

from . import bounds as bounds_mod
from . import graphcore, projections, slices
from .errors import PreconditionViolation
from .farey import (
    Geodesic,
    Slope,
    SurfaceKind,
    dehn_twist,
    distance,
    geodesics,
    half_twist,
    parse_slope_file,
)
from .annular import Annulus, annular_distance, twist_coord

try:
    VERSION = metadata.version("fareyulfp")
except metadata.PackageNotFoundError:  # pragma: no cover
    VERSION = "unknown"


@dataclass(frozen=True)
class Config:
    """Run configuration; M and delta are user-chosen placeholders.

    The underlying theory supplies no numeral for either constant, so
    reports always echo the values actually used.
    """

    M: int = 100
    delta: int = 17
    kind: SurfaceKind = SurfaceKind.TORUS_1_1
    seed: int = 0
    exact_digit_cap: int = bounds_mod.DEFAULT_DIGIT_CAP

    def __post_init__(self) -> None:
        if self.M <= 0 or self.delta < 0 or self.exact_digit_cap <= 0:
            raise PreconditionViolation("invalid configuration value")


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    return int(raw) if raw is not None else fallback


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ulfp", description="Curve-graph local-finiteness toolkit"
    )
    parser.add_argument("--kind", choices=["torus", "sphere"], default="torus")
    parser.add_argument("--M", type=int, default=None, help="projection constant")
    parser.add_argument("--delta", type=int, default=None, help="hyperbolicity constant")
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument("--digit-cap", type=int, default=bounds_mod.DEFAULT_DIGIT_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("dist", help="curve-graph distance between two slopes")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("geod", help="enumerate geodesics between two slopes")
    p.add_argument("x")
    p.add_argument("y")

    p = sub.add_parser("twist", help="apply a (half) twist power")
    p.add_argument("x")
    p.add_argument("n", type=int)
    p.add_argument("y")
    p.add_argument("--half", action="store_true")

    p = sub.add_parser("project", help="annular twist coordinates and distance")
    p.add_argument("--core", required=True)
    p.add_argument("y")
    p.add_argument("z")

    p = sub.add_parser("ulfp", help="separated-set witness or cover certificate")
    p.add_argument("--set", dest="set_file", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)

    p = sub.add_parser("audit-bgit", help="empirical projection-gap audit")
    p.add_argument("--pairs", required=True)

    p = sub.add_parser("slice", help="verify a slice against its bound")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("c")
    p.add_argument("--delta", type=int, required=True, dest="slice_delta")
    p.add_argument("--r", type=int, default=0)
    p.add_argument("--budget", type=int, default=32)
    p.add_argument("--weak-D", type=int, default=None)

    p = sub.add_parser("weak-index", help="weak-tight index of a geodesic")
    p.add_argument("--geodesic", required=True, help="comma-separated slopes")

    p = sub.add_parser("bounds", help="evaluate the recursive bound")
    p.add_argument("--surface", required=True, help="g,n")
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--slice", action="store_true", dest="slice_mode")
    p.add_argument("--weak", type=int, default=None)

    p = sub.add_parser("graph-ulfp", help="greedy dichotomy on a finite graph")
    p.add_argument("--graph", required=True)
    p.add_argument("--set", dest="set_file", required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    return parser


def _config_from_args(args: argparse.Namespace) -> Config:
    return Config(
        M=args.M if args.M is not None else _env_int("ULFP_M", 100),
        delta=args.delta if args.delta is not None else _env_int("ULFP_DELTA", 17),
        kind=SurfaceKind.TORUS_1_1 if args.kind == "torus" else SurfaceKind.SPHERE_0_4,
        seed=args.seed if args.seed is not None else _env_int("ULFP_SEED", 0),
        exact_digit_cap=args.digit_cap,
    )


def _dispatch(args: argparse.Namespace, config: Config) -> dict:
    kind = config.kind
    cmd = args.command
    if cmd == "dist":
        return {"distance": distance(Slope.parse(args.x), Slope.parse(args.y))}
    if cmd == "geod":
        found = sorted(geodesics(Slope.parse(args.x), Slope.parse(args.y)))
        return {"count": len(found), "geodesics": [str(g) for g in found]}
    if cmd == "twist":
        x, y = Slope.parse(args.x), Slope.parse(args.y)
        if args.half:
            result = half_twist(x, args.n, y)
        else:
            result = dehn_twist(kind, x, args.n, y)
        return {"result": str(result)}
    if cmd == "project":
        Z = Annulus(Slope.parse(args.core))
        y, z = Slope.parse(args.y), Slope.parse(args.z)
        return {
            "core": str(Z.core),
            "twist": {str(y): str(twist_coord(Z, y)), str(z): str(twist_coord(Z, z))},
            "distance": annular_distance(kind, Z, y, z),
        }
    if cmd == "ulfp":
        with open(args.set_file) as fh:
            curves = parse_slope_file(fh)
        cert = projections.ulfp_witness(kind, curves, args.l, args.k)
        return {"certificate": cert.to_json()}
    if cmd == "audit-bgit":
        with open(args.pairs) as fh:
            pairs = []
            for raw in fh:
                line = raw.split("#", 1)[0].strip()
                if line:
                    left, right = line.split()
                    pairs.append((Slope.parse(left), Slope.parse(right)))
        return projections.bgit_audit(kind, pairs).to_json()
    if cmd == "slice":
        query = slices.SliceQuery(
            Slope.parse(args.a),
            Slope.parse(args.b),
            Slope.parse(args.c),
            args.slice_delta,
            args.r,
        )
        verification = slices.verify_slice_bounds(
            kind,
            query,
            config.M,
            D=args.weak_D,
            budget=args.budget,
            seed=config.seed,
            delta_hyp=config.delta,
        )
        return verification.to_json()
    if cmd == "weak-index":
        g = Geodesic.parse(args.geodesic)
        report = slices.weak_tight_index(kind, g)
        record = {"geodesic": str(g), "index": report.index}
        if report.attaining is not None:
            vertex, annulus = report.attaining
            record["attaining"] = {"vertex": str(vertex), "core": str(annulus.core)}
        return record
    if cmd == "bounds":
        g, n = (int(tok) for tok in args.surface.split(","))
        surface = bounds_mod.Surface(g, n)
        if args.slice_mode:
            pair = bounds_mod.slice_bound_tight(
                surface, config.M, digit_cap=config.exact_digit_cap
            )
            return {"surface": str(surface), "bounds": [str(b) for b in pair]}
        if args.weak is not None:
            pair = bounds_mod.slice_bound_weak(
                surface, args.weak, config.M, digit_cap=config.exact_digit_cap
            )
            return {"surface": str(surface), "bounds": [str(b) for b in pair]}
        value = bounds_mod.n_bound(
            surface,
            bounds_mod.BoundParams(args.l, args.k, config.M),
            digit_cap=config.exact_digit_cap,
        )
        return {
            "surface": str(surface),
            "params": {"l": args.l, "k": args.k, "M": config.M},
            "mode": value.mode,
            "value": str(value),
        }
    if cmd == "graph-ulfp":
        with open(args.graph) as fh:
            graph = graphcore.FiniteGraph.parse(fh)
        with open(args.set_file) as fh:
            vertex_set = [
                int(line.split("#", 1)[0])
                for line in fh
                if line.split("#", 1)[0].strip()
            ]
        result = graphcore.greedy_separated(graph, vertex_set, args.l, args.k)
        if isinstance(result, graphcore.SeparatedWitness):
            return {
                "type": "witness",
                "vertices": list(result.vertices),
                "separation": result.separation,
            }
        return {
            "type": "covered",
            "centers": list(result.centers),
            "radius": result.radius,
        }
    raise AssertionError(f"unhandled command {cmd}")  # pragma: no cover


def run(argv: list[str]) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    started = time.monotonic()
    try:
        config = _config_from_args(args)
        sys.set_int_max_str_digits(max(config.exact_digit_cap + 100, 10_000))
        outputs = _dispatch(args, config)
    except PreconditionViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    report = {
        "command": args.command,
        "argv": list(argv),
        "outputs": outputs,
        "timing_seconds": round(time.monotonic() - started, 6),
        "config": {
            "M": config.M,
            "delta": config.delta,
            "kind": config.kind.value,
            "seed": config.seed,
            "exact_digit_cap": config.exact_digit_cap,
        },
        "version": VERSION,
    }
    json.dump(report, sys.stdout, indent=2)
    print()
    return 0


def main() -> None:  # pragma: no cover
    sys.exit(run(sys.argv[1:]))
