"""Command line driver.

Exit codes: 0 ok, 2 usage or invalid configuration, 3 guard or budget
exceeded, 4 mathematical mismatch.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import artifacts
from .bichar import dimension_series, hc_bigraded_character
from .budget import Budget, default_budget, parse_budget
from .charalg import bott_euler
from .errors import BudgetExceeded, IsocharError, NotDominant
from .localize import MODES, cross_validate, generic_points
from .rootsys import FAMILIES, build_root_system
from .schemeoracle import (
    PRESET_ROOT_SYSTEMS,
    PRESETS,
    bigraded_hilbert,
    buchberger,
    build_J,
    compare_scheme_vs_character,
)
from .weightlat import Weight

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_RESOURCE = 3
EXIT_MISMATCH = 4


class UsageError(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    family: str | None = None
    rank: int | None = None
    box: tuple = (2, 2)
    mode: str = "corrected"
    points: list = field(default_factory=list)
    seed: int | None = None
    npoints: int = 2
    preset: str | None = None
    out: str | None = None
    format: str | None = None
    jobs: int = 1
    budget: Budget = field(default_factory=default_budget)
    input: str | None = None
    weight: str | None = None

    def root_system(self):
        if self.family is None or self.rank is None:
            raise UsageError("--family and --rank are required")
        return build_root_system(self.family, self.rank, self.budget)


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _points(cfg: RunConfig, rs) -> list:
    from .localize import is_generic

    pts = [artifacts.parse_point(p) for p in cfg.points]
    for z in pts:
        if z.dim != rs.dim or not is_generic(rs, z):
            raise UsageError(f"point {artifacts.point_json(z)} is not generic for {rs.name}")
    if cfg.seed is not None:
        pts += generic_points(rs, cfg.npoints, cfg.seed)
    return pts


def cmd_character(cfg: RunConfig) -> int:
    rs = cfg.root_system()
    I, J = cfg.box
    bc = hc_bigraded_character(rs, I, J, jobs=cfg.jobs, budget=cfg.budget)
    _emit(artifacts.dumps(artifacts.bigraded_to_dict(bc)), cfg.out)
    return EXIT_OK


def cmd_validate(cfg: RunConfig) -> int:
    if cfg.input:
        try:
            data = json.loads(Path(cfg.input).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read artifact: {exc}") from exc
        bc = artifacts.bigraded_from_dict(data)
        rs = bc.rs
    else:
        rs = cfg.root_system()
        bc = hc_bigraded_character(rs, *cfg.box, jobs=cfg.jobs, budget=cfg.budget)
    if cfg.seed is None and len(cfg.points) < 2:
        raise UsageError("supply at least two --points or a --seed")
    pts = _points(cfg, rs)
    try:
        report = cross_validate(bc, pts, mode=cfg.mode)
        mismatches = [
            {
                "point": artifacts.point_json(m.point),
                "i": m.i,
                "j": m.j,
                "character": artifacts.frac_str(m.character_value),
                "localized": artifacts.frac_str(m.localized_value),
            }
            for m in report.mismatches
        ]
        error = None
    except NotDominant as exc:
        mismatches, error = [], f"artifact contains a non-dominant highest weight: {exc}"
    out = {
        "metadata": dict(bc.metadata, mode=cfg.mode),
        "points": [artifacts.point_json(z) for z in pts],
        "passed": not mismatches and error is None,
        "mismatches": mismatches,
    }
    if error:
        out["error"] = error
    _emit(artifacts.dumps(out), cfg.out)
    return EXIT_OK if out["passed"] else EXIT_MISMATCH


def cmd_oracle(cfg: RunConfig) -> int:
    if cfg.preset not in PRESETS:
        raise UsageError(f"--preset must be one of {PRESETS}")
    I, J = cfg.box
    pres = build_J(cfg.preset)
    gb = buchberger(pres, cfg.budget)
    hilb = bigraded_hilbert(gb, pres.variables, I, J, cfg.budget)
    family, rank = PRESET_ROOT_SYSTEMS[cfg.preset]
    rs = build_root_system(family, rank, cfg.budget)
    dims = dimension_series(hc_bigraded_character(rs, I, J, jobs=cfg.jobs, budget=cfg.budget))
    report = compare_scheme_vs_character(hilb, dims, cfg.preset)
    if cfg.format == "json":
        text = artifacts.dumps({
            "preset": cfg.preset,
            "rows": [dict(zip(("i", "j", "scheme_dim", "xnorm_dim", "gap"), r)) for r in report.rows],
            "first_divergence": list(report.first_divergence) if report.first_divergence else None,
            "ok": report.ok,
        })
    else:
        text = report.to_csv()
    _emit(text, cfg.out)
    return EXIT_OK if report.ok else EXIT_MISMATCH


def cmd_weyl(cfg: RunConfig) -> int:
    rs = cfg.root_system()
    rows = [
        {
            "length": w.length,
            "word": [k + 1 for k in w.word],
            "matrix": [[artifacts.frac_str(v) for v in row] for row in w.matrix],
        }
        for w in rs.weyl_group()
    ]
    _emit(artifacts.dumps({"family": rs.family, "rank": rs.rank, "order": len(rows), "elements": rows}), cfg.out)
    return EXIT_OK


def cmd_bott(cfg: RunConfig) -> int:
    rs = cfg.root_system()
    if not cfg.weight:
        raise UsageError("--weight is required")
    lam = Weight(Fraction(t.strip()) for t in cfg.weight.split(","))
    if lam.dim != rs.dim:
        raise UsageError(f"weight must have {rs.dim} coordinates for {rs.name}")
    ch = bott_euler(rs, lam)
    _emit(artifacts.dumps({
        "family": rs.family,
        "rank": rs.rank,
        "weight": artifacts.weight_json(lam),
        "euler_characteristic": artifacts.character_json(ch),
    }), cfg.out)
    return EXIT_OK


COMMANDS = {
    "character": cmd_character,
    "validate": cmd_validate,
    "oracle": cmd_oracle,
    "weyl": cmd_weyl,
    "bott": cmd_bott,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="isochar", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--family", type=str.upper, choices=FAMILIES)
    common.add_argument("--rank", type=int)
    common.add_argument("--box", type=int, nargs=2, metavar=("I", "J"), default=(2, 2))
    common.add_argument("--mode", choices=MODES, default="corrected")
    common.add_argument("--points", nargs="+", default=[], help="points as comma-separated rationals, e.g. 2,1/3")
    common.add_argument("--seed", type=int)
    common.add_argument("--npoints", type=int, default=2)
    common.add_argument("--preset", choices=PRESETS)
    common.add_argument("--out")
    common.add_argument("--format", choices=("json", "csv"))
    common.add_argument("--jobs", type=int, default=1)
    common.add_argument("--budget", help="work budget, or key=value pairs (weyl, work, pairs, monomials)")

    sub.add_parser("character", parents=[common], help="bigraded character as a JSON artifact")
    v = sub.add_parser("validate", parents=[common], help="cross-check against localization")
    v.add_argument("--input", help="stored character artifact to validate instead of recomputing")
    sub.add_parser("oracle", parents=[common], help="Gröbner-basis Hilbert table vs character dimensions")
    sub.add_parser("weyl", parents=[common], help="dump the Weyl group with lengths")
    b = sub.add_parser("bott", parents=[common], help="Euler characteristic of one line bundle")
    b.add_argument("--weight", help="ambient coordinates, comma-separated")
    return parser


def config_from_args(args) -> RunConfig:
    budget = default_budget()
    if args.budget:
        budget = budget.with_overrides(**parse_budget(args.budget))
    I, J = args.box
    if I < 0 or J < 0:
        raise UsageError("--box dimensions must be nonnegative")
    if args.jobs < 1:
        raise UsageError("--jobs must be positive")
    family = args.family
    rank = args.rank
    if family == "G2" and rank is None:
        rank = 2
    return RunConfig(
        command=args.command,
        family=family,
        rank=rank,
        box=(I, J),
        mode=args.mode,
        points=list(args.points),
        seed=args.seed,
        npoints=args.npoints,
        preset=args.preset,
        out=args.out,
        format=args.format,
        jobs=args.jobs,
        budget=budget,
        input=getattr(args, "input", None),
        weight=getattr(args, "weight", None),
    )


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = config_from_args(args)
        return COMMANDS[cfg.command](cfg)
    except BudgetExceeded as exc:
        print(f"isochar: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except (UsageError, IsocharError, artifacts.ArtifactError, ValueError) as exc:
        print(f"isochar: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
