"""Command-line front end.

Every subcommand prints either canonical JSON (``--format json``) or a plain
human-readable rendering (``--format table``, the default).  The environment
variable ``LOWDEG_FORMAT`` overrides the default; an explicit ``--format``
beats both.  Exit codes: 0 on success, 1 on a domain error, 2 on malformed
input or usage errors.  Randomized subcommands take ``--seed`` and
``--trials`` and are bit-reproducible for a fixed seed.
"""

from __future__ import annotations

import argparse
import json
import os
import random
import sys
from typing import Optional, Sequence

from . import configurations as conf
from . import numerology as num
from .classify import audit_json, classification_json
from .errors import LowdegError
from .fields import PrimeField
from .jsonio import (
    canonical_dumps,
    point_config_from_json,
    subspace_to_json,
    subspaces_from_json,
)
from .sym2_lattice import (
    DFParams,
    SurfaceClass,
    adjunction_genus,
    df_class,
    df_gonality_guard,
    df_genus,
    is_effective,
    is_nef,
    pair,
)

FORMATS = ("table", "json")


class InputError(Exception):
    """Malformed input (bad file, bad JSON shape): exit code 2."""


def _read_input(path: str) -> object:
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, "r", encoding="utf-8") as handle:
                text = handle.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed JSON in {path}: {exc}") from exc


def _render_table(data: object, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines: list[str] = []
    if isinstance(data, dict):
        for key, value in data.items():
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}{key}:")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}{key}: {_render_scalar(value)}")
    elif isinstance(data, list):
        for value in data:
            if isinstance(value, (dict, list)):
                lines.append(f"{pad}-")
                lines.extend(_render_table(value, indent + 1))
            else:
                lines.append(f"{pad}- {_render_scalar(value)}")
    else:
        lines.append(f"{pad}{_render_scalar(data)}")
    return lines


def _render_scalar(value: object) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    return str(value)


def _emit(data: dict, fmt: str, table: Optional[str] = None) -> None:
    if fmt == "json":
        print(canonical_dumps(data))
    elif table is not None:
        print(table)
    else:
        print("\n".join(_render_table(data)))


# ---------------------------------------------------------------------------
# Subcommand handlers: each returns (data, optional table text)


def _cmd_pi(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    value = num.castelnuovo_pi(args.delta, args.ambient)
    return {"delta": args.delta, "ambient": args.ambient, "pi": value}, str(value)


def _cmd_bounds(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    report = num.genus_bound_main(args.d)
    data = {
        "d": report.d,
        "m": report.m,
        "epsilon": report.epsilon,
        "bound_dagger": report.bound_dagger,
        "bound_no_dagger": report.bound_no_dagger,
        "bound_non_df_dagger": report.bound_non_df_dagger,
        "overall": report.overall,
        "governing": report.governing,
    }
    if args.genus is not None:
        gon = num.gonality_bounds(
            args.d,
            args.genus,
            elliptic_cover=args.elliptic_cover,
            debarre_fahlaoui=args.df,
        )
        data["gonality"] = {
            "genus": args.genus,
            "airr_based": gon.airr_based,
            "genus_based_geometric": gon.genus_based_geometric,
            "genus_based_arithmetic": gon.genus_based_arithmetic,
            "combined": gon.combined,
        }
    return data, None


def _cmd_profile(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    n_max = args.nmax if args.nmax is not None else max(2, args.d)
    profile = num.rs_profile(args.d, n_max, args.dagger, args.r2)
    rows = [
        {
            "n": n,
            "r_lb": profile.r(n),
            "s_lb": profile.s(n),
            "rprime_lb": profile.rprime(n),
            "sprime_lb": profile.sprime(n),
        }
        for n in range(2, profile.n_max + 1)
    ]
    data = {
        "d": profile.d,
        "dagger": profile.dagger,
        "r2": profile.r2,
        "n_max": profile.n_max,
        "codim_v_lb": profile.codim_v_lb,
        "rows": rows,
    }
    header = f"{'n':>3} {'r':>5} {'s':>5} {'r-prime':>8} {'s-prime':>8}"
    body = [
        f"{row['n']:>3} {row['r_lb']:>5} {row['s_lb']:>5} "
        f"{row['rprime_lb']:>8} {row['sprime_lb']:>8}"
        for row in rows
    ]
    table = "\n".join(
        [
            f"d = {profile.d}  dagger = {_render_scalar(profile.dagger)}  "
            f"r2 = {profile.r2}  codim_v_lb = {profile.codim_v_lb}",
            header,
            *body,
        ]
    )
    return data, table


def _cmd_df(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    params = DFParams(args.d, args.m)
    cls = df_class(params)
    return {
        "d": params.d,
        "m": params.m,
        "class": {"a": cls.a, "b": cls.b},
        "genus": df_genus(params),
        "effective": is_effective(cls),
        "nef": is_nef(cls),
        "gonality_guard": df_gonality_guard(params),
        "degree_on_sections": pair(cls, SurfaceClass(1, 0)),
    }, None


def _cmd_cone(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    cls = SurfaceClass(args.a, args.b)
    return {
        "a": cls.a,
        "b": cls.b,
        "effective": is_effective(cls),
        "nef": is_nef(cls),
        "self_pairing": pair(cls, cls),
        "adjunction_genus": adjunction_genus(cls),
    }, None


def _cmd_classify(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    data = classification_json(args.d, arithmetic=not args.geometric)
    lines = [f"d = {data['d']}  mode = {data['mode']}"]
    for case in data["cases"]:
        params = ", ".join(f"{k}={_render_scalar(v)}" for k, v in sorted(case["params"].items()))
        lines.append(f"  {case['kind']}: {params}")
        lines.append(f"    {case['provenance']}")
    return data, "\n".join(lines)


def _cmd_audit(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    data = audit_json(args.d)
    lines = [f"audit d = {data['d']}: {'PASS' if data['passed'] else 'FAIL'}"]
    for check in data["checks"]:
        lines.append(
            f"  [{'ok' if check['passed'] else 'FAIL'}] {check['name']}: {check['detail']}"
        )
    return data, "\n".join(lines)


def _cmd_sg(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    config = point_config_from_json(_read_input(args.input))
    report = conf.check_sylvester_gallai(config)
    lines = conf.maximal_lines(config)
    by_size: dict[str, int] = {}
    for line in lines:
        key = str(len(line))
        by_size[key] = by_size.get(key, 0) + 1
    violations = [] if report.is_sylvester_gallai else [
        {"pair": list(report.witness), "reason": "no third collinear point"}
    ]
    return {
        "num_points": report.num_points,
        "is_sylvester_gallai": report.is_sylvester_gallai,
        "max_collinear": report.max_collinear,
        "witness": list(report.witness) if report.witness is not None else None,
        "lines_by_size": by_size,
        "violations": violations,
    }, None


def _cmd_lemma52(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    if args.random:
        rng = random.Random(args.seed)
        field = PrimeField(args.mod)
        failures = []
        for trial in range(args.trials):
            members = conf.random_common_subspace_instance(
                rng, field, args.ambient, count=args.count
            )
            lam = conf.common_subspace(members)
            ok = lam.dim == args.ambient - 3 and all(
                s.contains_subspace(lam) for s in members
            )
            if not ok:
                failures.append(trial)
        return {
            "mode": "random",
            "trials": args.trials,
            "seed": args.seed,
            "mod": args.mod,
            "ambient": args.ambient,
            "failures": failures,
            "violations": failures,
            "passed": not failures,
        }, None
    if args.input is None:
        raise InputError("lemma52 needs --input FILE or --random")
    members = subspaces_from_json(_read_input(args.input))
    lam = conf.common_subspace(members)
    return {
        "mode": "input",
        "num_subspaces": len(members),
        "common_subspace": subspace_to_json(lam),
        "dim": lam.dim,
        "violations": [],
    }, None


def _cmd_sym2(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    model = conf.sym2_model(args.modulus)
    data: dict = {"modulus": model.modulus, "num_elements": model.size}
    if args.check:
        report = conf.incidence_pairing_check(model)
        data["checks_run"] = report.checks_run
        data["violations"] = list(report.violations)
        data["passed"] = report.passed
    return data, None


def _cmd_rh(args: argparse.Namespace) -> tuple[dict, Optional[str]]:
    min_mode = args.source_genus is not None or args.ram_points is not None
    check_mode = any(v is not None for v in (args.gx, args.gy, args.deg, args.ram))
    if min_mode and check_mode:
        raise InputError("rh takes either --gx/--gy/--deg/--ram or --source-genus/--ram-points")
    if min_mode:
        if args.source_genus is None or args.ram_points is None:
            raise InputError("rh minimum-degree mode needs both --source-genus and --ram-points")
        result = num.riemann_hurwitz_min_degree(args.source_genus, args.ram_points)
        return {
            "source_genus": args.source_genus,
            "ram_points": args.ram_points,
            "max_degree": result,
        }, str(result)
    if not all(v is not None for v in (args.gx, args.gy, args.deg, args.ram)):
        raise InputError("rh needs --gx, --gy, --deg and --ram")
    consistent = num.riemann_hurwitz_check(args.gx, args.gy, args.deg, args.ram)
    return {
        "gx": args.gx,
        "gy": args.gy,
        "deg": args.deg,
        "ram": args.ram,
        "consistent": consistent,
    }, None


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lowdeg",
        description="Exact calculators for incidence configurations, genus bounds, "
        "and the low-degree-points classification table.",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=None,
        help="output format (default: table, or the LOWDEG_FORMAT environment variable)",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("pi", help="Castelnuovo genus bound pi(delta, n)")
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--ambient", type=int, required=True)
    p.set_defaults(handler=_cmd_pi)

    p = sub.add_parser("bounds", help="genus ceilings for degree d, optionally with gonality")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--genus", type=int, default=None, help="also report gonality bounds")
    p.add_argument("--elliptic-cover", action="store_true", dest="elliptic_cover")
    p.add_argument("--df", action="store_true")
    p.set_defaults(handler=_cmd_bounds)

    p = sub.add_parser("profile", help="dimension-ledger lower bounds")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--dagger", action="store_true")
    p.add_argument("--r2", type=int, default=2)
    p.add_argument("--nmax", type=int, default=None, help="largest n (default: d)")
    p.set_defaults(handler=_cmd_profile)

    p = sub.add_parser("df", help="Debarre-Fahlaoui class, genus, and guards")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(handler=_cmd_df)

    p = sub.add_parser("cone", help="cone membership and adjunction genus of a*section + b*fiber")
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.set_defaults(handler=_cmd_cone)

    p = sub.add_parser("classify", help="the classification table cell for degree d")
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--geometric", action="store_true", help="classify after base change")
    p.set_defaults(handler=_cmd_classify)

    p = sub.add_parser("audit", help="cross-check the table cell against the bounds")
    p.add_argument("--d", type=int, required=True)
    p.set_defaults(handler=_cmd_audit)

    p = sub.add_parser("sg", help="Sylvester-Gallai check of a plane point configuration")
    p.add_argument("--input", required=True, help="points JSON file, or - for stdin")
    p.set_defaults(handler=_cmd_sg)

    p = sub.add_parser("lemma52", help="common codimension-3 subspace of a family")
    p.add_argument("--input", default=None, help="subspaces JSON file, or - for stdin")
    p.add_argument("--random", action="store_true", help="run randomized self-checks instead")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--mod", type=int, default=5, help="prime modulus for random mode")
    p.add_argument("--ambient", type=int, default=4, help="ambient dimension for random mode")
    p.add_argument("--count", type=int, default=4, help="family size for random mode")
    p.set_defaults(handler=_cmd_lemma52)

    p = sub.add_parser("sym2", help="unordered-pairs model over Z/N")
    p.add_argument("--modulus", type=int, required=True)
    p.add_argument("--check", action="store_true", help="verify the incidence pairing table")
    p.set_defaults(handler=_cmd_sym2)

    p = sub.add_parser("rh", help="Riemann-Hurwitz consistency or forced minimum degree")
    p.add_argument("--gx", type=int, default=None)
    p.add_argument("--gy", type=int, default=None)
    p.add_argument("--deg", type=int, default=None)
    p.add_argument("--ram", type=int, default=None)
    p.add_argument("--source-genus", type=int, default=None, dest="source_genus")
    p.add_argument("--ram-points", type=int, default=None, dest="ram_points")
    p.set_defaults(handler=_cmd_rh)

    return parser


def _resolve_format(args: argparse.Namespace) -> str:
    if args.format is not None:
        return args.format
    env = os.environ.get("LOWDEG_FORMAT")
    if env is None:
        return "table"
    if env not in FORMATS:
        raise InputError(f"LOWDEG_FORMAT must be one of {FORMATS}, got {env!r}")
    return env


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        fmt = _resolve_format(args)
        data, table = args.handler(args)
    except InputError as exc:
        print(str(exc), file=sys.stderr)
        return 2
    except LowdegError as exc:
        print(str(exc), file=sys.stderr)
        return 1
    _emit(data, fmt, table)
    return 0


if __name__ == "__main__":
    sys.exit(main())
