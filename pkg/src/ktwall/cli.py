"""Command-line frontend.

All mathematics lives in the engine modules; this layer parses flags, calls
the engine, and prints serializer output.  Exit codes: 0 success, 1 domain
error (message names the violated precondition), 2 parse error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from fractions import Fraction
from typing import IO, Optional, Sequence

from . import geography, serialize, walls as wallsmod
from .charge import ChargeKind, ChargeParams, slope_function_floor
from .lattice import (
    CharVector,
    SurfaceData,
    SurfaceKind,
    bg_bound,
    euler_pairing,
    make_surface,
    moduli_dimension,
    sharp_bound,
    target_class,
)

COMMANDS = (
    "surface-info",
    "walls",
    "flops",
    "vanishing",
    "destabilizers",
    "chi",
    "bounds",
    "oracle",
)


class ParseError(Exception):
    pass


@dataclass
class Query:
    command: str
    surface: SurfaceData
    charge: ChargeKind
    t2: Optional[Fraction] = None
    v: Optional[CharVector] = None
    w: Optional[CharVector] = None
    rank_cap: int = 9
    margin: int = 3
    as_json: bool = False
    svg: Optional[str] = None
    digits: int = serialize.DEFAULT_DIGITS


def _rational(text: str) -> Fraction:
    try:
        return serialize.parse_q(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _vector(text: str) -> CharVector:
    try:
        return serialize.parse_vector(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc))


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ktwall",
        description="Exact wall-and-chamber structure of the one-parameter "
        "stability family on Picard-rank-one K3 and abelian surfaces.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--kind", choices=["k3", "abelian"], default=None)
        p.add_argument("--genus", type=int, default=None)
        p.add_argument("--polarization", type=int, default=None)
        p.add_argument("--charge", choices=["naive", "twisted"], default=None)
        p.add_argument("--digits", type=int, default=None)
        p.add_argument("--json", action="store_const", const=True, default=None)
        p.add_argument("--config", default=None)
        if name == "walls":
            p.add_argument("--svg", default=None)
        if name == "destabilizers":
            p.add_argument("--t2", type=_rational, default=None)
            p.add_argument("--rank-cap", dest="rank_cap", type=int, default=None)
        if name == "oracle":
            p.add_argument("--rank-cap", dest="rank_cap", type=int, default=None)
            p.add_argument("--margin", type=int, default=None)
        if name == "chi":
            p.add_argument("--v", type=_vector, default=None)
            p.add_argument("--w", type=_vector, default=None)
        if name == "bounds":
            p.add_argument("--v", type=_vector, default=None)
    return parser


def _load_config(path: str) -> dict[str, str]:
    """Flat key = value text; keys are long flag names without dashes."""
    values: dict[str, str] = {}
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, raw in enumerate(fh, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ParseError(f"{path}:{lineno}: expected 'key = value'")
                key, _, value = line.partition("=")
                values[key.strip()] = value.strip()
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}")
    return values


_CONFIG_PARSERS = {
    "kind": str,
    "genus": int,
    "polarization": int,
    "charge": str,
    "digits": int,
    "rank-cap": int,
    "margin": int,
    "t2": serialize.parse_q,
    "v": serialize.parse_vector,
    "w": serialize.parse_vector,
    "svg": str,
    "json": lambda s: s.lower() in ("1", "true", "yes"),
}


def _merge_config(args: argparse.Namespace, config: dict[str, str]) -> None:
    for key, raw in config.items():
        if key not in _CONFIG_PARSERS:
            raise ParseError(f"unknown config key {key!r}")
        attr = key.replace("-", "_")
        if not hasattr(args, attr) or getattr(args, attr) is not None:
            continue  # flag not applicable to this command, or CLI wins
        try:
            setattr(args, attr, _CONFIG_PARSERS[key](raw))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"config value for {key!r}: {exc}")


def parse_query(argv: Sequence[str]) -> Query:
    args = _build_parser().parse_args(argv)
    if args.config is not None:
        _merge_config(args, _load_config(args.config))
    if args.kind is None:
        raise ParseError("--kind k3|abelian is required (flag or config)")
    kind = SurfaceKind.K3 if args.kind == "k3" else SurfaceKind.ABELIAN
    if kind is SurfaceKind.K3:
        if args.polarization is not None:
            raise ParseError("--polarization requires --kind abelian")
        if args.genus is None:
            raise ParseError("--genus N is required for --kind k3")
        parameter = args.genus
    else:
        if args.genus is not None:
            raise ParseError("--genus requires --kind k3")
        if args.polarization is None:
            raise ParseError("--polarization N is required for --kind abelian")
        parameter = args.polarization
    surface = make_surface(kind, parameter)
    if args.charge is not None:
        charge = ChargeKind(args.charge)
    else:
        charge = ChargeKind.TWISTED if kind is SurfaceKind.K3 else ChargeKind.NAIVE
    rank_cap = getattr(args, "rank_cap", None)
    margin = getattr(args, "margin", None)
    return Query(
        command=args.command,
        surface=surface,
        charge=charge,
        t2=getattr(args, "t2", None),
        v=getattr(args, "v", None),
        w=getattr(args, "w", None),
        rank_cap=rank_cap if rank_cap is not None else 9,
        margin=margin if margin is not None else 3,
        as_json=bool(args.json),
        svg=getattr(args, "svg", None),
        digits=args.digits if args.digits is not None else serialize.DEFAULT_DIGITS,
    )


def _emit(query: Query, doc: dict, table: str, out: IO[str]) -> None:
    out.write(serialize.dumps(doc) if query.as_json else table)


def _run_surface_info(query: Query, out: IO[str]) -> None:
    surf = query.surface
    doc = {
        "surface": serialize.surface_json(surf),
        "target_class": [0, 1, surf.h_squared // 2],
    }
    table = (
        serialize.surface_table(surf)
        + f"\ntarget class: (0, 1, {surf.h_squared // 2})\n"
    )
    _emit(query, doc, table, out)


def _run_walls(query: Query, out: IO[str]) -> None:
    report = wallsmod.chamber_decomposition(query.surface, query.charge)
    doc = serialize.report_json(report)
    doc["slope_function_floor_t2"] = serialize.fmt_q(
        slope_function_floor(query.surface, query.charge)
    )
    doc["higher_rank_floor_t2"] = serialize.fmt_q(
        wallsmod.higher_rank_floor(query.surface, query.charge)
    )
    _emit(query, doc, serialize.report_table(report, query.digits), out)
    if query.svg is not None:
        serialize.render_svg(report, query.svg)


def _run_flops(query: Query, out: IO[str]) -> None:
    records = geography.flop_sequence(query.surface, query.charge)
    count = geography.flop_count(query.surface, query.charge)
    formula = geography.flop_count_formula(query.surface, query.charge)
    doc = {
        "surface": serialize.surface_json(query.surface),
        "charge": query.charge.value,
        "count": count,
        "count_formula": formula,
        "flops": [serialize.flop_json(r) for r in records],
    }
    table = serialize.flops_table(
        query.surface, query.charge, records, count, formula, query.digits
    )
    _emit(query, doc, table, out)


def _run_vanishing(query: Query, out: IO[str]) -> None:
    max_len = geography.vanishing_max_length(query.surface, query.charge)
    ample = geography.very_ample(query.surface, query.charge)
    doc = {
        "surface": serialize.surface_json(query.surface),
        "charge": query.charge.value,
        "max_length": max_len,
        "very_ample": ample,
    }
    table = (
        serialize.surface_table(query.surface)
        + f"\ncharge: {query.charge.value}"
        + f"\nvanishing holds for pairs of subschemes of length <= {max_len}"
        + f"\nvery ample: {'yes' if ample else 'no'}\n"
    )
    _emit(query, doc, table, out)


def _run_destabilizers(query: Query, out: IO[str]) -> None:
    if query.t2 is None:
        raise ValueError("destabilizers requires --t2 p/q (a positive rational)")
    params = ChargeParams(query.t2, query.charge)
    target = target_class(query.surface)
    candidates = wallsmod.destabilizer_candidates(
        target, params, query.surface, query.rank_cap
    )
    entries = []
    for k in candidates:
        wall = wallsmod.pair_wall(target, k, query.surface, query.charge)
        entries.append({"class": [k.r, k.c, k.s], "wall_t2": serialize.fmt_q(wall)})
    doc = {
        "surface": serialize.surface_json(query.surface),
        "charge": query.charge.value,
        "t2": serialize.fmt_q(query.t2),
        "rank_cap": query.rank_cap,
        "candidates": entries,
    }
    lines = [
        serialize.surface_table(query.surface),
        f"charge: {query.charge.value}",
        f"destabilizer classes at t^2 = {serialize.fmt_q(query.t2)} "
        f"(rank cap {query.rank_cap}):",
    ]
    if entries:
        for e in entries:
            r, c, s = e["class"]
            lines.append(f"  ({r}, {c}, {s})   wall t^2 = {e['wall_t2']}")
    else:
        lines.append("  none")
    _emit(query, doc, "\n".join(lines) + "\n", out)


def _run_chi(query: Query, out: IO[str]) -> None:
    if query.v is None:
        raise ValueError("chi requires --v r,c,s")
    v = query.v
    w = query.w if query.w is not None else v
    chi = euler_pairing(v, w, query.surface)
    doc = {
        "surface": serialize.surface_json(query.surface),
        "v": [v.r, v.c, v.s],
        "w": [w.r, w.c, w.s],
        "chi": chi,
    }
    lines = [
        serialize.surface_table(query.surface),
        f"chi({(v.r, v.c, v.s)}, {(w.r, w.c, w.s)}) = {chi}",
    ]
    if v == w:
        dim = moduli_dimension(v, query.surface)
        doc["moduli_dim"] = dim
        lines.append(f"moduli dimension 2 - chi(v, v) = {dim}")
    _emit(query, doc, "\n".join(lines) + "\n", out)


def _run_bounds(query: Query, out: IO[str]) -> None:
    if query.v is None:
        raise ValueError("bounds requires --v r,c,s (only r and c are used)")
    r, c = query.v.r, query.v.c
    bg = bg_bound(r, c, query.surface)
    sharp = sharp_bound(r, c, query.surface)
    doc = {
        "surface": serialize.surface_json(query.surface),
        "r": r,
        "c": c,
        "bg_bound": serialize.fmt_q(bg),
        "sharp_bound": sharp,
    }
    table = (
        serialize.surface_table(query.surface)
        + f"\nch2 bounds for rank {r}, c1 = {c}H:"
        + f"\n  Bogomolov-Gieseker: {serialize.fmt_q(bg)}"
        + f"\n  sharpened integer bound: {sharp}\n"
    )
    _emit(query, doc, table, out)


def _run_oracle(query: Query, out: IO[str]) -> None:
    target = target_class(query.surface)
    oracle = wallsmod.oracle_walls(
        target, query.surface, query.charge, query.rank_cap, query.margin
    )
    report = wallsmod.chamber_decomposition(query.surface, query.charge)
    chamber_values = [w.t_squared for w in report.walls]
    doc = {
        "surface": serialize.surface_json(query.surface),
        "charge": query.charge.value,
        "rank_cap": query.rank_cap,
        "s_margin": query.margin,
        "floor_t2": serialize.fmt_q(report.floor),
        "oracle_walls_t2": [serialize.fmt_q(x) for x in oracle],
        "matches_chambers": oracle == chamber_values,
    }
    lines = [
        serialize.surface_table(query.surface),
        f"charge: {query.charge.value}",
        f"oracle walls above t^2 = {serialize.fmt_q(report.floor)} "
        f"(rank cap {query.rank_cap}, margin {query.margin}):",
    ]
    for x in oracle:
        lines.append(f"  t^2 = {serialize.fmt_q(x)}")
    lines.append(
        "matches chamber decomposition: "
        + ("yes" if doc["matches_chambers"] else "NO")
    )
    _emit(query, doc, "\n".join(lines) + "\n", out)


_DISPATCH = {
    "surface-info": _run_surface_info,
    "walls": _run_walls,
    "flops": _run_flops,
    "vanishing": _run_vanishing,
    "destabilizers": _run_destabilizers,
    "chi": _run_chi,
    "bounds": _run_bounds,
    "oracle": _run_oracle,
}


def run(query: Query, out: IO[str]) -> int:
    _DISPATCH[query.command](query, out)
    return 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        query = parse_query(argv)
        return run(query, sys.stdout)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except SystemExit as exc:  # argparse has already printed a message
        return int(exc.code or 0)
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
