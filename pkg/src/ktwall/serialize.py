"""Rendering of engine results: exact-rational JSON, text tables, SVG.

Rationals are serialized as strings "p/q" in lowest terms with q > 0;
decimal values of t = sqrt(t^2) appear only as annotations in the text
tables (digit count configurable) and never in JSON, so JSON documents
round-trip exactly.
"""

from __future__ import annotations

import json
import math
from fractions import Fraction
from typing import Any, Optional

from .charge import ChargeKind
from .geography import FlopRecord
from .lattice import CharVector, SurfaceData, SurfaceKind
from .walls import Chamber, ChamberReport, HigherRank, Pairwise, RankOne, Wall

DEFAULT_DIGITS = 6


def fmt_q(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def parse_q(text: str) -> Fraction:
    """Parse "p/q" (or a bare integer) into an exact rational."""
    parts = text.strip().split("/")
    if len(parts) == 1:
        return Fraction(int(parts[0]))
    if len(parts) == 2:
        num, den = int(parts[0]), int(parts[1])
        if den == 0:
            raise ValueError(f"zero denominator in rational {text!r}")
        return Fraction(num, den)
    raise ValueError(f"malformed rational {text!r}")


def fmt_t_approx(t_squared: Fraction, digits: int = DEFAULT_DIGITS) -> str:
    if t_squared < 0:
        raise ValueError("t_squared must be >= 0 for a decimal t annotation")
    return f"{math.sqrt(t_squared):.{digits}f}"


def parse_vector(text: str) -> CharVector:
    parts = text.strip().split(",")
    if len(parts) != 3:
        raise ValueError(f"expected three comma-separated integers, got {text!r}")
    r, c, s = (int(p) for p in parts)
    return CharVector(r, c, s)


def _vec(v: CharVector) -> list[int]:
    return [v.r, v.c, v.s]


def _vec_from(data: Any) -> CharVector:
    return CharVector(int(data[0]), int(data[1]), int(data[2]))


def surface_json(surf: SurfaceData) -> dict:
    return {
        "kind": surf.kind.value,
        "parameter": surf.genus_or_polarization,
        "h_squared": surf.h_squared,
        "chi_structure_sheaf": surf.chi_structure_sheaf,
    }


def surface_from_json(doc: dict) -> SurfaceData:
    from .lattice import make_surface

    return make_surface(SurfaceKind(doc["kind"]), int(doc["parameter"]))


def _label_json(label) -> dict:
    if isinstance(label, RankOne):
        return {"label": "rank-one", "d": label.d}
    if isinstance(label, HigherRank):
        return {"label": "higher-rank", "rank": label.rank}
    if isinstance(label, Pairwise):
        return {"label": "pairwise", "v": _vec(label.v), "w": _vec(label.w)}
    raise ValueError(f"unknown wall label {label!r}")


def _label_from_json(doc: dict):
    name = doc["label"]
    if name == "rank-one":
        return RankOne(int(doc["d"]))
    if name == "higher-rank":
        return HigherRank(int(doc["rank"]))
    if name == "pairwise":
        return Pairwise(_vec_from(doc["v"]), _vec_from(doc["w"]))
    raise ValueError(f"unknown wall label {name!r}")


def wall_json(wall: Wall) -> dict:
    doc = _label_json(wall.label)
    doc["t2"] = fmt_q(wall.t_squared)
    doc["classes"] = [_vec(v) for v in wall.colliding_classes]
    return doc


def wall_from_json(doc: dict) -> Wall:
    return Wall(
        parse_q(doc["t2"]),
        _label_from_json(doc),
        tuple(_vec_from(v) for v in doc["classes"]),
    )


def chamber_json(ch: Chamber) -> dict:
    return {
        "lower_t2": fmt_q(ch.lower),
        "upper_t2": None if ch.upper is None else fmt_q(ch.upper),
        "sample_t2": fmt_q(ch.sample_t_squared),
    }


def chamber_from_json(doc: dict) -> Chamber:
    upper = doc["upper_t2"]
    return Chamber(
        parse_q(doc["lower_t2"]),
        None if upper is None else parse_q(upper),
        parse_q(doc["sample_t2"]),
    )


def report_json(report: ChamberReport) -> dict:
    return {
        "surface": surface_json(report.surface),
        "charge": report.kind.value,
        "floor_t2": fmt_q(report.floor),
        "walls": [wall_json(w) for w in report.walls],
        "chambers": [chamber_json(c) for c in report.chambers],
    }


def report_from_json(doc: dict) -> ChamberReport:
    """Rebuild a chamber report, tolerating unknown keys."""
    return ChamberReport(
        surface=surface_from_json(doc["surface"]),
        kind=ChargeKind(doc["charge"]),
        floor=parse_q(doc["floor_t2"]),
        walls=tuple(wall_from_json(w) for w in doc["walls"]),
        chambers=tuple(chamber_from_json(c) for c in doc["chambers"]),
    )


def flop_json(rec: FlopRecord) -> dict:
    return {
        "d": rec.d,
        "t2": None if rec.t_squared is None else fmt_q(rec.t_squared),
        "ambient_dim": rec.ambient_dim,
        "base_dim": rec.base_dim,
        "fiber_dim": rec.fiber_dim,
        "locus_dim": rec.locus_dim,
        "codim": rec.codim,
        "mukai_flop": rec.mukai_flop,
        "divisorial": rec.divisorial,
    }


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2) + "\n"


# ---------------------------------------------------------------------------
# text tables


def surface_table(surf: SurfaceData) -> str:
    name = "K3" if surf.kind is SurfaceKind.K3 else "abelian"
    param = "genus" if surf.kind is SurfaceKind.K3 else "polarization"
    return (
        f"surface: {name}, {param} {surf.genus_or_polarization} "
        f"(H^2 = {surf.h_squared}, chi(O) = {surf.chi_structure_sheaf})"
    )


def report_table(report: ChamberReport, digits: int = DEFAULT_DIGITS) -> str:
    lines = [surface_table(report.surface), f"charge: {report.kind.value}"]
    lines.append(f"floor: t^2 = {fmt_q(report.floor)}")
    if report.walls:
        lines.append("walls:")
        for w in report.walls:
            lines.append(
                f"  {str(w.label):<10} t^2 = {fmt_q(w.t_squared):<10} "
                f"t ~ {fmt_t_approx(w.t_squared, digits)}"
            )
    else:
        lines.append("walls: none above the floor")
    lines.append("chambers:")
    for ch in report.chambers:
        upper = "inf" if ch.upper is None else fmt_q(ch.upper)
        lines.append(
            f"  ({fmt_q(ch.lower)}, {upper})  sample t^2 = {fmt_q(ch.sample_t_squared)}"
        )
    return "\n".join(lines) + "\n"


def flops_table(
    surf: SurfaceData,
    kind: ChargeKind,
    records: list[FlopRecord],
    count: int,
    formula: Optional[int],
    digits: int = DEFAULT_DIGITS,
) -> str:
    lines = [surface_table(surf), f"charge: {kind.value}"]
    formula_text = "n/a" if formula is None else str(formula)
    lines.append(f"flops: {count} (closed form: {formula_text})")
    lines.append("  d    t^2          ambient  base  fiber  codim  type")
    for rec in records:
        if rec.mukai_flop:
            kind_text = "mukai flop"
        elif rec.divisorial:
            kind_text = "divisorial"
        else:
            kind_text = "degenerate"
        t2 = "-" if rec.t_squared is None else fmt_q(rec.t_squared)
        lines.append(
            f"  {rec.d:<4} {t2:<12} {rec.ambient_dim:<8} {rec.base_dim:<5} "
            f"{rec.fiber_dim:<6} {rec.codim:<6} {kind_text}"
        )
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# SVG number line

_SVG_W = 800
_SVG_H = 160
_AXIS_Y = 110
_X_LEFT = 45
_X_RIGHT = 775


def _svg_x(t2: Fraction, xmax: Fraction) -> str:
    pos = Fraction(_X_LEFT) + (Fraction(_X_RIGHT - _X_LEFT) * t2) / xmax
    return f"{float(pos):.2f}"


def render_svg_text(report: ChamberReport) -> str:
    """Deterministic number-line diagram of the wall structure in t^2."""
    top = report.walls[0].t_squared if report.walls else Fraction(0)
    xmax = max(Fraction(1, 2), top)
    parts = [
        '<?xml version="1.0" encoding="UTF-8"?>\n',
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{_SVG_W}" '
        f'height="{_SVG_H}" viewBox="0 0 {_SVG_W} {_SVG_H}">\n',
        f'<rect x="0" y="0" width="{_SVG_W}" height="{_SVG_H}" fill="white"/>\n',
    ]
    if report.floor > 0:
        parts.append(
            f'<rect x="{_svg_x(Fraction(0), xmax)}" y="{_AXIS_Y - 22}" '
            f'width="{float((Fraction(_X_RIGHT - _X_LEFT) * report.floor) / xmax):.2f}" '
            f'height="44" fill="#d9d9d9"/>\n'
        )
        parts.append(
            f'<text x="{_svg_x(report.floor, xmax)}" y="{_AXIS_Y + 38}" '
            f'font-size="10" text-anchor="middle" fill="#555">'
            f"floor {fmt_q(report.floor)}</text>\n"
        )
    parts.append(
        f'<line x1="{_X_LEFT}" y1="{_AXIS_Y}" x2="{_X_RIGHT}" y2="{_AXIS_Y}" '
        'stroke="black" stroke-width="1.5"/>\n'
    )
    parts.append(
        f'<text x="{_X_LEFT}" y="{_AXIS_Y + 24}" font-size="11" '
        'text-anchor="middle">0</text>\n'
    )
    parts.append(
        f'<text x="{_X_RIGHT}" y="{_AXIS_Y + 24}" font-size="11" '
        f'text-anchor="middle">{fmt_q(xmax)}</text>\n'
    )
    parts.append(
        f'<text x="{(_X_LEFT + _X_RIGHT) // 2}" y="{_SVG_H - 8}" font-size="11" '
        'text-anchor="middle">t^2</text>\n'
    )
    for i, wall in enumerate(report.walls):
        x = _svg_x(wall.t_squared, xmax)
        label_y = 36 if i % 2 == 0 else 58  # stagger to reduce collisions
        parts.append(
            f'<line x1="{x}" y1="{_AXIS_Y - 12}" x2="{x}" y2="{_AXIS_Y + 12}" '
            'stroke="black" stroke-width="1"/>\n'
        )
        parts.append(
            f'<text x="{x}" y="{label_y}" font-size="11" text-anchor="middle">'
            f"{wall.label} ({fmt_q(wall.t_squared)})</text>\n"
        )
        parts.append(
            f'<line x1="{x}" y1="{label_y + 4}" x2="{x}" y2="{_AXIS_Y - 14}" '
            'stroke="#999" stroke-width="0.5"/>\n'
        )
    parts.append("</svg>\n")
    return "".join(parts)


def render_svg(report: ChamberReport, path: str) -> None:
    """Write the diagram to ``path``; byte-identical for identical input."""
    data = render_svg_text(report).encode("utf-8")
    with open(path, "wb") as fh:
        fh.write(data)
