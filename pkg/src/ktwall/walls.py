"""Walls and chambers in t^2 for the invariants (0, H, H^2/2).

A wall is a value of t^2 where two slopes collide.  Since Re Z is affine in
t^2 and Im Z is t times a constant, slope equality is a linear equation in
t^2 and every wall is rational.

Three mechanisms feed the chamber picture:

* the rank-one series, where a twisted ideal sheaf I_Z(H) of length d reaches
  slope zero against the target invariants;
* higher odd-rank thresholds, where a rank-(2n+1) class with c1 = (n+1)H and
  maximal allowed ch2 reaches Re = 0 -- the first of these (rank three) caps
  the region where the rank-one picture is complete;
* the slope-function validity floor of the charge itself.

`chamber_decomposition` assembles the rank-one walls above the combined
floor; `oracle_walls` re-derives the wall set by brute-force enumeration of
destabilizer classes so tests can confirm nothing is missing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Union

from .charge import ChargeKind, ChargeParams, central_charge, charge_line, slope_function_floor
from .lattice import (
    CharVector,
    SurfaceData,
    SurfaceKind,
    bg_bound,
    sharp_bound,
    target_class,
)
import math


@dataclass(frozen=True)
class RankOne:
    d: int

    def sort_key(self) -> tuple:
        return (0, self.d)

    def __str__(self) -> str:
        return f"d={self.d}"


@dataclass(frozen=True)
class HigherRank:
    rank: int

    def sort_key(self) -> tuple:
        return (1, self.rank)

    def __str__(self) -> str:
        return f"rank={self.rank}"


@dataclass(frozen=True)
class Pairwise:
    v: CharVector
    w: CharVector

    def sort_key(self) -> tuple:
        return (2, (self.v.r, self.v.c, self.v.s), (self.w.r, self.w.c, self.w.s))

    def __str__(self) -> str:
        return f"pair={self.v}|{self.w}"


WallLabel = Union[RankOne, HigherRank, Pairwise]


@dataclass(frozen=True)
class Wall:
    t_squared: Fraction
    label: WallLabel
    colliding_classes: tuple[CharVector, ...]


@dataclass(frozen=True)
class Chamber:
    lower: Fraction
    upper: Optional[Fraction]  # None = unbounded above
    sample_t_squared: Fraction


@dataclass(frozen=True)
class ChamberReport:
    surface: SurfaceData
    kind: ChargeKind
    floor: Fraction
    walls: tuple[Wall, ...]
    chambers: tuple[Chamber, ...]


class _Proportional:
    """Distinct pair_wall outcome: slopes agree identically in t."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "PROPORTIONAL"


PROPORTIONAL = _Proportional()


def pair_wall(
    v: CharVector, w: CharVector, surf: SurfaceData, kind: ChargeKind
) -> Union[Fraction, _Proportional, None]:
    """Solve the slope equality of v and w for t^2.

    Returns the unique positive solution strictly above the slope-function
    floor, PROPORTIONAL when the slopes agree for every t (proportional
    classes, or two infinite-slope classes), and None otherwise.
    """
    a_v, b_v, im_v = charge_line(v, kind, surf)
    a_w, b_w, im_w = charge_line(w, kind, surf)
    if im_v < 0 or im_w < 0:
        raise ValueError("pair_wall requires heart-compatible classes (Im >= 0)")
    # (a_v + b_v x) im_w = (a_w + b_w x) im_v, linear in x = t^2.
    coeff = b_v * im_w - b_w * im_v
    const = a_v * im_w - a_w * im_v
    if coeff == 0:
        return PROPORTIONAL if const == 0 else None
    x = -const / coeff
    floor = slope_function_floor(surf, kind)
    if x <= 0 or x <= floor:
        return None
    return x


def rank_one_wall_value(d: int, surf: SurfaceData, kind: ChargeKind) -> Fraction:
    """Closed form for the t^2 at which length-d twisted ideal sheaves collide
    with the target invariants: 1/4 - 2d/H^2, improved on K3 by the twist to
    ((g+3)/4 - d)/(g-1)."""
    if d < 0:
        raise ValueError("wall index d must be >= 0")
    h2 = surf.h_squared
    if kind is ChargeKind.TWISTED and surf.kind is SurfaceKind.K3:
        g = surf.genus_or_polarization
        return (Fraction(g + 3, 4) - d) / (g - 1)
    return Fraction(1, 4) - Fraction(2 * d, h2)


def ideal_sheaf_class(d: int, surf: SurfaceData) -> CharVector:
    """Class (1, 1, H^2/2 - d) of I_Z(H) for len(Z) = d."""
    return CharVector(1, 1, surf.h_squared // 2 - d)


def _rank_one_wall(d: int, t2: Fraction, surf: SurfaceData) -> Wall:
    ideal = ideal_sheaf_class(d, surf)
    complement = target_class(surf) - ideal  # shifted derived dual side
    return Wall(t2, RankOne(d), (target_class(surf), ideal, complement))


def rank_threshold(n: int, surf: SurfaceData, kind: ChargeKind) -> Fraction:
    """Largest t^2 where a rank-(2n+1), c1 = (n+1)H class of maximal allowed
    ch2 reaches Re Z = 0.

    The naive charge uses the exact Bogomolov-Gieseker bound, giving the
    closed form 1/(4(2n+1)^2) on every surface; the twisted charge on K3 uses
    the integral sharpened bound instead.  May be <= 0 (no positive-t wall).
    """
    if n < 1:
        raise ValueError("rank index n must be >= 1")
    r, c = 2 * n + 1, n + 1
    if kind is ChargeKind.TWISTED and surf.kind is SurfaceKind.K3:
        s_max = Fraction(sharp_bound(r, c, surf))
    else:
        s_max = bg_bound(r, c, surf)
    probe = CharVector(r, c, 0)
    a, b, _ = charge_line(probe, kind, surf)
    # Re(t^2) at ch2 = s_max is (a - s_max) + b t^2; b = r H^2 / 2 > 0.
    return (s_max - a) / b


def higher_rank_floor(surf: SurfaceData, kind: ChargeKind) -> Fraction:
    """Largest higher odd-rank threshold over all n >= 1.

    Every threshold is bounded by (1/4 + 2/H^2)/(2n+1)^2, strictly decreasing
    in n, so the scan stops once that envelope drops below the best value
    found.  Rank three wins except on the genus-2 K3 with the twisted charge,
    where the integral bound pushes the rank-3 value negative and rank 5
    takes over (still far below the slope-function floor there).
    """
    envelope_scale = Fraction(1, 4) + Fraction(2, surf.h_squared)
    best = rank_threshold(1, surf, kind)
    n = 2
    while envelope_scale / (2 * n + 1) ** 2 > best:
        best = max(best, rank_threshold(n, surf, kind))
        n += 1
        if n > 64:  # all thresholds non-positive; nothing above t = 0 anyway
            break
    return best


def _validity_floor(surf: SurfaceData, kind: ChargeKind) -> Fraction:
    return max(Fraction(0), slope_function_floor(surf, kind), higher_rank_floor(surf, kind))


def rank_one_walls(surf: SurfaceData, kind: ChargeKind) -> list[Wall]:
    """All rank-one walls strictly above the validity floor, descending."""
    threshold = _validity_floor(surf, kind)
    walls = []
    d = 0
    while True:
        t2 = rank_one_wall_value(d, surf, kind)
        if t2 <= threshold:
            break
        walls.append(_rank_one_wall(d, t2, surf))
        d += 1
    return walls


def higher_rank_walls(
    surf: SurfaceData, kind: ChargeKind, max_n: int = 3
) -> list[Wall]:
    """Threshold records for ranks 3, 5, ... as Wall values (may sit at or
    below the validity floor; informational, never merged into rank-one
    records even when the t^2 values coincide)."""
    walls = []
    for n in range(1, max_n + 1):
        t2 = rank_threshold(n, surf, kind)
        if t2 <= 0:
            continue
        r, c = 2 * n + 1, n + 1
        if kind is ChargeKind.TWISTED and surf.kind is SurfaceKind.K3:
            s = sharp_bound(r, c, surf)
        else:
            s = math.floor(bg_bound(r, c, surf))
        walls.append(Wall(t2, HigherRank(r), (target_class(surf), CharVector(r, c, s))))
    walls.sort(key=lambda w: (-w.t_squared,) + w.label.sort_key())
    return walls


def chamber_decomposition(surf: SurfaceData, kind: ChargeKind) -> ChamberReport:
    """Rank-one walls above the validity floor plus the open chambers between
    them, each with an exact interior sample point (arithmetic midpoint; the
    unbounded top chamber samples at top wall + 1)."""
    floor = max(slope_function_floor(surf, kind), higher_rank_floor(surf, kind))
    floor = max(floor, Fraction(0))
    walls = rank_one_walls(surf, kind)
    chambers = []
    if not walls:
        chambers.append(Chamber(floor, None, floor + 1))
    else:
        chambers.append(Chamber(walls[0].t_squared, None, walls[0].t_squared + 1))
        for above, below in zip(walls, walls[1:]):
            mid = (above.t_squared + below.t_squared) / 2
            chambers.append(Chamber(below.t_squared, above.t_squared, mid))
        last = walls[-1].t_squared
        chambers.append(Chamber(floor, last, (floor + last) / 2))
    return ChamberReport(surf, kind, floor, tuple(walls), tuple(chambers))


def _candidate_bound(r: int, c: int, kind: ChargeKind, surf: SurfaceData) -> int:
    """Max integer ch2 of an H-stable destabilizer class for the given kind."""
    if kind is ChargeKind.TWISTED:
        return sharp_bound(r, c, surf)
    return math.floor(bg_bound(r, c, surf))


def destabilizer_candidates(
    target: CharVector,
    p: ChargeParams,
    surf: SurfaceData,
    rank_cap: int = 9,
) -> list[CharVector]:
    """Classes (2n+1, n+1, s) numerically able to destabilize the target at
    the given t^2, i.e. whose wall against the target lies strictly above it
    (equivalently Re Z < 0 there).  Rank-one entries are the twisted ideal
    sheaves I_Y(H) with d' = H^2/2 - s.
    """
    if target != target_class(surf):
        raise ValueError(
            f"destabilizer analysis only covers the invariants {target_class(surf)}"
        )
    if rank_cap < 1 or rank_cap % 2 == 0:
        raise ValueError(f"rank_cap must be a positive odd integer, got {rank_cap}")
    if p.t_squared <= slope_function_floor(surf, p.kind):
        raise ValueError(
            "t_squared must exceed the slope-function floor "
            f"{slope_function_floor(surf, p.kind)}"
        )
    found = []
    n = 0
    while 2 * n + 1 <= rank_cap:
        r, c = 2 * n + 1, n + 1
        s_hi = _candidate_bound(r, c, p.kind, surf)
        probe = CharVector(r, c, 0)
        a, b, im = charge_line(probe, p.kind, surf)
        assert im > 0
        # Re < 0 at t^2 means s > a + b t^2 (strictly).
        s_crit = a + b * p.t_squared
        s_lo = math.floor(s_crit) + 1
        for s in range(s_lo, s_hi + 1):
            found.append(CharVector(r, c, s))
        n += 1
    walls = {k: pair_wall(target, k, surf, p.kind) for k in found}
    found.sort(key=lambda k: (-walls[k], k.r, k.c, k.s))
    return found


def oracle_walls(
    target: CharVector,
    surf: SurfaceData,
    kind: ChargeKind,
    rank_cap: int = 9,
    s_margin: int = 3,
    floor: Optional[Fraction] = None,
) -> list[Fraction]:
    """Brute-force wall set: pair_wall of the target against every odd-rank
    class (2n+1, c = n or n+1, s <= ch2 bound), descending, filtered above
    ``floor`` (the validity floor by default; pass 0 to see below it).

    For fixed (r, c) the wall is linear increasing in s, so the scan walks s
    downward and stops once ``s_margin`` + 1 consecutive values produce
    nothing above the floor.
    """
    if target != target_class(surf):
        raise ValueError(
            f"destabilizer analysis only covers the invariants {target_class(surf)}"
        )
    if rank_cap < 1 or rank_cap % 2 == 0:
        raise ValueError(f"rank_cap must be a positive odd integer, got {rank_cap}")
    if s_margin < 0:
        raise ValueError("s_margin must be >= 0")
    if floor is None:
        floor = _validity_floor(surf, kind)
    walls: set[Fraction] = set()
    n = 0
    while 2 * n + 1 <= rank_cap:
        r = 2 * n + 1
        for c in (n, n + 1):
            _, _, im = charge_line(CharVector(r, c, 0), kind, surf)
            shift = im < 0  # c = n side sits in the heart only after [1]
            s = _candidate_bound(r, c, kind, surf)
            misses = 0
            while misses <= s_margin:
                k = CharVector(r, c, s)
                res = pair_wall(target, -k if shift else k, surf, kind)
                if isinstance(res, Fraction) and res > floor:
                    walls.add(res)
                    misses = 0
                else:
                    misses += 1
                s -= 1
        n += 1
    return sorted(walls, reverse=True)
