"""Numerical Chern-character lattice of a Picard-rank-one K-trivial surface.

A surface here is purely numerical data: K3 or abelian, with ample generator
H of the Picard group.  A class is an integer triple (r, c, s) encoding the
Chern character

    ch = (r, c*H, s*pt)

with ch2 measured in point units; s is an honest integer because H^2 is even
(so c^2 * H^2 / 2 is integral) and c_2 is integral.  That integrality is
load-bearing for the sharpened ch2 bounds, which is why everything downstream
works in exact rationals.

The Euler pairing on a K-trivial surface is, by Riemann-Roch,

    chi(v, w) = r_v*s_w + r_w*s_v - c_v*c_w*H^2 + chi(O_S)*r_v*r_w

and moduli dimensions are 2 - chi(v, v).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction


class SurfaceKind(Enum):
    K3 = "k3"
    ABELIAN = "abelian"


@dataclass(frozen=True)
class SurfaceData:
    """Numerical type of the surface.

    ``genus_or_polarization`` is the genus g for K3 (H^2 = 2g - 2) and the
    polarization degree D for abelian surfaces (H^2 = 2D).
    """

    kind: SurfaceKind
    genus_or_polarization: int
    h_squared: int
    chi_structure_sheaf: int

    def __post_init__(self) -> None:
        if self.kind is SurfaceKind.K3:
            expected = 2 * self.genus_or_polarization - 2
            chi = 2
        else:
            expected = 2 * self.genus_or_polarization
            chi = 0
        if self.h_squared != expected:
            raise ValueError(
                f"h_squared={self.h_squared} inconsistent with "
                f"{self.kind.value} parameter {self.genus_or_polarization}"
            )
        if self.h_squared < 2 or self.h_squared % 2 != 0:
            raise ValueError("h_squared must be a positive even integer >= 2")
        if self.chi_structure_sheaf != chi:
            raise ValueError(f"chi(O_S) must be {chi} for a {self.kind.value} surface")


def make_surface(kind: SurfaceKind, parameter: int) -> SurfaceData:
    """Build SurfaceData from the defining parameter (genus g or polarization D)."""
    if kind is SurfaceKind.K3:
        if parameter < 2:
            raise ValueError(f"K3 genus must be >= 2, got {parameter}")
        return SurfaceData(kind, parameter, 2 * parameter - 2, 2)
    if kind is SurfaceKind.ABELIAN:
        if parameter < 1:
            raise ValueError(f"abelian polarization must be >= 1, got {parameter}")
        return SurfaceData(kind, parameter, 2 * parameter, 0)
    raise ValueError(f"unknown surface kind: {kind!r}")


@dataclass(frozen=True)
class CharVector:
    """Chern character (r, c*H, s*pt) on the rank-one lattice.

    Negative ranks are allowed (the shift E[1] negates ch); the bound
    operations below reject them since they apply to sheaves only.
    """

    r: int
    c: int
    s: int

    def __post_init__(self) -> None:
        if self.r == 0 and self.c == 0 and self.s == 0:
            raise ValueError("the zero class is not a valid Chern character")

    def __add__(self, other: "CharVector") -> "CharVector":
        return CharVector(self.r + other.r, self.c + other.c, self.s + other.s)

    def __sub__(self, other: "CharVector") -> "CharVector":
        return CharVector(self.r - other.r, self.c - other.c, self.s - other.s)

    def __neg__(self) -> "CharVector":
        return CharVector(-self.r, -self.c, -self.s)

    def __mul__(self, k: int) -> "CharVector":
        return CharVector(k * self.r, k * self.c, k * self.s)

    __rmul__ = __mul__


def target_class(surf: SurfaceData) -> CharVector:
    """The invariants (0, H, H^2/2) of a line bundle pushed forward from C in |H|."""
    return CharVector(0, 1, surf.h_squared // 2)


def euler_pairing(v: CharVector, w: CharVector, surf: SurfaceData) -> int:
    """chi(v, w) = sum (-1)^i ext^i for classes v, w (symmetric: K_S = 0)."""
    return (
        v.r * w.s
        + w.r * v.s
        - v.c * w.c * surf.h_squared
        + surf.chi_structure_sheaf * v.r * w.r
    )


def moduli_dimension(v: CharVector, surf: SurfaceData) -> int:
    """Expected dimension 2 - chi(v, v) of the moduli of objects of class v."""
    return 2 - euler_pairing(v, v, surf)


def bg_bound(r: int, c: int, surf: SurfaceData) -> Fraction:
    """Bogomolov-Gieseker bound: max ch2 of an H-stable torsion-free sheaf.

    ch2(E) <= c1(E)^2 / (2 rk E), i.e. c^2 H^2 / (2r) in point units.
    """
    if r < 1:
        raise ValueError(f"bg_bound needs a sheaf rank r >= 1, got {r}")
    return Fraction(c * c * surf.h_squared, 2 * r)


def sharp_bound(r: int, c: int, surf: SurfaceData) -> int:
    """Integer ch2 bound refined by chi(E (x) E*) <= 2 on K3.

    On K3 the stable-bundle inequality gives ch2 <= c^2 H^2/(2r) - r + 1/r,
    and ch2 is an integer, so the floor is sharp.  On an abelian surface the
    Riemann-Roch bound is weaker than Bogomolov-Gieseker, so only the
    integrality floor of bg_bound survives.
    """
    if r < 1:
        raise ValueError(f"sharp_bound needs a sheaf rank r >= 1, got {r}")
    bound = bg_bound(r, c, surf)
    if surf.kind is SurfaceKind.K3:
        bound = bound - r + Fraction(1, r)
    return math.floor(bound)
