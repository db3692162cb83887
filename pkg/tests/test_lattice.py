import math
import random
from fractions import Fraction

import pytest

from ktwall import (
    CharVector,
    SurfaceKind,
    bg_bound,
    euler_pairing,
    make_surface,
    moduli_dimension,
    sharp_bound,
    target_class,
)


def k3(g):
    return make_surface(SurfaceKind.K3, g)


def ab(d):
    return make_surface(SurfaceKind.ABELIAN, d)


def test_make_surface_k3():
    s = k3(7)
    assert s.h_squared == 12
    assert s.chi_structure_sheaf == 2
    assert s.genus_or_polarization == 7


def test_make_surface_abelian():
    s = ab(5)
    assert s.h_squared == 10
    assert s.chi_structure_sheaf == 0


@pytest.mark.parametrize("kind,param", [(SurfaceKind.K3, 1), (SurfaceKind.K3, 0), (SurfaceKind.ABELIAN, 0)])
def test_make_surface_rejects_below_minimum(kind, param):
    with pytest.raises(ValueError):
        make_surface(kind, param)


def test_zero_class_rejected():
    with pytest.raises(ValueError):
        CharVector(0, 0, 0)


def test_target_class():
    assert target_class(k3(7)) == CharVector(0, 1, 6)
    assert target_class(ab(5)) == CharVector(0, 1, 5)


def test_euler_pairing_target_k3():
    s = k3(7)
    v = CharVector(0, 1, 6)
    assert euler_pairing(v, v, s) == -12  # -H^2
    assert moduli_dimension(v, s) == 14  # 2 + H^2


def test_euler_pairing_ideal_sheaf():
    # chi(O_S, I_Z) for d points equals chi(O_S) - d on any surface.
    for d in range(8):
        assert euler_pairing(CharVector(1, 0, 0), CharVector(1, 0, -d), k3(7)) == 2 - d
        assert euler_pairing(CharVector(1, 0, 0), CharVector(1, 0, -d), ab(5)) == 0 - d


def test_euler_pairing_abelian_target():
    s = ab(5)
    for sval in (-2, 0, 5, 9):
        v = CharVector(0, 1, sval)
        assert euler_pairing(v, v, s) == -10
        assert moduli_dimension(v, s) == 12  # 2D + 2


def test_moduli_dimension_hilbert_scheme():
    # Ideal sheaves of d points on K3: hom = ext^2 = 1 and ext^1 = 2d.
    for g in (2, 3, 7, 11):
        for d in range(11):
            assert moduli_dimension(CharVector(1, 0, -d), k3(g)) == 2 * d


def _random_vectors(rng, count):
    for _ in range(count):
        triple = (rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-20, 20))
        if triple != (0, 0, 0):
            yield CharVector(*triple)


def test_euler_pairing_symmetric_and_bilinear():
    rng = random.Random(20240811)
    surfaces = [k3(2), k3(5), k3(9), ab(1), ab(6)]
    vecs = list(_random_vectors(rng, 60))
    for s in surfaces:
        for i in range(0, len(vecs) - 2, 3):
            v, w, u = vecs[i], vecs[i + 1], vecs[i + 2]
            assert euler_pairing(v, w, s) == euler_pairing(w, v, s)
            a, b = rng.randint(-3, 3), rng.randint(-3, 3)
            parts = (a * v.r + b * w.r, a * v.c + b * w.c, a * v.s + b * w.s)
            if parts == (0, 0, 0):
                continue
            combo = CharVector(*parts)
            assert euler_pairing(combo, u, s) == a * euler_pairing(
                v, u, s
            ) + b * euler_pairing(w, u, s)


def test_moduli_dimension_even():
    rng = random.Random(77)
    for s in (k3(4), ab(3)):
        for v in _random_vectors(rng, 200):
            assert moduli_dimension(v, s) % 2 == 0


def test_bg_bound_values():
    assert bg_bound(3, 2, k3(7)) == 8  # 4*12/6
    assert bg_bound(1, 1, k3(7)) == 6  # H^2/2, attained by O_S(H)
    assert bg_bound(3, 2, ab(5)) == Fraction(20, 3)


def test_bg_bound_rejects_nonpositive_rank():
    with pytest.raises(ValueError):
        bg_bound(0, 1, k3(3))
    with pytest.raises(ValueError):
        sharp_bound(-1, 1, k3(3))


def test_sharp_bound_rank3():
    # floor(c^2 H^2/(2r) - r + 1/r) reproduces floor(4g/3 - 4) at (r, c) = (3, 2).
    for g in (3, 7, 12, 20):
        s = k3(g)
        assert sharp_bound(3, 2, s) == math.floor(Fraction(4 * g, 3) - 4)
    assert sharp_bound(3, 2, k3(7)) == 5


def test_sharp_bound_rank2_odd_genus_drops_half():
    for g in (3, 5, 7, 13):
        assert sharp_bound(2, 1, k3(g)) == (g - 1) // 2 - 2


def test_sharp_bound_abelian_is_bg_floor():
    assert sharp_bound(3, 2, ab(5)) == 6
    for d in range(1, 12):
        for r, c in [(1, 1), (2, 1), (3, 2), (5, 3)]:
            assert sharp_bound(r, c, ab(d)) == math.floor(bg_bound(r, c, ab(d)))


def test_sharp_at_most_bg_with_k3_gap():
    for g in (2, 4, 7, 15):
        s = k3(g)
        for r in range(1, 8):
            for c in range(-4, 5):
                sharp = sharp_bound(r, c, s)
                bg = bg_bound(r, c, s)
                assert sharp <= bg
                assert bg - sharp >= r - Fraction(1, r)
