import random
from fractions import Fraction

import pytest

from ktwall import (
    CharVector,
    ChargeKind,
    ChargeParams,
    ObjectClass,
    Ordering,
    SurfaceKind,
    central_charge,
    make_surface,
    slope_compare,
    slope_function_floor,
    verify_positivity,
)

N, T = ChargeKind.NAIVE, ChargeKind.TWISTED


def k3(g):
    return make_surface(SurfaceKind.K3, g)


def ab(d):
    return make_surface(SurfaceKind.ABELIAN, d)


def test_charge_params_requires_positive_t2():
    with pytest.raises(ValueError):
        ChargeParams(Fraction(0), N)
    with pytest.raises(ValueError):
        ChargeParams(Fraction(-1, 4), T)


def test_central_charge_ideal_sheaf():
    # I_Z(H) with len(Z) = d: Re = d + (H^2/2)(t^2 - 1/4), Im/t = H^2/2.
    s = k3(7)
    for d in (0, 1, 3):
        for t2 in (Fraction(1, 10), Fraction(1, 4), Fraction(2)):
            z = central_charge(CharVector(1, 1, 6 - d), ChargeParams(t2, N), s)
            assert z.re == d + 6 * (t2 - Fraction(1, 4))
            assert z.im_over_t == 6


def test_central_charge_point_class():
    z = central_charge(CharVector(0, 0, 1), ChargeParams(Fraction(1, 2), N), k3(4))
    assert z.re == -1
    assert z.im_over_t == 0
    assert z.infinite_slope


def test_central_charge_target_class():
    # Re Z = 0 for all t; Im/t = H^2 (the two wall constituents contribute
    # H^2/2 each).
    for surf in (k3(7), ab(5)):
        v = CharVector(0, 1, surf.h_squared // 2)
        for kind in (N, T):
            z = central_charge(v, ChargeParams(Fraction(3, 7), kind), surf)
            assert z.re == 0
            assert z.im_over_t == surf.h_squared


def _random_class(rng):
    while True:
        triple = (rng.randint(-4, 4), rng.randint(-4, 4), rng.randint(-9, 9))
        if triple != (0, 0, 0):
            return CharVector(*triple)


def test_twist_subtracts_rank_on_k3():
    rng = random.Random(5)
    s = k3(6)
    for _ in range(100):
        v = _random_class(rng)
        t2 = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        zn = central_charge(v, ChargeParams(t2, N), s)
        zt = central_charge(v, ChargeParams(t2, T), s)
        assert zt.re - zn.re == -v.r
        assert zt.im_over_t == zn.im_over_t


def test_twist_is_identity_on_abelian():
    rng = random.Random(6)
    s = ab(4)
    for _ in range(100):
        v = _random_class(rng)
        t2 = Fraction(rng.randint(1, 30), rng.randint(1, 30))
        assert central_charge(v, ChargeParams(t2, N), s) == central_charge(
            v, ChargeParams(t2, T), s
        )


def test_re_affine_in_t2():
    # Strictly increasing for r > 0, constant for r = 0.
    s = k3(5)
    lo, hi = ChargeParams(Fraction(1, 9), N), ChargeParams(Fraction(5, 9), N)
    assert central_charge(CharVector(2, 1, 0), lo, s).re < central_charge(
        CharVector(2, 1, 0), hi, s
    ).re
    assert central_charge(CharVector(0, 1, 3), lo, s).re == central_charge(
        CharVector(0, 1, 3), hi, s
    ).re


def test_slope_compare_wall_crossing():
    # O_S(H) against the pushforward of O_C(H): greater below t^2 = 1/4,
    # equal at the wall, less above.
    s = k3(7)
    line = CharVector(1, 1, 6)
    tgt = CharVector(0, 1, 6)
    assert slope_compare(line, tgt, ChargeParams(Fraction(1, 5), N), s) is Ordering.GREATER
    assert slope_compare(line, tgt, ChargeParams(Fraction(1, 4), N), s) is Ordering.EQUAL
    assert slope_compare(line, tgt, ChargeParams(Fraction(1, 3), N), s) is Ordering.LESS


def test_slope_compare_infinite_slope():
    s = k3(3)
    p = ChargeParams(Fraction(1, 7), N)
    point = CharVector(0, 0, 1)
    finite = CharVector(0, 1, 2)
    assert slope_compare(point, finite, p, s) is Ordering.GREATER
    assert slope_compare(finite, point, p, s) is Ordering.LESS
    assert slope_compare(point, 3 * point, p, s) is Ordering.EQUAL


def test_slope_compare_rejects_non_heart_classes():
    s = k3(3)
    p = ChargeParams(Fraction(1, 7), N)
    with pytest.raises(ValueError):
        slope_compare(CharVector(1, 0, 0), CharVector(0, 1, 2), p, s)  # Im < 0
    with pytest.raises(ValueError):
        slope_compare(CharVector(0, 0, -1), CharVector(0, 1, 2), p, s)  # Im=0, Re>0


def _heart_classes(rng, surf, p, count):
    out = []
    while len(out) < count:
        triple = (rng.randint(-5, 5), rng.randint(-5, 5), rng.randint(-15, 15))
        if triple == (0, 0, 0):
            continue
        v = CharVector(*triple)
        z = central_charge(v, p, surf)
        if z.im_over_t > 0 or (z.im_over_t == 0 and z.re < 0):
            out.append(v)
    return out


def test_slope_compare_antisymmetry_and_scaling():
    rng = random.Random(20240812)
    flip = {Ordering.LESS: Ordering.GREATER, Ordering.GREATER: Ordering.LESS, Ordering.EQUAL: Ordering.EQUAL}
    for surf, kind in [(k3(4), N), (k3(9), T), (ab(3), N)]:
        for _ in range(200):
            t2 = Fraction(rng.randint(1, 40), rng.randint(1, 40))
            p = ChargeParams(t2, kind)
            v, w = _heart_classes(rng, surf, p, 2)
            got = slope_compare(v, w, p, surf)
            assert slope_compare(w, v, p, surf) is flip[got]
            k, m = rng.randint(1, 4), rng.randint(1, 4)
            assert slope_compare(k * v, m * w, p, surf) is got


def test_positivity_torsion_classes():
    s = k3(5)
    p = ChargeParams(Fraction(1, 11), N)
    assert verify_positivity(CharVector(0, 0, 4), ObjectClass.TORSION0, p, s)
    assert verify_positivity(CharVector(0, 2, -3), ObjectClass.TORSION1, p, s)
    with pytest.raises(ValueError):
        verify_positivity(CharVector(1, 0, 1), ObjectClass.TORSION0, p, s)


def test_positivity_stable_above():
    s = ab(2)
    p = ChargeParams(Fraction(1, 3), N)
    assert verify_positivity(CharVector(3, 2, 0), ObjectClass.STABLE_ABOVE, p, s)
    with pytest.raises(ValueError):
        verify_positivity(CharVector(2, 1, 0), ObjectClass.STABLE_ABOVE, p, s)


def test_positivity_below_tilt_strict():
    s = ab(2)
    assert verify_positivity(
        CharVector(3, 1, 0),
        ObjectClass.STABLE_BELOW_SHIFTED,
        ChargeParams(Fraction(1, 100), N),
        s,
    )


def test_positivity_boundary_even_genus_twisted():
    # Rank-two tilt-boundary classes: false exactly at t^2 = 1/(2 H^2),
    # true above; odd genus is positive for every t > 0.
    for g in (2, 4, 10):
        s = k3(g)
        boundary = Fraction(1, 2 * s.h_squared)
        v = CharVector(2, 1, 0)
        assert not verify_positivity(
            v, ObjectClass.STABLE_BELOW_SHIFTED, ChargeParams(boundary, T), s
        )
        assert verify_positivity(
            v,
            ObjectClass.STABLE_BELOW_SHIFTED,
            ChargeParams(boundary + Fraction(1, 1000), T),
            s,
        )
    for g in (3, 5, 9):
        s = k3(g)
        for t2 in (Fraction(1, 1000), Fraction(1, 36), Fraction(2)):
            assert verify_positivity(
                CharVector(2, 1, 0),
                ObjectClass.STABLE_BELOW_SHIFTED,
                ChargeParams(t2, T),
                s,
            )


def test_positivity_naive_tilt_boundary_any_positive_t():
    for surf in (k3(2), k3(6), ab(1)):
        for t2 in (Fraction(1, 977), Fraction(1, 36), Fraction(3)):
            assert verify_positivity(
                CharVector(2, 1, 0),
                ObjectClass.STABLE_BELOW_SHIFTED,
                ChargeParams(t2, N),
                surf,
            )


def test_slope_function_floor():
    assert slope_function_floor(k3(2), T) == Fraction(1, 4)
    assert slope_function_floor(k3(4), T) == Fraction(1, 12)
    assert slope_function_floor(k3(7), T) == 0
    assert slope_function_floor(k3(7), N) == 0
    assert slope_function_floor(ab(5), T) == 0
    assert slope_function_floor(ab(5), N) == 0
