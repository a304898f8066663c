import math

import pytest

from planarium.curves import (
    PRESETS,
    axis_roots,
    count_affine_points,
    get_preset,
    max_q,
    preset_back_multiply,
    preset_curve,
    threshold_degree_check,
    weil_lower_bound,
)
from planarium.errors import CharacteristicMismatch, FieldTooLarge, UnknownPreset, ZeroParameter
from planarium.ffcore import build_field
from planarium.poly import BiPoly


def _brute_count(C):
    F = C.field
    els = list(F.elements())
    total = boundary = 0
    for u in els:
        for v in els:
            if C(u, v).is_zero():
                total += 1
                boundary += u.is_zero() or v.is_zero()
    return total, boundary


@pytest.mark.parametrize("name,p,e", [("G6.B", 5, 2), ("D4.B", 3, 2), ("E10.h", 3, 2), ("G11.h", 5, 1)])
def test_count_matches_brute_force(name, p, e):
    F = build_field(p, e)
    for a in list(F.nonzero())[:4]:
        C = preset_curve(name, F, a)
        rep = count_affine_points(C)
        assert (rep.total_points, rep.boundary_points) == _brute_count(C)
        if rep.nontrivial_witness:
            u, v = rep.nontrivial_witness
            assert C(u, v).is_zero() and not u.is_zero() and not v.is_zero()


def test_d4_over_f3():
    F = build_field(3)
    rep = count_affine_points(preset_curve("D4.B", F, F.one))
    assert rep.total_points == 4 and rep.boundary_points == 4
    assert rep.nontrivial_witness is None


def test_e10_boundary_is_small():
    F = build_field(3, 6)
    rep = count_affine_points(preset_curve("E10.h", F, F.gen))
    assert rep.boundary_points <= get_preset("E10.h").boundary_max
    assert rep.total_points == 889


def test_weil_bound_formula():
    assert weil_lower_bound(25, 4) == 25 - 6 * 5 - 5
    assert math.isclose(weil_lower_bound(2187, 8), 2187 - 42 * math.sqrt(2187) - 9)


def test_threshold_agrees_with_float_away_from_ties():
    for q in [3 ** e for e in range(1, 12)] + [5 ** e for e in range(1, 8)]:
        for deg in (4, 8, 24):
            for bmax in (0, 16, 64):
                w = weil_lower_bound(q, deg)
                if abs(w - bmax) > 1e-6:
                    assert threshold_degree_check(q, deg, bmax) == (w > bmax)


def test_threshold_exact_at_tie():
    # q = 49, d = 3: 49 - 2*7 - 4 = 31 exactly
    assert not threshold_degree_check(49, 3, 31)
    assert threshold_degree_check(49, 3, 30)


def test_e15_threshold_from_degree_24():
    assert threshold_degree_check(3 ** 12, 24, 0)
    assert not threshold_degree_check(3 ** 11, 24, 0)


def test_axis_roots():
    F = build_field(5, 2)
    a = F.from_code(3)
    C = preset_curve("G6.B", F, a)
    roots = axis_roots(C, "x")
    assert len(roots) == 4 and all((r ** 4) == a ** 4 for r in roots)
    assert len(axis_roots(C, "y")) == 4


@pytest.mark.parametrize("name", sorted(PRESETS))
def test_back_multiplication_small(name):
    p = PRESETS[name].p
    F = build_field(p, 2)
    for a in list(F.nonzero())[:3]:
        prod, delta = preset_back_multiply(name, F, a)
        assert prod == delta


def test_preset_errors(monkeypatch):
    F = build_field(3, 2)
    with pytest.raises(UnknownPreset):
        get_preset("nope")
    with pytest.raises(CharacteristicMismatch):
        preset_curve("G6.B", F, F.one)
    with pytest.raises(ZeroParameter):
        preset_curve("E10.h", F, F.zero)
    monkeypatch.setenv("PLANARIUM_MAX_Q", "10")
    assert max_q() == 10
    with pytest.raises(FieldTooLarge):
        F27 = build_field(3, 3)
        count_affine_points(preset_curve("E10.h", F27, F27.one))


def test_allow_large_overrides_cap(monkeypatch):
    monkeypatch.setenv("PLANARIUM_MAX_Q", "10")
    F = build_field(3, 3)
    C = BiPoly(F, {(2, 0): 1, (0, 2): 1, (0, 0): -1})
    assert count_affine_points(C, allow_large=True).total_points == _brute_count(C)[0]


def test_weil_bound_low_degrees():
    assert weil_lower_bound(81, 2) == 81 - 3
    assert weil_lower_bound(625, 4) == 625 - 6 * 25 - 5


def test_d4_curve_form():
    F = build_field(3, 2)
    a = F.gen
    assert preset_curve("D4.B", F, a) == BiPoly(F, {(2, 0): 1, (0, 2): 1, (0, 0): -(a * a)})


def test_e10_axis_roots_at_a1():
    # h(X, 0) = 2X^8 + X^2 = X^2 (1 + X)^3 (1 - X)^3
    F = build_field(3)
    C = preset_curve("E10.h", F, F.one)
    assert C.substitute_y(F.zero) == BiPoly(F, {(8, 0): 2, (2, 0): 1}).substitute_y(F.zero)
    assert len(axis_roots(C, "x")) == 3 and len(axis_roots(C, "y")) == 3


@pytest.mark.parametrize("e", [1, 3, 5])
def test_e15_axis_has_no_roots_in_odd_degree(e):
    # h(X, 0) = X^24 + 1 at a = 1
    F = build_field(3, e)
    C = preset_curve("E15.h1", F, F.one)
    uni = C.substitute_y(F.zero)
    assert uni.exponents() == [0, 24]
    assert axis_roots(C, "x") == []


@pytest.mark.parametrize("name,p,emax", [("E10.h", 3, 6), ("G11.h", 5, 2), ("G6.B", 5, 2), ("D4.B", 3, 4)])
def test_witness_makes_parent_nonplanar(name, p, emax):
    from planarium.planarity import is_planar_delta
    pr = get_preset(name)
    for e in range(1, emax + 1):
        F = build_field(p, e)
        for a in list(F.nonzero())[:2]:
            rep = count_affine_points(preset_curve(name, F, a))
            assert (rep.nontrivial_witness is not None) == (rep.total_points > rep.boundary_points)
            if rep.nontrivial_witness is None:
                continue
            u, v = rep.nontrivial_witness
            f = pr.parent(a)
            assert (f(u + v) - f(u) - f(v)).is_zero()
            assert not is_planar_delta(f).planar
