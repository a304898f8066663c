"""Affine point counts on difference-function curves and the Weil lower bound.

Presets are the factors h (or B) of Delta_f = cofactor * h for the hat
polynomials whose planarity is settled by counting points.  Each preset
records its parent (k, m, d, p) and its cofactor so that the factorisation
can be checked by multiplying back.
"""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from typing import Callable

import numpy as np

from .errors import FieldTooLarge, UnknownPreset, ZeroParameter
from .ffcore import Elem, FieldCtx
from .poly import BiPoly, UniPoly, difference_poly
from .rdp import hat_poly

# Grid sizes above this many points need ``allow_large=True``.
DEFAULT_MAX_Q = 3 ** 8
_ROW_BLOCK = 1 << 21


@dataclass
class CurveCountReport:
    total_points: int
    boundary_points: int
    weil_bound: float
    degree: int
    nontrivial_witness: tuple[Elem, Elem] | None = None

    def to_dict(self) -> dict:
        return {
            "total_points": self.total_points,
            "boundary_points": self.boundary_points,
            "weil_bound": self.weil_bound,
            "degree": self.degree,
            "nontrivial_witness": [str(w) for w in self.nontrivial_witness] if self.nontrivial_witness else None,
        }


def weil_lower_bound(q: int, total_degree: int) -> float:
    """q - (d-1)(d-2) sqrt(q) - d - 1."""
    d = total_degree
    root = math.isqrt(q)
    sq = float(root) if root * root == q else math.sqrt(q)
    return q - (d - 1) * (d - 2) * sq - d - 1


def threshold_degree_check(q: int, total_degree: int, boundary_max: int) -> bool:
    """Exact test of weil_lower_bound(q, d) > boundary_max.

    Compares q - d - 1 - boundary_max > (d-1)(d-2) sqrt(q) in integers.
    """
    d = total_degree
    lhs = q - d - 1 - boundary_max
    c = (d - 1) * (d - 2)
    if c == 0:
        return lhs > 0
    if lhs <= 0:
        return False
    return lhs * lhs > c * c * q


def max_q() -> int:
    env = os.environ.get("PLANARIUM_MAX_Q")
    return int(env) if env else DEFAULT_MAX_Q


def count_affine_points(F: BiPoly, field: FieldCtx | None = None, allow_large: bool = False) -> CurveCountReport:
    """Exhaustive count of zeros of F on F_q x F_q.

    The witness is the first zero with u, v both nonzero in (u, v)
    enumeration order.
    """
    fld = F.field
    q = fld.q
    if q > max_q() and not allow_large:
        raise FieldTooLarge(f"q={q} exceeds the point-counting cap {max_q()} (set PLANARIUM_MAX_Q or allow_large)")
    codes = fld.all_codes
    # F(u, v) = sum_i u^i P_i(v)
    parts = [(i, P.values()) for i, P in F.x_polys().items()]
    total = 0
    boundary = 0
    witness = None
    for start, us, zero in _zero_rows(fld, parts, codes):
        total += int(zero.sum())
        # axis points: the v == 0 column, plus the u == 0 row
        boundary += int(zero[:, 0].sum())
        if start == 0:
            boundary += int(zero[0, 1:].sum())
        if witness is None:
            inner = zero.copy()
            inner[:, 0] = False
            if start == 0:
                inner[0, :] = False
            hits = np.argwhere(inner)
            if hits.size:
                r, c = hits[0]
                witness = (fld.from_code(int(us[r])), fld.from_code(int(c)))
    deg = F.total_degree
    return CurveCountReport(total, boundary, weil_lower_bound(q, deg), deg, witness)


def _zero_rows(fld: FieldCtx, parts, codes):
    """Yield (start, u block, boolean zero mask of shape (len(u), q))."""
    q = fld.q
    # multiplication by u^i acts as an F_p-linear map on coordinates
    e, p = fld.e, fld.p
    pdigits = [(i, fld.digits(pv)) for i, pv in parts]
    rows = max(1, _ROW_BLOCK // (q * e))
    for start in range(0, q, rows):
        us = codes[start:start + rows]
        acc = np.zeros((us.size, q, e), dtype=np.int64)
        for i, pd in pdigits:
            mats = fld.mul_matrices(fld.vpow(us, i))
            acc += np.einsum("rab,qb->rqa", mats, pd)
        yield start, us, ~(acc % p).any(axis=2)


def axis_roots(F: BiPoly, axis: str = "x") -> list[Elem]:
    """Roots of F(X, 0) (axis 'x') or F(0, Y) (axis 'y') in F_q."""
    fld = F.field
    uni = F.substitute_y(fld.zero) if axis == "x" else F.substitute_x(fld.zero)
    return [fld.from_code(int(c)) for c in np.nonzero(uni.values() == 0)[0]]


# -- presets --------------------------------------------------------------------

@dataclass(frozen=True)
class Preset:
    name: str
    k: int
    m: int
    d: int
    p: int
    curve: Callable[[FieldCtx, Elem], BiPoly]
    cofactors: Callable[[FieldCtx, Elem], list[BiPoly]]
    fixed_a: int | None = None
    boundary_max: int | None = None
    note: str = ""

    def parent(self, a: Elem) -> UniPoly:
        return hat_poly(self.k, self.m, self.d, a)


def _bp(field: FieldCtx, terms) -> BiPoly:
    return BiPoly(field, terms)


def _xy(field, a):
    return [BiPoly.x(field), BiPoly.y(field)]


def _d4_curve(F, a):
    # B = X^2 + Y^2 - a^2
    return _bp(F, {(2, 0): 1, (0, 2): 1, (0, 0): -(a ** 2)})


def _d4_cof(F, a):
    # Delta = 2 X Y B over F_3
    return [BiPoly.const(F, 2), BiPoly.x(F), BiPoly.y(F)]


def _e10_curve(F, a):
    # h = 2(X^8 + Y^8) - a^4 X^2 Y^2 + a^6 (X^2 + Y^2)
    return _bp(F, {(8, 0): 2, (0, 8): 2, (2, 2): -(a ** 4), (2, 0): a ** 6, (0, 2): a ** 6})


def _e15_curve(F, a):
    terms = {(24 - 2 * i, 2 * i): (-1) ** i for i in range(13)}
    a8 = a ** 8
    terms.update({(6, 2): -a8, (4, 4): a8, (2, 6): -a8, (0, 0): a ** 12})
    return _bp(F, terms)


def _e15_cof(F, a):
    # Delta = a X Y (X^2 + Y^2) h
    return [BiPoly.const(F, a), BiPoly.x(F), BiPoly.y(F), _bp(F, {(2, 0): 1, (0, 2): 1})]


def _e15_curve_unit(F, a):
    return _e15_curve(F, F.one)


def _e15_cof_unit(F, a):
    return _e15_cof(F, F.one)


def _g6_curve(F, a):
    # B = X^4 + Y^4 - a^4
    return _bp(F, {(4, 0): 1, (0, 4): 1, (0, 0): -(a ** 4)})


def _g11_curve(F, a):
    # h = 3a X^4 Y^4 + a^5 X^4 + a^5 Y^4 + 4 a^9
    return _bp(F, {(4, 4): a * 3, (4, 0): a ** 5, (0, 4): a ** 5, (0, 0): a ** 9 * 4})


PRESETS: dict[str, Preset] = {
    p.name: p
    for p in [
        Preset("D4.B", 4, 0, 2, 3, _d4_curve, _d4_cof, boundary_max=4),
        Preset("E10.h", 10, 1, 2, 3, _e10_curve, _xy, boundary_max=64),
        Preset("E15.h", 15, 1, 4, 3, _e15_curve, _e15_cof, boundary_max=0,
               note="general a"),
        Preset("E15.h1", 15, 1, 4, 3, _e15_curve_unit, _e15_cof_unit, fixed_a=1, boundary_max=0,
               note="a = 1 specialisation"),
        Preset("G6.B", 6, 3, 2, 5, _g6_curve, _xy, boundary_max=16),
        Preset("G11.h", 11, 3, 2, 5, _g11_curve, _xy, boundary_max=16),
    ]
}

# Absolute irreducibility of these curves is taken as given, not computed.
ABSOLUTELY_IRREDUCIBLE = {
    "D4.B": "Eisenstein criterion",
    "E10.h": "external computer algebra",
    "E15.h1": "external computer algebra (a = 1)",
    "G6.B": "Eisenstein criterion",
    "G11.h": "external computer algebra",
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise UnknownPreset(f"unknown preset {name!r}; known: {', '.join(PRESETS)}") from None


def preset_curve(name: str, field: FieldCtx, a: Elem) -> BiPoly:
    pr = get_preset(name)
    if field.p != pr.p:
        from .errors import CharacteristicMismatch
        raise CharacteristicMismatch(f"preset {name} lives in characteristic {pr.p}")
    field._check(a)
    if a.is_zero():
        raise ZeroParameter("a must be nonzero")
    return pr.curve(field, a)


def preset_parent_delta(name: str, field: FieldCtx, a: Elem) -> BiPoly:
    pr = get_preset(name)
    a_used = field.one if pr.fixed_a is not None else a
    return difference_poly(pr.parent(a_used))


def preset_back_multiply(name: str, field: FieldCtx, a: Elem) -> tuple[BiPoly, BiPoly]:
    """(curve * cofactors, Delta of the parent hat polynomial)."""
    pr = get_preset(name)
    prod = preset_curve(name, field, a)
    for g in pr.cofactors(field, a):
        prod = prod * g
    return prod, preset_parent_delta(name, field, a)
