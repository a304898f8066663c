"""Reversed Dickson polynomials D_{k,m}(a, X) and their hat polynomials.

The hat polynomial of (k, m, d) is D_{k,m}(a, X^d) - D_{k,m}(a, 0)
= sum_{i>=1} c_i a^{k-2i} X^{d i}.  Only the integer coefficients c_i mod p
depend on (k, m, p); they are produced two independent ways, from the
closed-form sum and from the three-term recurrence.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import CharacteristicMismatch, KindOutOfRange, ZeroParameter
from .ffcore import Elem, FieldCtx
from .poly import UniPoly

# Letters for the kinds m = 0..4.
FAMILY_LETTERS = "DEFGH"

DEFAULT_K_CEILING = 64


def _check_kind(m: int, p: int):
    if not 0 <= m <= p - 1:
        raise KindOutOfRange(f"m={m} outside [0, {p - 1}]")


def rdp_coeffs_closed(k: int, m: int, p: int) -> list[tuple[int, int]]:
    """Nonzero (i, c_i mod p) for 1 <= i <= k/2, from the binomial sum.

    (k - m i)/(k - i) * C(k-i, i) is evaluated as the integer combination
    m*C(k-i, i) - (m-1)*(k/(k-i))*C(k-i, i).
    """
    _check_kind(m, p)
    out = []
    for i in range(1, k // 2 + 1):
        second = comb(k - i, i)
        first = comb(k - i, i) + comb(k - i - 1, i - 1)  # = k/(k-i) * C(k-i, i)
        c = (-1) ** i * (m * second - (m - 1) * first) % p
        if c:
            out.append((i, c))
    return out


def _reversed_dickson_table(k: int, seed0: int) -> list[int]:
    """Integer coefficients of X^i in T_k for T_j = a T_{j-1} - X T_{j-2}, T_1 = a."""
    prev, cur = [seed0], [1]
    if k == 0:
        return prev
    for _ in range(k - 1):
        nxt = cur + [0]
        for i, c in enumerate(prev):
            nxt[i + 1] -= c
        while len(nxt) > 1 and nxt[-1] == 0:
            nxt.pop()
        prev, cur = cur, nxt
    return cur


def rdp_coeffs_recursive(k: int, m: int, p: int) -> list[tuple[int, int]]:
    """Same contract as :func:`rdp_coeffs_closed`, via D_{k,m} = m E_k - (m-1) D_k."""
    _check_kind(m, p)
    first = _reversed_dickson_table(k, 2)
    second = _reversed_dickson_table(k, 1)
    n = max(len(first), len(second))
    first += [0] * (n - len(first))
    second += [0] * (n - len(second))
    out = []
    for i in range(1, n):
        c = (m * second[i] - (m - 1) * first[i]) % p
        if c:
            out.append((i, c))
    return out


@dataclass(frozen=True)
class SymbolicRDP:
    """Hat polynomial of D_{k,m}(a, X^d) over characteristic p.

    ``terms`` holds (i, c_i): the monomial c_i * a^(k-2i) * X^(d*i).
    """

    k: int
    m: int
    d: int
    p: int
    terms: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, k: int, m: int, d: int, p: int) -> "SymbolicRDP":
        if d < 1:
            raise ValueError("composition exponent d must be >= 1")
        return cls(k, m, d, p, tuple(rdp_coeffs_closed(k, m, p)))

    @property
    def name(self) -> str:
        if self.m < len(FAMILY_LETTERS):
            return f"{FAMILY_LETTERS[self.m]}{self.k}"
        return f"D{self.k},{self.m}"

    def is_zero(self) -> bool:
        return not self.terms

    def monomials(self) -> list[tuple[int, int, int]]:
        """(coefficient, a-exponent, X-exponent) per stored term."""
        return [(c, self.k - 2 * i, self.d * i) for i, c in self.terms]

    def exponents(self) -> list[int]:
        return [self.d * i for i, _ in self.terms]

    def format(self) -> str:
        parts = []
        for c, ae, xe in reversed(self.monomials()):
            s = "" if c == 1 else str(c)
            if ae:
                s += "a" if ae == 1 else f"a^{ae}"
            s += "X" if xe == 1 else f"X^{xe}"
            parts.append(s)
        return " + ".join(parts) if parts else "0"


def family_kind(letter: str) -> int:
    """D/E/F/G/H -> m = 0..4."""
    idx = FAMILY_LETTERS.find(letter.upper())
    if idx < 0 or len(letter) != 1:
        raise KindOutOfRange(f"unknown family {letter!r}; expected one of {FAMILY_LETTERS}")
    return idx


def rdp_instantiate(spec: SymbolicRDP, a: Elem, field: FieldCtx | None = None) -> UniPoly:
    """sum c_i a^(k-2i) X^(d i) over ``field`` (no reduction mod X^q - X)."""
    field = field or a.field
    field._check(a)
    if a.is_zero():
        raise ZeroParameter("the parameter a must be nonzero")
    if field.p != spec.p:
        raise CharacteristicMismatch(f"polynomial is over characteristic {spec.p}, field has {field.p}")
    return UniPoly.from_terms(field, [(xe, a ** ae * c) for c, ae, xe in spec.monomials()])


def hat_poly(k: int, m: int, d: int, a: Elem) -> UniPoly:
    return rdp_instantiate(SymbolicRDP.build(k, m, d, a.field.p), a)


def rdp_value(k: int, m: int, a: Elem, x: Elem) -> Elem:
    """D_{k,m}(a, x) including its constant term (used for the scaling identity)."""
    p = a.field.p
    _check_kind(m, p)
    total = a.field(((2 - m) if k == 0 else 1) % p) * (a ** k if k else a.field.one)
    for i, c in rdp_coeffs_closed(k, m, p):
        total = total + a ** (k - 2 * i) * x ** i * c
    return total


def _p_adic_split(n: int, p: int) -> tuple[int, int]:
    v = 0
    while n % p == 0:
        n //= p
        v += 1
    return n, v


def rdp_normalize_kp(k: int, p: int) -> tuple[int, int]:
    """(k', n) with k = k' p^n and p not dividing k'."""
    if k < 1:
        raise ValueError("k must be >= 1")
    return _p_adic_split(k, p)


def rdp_zero_param_do(k: int, m: int, d: int, p: int) -> bool:
    """Whether D_{k,m}(0, X^d) is a DO polynomial.

    It vanishes for odd k and equals (2-m)(-X^d)^(k/2) for even k, so it is
    DO iff k is even, m != 2 mod p and kd = 2 p^j (p^i + 1).
    """
    if k % 2 or (m - 2) % p == 0 or k == 0:
        return False
    half = k * d // 2
    core, _ = _p_adic_split(half, p)
    return _is_p_power(core - 1, p)


def _is_p_power(n: int, p: int) -> bool:
    if n < 1:
        return False
    while n % p == 0:
        n //= p
    return n == 1
