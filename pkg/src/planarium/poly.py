"""Univariate and bivariate polynomials over a FieldCtx.

UniPoly is dense (index = exponent, trailing zeros trimmed); BiPoly is a
sparse map (i, j) -> coefficient of X^i Y^j.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Mapping

import numpy as np

from .errors import FieldMismatch, InexactDivision, NonzeroConstantTerm, PlanariumError
from .ffcore import Elem, FieldCtx


def binom_mod_p(n: int, k: int, p: int) -> int:
    """C(n, k) mod p by Lucas' theorem."""
    if k < 0 or k > n:
        return 0
    result = 1
    while n or k:
        ni, ki = n % p, k % p
        if ki > ni:
            return 0
        num = den = 1
        for t in range(ki):
            num = num * (ni - t) % p
            den = den * (t + 1) % p
        result = result * num * pow(den, -1, p) % p
        n //= p
        k //= p
    return result


class UniPoly:
    """Dense univariate polynomial; ``coeffs[n]`` is the coefficient of X^n."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FieldCtx, coeffs: Iterable = ()):
        cs = [field(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.field = field
        self.coeffs = tuple(cs)

    @classmethod
    def from_terms(cls, field: FieldCtx, terms: Mapping[int, object] | Iterable[tuple[int, object]]):
        items = terms.items() if isinstance(terms, Mapping) else terms
        items = [(int(n), field(c)) for n, c in items]
        deg = max((n for n, _ in items), default=-1)
        cs = [field.zero] * (deg + 1)
        for n, c in items:
            cs[n] = cs[n] + c
        return cls(field, cs)

    @classmethod
    def monomial(cls, field: FieldCtx, n: int, c=1):
        return cls.from_terms(field, {n: c})

    @classmethod
    def x(cls, field: FieldCtx):
        return cls.monomial(field, 1)

    # -- basic structure ----------------------------------------------------

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def terms(self) -> Iterator[tuple[int, Elem]]:
        """Nonzero (exponent, coefficient) pairs in increasing exponent."""
        for n, c in enumerate(self.coeffs):
            if not c.is_zero():
                yield n, c

    def exponents(self) -> list[int]:
        return [n for n, _ in self.terms()]

    def coeff(self, n: int) -> Elem:
        return self.coeffs[n] if 0 <= n < len(self.coeffs) else self.field.zero

    def __eq__(self, other):
        if not isinstance(other, UniPoly):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({format_unipoly(self)})"

    def _check(self, other: "UniPoly"):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.spec} vs {other.field.spec}")

    # -- arithmetic ---------------------------------------------------------

    def __add__(self, other: "UniPoly") -> "UniPoly":
        self._check(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.field, [self.coeff(i) + other.coeff(i) for i in range(n)])

    def __neg__(self):
        return UniPoly(self.field, [-c for c in self.coeffs])

    def __sub__(self, other: "UniPoly") -> "UniPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, UniPoly):
            self._check(other)
            if self.is_zero() or other.is_zero():
                return UniPoly(self.field)
            out = [self.field.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in self.terms():
                for j, b in other.terms():
                    out[i + j] = out[i + j] + a * b
            return UniPoly(self.field, out)
        c = self.field(other)
        return UniPoly(self.field, [x * c for x in self.coeffs])

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "UniPoly":
        result = UniPoly(self.field, [1])
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def compose_monomial(self, d: int) -> "UniPoly":
        """f(X^d)."""
        return UniPoly.from_terms(self.field, [(n * d, c) for n, c in self.terms()])

    # -- evaluation ---------------------------------------------------------

    def __call__(self, x: Elem) -> Elem:
        return poly_eval(self, x)

    def values(self) -> np.ndarray:
        """Codes of f(x) for every x, indexed by the code of x."""
        F = self.field
        xs = F.all_codes
        acc = np.zeros(F.q, dtype=np.int64)
        for n, c in self.terms():
            term = F.vmul(np.full(F.q, c.code, dtype=np.int64), F.vpow(xs, n))
            acc = F.vadd(acc, term)
        return np.asarray(acc, dtype=np.int64)


def poly_eval(f: UniPoly, x: Elem) -> Elem:
    """Horner evaluation."""
    f.field._check(x)
    acc = f.field.zero
    for c in reversed(f.coeffs):
        acc = acc * x + c
    return acc


def reduce_qmap(f: UniPoly) -> UniPoly:
    """Fold exponents n >= q to ((n-1) mod (q-1)) + 1; exponent 0 is kept."""
    q = f.field.q
    terms = [(((n - 1) % (q - 1)) + 1 if n >= q else n, c) for n, c in f.terms()]
    return UniPoly.from_terms(f.field, terms)


def functions_equal(f: UniPoly, g: UniPoly) -> bool:
    """True iff f and g agree at every point of the field (exhaustive)."""
    f._check(g)
    return bool(np.array_equal(f.values(), g.values()))


class BiPoly:
    """Sparse bivariate polynomial: ``terms[(i, j)]`` is the coefficient of X^i Y^j."""

    __slots__ = ("field", "terms")

    def __init__(self, field: FieldCtx, terms: Mapping[tuple[int, int], object] | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[tuple[int, int], Elem] = {}
        for (i, j), c in items:
            key = (int(i), int(j))
            acc[key] = acc.get(key, field.zero) + field(c)
        self.field = field
        self.terms = {k: v for k, v in sorted(acc.items()) if not v.is_zero()}

    @classmethod
    def from_text(cls, field: FieldCtx, text: str) -> "BiPoly":
        return parse_bipoly(field, text)

    @classmethod
    def x(cls, field):
        return cls(field, {(1, 0): 1})

    @classmethod
    def y(cls, field):
        return cls(field, {(0, 1): 1})

    @classmethod
    def const(cls, field, c):
        return cls(field, {(0, 0): c})

    @property
    def total_degree(self) -> int:
        return max((i + j for i, j in self.terms), default=-1)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other):
        if not isinstance(other, BiPoly):
            return NotImplemented
        return self.field == other.field and self.terms == other.terms

    def __repr__(self):
        return f"BiPoly({format_bipoly(self)})"

    def _check(self, other):
        if self.field != other.field:
            raise FieldMismatch(f"{self.field.spec} vs {other.field.spec}")

    def __add__(self, other: "BiPoly") -> "BiPoly":
        self._check(other)
        return BiPoly(self.field, list(self.terms.items()) + list(other.terms.items()))

    def __neg__(self):
        return BiPoly(self.field, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, BiPoly):
            self._check(other)
            out = []
            for (i1, j1), a in self.terms.items():
                for (i2, j2), b in other.terms.items():
                    out.append(((i1 + i2, j1 + j2), a * b))
            return BiPoly(self.field, out)
        c = self.field(other)
        return BiPoly(self.field, {k: v * c for k, v in self.terms.items()})

    __rmul__ = __mul__

    def __call__(self, x: Elem, y: Elem) -> Elem:
        return bivar_eval(self, x, y)

    def substitute_y(self, y: Elem) -> UniPoly:
        """The univariate polynomial F(X, y), collected in X."""
        self.field._check(y)
        return UniPoly.from_terms(self.field, [(i, c * y ** j) for (i, j), c in self.terms.items()])

    def substitute_x(self, x: Elem) -> UniPoly:
        self.field._check(x)
        return UniPoly.from_terms(self.field, [(j, c * x ** i) for (i, j), c in self.terms.items()])

    def swap(self) -> "BiPoly":
        return BiPoly(self.field, {(j, i): c for (i, j), c in self.terms.items()})

    def x_polys(self) -> dict[int, UniPoly]:
        """Group by X-degree: F = sum_i X^i * P_i(Y)."""
        groups: dict[int, list] = {}
        for (i, j), c in self.terms.items():
            groups.setdefault(i, []).append((j, c))
        return {i: UniPoly.from_terms(self.field, ts) for i, ts in sorted(groups.items())}

    def divmod(self, g: "BiPoly") -> tuple["BiPoly", "BiPoly"]:
        """Long division in lex order (X > Y); returns (quotient, remainder)."""
        self._check(g)
        if g.is_zero():
            raise InexactDivision("division by the zero polynomial")
        lead = max(g.terms)
        lead_inv = g.terms[lead].inverse()
        rem = dict(self.terms)
        quot: dict[tuple[int, int], Elem] = {}
        out_rem: dict[tuple[int, int], Elem] = {}
        while rem:
            top = max(rem)
            c = rem[top]
            if top[0] >= lead[0] and top[1] >= lead[1]:
                shift = (top[0] - lead[0], top[1] - lead[1])
                factor = c * lead_inv
                quot[shift] = quot.get(shift, self.field.zero) + factor
                for (i, j), gc in g.terms.items():
                    key = (i + shift[0], j + shift[1])
                    v = rem.get(key, self.field.zero) - factor * gc
                    if v.is_zero():
                        rem.pop(key, None)
                    else:
                        rem[key] = v
            else:
                out_rem[top] = c
                del rem[top]
        return BiPoly(self.field, quot), BiPoly(self.field, out_rem)


def bivar_eval(F: BiPoly, x: Elem, y: Elem) -> Elem:
    F.field._check(x)
    F.field._check(y)
    acc = F.field.zero
    for (i, j), c in F.terms.items():
        acc = acc + c * x ** i * y ** j
    return acc


def difference_poly(f: UniPoly) -> BiPoly:
    """Delta_f(X, Y) = f(X + Y) - f(X) - f(Y), expanded with binomials mod p."""
    if not f.coeff(0).is_zero():
        raise NonzeroConstantTerm("difference_poly needs a polynomial without constant term")
    p = f.field.p
    out = []
    for n, c in f.terms():
        for k in range(1, n):
            b = binom_mod_p(n, k, p)
            if b:
                out.append(((k, n - k), c * b))
    return BiPoly(f.field, out)


def bipoly_divide_monomial_factors(F: BiPoly, factors: Iterable[BiPoly]) -> BiPoly:
    """Exact cofactor of F after dividing out every polynomial in ``factors``.

    Raises InexactDivision unless multiplying the result back by all the
    factors reproduces F term for term.
    """
    factors = list(factors)
    cur = F
    for g in factors:
        quo, rem = cur.divmod(g)
        if not rem.is_zero():
            raise InexactDivision(f"{format_bipoly(g)} does not divide exactly")
        cur = quo
    back = cur
    for g in factors:
        back = back * g
    if back != F:
        raise InexactDivision("multiplication back does not reproduce the dividend")
    return cur


# -- text I/O ------------------------------------------------------------------

def _fmt_elem(c: Elem) -> str:
    return str(c) if c.field.e == 1 else f"({c})"


def format_unipoly(f: UniPoly) -> str:
    """``c0 + c1*X + c2*X^2`` (zero terms omitted; ``0`` for the zero polynomial)."""
    parts = []
    for n, c in f.terms():
        s = _fmt_elem(c)
        if n == 1:
            s += "*X"
        elif n > 1:
            s += f"*X^{n}"
        parts.append(s)
    return " + ".join(parts) if parts else "0"


_UNI_TERM = re.compile(r"^(\([^)]*\)|[0-9]+)(?:\*X(?:\^([0-9]+))?)?$|^X(?:\^([0-9]+))?$")


def parse_unipoly(field: FieldCtx, text: str) -> UniPoly:
    text = text.replace(" ", "")
    if text in ("", "0"):
        return UniPoly(field)
    terms = []
    for tok in text.split("+"):
        m = _UNI_TERM.match(tok)
        if not m:
            raise PlanariumError(f"cannot parse polynomial term {tok!r}")
        if m.group(1) is None:
            terms.append((int(m.group(3) or 1), field.one))
            continue
        coef = field.parse_elem(m.group(1).strip("()"))
        if "X" in tok:
            n = int(m.group(2)) if m.group(2) else 1
        else:
            n = 0
        terms.append((n, coef))
    return UniPoly.from_terms(field, terms)


def format_bipoly(F: BiPoly) -> str:
    """``(i,j):c0,c1; ...`` in increasing (i, j)."""
    return "; ".join(f"({i},{j}):{c}" for (i, j), c in F.terms.items())


_BI_TERM = re.compile(r"^\((\d+),(\d+)\):([0-9,]+)$")


def parse_bipoly(field: FieldCtx, text: str) -> BiPoly:
    terms = []
    for tok in text.replace(" ", "").split(";"):
        if not tok:
            continue
        m = _BI_TERM.match(tok)
        if not m:
            raise PlanariumError(f"cannot parse bivariate term {tok!r}")
        terms.append(((int(m.group(1)), int(m.group(2))), field.parse_elem(m.group(3))))
    return BiPoly(field, terms)
