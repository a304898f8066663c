"""Prime and extension fields F_{p^e} of odd characteristic.

Elements are coordinate vectors in the polynomial basis 1, t, ..., t^{e-1}
where t is a root of the field modulus.  Every element also has an integer
*code* in [0, q): the rank of its coordinate tuple in lexicographic order, so
code order and :func:`enumerate_field` order coincide (zero is code 0).

The vectorised helpers on :class:`FieldCtx` (``vadd``, ``vmul`` ...) operate
on numpy arrays of codes.  They back the exhaustive kernels in
``planarity`` and ``curves``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from .errors import (
    DivisionByZero,
    EvenCharacteristic,
    FieldMismatch,
    NonPrime,
    ReducibleModulus,
    PlanariumError,
)

# Full q x q add/mul tables are built up to this size (2187^2 int32 ~ 19 MB).
TABLE_LIMIT = 2187


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    i = 3
    while i * i <= n:
        if n % i == 0:
            return False
        i += 2
    return True


# -- polynomials over F_p as coefficient lists, constant term first ---------

def _trim(c: list[int]) -> list[int]:
    while c and c[-1] == 0:
        c.pop()
    return c


def _fp_polymod(num: Sequence[int], den: Sequence[int], p: int) -> list[int]:
    r = [x % p for x in num]
    _trim(r)
    dd = len(den) - 1
    inv_lead = pow(den[-1], -1, p)
    while len(r) - 1 >= dd and r:
        shift = len(r) - 1 - dd
        c = r[-1] * inv_lead % p
        for j, dj in enumerate(den):
            r[shift + j] = (r[shift + j] - c * dj) % p
        _trim(r)
    return r


def _monic_polys(p: int, degree: int) -> Iterator[list[int]]:
    """All monic polynomials of the given degree, lexicographic in (c0, ..., c_{deg-1})."""
    for low in itertools.product(range(p), repeat=degree):
        yield list(low) + [1]


def is_irreducible_fp(modulus: Sequence[int], p: int) -> bool:
    """Trial division by every monic polynomial of degree 1..deg/2."""
    n = len(modulus) - 1
    if n < 1:
        return False
    for deg in range(1, n // 2 + 1):
        for g in _monic_polys(p, deg):
            if not _fp_polymod(modulus, g, p):
                return False
    return True


def smallest_irreducible(p: int, e: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree e over F_p.

    Candidates are ordered by their coefficient tuple (c0, ..., c_{e-1}).
    """
    for cand in _monic_polys(p, e):
        if is_irreducible_fp(cand, p):
            return tuple(cand)
    raise AssertionError("unreachable: irreducibles exist in every degree")


@dataclass(frozen=True)
class FieldCtx:
    """The field F_q, q = p^e, defined by a monic irreducible ``modulus``."""

    p: int
    e: int
    modulus: tuple[int, ...]
    q: int = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "q", self.p ** self.e)

    # equality/hash only on the defining data
    def __eq__(self, other):
        if not isinstance(other, FieldCtx):
            return NotImplemented
        return (self.p, self.e, self.modulus) == (other.p, other.e, other.modulus)

    def __hash__(self):
        return hash((self.p, self.e, self.modulus))

    def __repr__(self):
        return f"FieldCtx({self.spec})"

    @property
    def spec(self) -> str:
        """Field-spec string ``p^e/c0,...,1``."""
        if self.e == 1:
            return f"{self.p}^1"
        return f"{self.p}^{self.e}/" + ",".join(map(str, self.modulus))

    # -- scalar elements ----------------------------------------------------

    def __call__(self, value) -> "Elem":
        """Coerce an int (embedded from F_p), code tuple or Elem into this field."""
        if isinstance(value, Elem):
            self._check(value)
            return value
        if isinstance(value, (int, np.integer)):
            return Elem(self, (int(value) % self.p,) + (0,) * (self.e - 1))
        coeffs = tuple(int(c) % self.p for c in value)
        if len(coeffs) != self.e:
            raise PlanariumError(f"element needs {self.e} coordinates, got {len(coeffs)}")
        return Elem(self, coeffs)

    def _check(self, x: "Elem"):
        if x.field is not self and x.field != self:
            raise FieldMismatch(f"element of {x.field.spec} used in {self.spec}")

    @property
    def zero(self) -> "Elem":
        return self(0)

    @property
    def one(self) -> "Elem":
        return self(1)

    @property
    def gen(self) -> "Elem":
        """The class of t (the polynomial-basis generator); equals 1 when e = 1."""
        if self.e == 1:
            return self.one
        return self((0, 1) + (0,) * (self.e - 2))

    def from_code(self, code: int) -> "Elem":
        digits = []
        for _ in range(self.e):
            code, r = divmod(int(code), self.p)
            digits.append(r)
        return Elem(self, tuple(reversed(digits)))

    def parse_elem(self, text: str) -> "Elem":
        """Parse ``c0,c1,...,c_{e-1}``; a single integer embeds from F_p."""
        parts = [s for s in text.replace(" ", "").split(",") if s != ""]
        if len(parts) == 1 and self.e != 1:
            return self(int(parts[0]))
        try:
            return self([int(s) for s in parts])
        except ValueError as exc:
            raise PlanariumError(f"bad element {text!r}") from exc

    def elements(self) -> Iterator["Elem"]:
        for coeffs in itertools.product(range(self.p), repeat=self.e):
            yield Elem(self, coeffs)

    def nonzero(self) -> Iterator["Elem"]:
        it = self.elements()
        next(it)
        return it

    # -- scalar arithmetic on coordinate tuples -----------------------------

    def _mul_coeffs(self, x: tuple[int, ...], y: tuple[int, ...]) -> tuple[int, ...]:
        p, e = self.p, self.e
        prod = [0] * (2 * e - 1)
        for i, xi in enumerate(x):
            if xi:
                for j, yj in enumerate(y):
                    prod[i + j] += xi * yj
        mod = self.modulus
        for t in range(2 * e - 2, e - 1, -1):
            c = prod[t] % p
            if c:
                for j in range(e):
                    prod[t - e + j] -= c * mod[j]
        return tuple(v % p for v in prod[:e])

    # -- vectorised arithmetic on code arrays -------------------------------

    @cached_property
    def _weights(self) -> np.ndarray:
        return self.p ** np.arange(self.e - 1, -1, -1, dtype=np.int64)

    def digits(self, codes) -> np.ndarray:
        """Coordinate array of shape (..., e) for an array of codes."""
        codes = np.asarray(codes, dtype=np.int64)
        return (codes[..., None] // self._weights) % self.p

    def undigits(self, digs: np.ndarray) -> np.ndarray:
        return (np.asarray(digs, dtype=np.int64) % self.p) @ self._weights

    @cached_property
    def _tables(self):
        if self.q > TABLE_LIMIT:
            return None
        codes = np.arange(self.q, dtype=np.int64)
        add = self._vadd_digits(codes[:, None], codes[None, :]).astype(np.int32)
        mul = self._vmul_digits(codes[:, None], codes[None, :]).astype(np.int32)
        neg = self.undigits(-self.digits(codes)).astype(np.int32)
        return add, mul, neg

    def _vadd_digits(self, a, b):
        return self.undigits(self.digits(a) + self.digits(b))

    def _vmul_digits(self, a, b):
        p, e = self.p, self.e
        da, db = np.broadcast_arrays(self.digits(a), self.digits(b))
        shape = da.shape[:-1]
        prod = np.zeros(shape + (2 * e - 1,), dtype=np.int64)
        for i in range(e):
            prod[..., i:i + e] += da[..., i:i + 1] * db
        prod %= p
        mod = np.asarray(self.modulus[:e], dtype=np.int64)
        for t in range(2 * e - 2, e - 1, -1):
            c = prod[..., t:t + 1]
            prod[..., t - e:t] = (prod[..., t - e:t] - c * mod) % p
        return self.undigits(prod[..., :e])

    def vadd(self, a, b) -> np.ndarray:
        t = self._tables
        if t is not None:
            return t[0][a, b]
        return self._vadd_digits(a, b)

    def vneg(self, a) -> np.ndarray:
        t = self._tables
        if t is not None:
            return t[2][a]
        return self.undigits(-self.digits(a))

    def vsub(self, a, b) -> np.ndarray:
        return self.vadd(a, self.vneg(b))

    def vmul(self, a, b) -> np.ndarray:
        t = self._tables
        if t is not None:
            return t[1][a, b]
        return self._vmul_digits(a, b)

    def vpow(self, a, n: int) -> np.ndarray:
        """Elementwise a**n by square-and-multiply (0**0 = 1)."""
        a = np.asarray(a, dtype=np.int64)
        result = np.full(a.shape, self.one.code, dtype=np.int64)
        base = a
        while n:
            if n & 1:
                result = self.vmul(result, base)
            n >>= 1
            if n:
                base = self.vmul(base, base)
        return result

    def mul_matrices(self, codes) -> np.ndarray:
        """F_p-matrices M_c, shape (N, e, e), with digits(c*x) = M_c @ digits(x) mod p."""
        codes = np.asarray(codes, dtype=np.int64).reshape(-1)
        basis = np.array([self(tuple(int(i == j) for i in range(self.e))).code for j in range(self.e)])
        prods = self._vmul_digits(codes[:, None], basis[None, :])  # (N, e): c * t^j
        return np.swapaxes(self.digits(prods), 1, 2)

    @cached_property
    def all_codes(self) -> np.ndarray:
        return np.arange(self.q, dtype=np.int64)


@dataclass(frozen=True, eq=False)
class Elem:
    """An element of a :class:`FieldCtx`, as polynomial-basis coordinates."""

    field: FieldCtx
    coeffs: tuple[int, ...]

    @property
    def code(self) -> int:
        c = 0
        for v in self.coeffs:
            c = c * self.field.p + v
        return c

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, (int, np.integer)):
            other = self.field(other)
        if not isinstance(other, Elem):
            return NotImplemented
        return self.field == other.field and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.field.p, self.field.e, self.coeffs))

    def __str__(self):
        return ",".join(map(str, self.coeffs))

    def __repr__(self):
        return f"Elem({self})"

    def _coerce(self, other) -> "Elem":
        if isinstance(other, (int, np.integer)):
            return self.field(other)
        if not isinstance(other, Elem):
            raise TypeError(f"cannot combine Elem with {type(other).__name__}")
        self.field._check(other)
        return other

    def __add__(self, other):
        other = self._coerce(other)
        p = self.field.p
        return Elem(self.field, tuple((x + y) % p for x, y in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        p = self.field.p
        return Elem(self.field, tuple((-x) % p for x in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        return Elem(self.field, self.field._mul_coeffs(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result = self.field.one
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def inverse(self) -> "Elem":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other):
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()


def build_field(p: int, e: int = 1, modulus: Sequence[int] | None = None) -> FieldCtx:
    """Construct F_{p^e}.

    Without ``modulus`` the lexicographically smallest monic irreducible of
    degree ``e`` is used, so the result is reproducible.  A supplied modulus
    (constant term first, monic) is checked for irreducibility.
    """
    if not is_prime(p):
        raise NonPrime(f"{p} is not prime")
    if p == 2:
        raise EvenCharacteristic("characteristic 2 is not supported")
    if e < 1:
        raise PlanariumError(f"extension degree must be >= 1, got {e}")
    if modulus is None:
        mod = (0, 1) if e == 1 else smallest_irreducible(p, e)
    else:
        mod = tuple(int(c) for c in modulus)
        if len(mod) != e + 1 or mod[-1] != 1 or any(not 0 <= c < p for c in mod):
            raise ReducibleModulus(f"modulus must be monic of degree {e} with entries in [0,{p})")
        if not is_irreducible_fp(mod, p):
            raise ReducibleModulus(f"modulus {mod} is reducible over F_{p}")
    return FieldCtx(p, e, mod)


def parse_field(spec: str) -> FieldCtx:
    """Parse ``p^e``, ``p^e/c0,c1,...,1`` or a bare prime ``p``."""
    from .errors import BadFieldSpec

    text = spec.strip()
    head, _, tail = text.partition("/")
    try:
        if "^" in head:
            ps, es = head.split("^", 1)
            p, e = int(ps), int(es)
        else:
            p, e = int(head), 1
        modulus = [int(c) for c in tail.split(",")] if tail else None
    except ValueError as exc:
        raise BadFieldSpec(f"cannot parse field spec {spec!r}; expected 'p^e' or 'p^e/c0,...,1'") from exc
    return build_field(p, e, modulus)


def enumerate_field(field: FieldCtx) -> list[Elem]:
    return list(field.elements())


def frobenius(x: Elem, j: int) -> Elem:
    """x^(p^j)."""
    j %= x.field.e
    return x ** (x.field.p ** j)


_OPS = {
    "add": lambda x, y: x + y,
    "sub": lambda x, y: x - y,
    "mul": lambda x, y: x * y,
    "div": lambda x, y: x / y,
    "neg": lambda x, y: -x,
    "inv": lambda x, y: x.inverse(),
    "pow": lambda x, y: x ** y,
}


def elem_arith(op: str, x: Elem, y=None) -> Elem:
    """Dispatch one of add, sub, mul, div, neg, inv, pow by name."""
    try:
        fn = _OPS[op]
    except KeyError:
        raise PlanariumError(f"unknown operation {op!r}") from None
    if op == "pow" and (not isinstance(y, int) or y < 0):
        raise PlanariumError("pow exponent must be a nonnegative integer")
    return fn(x, y)
