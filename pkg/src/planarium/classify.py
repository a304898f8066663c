"""Dembowski-Ostrom detection and the classification of DO hat polynomials.

``is_do_polynomial`` is the brute-force side: it looks at the formal
exponents of a :class:`~planarium.rdp.SymbolicRDP`.  ``theorem_predicate``
is the encoded classification (every (p, k, m, d) for which the hat
polynomial with a != 0 is DO).  ``scan_and_verify`` runs one against the
other over a box of parameters.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import CeilingExceeded, KindOutOfRange
from .rdp import DEFAULT_K_CEILING, SymbolicRDP, _p_adic_split


def digit_sum(w: int, p: int) -> int:
    s = 0
    while w:
        w, r = divmod(w, p)
        s += r
    return s


def legendre_valuation(w: int, p: int) -> int:
    """Exponent of p in w!, as (w - digit_sum(w, p)) / (p - 1)."""
    return (w - digit_sum(w, p)) // (p - 1)


def is_do_exponent(n: int, p: int) -> tuple[int, int] | None:
    """Smallest (i, j), i <= j, with p^i + p^j == n, or None."""
    if n < 2:
        return None
    core, beta = _p_adic_split(n, p)
    rest = core - 1
    if rest < 1:
        return None
    rest_core, alpha = _p_adic_split(rest, p)
    if rest_core != 1:
        return None
    # n = p^beta (1 + p^alpha)
    return (beta, beta + alpha)


@dataclass
class DOReport:
    is_do: bool
    witnesses: list[tuple[int, int, int]] = field(default_factory=list)
    failure: tuple[int, int] | None = None

    def to_dict(self) -> dict:
        return {
            "is_do": self.is_do,
            "witnesses": [list(w) for w in self.witnesses],
            "failure": list(self.failure) if self.failure else None,
        }


def is_do_polynomial(spec: SymbolicRDP) -> DOReport:
    """DO decision on the formal exponents d*i of the stored terms.

    The zero polynomial is reported as not DO with no failure entry.
    """
    if spec.is_zero():
        return DOReport(False)
    witnesses = []
    for c, _, n in spec.monomials():
        w = is_do_exponent(n, spec.p)
        if w is None:
            return DOReport(False, witnesses, (n, c))
        witnesses.append((n, w[0], w[1]))
    return DOReport(True, witnesses)


def is_do_exponents(exponents: Iterable[int], p: int) -> bool:
    """DO shape test for an arbitrary exponent set (non-empty)."""
    exps = list(exponents)
    return bool(exps) and all(is_do_exponent(n, p) is not None for n in exps)


# -- encoded classification -----------------------------------------------------

def _d_plain(d: int, p: int) -> bool:
    """d = p^n (p^alpha + 1)."""
    core, _ = _p_adic_split(d, p)
    rest = core - 1
    return rest >= 1 and _p_adic_split(rest, p)[0] == 1


def _d_half(d: int, p: int) -> bool:
    """d = p^n (p^alpha + 1) / 2."""
    return _d_plain(2 * d, p)


def _d_fixed(c: int):
    def test(d: int, p: int) -> bool:
        return _p_adic_split(d, p)[0] == c
    return test


_d_two = _d_fixed(2)
_d_four = _d_fixed(4)


def _first_kind(p: int, k: int, d: int) -> bool:
    base, _ = _p_adic_split(k, p)
    if p == 3:
        return (base == 2 and _d_plain(d, p)) or (base in (4, 5, 7) and _d_two(d, p))
    return base in (2, 3) and _d_plain(d, p)


def _second_kind(p: int, k: int, d: int) -> bool:
    if k in (2, 3):
        return _d_plain(d, p)
    if p == 3:
        if k == 4:
            return _d_half(d, p)
        if k in (5, 6):
            return _d_plain(d, p)
        if k in (7, 10, 13, 19):
            return _d_two(d, p)
        if k == 15:
            return _d_four(d, p)
        return False
    if p == 5 and k == 7:
        return _d_two(d, p)
    return False


def _fourth_kind(p: int, k: int, d: int) -> bool:
    if k == 2:
        return _d_plain(d, p)
    return p == 5 and k in (6, 11) and _d_two(d, p)


def _fifth_kind(p: int, k: int, d: int) -> bool:
    if k in (2, 3):
        return _d_plain(d, p)
    return k == 4 and _d_half(d, p)


def _general_kind(p: int, k: int, m: int, d: int) -> bool:
    if k in (2, 3):
        return _d_plain(d, p)
    if k == 5:
        if (m - 5) % p == 0:
            return _d_half(d, p)
        if (2 * m - 5) % p == 0:
            return _d_plain(d, p)
    return False


def theorem_predicate(p: int, k: int, m: int, d: int) -> bool:
    """Whether the classification lists (p, k, m, d) as giving a DO hat polynomial (a != 0)."""
    if not 0 <= m <= p - 1:
        raise KindOutOfRange(f"m={m} outside [0, {p - 1}]")
    if k < 2 or d < 1:
        return False
    if m == 0:
        return _first_kind(p, k, d)
    if m == 1:
        return _second_kind(p, k, d)
    if m == 2:
        # D_{k,2}(a, X) = a D_{k-1,1}(a, X)
        return _second_kind(p, k - 1, d)
    if p == 3:
        raise AssertionError("unreachable for p = 3")
    if m == 3:
        return _fourth_kind(p, k, d)
    if m == 4:
        return _fifth_kind(p, k, d)
    return _general_kind(p, k, m, d)


# -- scanning -------------------------------------------------------------------

@dataclass
class ScanRecord:
    p: int
    k: int
    m: int
    d: int
    is_do: bool
    predicted: bool
    witnesses: list[tuple[int, int, int]]

    def to_dict(self) -> dict:
        return {
            "p": self.p,
            "k": self.k,
            "m": self.m,
            "d": self.d,
            "is_do": self.is_do,
            "witnesses": [list(w) for w in self.witnesses],
            "predicted": self.predicted,
        }


@dataclass
class ScanResult:
    scanned: int = 0
    matches: int = 0
    discrepancies: list[tuple[int, int, int, bool, bool]] = field(default_factory=list)
    do_count: int = 0

    def to_dict(self) -> dict:
        return {
            "scanned": self.scanned,
            "matches": self.matches,
            "do_count": self.do_count,
            "discrepancies": [
                {"k": k, "m": m, "d": d, "predicted": pr, "observed": ob}
                for k, m, d, pr, ob in self.discrepancies
            ],
        }


def scan_triples(p: int, k_max: int, d_max: int, m_set: Sequence[int],
                 include_p_multiples: bool = False, k_min: int = 2) -> Iterator[tuple[int, int, int]]:
    """(k, m, d) in canonical order: k, then m, then d."""
    for k in range(k_min, k_max + 1):
        if not include_p_multiples and k % p == 0:
            continue
        for m in m_set:
            for d in range(1, d_max + 1):
                if not include_p_multiples and d % p == 0:
                    continue
                yield k, m, d


def scan_records(p: int, k_max: int, d_max: int, m_set: Sequence[int],
                 include_p_multiples: bool = False,
                 k_ceiling: int = DEFAULT_K_CEILING) -> Iterator[ScanRecord]:
    if k_max > k_ceiling:
        raise CeilingExceeded(f"k_max={k_max} exceeds the ceiling {k_ceiling}")
    for m in m_set:
        if not 0 <= m <= p - 1:
            raise KindOutOfRange(f"m={m} outside [0, {p - 1}]")
    cache: dict[tuple[int, int], SymbolicRDP] = {}
    for k, m, d in scan_triples(p, k_max, d_max, m_set, include_p_multiples):
        base = cache.get((k, m))
        if base is None:
            base = cache[(k, m)] = SymbolicRDP.build(k, m, 1, p)
        spec = SymbolicRDP(k, m, d, p, base.terms)
        rep = is_do_polynomial(spec)
        yield ScanRecord(p, k, m, d, rep.is_do, theorem_predicate(p, k, m, d), rep.witnesses)


def tally(records: Iterable[ScanRecord], result: ScanResult | None = None) -> Iterator[ScanRecord]:
    """Pass records through while accumulating them into ``result``."""
    result = result if result is not None else ScanResult()
    for r in records:
        result.scanned += 1
        result.do_count += r.is_do
        if r.is_do == r.predicted:
            result.matches += 1
        else:
            result.discrepancies.append((r.k, r.m, r.d, r.predicted, r.is_do))
        yield r


def scan_and_verify(p: int, e_unused: int | None, k_max: int, d_max: int,
                    m_set: Sequence[int] | None = None, include_p_multiples: bool = False,
                    k_ceiling: int = DEFAULT_K_CEILING) -> ScanResult:
    """Compare formal DO detection with the encoded classification over a box.

    By default k and d run over values prime to p; the classification is
    closed under k -> kp (first kind) and d -> dp, which the p-multiple mode
    checks directly.
    """
    if m_set is None:
        m_set = range(p)
    result = ScanResult()
    for _ in tally(scan_records(p, k_max, d_max, list(m_set), include_p_multiples, k_ceiling), result):
        pass
    return result


def coprime(a: int, b: int) -> bool:
    return gcd(a, b) == 1
