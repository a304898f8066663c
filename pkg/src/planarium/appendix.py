"""Golden list of the DO hat polynomials for p = 3 and p = 5.

Each entry transcribes one family: the kind m, the base degree k0
(k = k0 * p^l when ``scales_k``), the family of admissible d, and the
displayed monomials.  A displayed exponent is (c, s, plain):

    plain=True   ->  c * p^(n+l+s) * (p^alpha + 1)
    plain=False  ->  c * p^(n+l+s)

and the displayed a-exponent is the l = 0 value (it scales by p^l).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .rdp import SymbolicRDP

# d families
PLAIN = "plain"      # d = p^n (p^alpha + 1)
HALF = "half"        # d = p^n (p^alpha + 1) / 2
FIXED = "fixed"      # d = c p^n


@dataclass(frozen=True)
class AppendixEntry:
    p: int
    m: int
    k0: int
    d_family: tuple
    terms: tuple[tuple[int, int, tuple[int, int, bool]], ...]
    scales_k: bool = False

    @property
    def label(self) -> str:
        letter = "DEFGH"[self.m]
        k = f"{self.k0}*{self.p}^l" if self.scales_k else str(self.k0)
        return f"p={self.p} {letter}_{k}"

    def d_value(self, n: int, alpha: int) -> int:
        p = self.p
        kind = self.d_family[0]
        if kind == PLAIN:
            return p ** n * (p ** alpha + 1)
        if kind == HALF:
            return p ** n * (p ** alpha + 1) // 2
        return self.d_family[1] * p ** n

    def uses_alpha(self) -> bool:
        if self.d_family[0] != FIXED:
            return True
        return any(plain for _, _, (_, _, plain) in self.terms)

    def expected(self, n: int, ell: int, alpha: int) -> list[tuple[int, int, int]]:
        """(coefficient, a-exponent, X-exponent) sorted by X-exponent."""
        p = self.p
        scale = p ** ell if self.scales_k else 1
        out = []
        for coef, a_exp, (c, s, plain) in self.terms:
            x = c * p ** (n + s) * scale
            if plain:
                x *= p ** alpha + 1
            out.append((coef % p, a_exp * scale, x))
        return sorted(out, key=lambda t: t[2])


def _e(p, m, k0, dfam, *terms, scales_k=False):
    return AppendixEntry(p, m, k0, dfam, tuple(terms), scales_k)


A = (1, 0, True)          # p^n (p^alpha + 1)
A1 = (1, 1, True)         # p^(n+1) (p^alpha + 1)


def _x(c, s=0):
    return (c, s, False)


APPENDIX: tuple[AppendixEntry, ...] = (
    # p = 3, m = 0
    _e(3, 0, 2, (PLAIN,), (1, 0, A), scales_k=True),
    _e(3, 0, 4, (FIXED, 2), (2, 2, _x(2)), (2, 0, _x(4)), scales_k=True),
    _e(3, 0, 5, (FIXED, 2), (1, 3, _x(2)), (2, 1, _x(4)), scales_k=True),
    _e(3, 0, 7, (FIXED, 2), (2, 5, _x(2)), (2, 3, _x(4)), (2, 1, _x(2, 1)), scales_k=True),
    # p = 3, m = 1
    _e(3, 1, 2, (PLAIN,), (2, 0, A)),
    _e(3, 1, 3, (PLAIN,), (1, 1, A)),
    _e(3, 1, 4, (HALF,), (1, 0, A)),
    _e(3, 1, 5, (PLAIN,), (2, 3, A)),
    _e(3, 1, 6, (PLAIN,), (1, 4, A), (2, 0, A1)),
    _e(3, 1, 7, (FIXED, 2), (1, 3, _x(4)), (2, 1, _x(2, 1))),
    _e(3, 1, 10, (FIXED, 2), (1, 6, _x(4)), (1, 4, _x(2, 1)), (2, 0, _x(10))),
    _e(3, 1, 13, (FIXED, 2), (1, 9, _x(4)), (1, 3, _x(10)), (1, 1, _x(4, 1))),
    _e(3, 1, 15, (FIXED, 4), (1, 13, _x(4)), (2, 9, _x(4, 1)), (1, 1, _x(28))),
    _e(3, 1, 19, (FIXED, 2), (1, 15, _x(4)), (1, 13, _x(2, 1)), (2, 9, _x(10)), (2, 1, _x(2, 2))),
    # p = 3, m = 2
    _e(3, 2, 3, (PLAIN,), (2, 1, A)),
    _e(3, 2, 4, (PLAIN,), (1, 2, A)),
    _e(3, 2, 5, (HALF,), (1, 1, A)),
    _e(3, 2, 6, (PLAIN,), (2, 4, A)),
    _e(3, 2, 7, (PLAIN,), (1, 5, A), (2, 1, A1)),
    _e(3, 2, 8, (FIXED, 2), (1, 4, _x(4)), (2, 2, _x(2, 1))),
    _e(3, 2, 11, (FIXED, 2), (1, 7, _x(4)), (1, 5, _x(2, 1)), (2, 1, _x(10))),
    _e(3, 2, 14, (FIXED, 2), (1, 10, _x(4)), (1, 4, _x(10)), (1, 2, _x(4, 1))),
    _e(3, 2, 16, (FIXED, 4), (1, 14, _x(4)), (2, 10, _x(4, 1)), (1, 2, _x(28))),
    _e(3, 2, 20, (FIXED, 2), (1, 16, _x(4)), (1, 14, _x(2, 1)), (2, 10, _x(10)), (2, 2, _x(2, 2))),
    # p = 5, m = 0
    _e(5, 0, 2, (PLAIN,), (3, 0, A), scales_k=True),
    _e(5, 0, 3, (PLAIN,), (2, 1, A), scales_k=True),
    # p = 5, m = 1
    _e(5, 1, 2, (PLAIN,), (4, 0, A)),
    _e(5, 1, 3, (PLAIN,), (3, 1, A)),
    _e(5, 1, 7, (FIXED, 2), (4, 5, _x(2)), (1, 1, _x(6))),
    # p = 5, m = 2
    _e(5, 2, 3, (PLAIN,), (4, 1, A)),
    _e(5, 2, 4, (PLAIN,), (3, 2, A)),
    _e(5, 2, 8, (FIXED, 2), (4, 6, _x(2)), (1, 2, _x(6))),
    # p = 5, m = 3; the k = 2 coefficient is (m - 2) = 1
    _e(5, 3, 2, (PLAIN,), (1, 0, A)),
    _e(5, 3, 6, (FIXED, 2), (2, 4, _x(2)), (1, 0, _x(6))),
    _e(5, 3, 11, (FIXED, 2), (2, 9, _x(2)), (1, 5, _x(6)), (4, 1, _x(2, 1))),
    # p = 5, m = 4
    _e(5, 4, 2, (PLAIN,), (2, 0, A)),
    _e(5, 4, 3, (PLAIN,), (1, 1, A)),
    _e(5, 4, 4, (HALF,), (3, 0, A)),
)


@dataclass
class AppendixCheck:
    entry: AppendixEntry
    k: int
    d: int
    n: int
    ell: int
    alpha: int
    expected: list[tuple[int, int, int]]
    observed: list[tuple[int, int, int]]

    @property
    def ok(self) -> bool:
        return self.expected == self.observed

    def to_dict(self) -> dict:
        return {
            "family": self.entry.label,
            "p": self.entry.p,
            "k": self.k,
            "m": self.entry.m,
            "d": self.d,
            "n": self.n,
            "l": self.ell,
            "alpha": self.alpha,
            "ok": self.ok,
            "expected": [list(t) for t in self.expected],
            "observed": [list(t) for t in self.observed],
        }


def appendix_instances(entries=APPENDIX, n_values=(0, 1), ell_values=(0, 1),
                       alpha_values=(0, 1, 2, 3), d_max: int | None = None,
                       k_max: int | None = None) -> Iterator[AppendixCheck]:
    """Instantiate every entry at representative (n, l, alpha) and compare monomials."""
    for entry in entries:
        ells = ell_values if entry.scales_k else (0,)
        alphas = alpha_values if entry.uses_alpha() else (0,)
        for ell in ells:
            k = entry.k0 * entry.p ** ell
            if k_max is not None and k > k_max:
                continue
            for n in n_values:
                for alpha in alphas:
                    d = entry.d_value(n, alpha)
                    if d_max is not None and d > d_max:
                        continue
                    spec = SymbolicRDP.build(k, entry.m, d, entry.p)
                    observed = sorted(((c % entry.p, ae, xe) for c, ae, xe in spec.monomials()),
                                      key=lambda t: t[2])
                    yield AppendixCheck(entry, k, d, n, ell, alpha, entry.expected(n, ell, alpha), observed)


def appendix_d_values(entry: AppendixEntry, d_max: int) -> set[int]:
    """All admissible d <= d_max for an entry, by enumerating n and alpha."""
    p = entry.p
    out = set()
    n = 0
    while p ** n <= d_max:
        alpha = 0
        while p ** alpha <= 2 * d_max:
            d = entry.d_value(n, alpha)
            if d <= d_max:
                out.add(d)
            alpha += 1
        n += 1
    return out


def appendix_lists(p: int, k: int, m: int, d: int) -> bool:
    """Membership of (k, m, d) in the golden list for p in {3, 5}."""
    for entry in APPENDIX:
        if entry.p != p or entry.m != m:
            continue
        if entry.scales_k:
            kk = k
            while kk % p == 0:
                kk //= p
            if kk != entry.k0:
                continue
        elif k != entry.k0:
            continue
        if d in appendix_d_values(entry, d):
            return True
    return False
