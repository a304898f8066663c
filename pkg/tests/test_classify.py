import pytest
from hypothesis import given, strategies as st

from planarium.classify import (
    digit_sum,
    is_do_exponent,
    is_do_exponents,
    is_do_polynomial,
    legendre_valuation,
    scan_and_verify,
    scan_records,
    scan_triples,
    tally,
    theorem_predicate,
)
from planarium.errors import CeilingExceeded, KindOutOfRange
from planarium.rdp import SymbolicRDP


def _brute_do(n, p):
    """Smallest (i, j), i <= j, with p^i + p^j = n, by a double loop."""
    top = 0
    while p ** top <= n:
        top += 1
    for i in range(top):
        for j in range(i, top):
            if p ** i + p ** j == n:
                return (i, j)
    return None


@pytest.mark.parametrize("p", [3, 5, 7, 11])
def test_is_do_exponent_matches_double_loop(p):
    for n in range(1, 3000):
        assert is_do_exponent(n, p) == _brute_do(n, p)


@pytest.mark.parametrize("n,p,expected", [
    (2, 3, (0, 0)), (2, 5, (0, 0)), (2, 101, (0, 0)),
    (8, 3, None), (10, 3, (0, 2)), (4, 3, (0, 1)),
    (12, 3, (1, 2)), (28, 3, (0, 3)), (1, 3, None),
])
def test_is_do_exponent_examples(n, p, expected):
    assert is_do_exponent(n, p) == expected


def test_digit_sum_examples():
    assert digit_sum(0, 3) == 0
    assert digit_sum(11, 3) == 3
    assert digit_sum(20, 3) == 4


@given(st.integers(0, 5000), st.sampled_from([3, 5, 7, 11]))
def test_legendre_equals_floor_sum(w, p):
    total, pk = 0, p
    while pk <= w:
        total += w // pk
        pk *= p
    assert legendre_valuation(w, p) == total


def test_do_report_e15():
    rep = is_do_polynomial(SymbolicRDP.build(15, 1, 4, 3))
    assert rep.is_do and rep.failure is None
    assert rep.witnesses == [(4, 0, 1), (12, 1, 2), (28, 0, 3)]
    for n, i, j in rep.witnesses:
        assert 3 ** i + 3 ** j == n


def test_do_report_failure_and_zero():
    rep = is_do_polynomial(SymbolicRDP.build(4, 1, 1, 5))
    assert not rep.is_do and rep.failure is not None
    zero = is_do_polynomial(SymbolicRDP.build(3, 3, 1, 5))
    assert not zero.is_do and zero.failure is None and zero.witnesses == []


def test_d3_first_kind_monomial():
    # -3 a X^d is DO iff d = p^alpha + 1 (p > 3)
    for d in range(1, 40):
        rep = is_do_polynomial(SymbolicRDP.build(3, 0, d, 7))
        assert rep.is_do == (is_do_exponent(d, 7) is not None)


def test_is_do_exponents_empty_is_false():
    assert not is_do_exponents([], 3)
    assert is_do_exponents([2, 4, 10], 3)


@pytest.mark.parametrize("p,k,m,d,expected", [
    (3, 5, 0, 2, True),
    (3, 5, 0, 6, True),
    (3, 15, 0, 2, True),
    (3, 15, 1, 4, True),
    (3, 15, 1, 12, True),
    (3, 10, 1, 2, True),
    (3, 11, 2, 2, True),
    (5, 11, 3, 2, True),
    (5, 6, 3, 2, True),
    (7, 6, 3, 2, False),
    (5, 4, 4, 3, True),
    (3, 8, 0, 2, False),
])
def test_theorem_predicate_examples(p, k, m, d, expected):
    assert theorem_predicate(p, k, m, d) is expected


def test_theorem_predicate_kind_range():
    with pytest.raises(KindOutOfRange):
        theorem_predicate(3, 5, 3, 2)


def test_third_kind_is_shifted_second_kind():
    for p in (3, 5, 7):
        for k in range(3, 40):
            for d in range(1, 30):
                assert theorem_predicate(p, k, 2, d) == theorem_predicate(p, k - 1, 1, d)


def test_scan_order_and_invariant():
    triples = list(scan_triples(3, 7, 5, [0, 1]))
    assert triples == sorted(triples, key=lambda t: (t[0], [0, 1].index(t[1]), t[2]))
    assert all(k % 3 and d % 3 for k, _, d in triples)
    res = scan_and_verify(5, None, 20, 12)
    assert res.scanned == res.matches + len(res.discrepancies)


def test_scan_ceiling():
    with pytest.raises(CeilingExceeded):
        list(scan_records(3, 100, 5, [0]))
    assert scan_and_verify(3, None, 70, 4, [1], k_ceiling=80).discrepancies == []


def test_tally_counts():
    from planarium.classify import ScanResult
    res = ScanResult()
    recs = list(tally(scan_records(3, 10, 4, [0, 1, 2]), res))
    assert res.scanned == len(recs)
    assert res.do_count == sum(r.is_do for r in recs)


@pytest.mark.parametrize("p,dmax", [(11, 40), (13, 30)])
def test_larger_primes_zero_discrepancies(p, dmax):
    assert scan_and_verify(p, None, 30, dmax).discrepancies == []


def test_p7_only_monomials_survive():
    for r in scan_records(7, 40, 50, list(range(7))):
        if r.is_do:
            assert len(r.witnesses) == 1
