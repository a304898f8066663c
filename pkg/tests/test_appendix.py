import pytest

from planarium.appendix import (
    APPENDIX,
    FIXED,
    HALF,
    PLAIN,
    appendix_d_values,
    appendix_instances,
    appendix_lists,
)
from planarium.classify import is_do_polynomial, scan_records, theorem_predicate
from planarium.rdp import SymbolicRDP


def test_every_displayed_instance_matches():
    checks = list(appendix_instances())
    assert len(checks) > 200
    bad = [c.to_dict() for c in checks if not c.ok]
    assert bad == []


def test_every_instance_is_do():
    for c in appendix_instances():
        assert is_do_polynomial(SymbolicRDP.build(c.k, c.entry.m, c.d, c.entry.p)).is_do


@pytest.mark.parametrize("p", [3, 5])
def test_membership_equals_theorem_predicate(p):
    for m in range(p):
        for k in range(2, 41):
            for d in range(1, 60):
                assert appendix_lists(p, k, m, d) == theorem_predicate(p, k, m, d), (k, m, d)


@pytest.mark.parametrize("p,dmax", [(3, 28), (5, 26)])
def test_membership_equals_scan(p, dmax):
    for r in scan_records(p, 40, dmax, list(range(p)), include_p_multiples=True):
        assert appendix_lists(p, r.k, r.m, r.d) == r.is_do


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_fourth_kind_k2_coefficient_is_m_minus_2(p):
    # G_2 = (m - 2) X^d with m = 3
    assert SymbolicRDP.build(2, 3, 1, p).terms == ((1, 1),)


def test_d_families():
    e_plain = next(e for e in APPENDIX if e.d_family[0] == PLAIN)
    e_half = next(e for e in APPENDIX if e.d_family[0] == HALF)
    e_fixed = next(e for e in APPENDIX if e.d_family[0] == FIXED)
    assert e_plain.d_value(1, 1) == 3 * 4
    assert e_half.d_value(0, 2) == (e_half.p ** 2 + 1) // 2
    assert e_fixed.d_value(2, 0) == e_fixed.d_family[1] * e_fixed.p ** 2
    assert 4 in appendix_d_values(e_plain, 10) and 3 not in appendix_d_values(e_plain, 10)


def test_labels_are_unique():
    labels = [(e.p, e.m, e.k0) for e in APPENDIX]
    assert len(labels) == len(set(labels))
    assert APPENDIX[0].label == "p=3 D_2*3^l"
