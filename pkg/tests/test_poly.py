from math import comb

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from planarium.errors import InexactDivision, NonzeroConstantTerm
from planarium.ffcore import build_field
from planarium.poly import (
    BiPoly,
    UniPoly,
    binom_mod_p,
    bipoly_divide_monomial_factors,
    bivar_eval,
    difference_poly,
    format_bipoly,
    format_unipoly,
    functions_equal,
    parse_bipoly,
    parse_unipoly,
    poly_eval,
    reduce_qmap,
)

F9 = build_field(3, 2)
F27 = build_field(3, 3)


def test_binom_mod_p_matches_integer_binomials():
    for p in (3, 5, 7):
        for n in range(60):
            for k in range(n + 1):
                assert binom_mod_p(n, k, p) == comb(n, k) % p


def test_unipoly_trimming_and_degree():
    f = UniPoly(F9, [1, 0, 2, 0, 0])
    assert f.degree == 2
    assert UniPoly(F9, []).is_zero()
    assert UniPoly.from_terms(F9, {3: 1, 0: 2}).exponents() == [0, 3]


coeff_lists = st.lists(st.integers(0, 8), max_size=6)


@settings(max_examples=60, deadline=None)
@given(coeff_lists, coeff_lists, st.integers(0, 8))
def test_ring_homomorphism_of_evaluation(a, b, xc):
    f = UniPoly(F9, [F9.from_code(c) for c in a])
    g = UniPoly(F9, [F9.from_code(c) for c in b])
    x = F9.from_code(xc)
    assert (f + g)(x) == f(x) + g(x)
    assert (f * g)(x) == f(x) * g(x)
    assert (f - g)(x) == f(x) - g(x)
    assert poly_eval(f, x) == f(x)


def test_values_matches_pointwise_eval():
    f = UniPoly.from_terms(F27, {28: F27.gen, 12: 2, 4: 1})
    vals = f.values()
    for x in F27.elements():
        assert vals[x.code] == f(x).code


def test_reduce_qmap_preserves_function_and_degree_bound():
    f = UniPoly.from_terms(F9, {0: 1, 9: 1, 17: 2, 20: F9.gen})
    g = reduce_qmap(f)
    assert g.degree < 9
    assert functions_equal(f, g)
    # X^9 and X^17 both fold to X and cancel (1 + 2 = 0); X^20 folds to X^4
    assert set(g.exponents()) == {0, 4}


def test_functions_equal_detects_difference():
    assert functions_equal(UniPoly.monomial(F9, 9), UniPoly.monomial(F9, 1))
    assert not functions_equal(UniPoly.monomial(F9, 2), UniPoly.monomial(F9, 4))


def test_difference_poly_of_additive_monomial_is_zero():
    # f = X^p is additive, so Delta_f = 0
    assert difference_poly(UniPoly.monomial(F9, 3)).is_zero()


def test_difference_poly_of_square():
    # Delta of X^2 is 2 X Y
    D = difference_poly(UniPoly.monomial(F9, 2))
    assert D == BiPoly(F9, {(1, 1): 2})


def test_difference_poly_definition():
    f = UniPoly.from_terms(F27, {10: 1, 6: 1, 2: -1})
    D = difference_poly(f)
    for x in list(F27.elements())[::3]:
        for y in list(F27.elements())[::4]:
            assert bivar_eval(D, x, y) == f(x + y) - f(x) - f(y)
    assert D.swap() == D


def test_difference_poly_rejects_constant():
    with pytest.raises(NonzeroConstantTerm):
        difference_poly(UniPoly(F9, [1, 1]))


def test_bipoly_substitution_and_grouping():
    D = difference_poly(UniPoly.from_terms(F27, {4: 1, 2: 1}))
    y = F27.from_code(5)
    uni = D.substitute_y(y)
    for x in F27.elements():
        assert uni(x) == D(x, y)
    # sum_i X^i P_i(Y) reproduces D
    parts = D.x_polys()
    x = F27.from_code(11)
    assert sum((x ** i * P(y) for i, P in parts.items()), F27.zero) == D(x, y)


def test_divmod_roundtrip():
    X, Y = BiPoly.x(F9), BiPoly.y(F9)
    g = X * X + Y * Y + BiPoly.const(F9, 2)
    h = X * Y + BiPoly.const(F9, F9.gen)
    q, r = (g * h).divmod(g)
    assert r.is_zero() and q == h


def test_divide_monomial_factors_exact_and_inexact():
    X, Y = BiPoly.x(F9), BiPoly.y(F9)
    h = X * X + Y * Y
    F = X * Y * h
    assert bipoly_divide_monomial_factors(F, [X, Y]) == h
    with pytest.raises(InexactDivision):
        bipoly_divide_monomial_factors(F + BiPoly.const(F9, 1), [X])


def test_text_roundtrip():
    f = UniPoly.from_terms(F9, {0: 2, 3: F9.gen, 7: 1})
    assert parse_unipoly(F9, format_unipoly(f)) == f
    D = difference_poly(UniPoly.from_terms(F27, {10: 1, 6: 2, 2: F27.gen}))
    assert parse_bipoly(F27, format_bipoly(D)) == D


def test_values_vectorised_against_numpy_powers_prime_field():
    F = build_field(11)
    f = UniPoly(F, [3, 0, 5, 1])
    xs = np.arange(11)
    assert np.array_equal(f.values(), (3 + 5 * xs ** 2 + xs ** 3) % 11)
