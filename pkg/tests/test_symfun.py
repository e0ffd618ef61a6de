import itertools
import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giambelli.shapes import SkewShape, enumerate_skew_shapes, parse_shape, partitions
from giambelli.symfun import (
    SymPoly,
    check_glue_identity,
    complete_h,
    count_ssyt,
    dumps,
    elementary_e,
    kostka,
    schur_poly,
    ssyt_expansion,
)


def brute_monomials(shape, nvars):
    """Monomial expansion by trying every filling with values 1..nvars."""
    boxes = sorted(shape.boxes)
    out = {}
    for values in itertools.product(range(1, nvars + 1), repeat=len(boxes)):
        t = dict(zip(boxes, values))
        if any((r, c - 1) in t and t[(r, c - 1)] > v for (r, c), v in t.items()):
            continue
        if any((r - 1, c) in t and t[(r - 1, c)] >= v for (r, c), v in t.items()):
            continue
        exp = [0] * nvars
        for v in values:
            exp[v - 1] += 1
        out[tuple(exp)] = out.get(tuple(exp), 0) + 1
    return out


def test_s21_three_variables():
    s = schur_poly(SkewShape((2, 1)), 3)
    terms = s.terms
    # six monomials x_a^2 x_b and 2 x1 x2 x3: eight tableaux, seven monomials
    assert len(terms) == 7
    assert sum(terms.values()) == 8
    assert terms[(1, 1, 1)] == 2
    assert terms[(2, 1, 0)] == terms[(0, 1, 2)] == 1
    assert s.coeffs == {(2, 1): 1, (1, 1, 1): 2}


def test_single_box_and_empty():
    assert schur_poly(SkewShape((1,)), 4).terms == {e: 1 for e in itertools.permutations((1, 0, 0, 0))}
    assert schur_poly(SkewShape(()), 3) == SymPoly.one(3)
    assert schur_poly(parse_shape("2,1/2,1"), 2) == 1


@pytest.mark.parametrize("shape", list(enumerate_skew_shapes(4)), ids=str)
def test_against_exhaustive_fillings(shape):
    n = min(shape.size, 3)
    assert schur_poly(shape, n).terms == brute_monomials(shape, n)


def test_fast_path_matches_tableau_oracle():
    for s in enumerate_skew_shapes(6, connected=True):
        assert schur_poly(s, s.size) == ssyt_expansion(s, s.size)


def test_kostka_numbers():
    assert kostka(SkewShape((2, 1)), (1, 1, 1)) == 2
    assert kostka(SkewShape((3, 2)), (2, 2, 1)) == 2
    assert count_ssyt(SkewShape((3, 2)), (2, 2, 1)) == 2
    assert kostka(SkewShape((2, 2)), (3, 1)) == 0


def test_h_and_e():
    for k in range(5):
        assert complete_h(k, 4) == schur_poly(SkewShape((k,) if k else ()), 4)
        assert elementary_e(k, 4) == schur_poly(SkewShape((1,) * k), 4)
    assert complete_h(-1, 3).is_zero()
    assert elementary_e(4, 3).is_zero()


def test_h_e_duality():
    # sum_k (-1)^k e_k h_{n-k} = 0 for n > 0
    for n in range(1, 5):
        total = SymPoly.zero(4)
        for k in range(n + 1):
            term = elementary_e(k, 4) * complete_h(n - k, 4)
            total = total + term if k % 2 == 0 else total - term
        assert total.is_zero()


def test_products_of_schur():
    n = 4
    s1 = schur_poly(SkewShape((1,)), n)
    assert s1 * s1 == schur_poly(SkewShape((2,)), n) + schur_poly(SkewShape((1, 1)), n)
    s21 = schur_poly(SkewShape((2, 1)), n)
    rhs = sum(
        (schur_poly(SkewShape(p), n) for p in [(3, 1), (2, 2), (2, 1, 1)]),
        SymPoly.zero(n),
    )
    assert s21 * s1 == rhs


def test_glue_identity_examples():
    one = SkewShape((1,))
    assert check_glue_identity(one, one)
    assert check_glue_identity(SkewShape((2,)), SkewShape((1, 1)))
    with pytest.raises(ValueError):
        check_glue_identity(one, one, nvars=1)


def test_symmetry_checks():
    with pytest.raises(ValueError):
        SymPoly.from_terms(2, {(1, 0): 1})
    p = SymPoly.from_terms(2, {(1, 0): 3, (0, 1): 3})
    assert p.coeffs == {(1,): 3}
    with pytest.raises(ValueError):
        SymPoly(2, {(1, 2): 1})
    with pytest.raises(ValueError):
        SymPoly(1, {(1, 1): 1})


def test_mismatched_variables():
    with pytest.raises(ValueError):
        SymPoly.one(2) + SymPoly.one(3)


def test_json_round_trip_is_stable():
    p = schur_poly(parse_shape("3,2/1"), 3)
    text = dumps(p)
    assert SymPoly.from_json(json.loads(text)) == p
    assert dumps(SymPoly.from_json(json.loads(text))) == text


@st.composite
def poly_st(draw, nvars=3, max_degree=3):
    coeffs = {}
    for d in range(max_degree + 1):
        for part in partitions(d, max_len=nvars):
            if draw(st.booleans()):
                coeffs[part] = draw(st.integers(-3, 3))
    return SymPoly(nvars, coeffs)


@settings(max_examples=50, deadline=None)
@given(poly_st(), poly_st(), poly_st())
def test_ring_axioms(a, b, c):
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == SymPoly.zero(3)
    assert a * 1 == a


@settings(max_examples=50, deadline=None)
@given(poly_st(), poly_st())
def test_product_is_symmetric_and_matches_expansion(a, b):
    prod = (a * b).terms
    for exp, coef in prod.items():
        for perm in itertools.permutations(exp):
            assert prod[perm] == coef
    # coefficient of each monomial against a direct convolution
    at, bt = a.terms, b.terms
    direct = {}
    for ea, ca in at.items():
        for eb, cb in bt.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            direct[e] = direct.get(e, 0) + ca * cb
    assert prod == {e: v for e, v in direct.items() if v}
