import json

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from giambelli.gmatrix import (
    One,
    SchurOf,
    Zero,
    canonical_form,
    canonical_sign,
    determinant,
    dual_jacobi_trudi,
    dumps,
    evaluate,
    giambelli_matrix,
    jacobi_trudi,
    permutation_sign,
    render_ascii,
    render_tex,
    tex_label,
)
from giambelli.shapes import SkewShape, enumerate_skew_shapes, parse_shape
from giambelli.strips import (
    CuttingStrip,
    decomposition_from_cutting_strip,
    enumerate_decompositions,
    horizontal_decomposition,
    vertical_decomposition,
)
from giambelli.symfun import SymPoly, complete_h, elementary_e, schur_poly

from conftest import APPENDIX, load_appendix, parse_exponent_label

CONNECTED_5 = list(enumerate_skew_shapes(5, connected=True))


def cells(m):
    out = []
    for row in m.entries:
        line = []
        for e in row:
            if isinstance(e, One):
                line.append("one")
            elif isinstance(e, Zero):
                line.append(".")
            else:
                assert not e.shape.inner
                line.append(e.shape.outer)
        out.append(line)
    return out


def golden_cells(matrix):
    return [[c if c in ("one", ".") else parse_exponent_label(c) for c in row] for row in matrix]


def test_appendix_first_matrix():
    c = canonical_form(horizontal_decomposition(APPENDIX))
    assert cells(c) == golden_cells(load_appendix()["stages"][0]["matrix"])
    assert render_ascii(c).splitlines()[0].split() == ["s[2]", "1", "·", "·"]


def test_labels_and_tex():
    assert tex_label(SkewShape((7, 1, 1))) == "s_{71^2}"
    assert tex_label(SkewShape((1, 1, 1, 1))) == "s_{1^4}"
    assert tex_label(parse_shape("2,2/1")) == "s_{2^2/1}"
    tex = render_tex(canonical_form(horizontal_decomposition(APPENDIX)))
    assert tex.startswith("\\begin{pmatrix}") and "s_{9}" in tex and "\\cdot" in tex


def test_json_shape():
    data = json.loads(dumps(canonical_form(horizontal_decomposition(APPENDIX))))
    assert data["rows"] == data["cols"] == 4
    assert data["entries"][0][0] == {"kind": "schur", "shape": "2"}
    assert data["entries"][0][1] == {"kind": "one"}
    assert data["entries"][0][2] == {"kind": "zero"}


def test_jacobi_trudi_entries_are_h():
    s = parse_shape("4,3,3,2/1,1")
    J = evaluate(jacobi_trudi(s), 6)
    lam, mu = s.outer, s.inner + (0, 0)
    for i in range(4):
        for j in range(4):
            assert J[i][j] == complete_h(lam[i] - mu[j] - i + j, 6)


def test_dual_entries_are_e():
    s = parse_shape("4,3,3,2/1,1")
    conj = s.conjugate
    lam, mu = conj.outer, conj.inner + (0,) * 4
    D = evaluate(dual_jacobi_trudi(s), 8)
    for i in range(len(lam)):
        for j in range(len(lam)):
            assert D[i][j] == elementary_e(lam[i] - mu[j] - i + j, 8)


@pytest.mark.parametrize("shape", CONNECTED_5 + [APPENDIX, parse_shape("2,1/1,1")], ids=str)
def test_orientation(shape):
    # rows follow initial contents, so the horizontal matrix is the transposed Jacobi-Trudi matrix
    assert cells(giambelli_matrix(horizontal_decomposition(shape))) == cells(jacobi_trudi(shape).transpose())
    assert cells(giambelli_matrix(vertical_decomposition(shape))) == cells(dual_jacobi_trudi(shape))


def test_dual_canonical_is_reversal():
    d = dual_jacobi_trudi(APPENDIX)
    c = canonical_form(vertical_decomposition(APPENDIX))
    assert cells(c) == [row[::-1] for row in cells(d)][::-1]


def test_jacobi_trudi_identities():
    for s in enumerate_skew_shapes(5):
        n = s.size
        target = schur_poly(s, n)
        assert determinant(evaluate(jacobi_trudi(s), n), n) == target
        assert determinant(evaluate(dual_jacobi_trudi(s), n), n) == target


def test_giambelli_identity_and_sign():
    for s in CONNECTED_5:
        n = s.size
        target = schur_poly(s, n)
        for pi in enumerate_decompositions(s):
            assert determinant(evaluate(giambelli_matrix(pi), n), n) == target
            assert determinant(evaluate(canonical_form(pi), n), n) == canonical_sign(pi) * target


def test_empty_shape():
    s = SkewShape(())
    assert jacobi_trudi(s).rows == 0
    assert determinant([], 3) == SymPoly.one(3)
    with pytest.raises(ValueError):
        determinant([])


def test_equal_partitions_give_unit_determinant():
    s = parse_shape("2,1/2,1")
    assert determinant(evaluate(jacobi_trudi(s), 2), 2) == 1


def test_permutation_sign():
    assert permutation_sign((0, 1, 2)) == 1
    assert permutation_sign((1, 0, 2)) == -1
    assert permutation_sign((1, 2, 0)) == 1


def test_canonical_is_sorted():
    s = parse_shape("3,3,2/1")
    for pi in enumerate_decompositions(s):
        c = canonical_form(pi)
        assert list(c.row_labels) == sorted(c.row_labels, reverse=True)
        assert list(c.col_labels) == sorted(c.col_labels, reverse=True)
        m = giambelli_matrix(pi)
        assert [m.row_labels[k] for k in c.row_perm] == list(c.row_labels)


def test_non_square_rejected():
    one = SymPoly.one(2)
    with pytest.raises(ValueError):
        determinant([[one, one]])


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_laplace_matches_permutation_expansion(data):
    import itertools

    n = data.draw(st.integers(1, 4))
    vals = [[SymPoly.constant(data.draw(st.integers(-3, 3)), 1) for _ in range(n)] for _ in range(n)]
    expected = 0
    for perm in itertools.permutations(range(n)):
        term = permutation_sign(perm)
        for r, c in enumerate(perm):
            term *= vals[r][c].coeffs.get((), 0)
        expected += term
    assert determinant(vals) == SymPoly.constant(expected, 1)


def test_segment_entries_carry_provenance():
    pi = decomposition_from_cutting_strip(parse_shape("3,3,2/1"), CuttingStrip(0, "RURU"))
    for row in giambelli_matrix(pi).entries:
        for e in row:
            if isinstance(e, SchurOf):
                assert e.seg.strip == pi.cutting
