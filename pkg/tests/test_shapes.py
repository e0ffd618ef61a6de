import pytest
from hypothesis import given
from hypothesis import strategies as st

from giambelli.shapes import (
    Box,
    DiagonalType,
    SkewShape,
    components,
    conjugate,
    content,
    diagonal,
    diagonal_type,
    enumerate_skew_shapes,
    is_edgewise_connected,
    parse_partition,
    parse_shape,
    partitions,
    remove_first_column,
    render_ascii,
)

from conftest import APPENDIX


@st.composite
def partition_st(draw, max_len=5, max_part=6):
    parts = draw(st.lists(st.integers(1, max_part), max_size=max_len))
    return tuple(sorted(parts, reverse=True))


@st.composite
def skew_st(draw):
    outer = draw(partition_st())
    inner = tuple(sorted((draw(st.integers(0, p)) for p in outer), reverse=True))
    inner = tuple(p for p in inner if p)
    # the sorted draw can exceed a shorter part; clip to stay inside
    inner = tuple(min(m, l) for m, l in zip(inner, outer))
    return SkewShape(outer, inner)


class TestParsing:
    def test_parse_partition(self):
        assert parse_partition("6,5,3,1") == (6, 5, 3, 1)
        assert parse_partition("") == ()

    @pytest.mark.parametrize("bad", ["3,5", "2,0", "a,1", "2,-1"])
    def test_rejects(self, bad):
        with pytest.raises(ValueError):
            parse_partition(bad)

    def test_parse_shape_round_trip(self):
        assert str(parse_shape("6,5,3,1/4,4,3")) == "6,5,3,1/4,4,3"
        assert parse_shape("2,1") == SkewShape((2, 1))

    def test_containment_error(self):
        with pytest.raises(ValueError):
            SkewShape((2,), (3,))


def test_conjugate_examples():
    assert conjugate((6, 5, 3, 1)) == (4, 3, 3, 2, 2, 1)
    assert conjugate(()) == ()
    assert conjugate((1, 1, 1)) == (3,)


@given(partition_st())
def test_conjugate_is_involution(p):
    assert conjugate(conjugate(p)) == p


def test_appendix_boxes():
    assert APPENDIX.boxes == {Box(1, 5), Box(1, 6), Box(2, 5), Box(4, 1)}
    assert SkewShape((2, 1)).size == 3


def test_contents():
    assert content((4, 1)) == -3
    assert content((1, 6)) == 5
    assert all(content((k, k)) == 0 for k in range(1, 5))


def test_diagonals():
    assert diagonal(parse_shape("3,3,2/1"), 0) == [Box(2, 2)]
    assert diagonal(APPENDIX, 4) == [Box(1, 5)]
    assert diagonal(APPENDIX, 0) == []
    assert diagonal(SkewShape((3, 3, 3)), 0) == [Box(3, 3), Box(2, 2), Box(1, 1)]


def test_connectivity_and_components():
    assert not is_edgewise_connected(APPENDIX)
    assert is_edgewise_connected(SkewShape((2, 1)))
    assert is_edgewise_connected(SkewShape(()))
    parts = components(APPENDIX)
    assert [p.boxes for p in parts] == [{Box(1, 5), Box(1, 6), Box(2, 5)}, {Box(4, 1)}]
    assert components(SkewShape((2, 1))) == [SkewShape((2, 1))]
    assert components(SkewShape(())) == []


def test_diagonal_types():
    # top box has a box above it / bottom box has a box to its right
    assert diagonal_type(SkewShape((2, 2)), 0) is DiagonalType.TYPE3
    assert diagonal_type(APPENDIX, 4) is DiagonalType.TYPE2
    assert diagonal_type(SkewShape((2, 1)), 0) is DiagonalType.TYPE2
    assert diagonal_type(parse_shape("2,2/1"), 0) is DiagonalType.TYPE1
    assert diagonal_type(parse_shape("2,2/1"), -1) is DiagonalType.TYPE2
    assert diagonal_type(SkewShape((2, 2)), -1) is DiagonalType.TYPE4
    with pytest.raises(ValueError):
        diagonal_type(APPENDIX, 0)


def test_remove_first_column():
    assert remove_first_column(parse_shape("3,2/1,1")) == SkewShape((2, 1))
    assert remove_first_column(parse_shape("2,2/1,1")) == SkewShape((1, 1))
    with pytest.raises(ValueError):
        remove_first_column(SkewShape((2, 1)))


def test_render_ascii():
    assert render_ascii(APPENDIX) == "····##\n····#\n···\n#"


def test_partition_counts():
    assert [sum(1 for _ in partitions(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]
    assert list(partitions(4, max_len=2)) == [(4,), (3, 1), (2, 2)]


def test_corpus_counts():
    counts = [0] * 8
    for s in enumerate_skew_shapes(7, connected=True):
        counts[s.size] += 1
    # connected shapes up to translation are counted by ribbon-like compositions of the boundary
    assert counts[1:] == [1, 2, 4, 9, 20, 46, 105]


def test_corpus_is_normalized_and_distinct():
    seen = set()
    for s in enumerate_skew_shapes(6, connected=True):
        assert any(b.row == 1 for b in s.boxes) and any(b.col == 1 for b in s.boxes)
        key = frozenset(s.boxes)
        assert key not in seen
        seen.add(key)


@given(skew_st())
def test_contents_within_bounds(s):
    for b in s.boxes:
        assert s.c_min <= b.content <= s.c_max


@given(skew_st())
def test_diagonals_partition_boxes(s):
    if s.is_empty:
        return
    union = [b for c in range(s.c_min, s.c_max + 1) for b in diagonal(s, c)]
    assert len(union) == len(set(union)) == s.size
    assert set(union) == s.boxes


@given(skew_st())
def test_components_partition_boxes(s):
    parts = components(s)
    seen = set()
    for p in parts:
        assert is_edgewise_connected(p)
        assert not (seen & p.boxes)
        seen |= p.boxes
    assert seen == s.boxes


@given(skew_st())
def test_conjugate_shape_transposes_boxes(s):
    assert s.conjugate.boxes == {Box(b.col, b.row) for b in s.boxes}
