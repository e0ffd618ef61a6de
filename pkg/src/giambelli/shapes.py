"""Partitions, skew diagrams, contents and diagonals.

Boxes use matrix coordinates: ``(row, col)`` with row 1 at the top and
column 1 at the left. The content of a box is ``col - row``.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Iterator, NamedTuple, Sequence, Tuple

Partition = Tuple[int, ...]


class Box(NamedTuple):
    row: int
    col: int

    @property
    def content(self) -> int:
        return self.col - self.row


def content(box: Tuple[int, int]) -> int:
    """Content of a box: column index minus row index."""
    return box[1] - box[0]


def validate_partition(parts: Iterable[int]) -> Partition:
    """Return ``parts`` as a tuple, raising ``ValueError`` unless it is a partition."""
    parts = tuple(int(p) for p in parts)
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    for prev, cur in zip(parts, parts[1:]):
        if cur > prev:
            raise ValueError(f"partition must be weakly decreasing: {parts}")
    return parts


def parse_partition(text: str) -> Partition:
    """Parse ``"6,5,3,1"`` into ``(6, 5, 3, 1)``; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return ()
    try:
        parts = [int(chunk) for chunk in text.split(",")]
    except ValueError as exc:
        raise ValueError(f"invalid partition {text!r}") from exc
    return validate_partition(parts)


def conjugate(p: Sequence[int]) -> Partition:
    """Transpose of a partition: ``p'[j] = #{i : p[i] >= j}``."""
    if not p:
        return ()
    return tuple(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def _part(p: Sequence[int], i: int) -> int:
    """1-based part access with implicit trailing zeros."""
    return p[i - 1] if 1 <= i <= len(p) else 0


class DiagonalType(Enum):
    """Endpoint pattern of a diagonal.

    The topmost box of a diagonal is the only one that can miss a box directly
    above it, and the bottommost box is the only one that can miss a box
    directly to its right. The four combinations are:

    ======  ================  ==================
    type    box above top?    box right of bottom?
    ======  ================  ==================
    TYPE1   yes               no
    TYPE2   no                yes
    TYPE3   no                no
    TYPE4   yes               yes
    ======  ================  ==================
    """

    TYPE1 = 1
    TYPE2 = 2
    TYPE3 = 3
    TYPE4 = 4


@dataclass(frozen=True)
class SkewShape:
    """The skew diagram ``outer/inner``."""

    outer: Partition
    inner: Partition = ()

    def __post_init__(self) -> None:
        outer = validate_partition(self.outer)
        inner = validate_partition(self.inner)
        if len(inner) > len(outer) or any(m > l for m, l in zip(inner, outer)):
            raise ValueError(f"inner partition {inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    def __str__(self) -> str:
        text = ",".join(map(str, self.outer))
        if self.inner:
            text += "/" + ",".join(map(str, self.inner))
        return text

    def row_bounds(self, row: int) -> Tuple[int, int]:
        """``(mu_row, lambda_row)``: the row holds columns ``mu_row+1 .. lambda_row``."""
        return _part(self.inner, row), _part(self.outer, row)

    @cached_property
    def boxes(self) -> frozenset:
        return frozenset(
            Box(r, c)
            for r in range(1, len(self.outer) + 1)
            for c in range(_part(self.inner, r) + 1, self.outer[r - 1] + 1)
        )

    def __contains__(self, box: object) -> bool:
        return box in self.boxes

    def __len__(self) -> int:
        return len(self.boxes)

    @property
    def size(self) -> int:
        return len(self.boxes)

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    @cached_property
    def conjugate(self) -> "SkewShape":
        return SkewShape(conjugate(self.outer), conjugate(self.inner))

    @property
    def c_min(self) -> int:
        """``-lambda'_1 + 1``; a lower bound on contents, attained iff column 1 holds a box."""
        return 1 - len(self.outer)

    @property
    def c_max(self) -> int:
        """``lambda_1 - 1``; an upper bound on contents, attained iff row 1 holds a box."""
        return _part(self.outer, 1) - 1

    @cached_property
    def contents(self) -> Tuple[int, ...]:
        """Sorted distinct contents of the boxes (the occupied diagonals)."""
        return tuple(sorted({b.content for b in self.boxes}))

    @property
    def num_diagonals(self) -> int:
        return len(self.contents)

    def diagonal_index(self) -> dict:
        """Map content -> 1-based diagonal number, counted from the lower-left."""
        return {c: k for k, c in enumerate(self.contents, start=1)}

    def diagonal(self, c: int) -> list:
        return diagonal(self, c)


def skew_shape(outer: Sequence[int], inner: Sequence[int] = ()) -> SkewShape:
    return SkewShape(tuple(outer), tuple(inner))


def parse_shape(text: str) -> SkewShape:
    """Parse ``"6,5,3,1/4,4,3"``; a straight shape omits ``/inner``."""
    outer, _, inner = text.strip().partition("/")
    return SkewShape(parse_partition(outer), parse_partition(inner))


def diagonal(s: SkewShape, c: int) -> list:
    """Boxes of content ``c``, bottommost first (decreasing row and column)."""
    return sorted((b for b in s.boxes if b.content == c), reverse=True)


def _neighbours(box: Box) -> Iterator[Box]:
    r, c = box
    yield Box(r - 1, c)
    yield Box(r + 1, c)
    yield Box(r, c - 1)
    yield Box(r, c + 1)


def _flood(boxes: frozenset) -> list:
    seen: set = set()
    groups = []
    for start in sorted(boxes):
        if start in seen:
            continue
        group = {start}
        stack = [start]
        seen.add(start)
        while stack:
            for nb in _neighbours(stack.pop()):
                if nb in boxes and nb not in seen:
                    seen.add(nb)
                    group.add(nb)
                    stack.append(nb)
        groups.append(frozenset(group))
    return groups


def is_edgewise_connected(s: SkewShape) -> bool:
    """True iff the boxes form one edge-connected region (the empty shape counts as connected)."""
    return len(_flood(s.boxes)) <= 1


def shape_from_boxes(boxes: Iterable[Tuple[int, int]], anchor: bool = False) -> SkewShape:
    """Build the skew shape with exactly these boxes.

    With ``anchor=False`` the boxes keep their absolute coordinates (rows above
    the first occupied row are filled by equal parts of outer and inner). With
    ``anchor=True`` the set is first translated so that its top row is row 1
    and its leftmost column is column 1.
    """
    boxes = {Box(*b) for b in boxes}
    if not boxes:
        return SkewShape((), ())
    if anchor:
        r0 = min(b.row for b in boxes) - 1
        c0 = min(b.col for b in boxes) - 1
        boxes = {Box(b.row - r0, b.col - c0) for b in boxes}
    if min(b.row for b in boxes) < 1 or min(b.col for b in boxes) < 1:
        raise ValueError("boxes must have positive coordinates")
    rows: dict = {}
    for b in boxes:
        rows.setdefault(b.row, []).append(b.col)
    first, last = min(rows), max(rows)
    outer, inner = [], []
    for r in range(1, last + 1):
        if r in rows:
            cols = rows[r]
            lo, hi = min(cols), max(cols)
            if hi - lo + 1 != len(cols):
                raise ValueError(f"row {r} is not contiguous")
            outer.append(hi)
            inner.append(lo - 1)
        elif r < first:
            top = max(rows[first])
            outer.append(top)
            inner.append(top)
        else:
            # empty row strictly inside: any value between the neighbours works
            nxt = min(k for k in rows if k > r)
            width = max(rows[nxt])
            outer.append(width)
            inner.append(width)
    while inner and inner[-1] == 0:
        inner.pop()
    try:
        shape = SkewShape(tuple(outer), tuple(inner))
    except ValueError as exc:
        raise ValueError("box set is not a skew diagram") from exc
    if shape.boxes != boxes:
        raise ValueError("box set is not a skew diagram")
    return shape


def components(s: SkewShape) -> list:
    """Maximal edgewise connected regions, each as a skew shape in absolute coordinates.

    Ordered by decreasing minimum content.
    """
    parts = [shape_from_boxes(group) for group in _flood(s.boxes)]
    return sorted(parts, key=lambda part: part.contents[0], reverse=True)


def diagonal_type(s: SkewShape, c: int) -> DiagonalType:
    boxes = diagonal(s, c)
    if not boxes:
        raise ValueError(f"shape {s} has no box of content {c}")
    bottom, top = boxes[0], boxes[-1]
    above = Box(top.row - 1, top.col) in s.boxes
    right = Box(bottom.row, bottom.col + 1) in s.boxes
    return {
        (True, False): DiagonalType.TYPE1,
        (False, True): DiagonalType.TYPE2,
        (False, False): DiagonalType.TYPE3,
        (True, True): DiagonalType.TYPE4,
    }[(above, right)]


def first_column_empty(s: SkewShape) -> bool:
    """True when the shape is nonempty as a pair but column 1 carries no box."""
    return bool(s.outer) and len(s.outer) == len(s.inner)


def remove_first_column(s: SkewShape) -> SkewShape:
    if not first_column_empty(s):
        raise ValueError(f"column 1 of {s} contains boxes")
    outer = tuple(p - 1 for p in s.outer if p > 1)
    inner = tuple(p - 1 for p in s.inner if p > 1)
    return SkewShape(outer, inner)


def render_ascii(s: SkewShape, box: str = "#", removed: str = "·") -> str:
    """One character per cell: ``box`` for boxes of the shape, ``removed`` for inner cells."""
    lines = []
    for r, width in enumerate(s.outer, start=1):
        mu = _part(s.inner, r)
        lines.append(removed * mu + box * (width - mu))
    return "\n".join(lines)


def partitions(n: int, max_part: int | None = None, max_len: int | None = None) -> Iterator[Partition]:
    """Partitions of ``n`` in reverse lexicographic order, optionally bounded."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        rest_len = None if max_len is None else max_len - 1
        for rest in partitions(n - first, first, rest_len):
            yield (first,) + rest


def _contained(outer: Partition, max_size: int, min_size: int) -> Iterator[Partition]:
    """Partitions ``mu`` inside ``outer`` with ``min_size <= |mu| <= max_size``."""

    def rec(i: int, bound: int, acc: list, total: int) -> Iterator[Partition]:
        if i == len(outer):
            if total >= min_size:
                yield tuple(p for p in acc if p > 0)
            return
        # remaining rows can contribute at most this much
        cap = min(bound, outer[i])
        for v in range(cap, -1, -1):
            if total + v > max_size:
                continue
            room = sum(min(v, outer[k]) for k in range(i + 1, len(outer)))
            if total + v + room < min_size:
                break
            acc.append(v)
            yield from rec(i + 1, v, acc, total + v)
            acc.pop()

    yield from rec(0, outer[0] if outer else 0, [], 0)


def enumerate_skew_shapes(max_boxes: int, connected: bool = False, min_boxes: int = 1) -> Iterator[SkewShape]:
    """All skew shapes with ``min_boxes..max_boxes`` boxes whose first row and first column are occupied.

    That normalization picks one representative per translation class of
    connected shapes. With ``connected=False`` disconnected shapes are included
    (the gaps between components are taken as stored in ``(outer, inner)``),
    bounded by ``outer`` fitting in a ``max_boxes`` square so the list is finite.
    """
    for total in range(1, max_boxes * max_boxes + 1):
        for outer in partitions(total, max_boxes, max_boxes):
            lo = max(total - max_boxes, 0)
            hi = total - min_boxes
            if hi < 0:
                continue
            for inner in _contained(outer, hi, lo):
                if _part(inner, 1) >= outer[0] or len(inner) >= len(outer):
                    continue
                s = SkewShape(outer, inner)
                if connected and not is_edgewise_connected(s):
                    continue
                yield s
