"""Border strips, outside decompositions, cutting strips and twist transformations.

A cutting strip is stored as the content of its first box plus one step
letter per later box: ``"R"`` (next box to the right) or ``"U"`` (next box
above). A strip of a decomposition is labelled by the contents ``[p, q]`` of
its initial and terminal boxes; an empty strip has ``p = q + 1``.
"""

from __future__ import annotations

import itertools
import json
import re
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Iterator, Optional, Tuple

from .shapes import Box, SkewShape, diagonal_type, is_edgewise_connected, shape_from_boxes

RIGHT = "R"
UP = "U"


@dataclass(frozen=True)
class CuttingStrip:
    """A border strip given by its start content and step directions."""

    start: int
    steps: str = ""

    def __post_init__(self) -> None:
        if set(self.steps) - {RIGHT, UP}:
            raise ValueError(f"steps must be over 'R'/'U': {self.steps!r}")

    @classmethod
    def horizontal(cls, lo: int, hi: int) -> "CuttingStrip":
        return cls(lo, RIGHT * (hi - lo))

    @classmethod
    def vertical(cls, lo: int, hi: int) -> "CuttingStrip":
        return cls(lo, UP * (hi - lo))

    @property
    def end(self) -> int:
        return self.start + len(self.steps)

    def __len__(self) -> int:
        return len(self.steps) + 1

    def direction(self, c: int) -> str:
        """Direction from the box of content ``c`` to the box of content ``c + 1``."""
        if not self.start <= c < self.end:
            raise ValueError(f"no step after content {c} in strip {self.start}..{self.end}")
        return self.steps[c - self.start]

    def flip(self, c: int) -> "CuttingStrip":
        k = c - self.start
        if not 0 <= k < len(self.steps):
            raise ValueError(f"no step after content {c} in strip {self.start}..{self.end}")
        new = UP if self.steps[k] == RIGHT else RIGHT
        return CuttingStrip(self.start, self.steps[:k] + new + self.steps[k + 1 :])

    def boxes(self, p: Optional[int] = None, q: Optional[int] = None) -> list:
        """Boxes of the sub-strip over contents ``p..q``, anchored with its first box at (0, 0)."""
        p = self.start if p is None else p
        q = self.end if q is None else q
        r, c = 0, 0
        out = [Box(r, c)]
        for content in range(p, q):
            if self.direction(content) == RIGHT:
                c += 1
            else:
                r -= 1
            out.append(Box(r, c))
        return out


class SegmentKind(Enum):
    STRIP = "strip"
    EMPTY = "empty"
    UNDEFINED = "undefined"


@dataclass(frozen=True)
class Segment:
    """``phi[p, q]`` for a cutting strip ``phi``."""

    strip: CuttingStrip
    p: int
    q: int

    @property
    def kind(self) -> SegmentKind:
        if self.p <= self.q:
            return SegmentKind.STRIP
        if self.p == self.q + 1:
            return SegmentKind.EMPTY
        return SegmentKind.UNDEFINED

    @property
    def size(self) -> int:
        return max(self.q - self.p + 1, 0)


def segment(strip: CuttingStrip, p: int, q: int) -> Segment:
    if p <= q and not (strip.start <= p and q <= strip.end):
        raise ValueError(f"segment [{p},{q}] outside strip contents {strip.start}..{strip.end}")
    return Segment(strip, p, q)


@lru_cache(maxsize=None)
def strip_to_skew_shape(seg: Segment) -> SkewShape:
    """Anchored skew shape of a nonempty segment (a straight shape when the segment is a hook)."""
    if seg.kind is not SegmentKind.STRIP:
        raise ValueError(f"segment [{seg.p},{seg.q}] has no boxes")
    return shape_from_boxes(seg.strip.boxes(seg.p, seg.q), anchor=True)


@dataclass(frozen=True)
class Strip:
    """A strip of an outside decomposition; ``boxes`` is empty for the empty strip."""

    p: int
    q: int
    boxes: Tuple[Box, ...] = ()

    @property
    def is_empty(self) -> bool:
        return not self.boxes

    def __str__(self) -> str:
        return f"[{self.p},{self.q}]"


@dataclass(frozen=True)
class TwistRecord:
    """Which rule produced a decomposition by a twist at content ``i``.

    ``rule`` is one of ``a' b' c' d'`` when the twist ran under the general
    (possibly disconnected) semantics, else ``None``. ``case`` is the
    ``a``..``d`` case of the Init/Term change.
    """

    i: int
    case: str
    rule: Optional[str] = None

    @property
    def label(self) -> str:
        return self.rule if self.rule is not None else self.case


@dataclass(frozen=True, eq=False)
class OutsideDecomposition:
    """Strips partitioning a skew shape, together with their cutting strip.

    Equality ignores strip order and the twist record.
    """

    shape: SkewShape
    strips: Tuple[Strip, ...]
    cutting: Optional[CuttingStrip]
    twisted: Optional[TwistRecord] = field(default=None, compare=False)

    def _key(self):
        return (self.shape, frozenset(self.strips), self.cutting)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, OutsideDecomposition):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self) -> int:
        return hash(self._key())

    @property
    def labels(self) -> list:
        return [(s.p, s.q) for s in self.strips]

    @property
    def has_empty_strips(self) -> bool:
        return any(s.is_empty for s in self.strips)

    @property
    def is_general(self) -> bool:
        """True when twists follow the rules for arbitrary skew shapes (empty strips, gaps)."""
        s = self.shape
        if self.has_empty_strips or not is_edgewise_connected(s) or s.is_empty:
            return True
        return (self.cutting.start, self.cutting.end) != (s.contents[0], s.contents[-1])

    def sorted_strips(self) -> list:
        return sorted(self.strips, key=lambda s: -s.p)

    def __str__(self) -> str:
        return format_decomposition(self)


@dataclass(frozen=True)
class InitTerm:
    init: frozenset
    term: frozenset


def link_strips(shape: SkewShape, cutting: CuttingStrip) -> list:
    """Cut ``shape`` into the strips whose steps follow ``cutting``.

    A box of content ``c`` is joined to the box in direction ``cutting[c]``
    when that box lies in the shape; the maximal chains are the strips.
    """
    boxes = shape.boxes
    succ = {}
    has_pred = set()
    for b in boxes:
        c = b.content
        if not cutting.start <= c <= cutting.end:
            raise ValueError(f"box {tuple(b)} has content {c} outside the cutting strip")
        if c == cutting.end:
            continue
        nxt = Box(b.row, b.col + 1) if cutting.direction(c) == RIGHT else Box(b.row - 1, b.col)
        if nxt in boxes:
            succ[b] = nxt
            has_pred.add(nxt)
    out = []
    for b in sorted(boxes, key=lambda x: (x.col, -x.row)):
        if b in has_pred:
            continue
        chain = [b]
        while chain[-1] in succ:
            chain.append(succ[chain[-1]])
        out.append(Strip(chain[0].content, chain[-1].content, tuple(chain)))
    return out


def _occupied_range(shape: SkewShape) -> Tuple[int, int]:
    if shape.is_empty:
        raise ValueError("empty shape has no diagonals")
    return shape.contents[0], shape.contents[-1]


def decomposition_from_cutting_strip(shape: SkewShape, strip: CuttingStrip) -> OutsideDecomposition:
    """The unique outside decomposition of a connected shape with cutting strip ``strip``.

    Only the step directions of ``strip`` matter; it is re-anchored to start at
    the smallest content of the shape.
    """
    if not is_edgewise_connected(shape) or shape.is_empty:
        raise ValueError(f"shape {shape} is not a nonempty edgewise connected shape")
    lo, hi = _occupied_range(shape)
    if len(strip) != hi - lo + 1:
        raise ValueError(f"cutting strip has {len(strip)} boxes, shape has {hi - lo + 1} diagonals")
    cutting = CuttingStrip(lo, strip.steps)
    return OutsideDecomposition(shape, tuple(link_strips(shape, cutting)), cutting)


def enumerate_decompositions(shape: SkewShape) -> Iterator[OutsideDecomposition]:
    """All ``2**(d-1)`` outside decompositions of a connected shape with ``d`` diagonals."""
    lo, hi = _occupied_range(shape)
    for steps in itertools.product((RIGHT, UP), repeat=hi - lo):
        yield decomposition_from_cutting_strip(shape, CuttingStrip(lo, "".join(steps)))


def horizontal_decomposition(shape: SkewShape) -> OutsideDecomposition:
    """Row strips ``[mu_i - i + 1, lambda_i - i]``, empty where ``lambda_i = mu_i``."""
    lam, mu = shape.outer, shape.inner
    if not lam:
        return OutsideDecomposition(shape, (), None)
    strips = []
    for i, li in enumerate(lam, start=1):
        mi = mu[i - 1] if i <= len(mu) else 0
        boxes = tuple(Box(i, j) for j in range(mi + 1, li + 1))
        strips.append(Strip(mi - i + 1, li - i, boxes))
    return OutsideDecomposition(shape, tuple(strips), CuttingStrip.horizontal(shape.c_min, shape.c_max))


def vertical_decomposition(shape: SkewShape) -> OutsideDecomposition:
    """Column strips ``[-lambda'_i + i, -mu'_i + i - 1]``, empty where ``lambda'_i = mu'_i``."""
    conj = shape.conjugate
    lam, mu = conj.outer, conj.inner
    if not lam:
        return OutsideDecomposition(shape, (), None)
    strips = []
    for i, li in enumerate(lam, start=1):
        mi = mu[i - 1] if i <= len(mu) else 0
        boxes = tuple(Box(r, i) for r in range(li, mi, -1))
        strips.append(Strip(-li + i, -mi + i - 1, boxes))
    return OutsideDecomposition(shape, tuple(strips), CuttingStrip.vertical(shape.c_min, shape.c_max))


def cutting_strip(pi: OutsideDecomposition) -> CuttingStrip:
    """Read the cutting strip off the strips' own steps.

    Content pairs that no strip spans keep the direction stored on ``pi``.
    Raises ``ValueError`` if two strips disagree or a strip is not a path of
    unit up/right steps.
    """
    stored = pi.cutting
    if stored is None:
        raise ValueError("decomposition of the empty diagram has no cutting strip")
    seen: dict = {}
    for s in pi.strips:
        if s.is_empty:
            if s.p != s.q + 1:
                raise ValueError(f"malformed empty strip {s}")
            continue
        if s.boxes[0].content != s.p or s.boxes[-1].content != s.q or len(s.boxes) != s.q - s.p + 1:
            raise ValueError(f"strip {s} labels do not match its boxes")
        for a, b in zip(s.boxes, s.boxes[1:]):
            if b == Box(a.row, a.col + 1):
                step = RIGHT
            elif b == Box(a.row - 1, a.col):
                step = UP
            else:
                raise ValueError(f"strip {s} is not a border strip")
            if seen.setdefault(a.content, step) != step:
                raise ValueError(f"strips disagree on the direction after content {a.content}")
    steps = "".join(seen.get(c, stored.steps[c - stored.start]) for c in range(stored.start, stored.end))
    return CuttingStrip(stored.start, steps)


def init_term(pi: OutsideDecomposition) -> InitTerm:
    return InitTerm(frozenset(s.p for s in pi.strips), frozenset(s.q for s in pi.strips))


def _case(pi: OutsideDecomposition, i: int) -> str:
    it = init_term(pi)
    in_term, in_init = i in it.term, (i + 1) in it.init
    return {(False, False): "a", (True, True): "b", (True, False): "c", (False, True): "d"}[(in_term, in_init)]


def twist(pi: OutsideDecomposition, i: int) -> OutsideDecomposition:
    """Apply the twist transformation at content ``i``.

    Flips the direction after content ``i`` in the cutting strip and re-cuts the
    boxes. Under the general semantics the rule is chosen from which of the
    contents ``i`` and ``i + 1`` are occupied; rule ``c'`` toggles the empty
    strip ``[i+1, i]``. ``i`` may equal the last content of the cutting strip,
    where there is no direction to flip and only the empty-strip rule can act.
    """
    cut = pi.cutting
    if cut is None or not cut.start <= i <= cut.end:
        raise ValueError(f"twist content {i} out of range")
    shape = pi.shape
    occupied = set(shape.contents)
    has_i, has_next = i in occupied, (i + 1) in occupied
    general = pi.is_general
    if not general and i == cut.end:
        raise ValueError(f"twist content {i} out of range")
    new_cut = cut.flip(i) if i < cut.end else cut
    empties = {(s.p, s.q) for s in pi.strips if s.is_empty}
    lower = any(c < i for c in occupied)
    if has_i and has_next:
        rule = "a'"
    elif has_i:
        rule = "b'"
    elif not lower:
        raise ValueError(f"no twist rule applies at content {i}: no box of smaller content")
    elif has_next:
        rule = "d'"
    else:
        rule = "c'"
        empties ^= {(i + 1, i)}
    strips = link_strips(shape, new_cut)
    strips += [Strip(p, q) for p, q in empties]
    strips.sort(key=lambda s: -s.p)
    record = TwistRecord(i, _case(pi, i), rule if general else None)
    return OutsideDecomposition(shape, tuple(strips), new_cut, record)


def diagonal_twist_case(shape: SkewShape, i: int, direction: str) -> str:
    """Theorem-2.2 case predicted from the diagonal type and its current direction.

    With the up direction type ``k`` gives case ``k``; with the right direction
    types 1 and 2 exchange roles, since twisting back undoes the change.
    """
    t = diagonal_type(shape, i).value
    if direction == RIGHT and t in (1, 2):
        t = 3 - t
    return "abcd"[t - 1]


def glue(I: SkewShape, J: SkewShape, direction: str) -> SkewShape:
    """Glue the lower-left box of ``J`` right of (``"R"``) or above (``"U"``) the upper-right box of ``I``."""
    if I.is_empty or J.is_empty:
        raise ValueError("cannot glue an empty diagram")
    top_right = max(I.boxes, key=lambda b: b.content)
    bottom_left = min(J.boxes, key=lambda b: b.content)
    if direction == RIGHT:
        target = Box(top_right.row, top_right.col + 1)
    elif direction == UP:
        target = Box(top_right.row - 1, top_right.col)
    else:
        raise ValueError(f"unknown glue direction {direction!r}")
    dr, dc = target.row - bottom_left.row, target.col - bottom_left.col
    boxes = set(I.boxes) | {Box(b.row + dr, b.col + dc) for b in J.boxes}
    return shape_from_boxes(boxes, anchor=True)


def glue_right(I: SkewShape, J: SkewShape) -> SkewShape:
    return glue(I, J, RIGHT)


def glue_up(I: SkewShape, J: SkewShape) -> SkewShape:
    return glue(I, J, UP)


def is_valid(pi: OutsideDecomposition) -> bool:
    """Check the outside-decomposition invariants (see ``validate``)."""
    try:
        validate(pi)
    except ValueError:
        return False
    return True


def validate(pi: OutsideDecomposition) -> None:
    """Raise ``ValueError`` unless ``pi`` is a valid outside decomposition of its shape.

    Nonempty strips must be disjoint, cover the shape, start on the left or
    bottom perimeter, end on the right or top perimeter, and follow the
    cutting strip.
    """
    boxes = pi.shape.boxes
    covered: set = set()
    phi = pi.cutting
    for s in pi.strips:
        if s.is_empty:
            if s.p != s.q + 1:
                raise ValueError(f"empty strip {s} must have p = q + 1")
            continue
        if covered & set(s.boxes):
            raise ValueError(f"strip {s} overlaps another strip")
        covered |= set(s.boxes)
        first, last = s.boxes[0], s.boxes[-1]
        if Box(first.row, first.col - 1) in boxes and Box(first.row + 1, first.col) in boxes:
            raise ValueError(f"strip {s} does not start on the left or bottom perimeter")
        if Box(last.row, last.col + 1) in boxes and Box(last.row - 1, last.col) in boxes:
            raise ValueError(f"strip {s} does not end on the right or top perimeter")
        offset = Box(first.row, first.col)
        expected = [Box(b.row + offset.row, b.col + offset.col) for b in phi.boxes(s.p, s.q)]
        if list(s.boxes) != expected:
            raise ValueError(f"strip {s} does not follow the cutting strip")
    if covered != set(boxes):
        raise ValueError("strips do not cover the shape")
    labels = init_term(pi)
    if len(labels.init) != len(pi.strips) or len(labels.term) != len(pi.strips):
        raise ValueError("initial or terminal contents repeat")


_BRACKET = re.compile(r"\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]")


def format_decomposition(pi: OutsideDecomposition) -> str:
    """Bracket notation ``[p1,q1][p2,q2]...`` with initial contents decreasing."""
    return "".join(str(s) for s in pi.sorted_strips())


def parse_labels(text: str) -> list:
    """Parse bracket notation (braces and separators between brackets are ignored)."""
    return [(int(p), int(q)) for p, q in _BRACKET.findall(text)]


def decomposition_to_json(pi: OutsideDecomposition) -> dict:
    out = {"shape": str(pi.shape), "strips": [[s.p, s.q] for s in pi.sorted_strips()]}
    if pi.cutting is not None:
        out["start"] = pi.cutting.start
        out["directions"] = pi.cutting.steps
    return out


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False)
