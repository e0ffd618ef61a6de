"""Operation logs for twist steps and for the full Jacobi-Trudi to dual Jacobi-Trudi chain.

Every twist at content ``i`` rewrites the entries ``s_phi[p, q]`` with
``p <= i < q`` through the gluing identity

    s_phi[p, i] * s_phi[i+1, q] = s_phi[p, q] + s_phi'[p, q],

where ``phi'`` is the cutting strip with the step after ``i`` flipped. Which
rows and columns take part is decided by whether ``i`` is a terminal content
and ``i + 1`` an initial content of the decomposition.
"""

from __future__ import annotations

from typing import List, Tuple

from ..gmatrix import canonical_form, entry_of
from ..shapes import SkewShape, remove_first_column
from ..strips import (
    OutsideDecomposition,
    _case,
    horizontal_decomposition,
    segment,
    twist,
    vertical_decomposition,
)
from .ops import (
    AddCol,
    AddRow,
    Checkpoint,
    Coef,
    Destabilize,
    Op,
    OpLog,
    ScaleCol,
    ScaleRow,
    Stabilize,
    SwapCols,
    SwapRows,
    invert_log,
    transpose_log,
)


class _Recorder:
    """Collects ops with a note each, plus checkpoints at the current position."""

    def __init__(self) -> None:
        self.ops: List[Op] = []
        self.notes: List[str] = []
        self.cases: List[str] = []
        self.checkpoints: List[Checkpoint] = []

    def add(self, op: Op, note: str) -> None:
        self.ops.append(op)
        self.notes.append(note)

    def extend(self, log: OpLog) -> None:
        offset = len(self.ops)
        self.ops.extend(log.ops)
        self.notes.extend(log.annotations or [""] * len(log.ops))
        self.cases.extend(log.cases)
        self.checkpoints.extend(
            Checkpoint(c.position + offset, c.decomposition, c.form, c.note) for c in log.checkpoints
        )

    def mark(self, pi: OutsideDecomposition, form: str = "canonical", note: str = "") -> Checkpoint:
        c = Checkpoint(len(self.ops), pi, form, note)
        self.checkpoints.append(c)
        return c

    def log(self, start: Checkpoint, end: Checkpoint) -> OpLog:
        return OpLog(
            start=start,
            ops=tuple(self.ops),
            end=end,
            annotations=tuple(self.notes),
            cases=tuple(self.cases),
            checkpoints=tuple(self.checkpoints),
        )


def _move(rec: _Recorder, kind: str, src: int, dst: int, note: str) -> None:
    """Adjacent swaps carrying row/column ``src`` to position ``dst``."""
    swap = SwapRows if kind == "row" else SwapCols
    step = 1 if dst > src else -1
    for t in range(src, dst, step):
        rec.add(swap(t, t + step), note)


def permute_to_canonical(pi: OutsideDecomposition) -> OpLog:
    """Swaps taking ``M(pi)`` to ``C(pi)``."""
    c = canonical_form(pi)
    rec = _Recorder()
    start = rec.mark(pi, "giambelli")
    for perm, swap in ((c.row_perm, SwapRows), (c.col_perm, SwapCols)):
        order = list(range(len(perm)))
        for k, want in enumerate(perm):
            j = order.index(want)
            if j != k:
                rec.add(swap(k, j), "sort into canonical order")
                order[k], order[j] = order[j], order[k]
    end = rec.mark(pi, "canonical")
    return rec.log(start, end)


def _coef(pi: OutsideDecomposition, p: int, q: int, sign: int = 1) -> Coef:
    return Coef(entry_of(segment(pi.cutting, p, q)), sign)


def _grow_ops(pi: OutsideDecomposition, i: int, rec: _Recorder, note: str) -> None:
    """``C(pi) -> C(twist(pi, i))`` when ``i`` is not terminal and ``i + 1`` not initial."""
    c = canonical_form(pi)
    ps, qs = c.row_labels, c.col_labels
    for r, p in enumerate(ps):
        if p <= i:
            rec.add(ScaleRow(r, -1), note)
    for col, q in enumerate(qs):
        if q < i:
            rec.add(ScaleCol(col, -1), note)
    rec.add(Stabilize(), note)
    k = sum(1 for p in ps if p > i + 1)
    kc = sum(1 for q in qs if q > i)
    _move(rec, "row", 0, k, note)
    _move(rec, "col", 0, kc, note)
    # after the moves, old column b sits at b (b < kc) or b + 1, likewise for rows
    for col, q in enumerate(qs):
        if q >= i + 1:
            rec.add(AddCol(col, kc, _coef(pi, i + 1, q)), note)
    for r, p in enumerate(ps):
        if p <= i:
            rec.add(AddRow(r if r < k else r + 1, k, _coef(pi, p, i)), note)


def _case_c_ops(pi: OutsideDecomposition, i: int, rec: _Recorder, note: str) -> None:
    """``i`` terminal, ``i + 1`` not initial: column operations against the column of ``i``."""
    c = canonical_form(pi)
    ps, qs = c.row_labels, c.col_labels
    source = qs.index(i)
    for r, p in enumerate(ps):
        if p <= i:
            rec.add(ScaleRow(r, -1), note)
    for col, q in enumerate(qs):
        if q <= i:
            rec.add(ScaleCol(col, -1), note)
    for col, q in enumerate(qs):
        if q >= i + 1:
            rec.add(AddCol(col, source, _coef(pi, i + 1, q)), note)


def _case_d_ops(pi: OutsideDecomposition, i: int, rec: _Recorder, note: str) -> None:
    """``i`` not terminal, ``i + 1`` initial: row operations against the row of ``i + 1``."""
    c = canonical_form(pi)
    ps, qs = c.row_labels, c.col_labels
    source = ps.index(i + 1)
    for col, q in enumerate(qs):
        if q >= i + 1:
            rec.add(ScaleCol(col, -1), note)
    for r, p in enumerate(ps):
        if p >= i + 1:
            rec.add(ScaleRow(r, -1), note)
    for r, p in enumerate(ps):
        if p <= i:
            rec.add(AddRow(r, source, _coef(pi, p, i)), note)


def twist_transform_ops(pi: OutsideDecomposition, i: int) -> Tuple[OutsideDecomposition, OpLog]:
    """The twisted decomposition and a log from ``C(pi)`` to its canonical matrix."""
    new = twist(pi, i)
    case = _case(pi, i)
    rule = new.twisted.rule if new.twisted else None
    label = f"{case}" if rule is None else f"{case}/{rule}"
    note = f"twist at {i}, case {label}"
    rec = _Recorder()
    start = rec.mark(pi, note=f"before twist at {i}")
    if case == "a":
        _grow_ops(pi, i, rec, note)
    elif case == "b":
        back = twist(new, i)
        if back != pi or _case(new, i) != "a":
            raise RuntimeError(f"twist at {i} is not undone by twisting again")
        inner = _Recorder()
        _grow_ops(new, i, inner, note)
        grown = invert_log(inner.log(Checkpoint(0, new), Checkpoint(len(inner.ops), pi)))
        rec.ops.extend(grown.ops)
        rec.notes.extend(grown.annotations)
    elif case == "c":
        _case_c_ops(pi, i, rec, note)
    else:
        _case_d_ops(pi, i, rec, note)
    rec.cases.append(label)
    end = rec.mark(new, note=f"after twist at {i}")
    return new, rec.log(start, end)


def _drop_bottom_rows(shape: SkewShape, rec: _Recorder) -> None:
    """``C(Pi_h(shape)) -> C(Pi_h(shape minus its empty first column))``.

    Rows of the shape with ``lambda_i = mu_i = 1`` disappear with the column.
    Their empty strips hold the smallest labels, so each sits in the last row
    and column of the canonical matrix with a unit column; clearing its row and
    moving it to the corner lets it be destabilized.
    """
    pi = horizontal_decomposition(shape)
    c = canonical_form(pi)
    ps, qs = list(c.row_labels), list(c.col_labels)
    note = "remove the empty first column (row side)"
    dropped = sum(1 for li in shape.outer if li == 1)
    for _ in range(dropped):
        n = len(ps)
        p = ps[-1]
        for col in range(n - 1):
            if qs[col] >= p:
                rec.add(AddCol(col, n - 1, _coef(pi, p, qs[col], -1)), note)
        _move(rec, "row", n - 1, 0, note)
        _move(rec, "col", n - 1, 0, note)
        rec.add(Destabilize(), note)
        ps.pop()
        qs.pop()


def _add_empty_column(shape: SkewShape, rec: _Recorder) -> None:
    """``C(Pi_e(shape minus its empty first column)) -> C(Pi_e(shape))``.

    The empty column contributes the strip ``[c_min, c_min - 1]``: the last row
    and column of the canonical matrix, with a unit column.
    """
    pi = vertical_decomposition(shape)
    c = canonical_form(pi)
    ps, qs = c.row_labels, c.col_labels
    n = len(ps)
    p = ps[-1]
    note = "restore the empty first column (column side)"
    rec.add(Stabilize(), note)
    for col in range(n - 1):
        if qs[col] >= p:
            rec.add(AddCol(col + 1, 0, _coef(pi, p, qs[col])), note)
    _move(rec, "row", 0, n - 1, note)
    _move(rec, "col", 0, n - 1, note)


def reduction_steps(shape: SkewShape) -> List[SkewShape]:
    """The shape followed by the results of repeatedly removing an empty first column."""
    steps = [shape]
    while steps[-1].outer and len(steps[-1].outer) == len(steps[-1].inner):
        steps.append(remove_first_column(steps[-1]))
    return steps


def twist_sequence(shape: SkewShape) -> List[int]:
    """Contents at which the chain twists, for a shape whose first column is not empty."""
    if shape.is_empty:
        return []
    return list(range(shape.c_min, shape.c_max))


def chain(shape: SkewShape) -> OpLog:
    """Log from ``M(Pi_h)`` (transpose of Jacobi-Trudi) to ``M(Pi_e)`` (dual Jacobi-Trudi).

    Checkpoints mark every canonical stage, so the log can be checked stage by
    stage as well as end to end.
    """
    rec = _Recorder()
    start_pi = horizontal_decomposition(shape)
    start = Checkpoint(0, start_pi, "giambelli", "start")
    rec.checkpoints.append(start)
    rec.extend(_strip_marks(permute_to_canonical(start_pi)))
    rec.mark(start_pi, note="horizontal decomposition")

    steps = reduction_steps(shape)
    for big, small in zip(steps, steps[1:]):
        _drop_bottom_rows(big, rec)
        rec.mark(horizontal_decomposition(small), note="first column removed")

    core = steps[-1]
    pi = horizontal_decomposition(core)
    for i in twist_sequence(core):
        pi, step = twist_transform_ops(pi, i)
        rec.extend(_strip_marks(step))
        rec.mark(pi, note=f"twist at {i}")
    if not core.is_empty:
        top = core.c_max
        if (top + 1, top) in pi.labels:
            pi, step = twist_transform_ops(pi, top)
            rec.extend(_strip_marks(step))
            rec.mark(pi, note=f"twist at {top}")
        if pi != vertical_decomposition(core):
            raise RuntimeError(f"twist chain of {core} ended at {pi}, not the vertical decomposition")
    else:
        pi = vertical_decomposition(core)

    for small, big in zip(reversed(steps[1:]), reversed(steps[:-1])):
        _add_empty_column(big, rec)
        rec.mark(vertical_decomposition(big), note="first column restored")

    end_pi = vertical_decomposition(shape)
    rec.mark(end_pi, note="vertical decomposition")
    rec.extend(_strip_marks(invert_log(permute_to_canonical(end_pi))))
    end = rec.mark(end_pi, "giambelli", "end")
    return rec.log(start, end)


def _strip_marks(log: OpLog) -> OpLog:
    """The log without its own checkpoints, so stages are marked once by the caller."""
    return OpLog(log.start, log.ops, log.end, log.annotations, log.cases, (), log.transposed)


def jacobi_trudi_chain(shape: SkewShape) -> OpLog:
    """The chain restated for the Jacobi-Trudi matrix itself: from ``J`` to the transpose of ``D``."""
    return transpose_log(chain(shape))


def stages(log: OpLog) -> List[Checkpoint]:
    """Checkpoints that follow a twist step (plus the first canonical stage)."""
    out = [c for c in log.checkpoints if c.note == "horizontal decomposition" and c.form == "canonical"]
    out += [c for c in log.checkpoints if c.note.startswith("twist at")]
    return out
