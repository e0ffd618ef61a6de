"""Invertible elementary operations on square matrices over the symmetric functions.

Operations are values; ``apply_op`` acts on a matrix of :class:`SymPoly`.
Row and column indices are 0-based. Coefficients are kept as signed segment
entries so a log reads the same whatever number of variables it is replayed in.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import List, Sequence, Tuple, Union

from ..gmatrix import ONE, Entry, One, SchurOf, entry_to_json, evaluate_entry
from ..strips import OutsideDecomposition, decomposition_to_json, format_decomposition
from ..symfun import SymPoly

PolyMatrix = List[List[SymPoly]]


class OpError(ValueError):
    """An operation does not apply to the matrix it was given."""


@dataclass(frozen=True)
class Coef:
    """``sign * entry`` where the entry is a segment Schur function or the constant 1."""

    entry: Entry = ONE
    sign: int = 1

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise ValueError("coefficient sign must be +1 or -1")
        if not isinstance(self.entry, (SchurOf, One)):
            raise ValueError("coefficient must be a Schur entry or 1")

    def __neg__(self) -> "Coef":
        return Coef(self.entry, -self.sign)

    def evaluate(self, nvars: int) -> SymPoly:
        value = evaluate_entry(self.entry, nvars)
        return value if self.sign > 0 else -value

    def __str__(self) -> str:
        return ("" if self.sign > 0 else "-") + str(self.entry)

    def to_json(self) -> dict:
        out = entry_to_json(self.entry)
        out["sign"] = self.sign
        return out


@dataclass(frozen=True)
class AddRow:
    """``row[target] += coef * row[source]``."""

    target: int
    source: int
    coef: Coef


@dataclass(frozen=True)
class AddCol:
    """``col[target] += coef * col[source]``."""

    target: int
    source: int
    coef: Coef


@dataclass(frozen=True)
class ScaleRow:
    row: int
    unit: int = -1


@dataclass(frozen=True)
class ScaleCol:
    col: int
    unit: int = -1


@dataclass(frozen=True)
class SwapRows:
    i: int
    j: int


@dataclass(frozen=True)
class SwapCols:
    i: int
    j: int


@dataclass(frozen=True)
class Stabilize:
    """``M -> diag(1, M)``."""


@dataclass(frozen=True)
class Destabilize:
    """``diag(1, M) -> M``; the first row and column must be a unit vector."""


Op = Union[AddRow, AddCol, ScaleRow, ScaleCol, SwapRows, SwapCols, Stabilize, Destabilize]
OP_TYPES = (AddRow, AddCol, ScaleRow, ScaleCol, SwapRows, SwapCols, Stabilize, Destabilize)


def inverse(op: Op) -> Op:
    if isinstance(op, AddRow):
        return AddRow(op.target, op.source, -op.coef)
    if isinstance(op, AddCol):
        return AddCol(op.target, op.source, -op.coef)
    if isinstance(op, Stabilize):
        return Destabilize()
    if isinstance(op, Destabilize):
        return Stabilize()
    return op


def _check(index: int, size: int, what: str) -> None:
    if not 0 <= index < size:
        raise OpError(f"{what} index {index} out of range for a {size}x{size} matrix")


def apply_op(m: Sequence[Sequence[SymPoly]], op: Op, nvars: int) -> PolyMatrix:
    """Return a new matrix; ``m`` is left untouched."""
    n = len(m)
    out = [list(row) for row in m]
    if isinstance(op, AddRow):
        _check(op.target, n, "row")
        _check(op.source, n, "row")
        if op.target == op.source:
            raise OpError("cannot add a row to itself")
        c = op.coef.evaluate(nvars)
        out[op.target] = [a + c * b for a, b in zip(out[op.target], out[op.source])]
    elif isinstance(op, AddCol):
        _check(op.target, n, "column")
        _check(op.source, n, "column")
        if op.target == op.source:
            raise OpError("cannot add a column to itself")
        c = op.coef.evaluate(nvars)
        for row in out:
            row[op.target] = row[op.target] + c * row[op.source]
    elif isinstance(op, ScaleRow):
        _check(op.row, n, "row")
        if op.unit not in (1, -1):
            raise OpError("rows may only be scaled by a unit")
        out[op.row] = [a * op.unit for a in out[op.row]]
    elif isinstance(op, ScaleCol):
        _check(op.col, n, "column")
        if op.unit not in (1, -1):
            raise OpError("columns may only be scaled by a unit")
        for row in out:
            row[op.col] = row[op.col] * op.unit
    elif isinstance(op, SwapRows):
        _check(op.i, n, "row")
        _check(op.j, n, "row")
        out[op.i], out[op.j] = out[op.j], out[op.i]
    elif isinstance(op, SwapCols):
        _check(op.i, n, "column")
        _check(op.j, n, "column")
        for row in out:
            row[op.i], row[op.j] = row[op.j], row[op.i]
    elif isinstance(op, Stabilize):
        zero = SymPoly.zero(nvars)
        out = [[SymPoly.one(nvars)] + [zero] * n] + [[zero] + row for row in out]
    elif isinstance(op, Destabilize):
        if n == 0:
            raise OpError("cannot destabilize an empty matrix")
        if out[0][0] != SymPoly.one(nvars):
            raise OpError("destabilize needs a 1 in the corner")
        if any(not out[0][b].is_zero() for b in range(1, n)) or any(not out[a][0].is_zero() for a in range(1, n)):
            raise OpError("destabilize needs the first row and column to vanish off the corner")
        out = [row[1:] for row in out[1:]]
    else:
        raise OpError(f"unknown operation {op!r}")
    return out


def op_to_json(op: Op) -> dict:
    if isinstance(op, (AddRow, AddCol)):
        name = "addRow" if isinstance(op, AddRow) else "addCol"
        return {"op": name, "target": op.target, "source": op.source, "coef": op.coef.to_json()}
    if isinstance(op, ScaleRow):
        return {"op": "scaleRow", "row": op.row, "unit": op.unit}
    if isinstance(op, ScaleCol):
        return {"op": "scaleCol", "col": op.col, "unit": op.unit}
    if isinstance(op, SwapRows):
        return {"op": "swapRows", "i": op.i, "j": op.j}
    if isinstance(op, SwapCols):
        return {"op": "swapCols", "i": op.i, "j": op.j}
    return {"op": "stabilize" if isinstance(op, Stabilize) else "destabilize"}


def describe(op: Op) -> str:
    """One line of human-readable trace, with 1-based row and column numbers."""
    if isinstance(op, (AddRow, AddCol)):
        kind = "row" if isinstance(op, AddRow) else "col"
        verb = "add" if op.coef.sign > 0 else "subtract"
        return f"{verb} {op.coef.entry} x {kind} {op.source + 1} {'to' if op.coef.sign > 0 else 'from'} {kind} {op.target + 1}"
    if isinstance(op, ScaleRow):
        return f"multiply row {op.row + 1} by {op.unit}"
    if isinstance(op, ScaleCol):
        return f"multiply col {op.col + 1} by {op.unit}"
    if isinstance(op, SwapRows):
        return f"swap rows {op.i + 1} and {op.j + 1}"
    if isinstance(op, SwapCols):
        return f"swap cols {op.i + 1} and {op.j + 1}"
    if isinstance(op, Stabilize):
        return "stabilize: border with a unit row and column"
    return "destabilize: drop the unit first row and column"


@dataclass(frozen=True)
class Checkpoint:
    """After the first ``position`` ops the matrix equals the named form of ``decomposition``."""

    position: int
    decomposition: OutsideDecomposition
    form: str = "canonical"
    note: str = ""

    def __post_init__(self) -> None:
        if self.form not in ("canonical", "giambelli"):
            raise ValueError(f"unknown matrix form {self.form!r}")


@dataclass(frozen=True)
class OpLog:
    """A replayable sequence of operations between two described matrices.

    ``annotations[k]`` names the rule that produced ``ops[k]``; ``cases`` lists
    the twist case of each step in order.
    """

    start: Checkpoint
    ops: Tuple[Op, ...]
    end: Checkpoint
    annotations: Tuple[str, ...] = ()
    cases: Tuple[str, ...] = ()
    checkpoints: Tuple[Checkpoint, ...] = field(default=(), compare=False)
    transposed: bool = False

    def __post_init__(self) -> None:
        if self.annotations and len(self.annotations) != len(self.ops):
            raise ValueError("one annotation per operation")

    def __len__(self) -> int:
        return len(self.ops)

    def counts(self) -> dict:
        out: dict = {}
        for op in self.ops:
            name = op_to_json(op)["op"]
            out[name] = out.get(name, 0) + 1
        return out


def invert_log(log: OpLog) -> OpLog:
    """The log running from ``log.end`` back to ``log.start``."""
    n = len(log.ops)
    return OpLog(
        start=Checkpoint(0, log.end.decomposition, log.end.form, log.end.note),
        ops=tuple(inverse(op) for op in reversed(log.ops)),
        end=Checkpoint(n, log.start.decomposition, log.start.form, log.start.note),
        annotations=tuple(reversed(log.annotations)),
        cases=tuple(reversed(log.cases)),
        checkpoints=tuple(
            Checkpoint(n - c.position, c.decomposition, c.form, c.note) for c in reversed(log.checkpoints)
        ),
        transposed=log.transposed,
    )


def transpose_op(op: Op) -> Op:
    """The operation acting on ``M^T`` the way ``op`` acts on ``M``."""
    if isinstance(op, AddRow):
        return AddCol(op.target, op.source, op.coef)
    if isinstance(op, AddCol):
        return AddRow(op.target, op.source, op.coef)
    if isinstance(op, ScaleRow):
        return ScaleCol(op.row, op.unit)
    if isinstance(op, ScaleCol):
        return ScaleRow(op.col, op.unit)
    if isinstance(op, SwapRows):
        return SwapCols(op.i, op.j)
    if isinstance(op, SwapCols):
        return SwapRows(op.i, op.j)
    return op


def transpose_log(log: OpLog) -> OpLog:
    """Restate a log for the transposed matrices (row and column operations exchange)."""
    return OpLog(
        start=log.start,
        ops=tuple(transpose_op(op) for op in log.ops),
        end=log.end,
        annotations=log.annotations,
        cases=log.cases,
        checkpoints=log.checkpoints,
        transposed=not log.transposed,
    )


def _checkpoint_json(c: Checkpoint) -> dict:
    out = decomposition_to_json(c.decomposition)
    out["form"] = c.form
    out["position"] = c.position
    if c.note:
        out["note"] = c.note
    return out


def log_to_json(log: OpLog) -> dict:
    ops = []
    for k, op in enumerate(log.ops):
        item = op_to_json(op)
        if log.annotations:
            item["note"] = log.annotations[k]
        ops.append(item)
    return {
        "start": _checkpoint_json(log.start),
        "ops": ops,
        "end": _checkpoint_json(log.end),
        "cases": list(log.cases),
        "checkpoints": [_checkpoint_json(c) for c in log.checkpoints],
        "transposed": log.transposed,
    }


def dumps(log: OpLog) -> str:
    return json.dumps(log_to_json(log), sort_keys=True)


def trace(log: OpLog) -> str:
    """Readable listing: one line per op, with checkpoints interleaved."""
    marks: dict = {}
    for c in log.checkpoints:
        marks.setdefault(c.position, []).append(c)
    lines = []
    for k in range(len(log.ops) + 1):
        for c in marks.get(k, ()):
            label = c.note or c.form
            lines.append(f"== {label}: {format_decomposition(c.decomposition)}")
        if k < len(log.ops):
            note = f"  [{log.annotations[k]}]" if log.annotations else ""
            lines.append(f"{k + 1:4d}. {describe(log.ops[k])}{note}")
    return "\n".join(lines)
