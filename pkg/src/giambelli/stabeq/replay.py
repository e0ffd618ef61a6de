"""Independent replay of operation logs and stage-by-stage verification of chains."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from ..gmatrix import canonical_form, determinant, evaluate, giambelli_matrix
from ..shapes import SkewShape
from ..strips import OutsideDecomposition
from ..symfun import SymPoly, schur_poly
from .ops import OP_TYPES, Checkpoint, OpError, OpLog, PolyMatrix, apply_op


class ReplayError(ValueError):
    def __init__(self, index: int, cause: Exception):
        super().__init__(f"operation {index} failed: {cause}")
        self.index = index


def replay(start: Sequence[Sequence[SymPoly]], log: OpLog, nvars: int) -> PolyMatrix:
    m = [list(row) for row in start]
    for k, op in enumerate(log.ops):
        try:
            m = apply_op(m, op, nvars)
        except OpError as exc:
            raise ReplayError(k, exc) from exc
    return m


def expected_matrix(c: Checkpoint, nvars: int) -> PolyMatrix:
    sym = canonical_form(c.decomposition) if c.form == "canonical" else giambelli_matrix(c.decomposition)
    return evaluate(sym, nvars)


def faithful_vars(shape: SkewShape) -> int:
    """Enough variables for every entry: the box count or the number of contents, whichever is larger."""
    if shape.is_empty:
        return 1
    return max(shape.size, shape.c_max - shape.c_min + 1)


@dataclass
class StageReport:
    position: int
    note: str
    decomposition: OutsideDecomposition
    matches: bool
    det_sign: Optional[int]


@dataclass
class ChainReport:
    shape: SkewShape
    nvars: int
    op_counts: dict
    endpoint_match: bool
    stages: List[StageReport] = field(default_factory=list)
    illegal_ops: int = 0
    error: Optional[str] = None

    @property
    def ok(self) -> bool:
        return (
            self.error is None
            and self.endpoint_match
            and self.illegal_ops == 0
            and all(s.matches and s.det_sign in (1, -1) for s in self.stages)
        )

    def summary(self) -> str:
        status = "ok" if self.ok else "FAIL"
        bad = sum(1 for s in self.stages if not s.matches)
        extra = f" error: {self.error}" if self.error else ""
        return (
            f"{self.shape}: {status} ({sum(self.op_counts.values())} ops, {len(self.stages)} checkpoints, "
            f"{bad} mismatched){extra}"
        )


def _sign_of(det: SymPoly, target: SymPoly) -> Optional[int]:
    if det == target:
        return 1
    if det == -target:
        return -1
    return None


def verify_log(shape: SkewShape, log: OpLog, nvars: Optional[int] = None, check_det: bool = True) -> ChainReport:
    """Replay ``log`` op by op, comparing against every checkpoint."""
    nvars = nvars or faithful_vars(shape)
    report = ChainReport(shape, nvars, log.counts(), False)
    report.illegal_ops = sum(1 for op in log.ops if not isinstance(op, OP_TYPES))
    target = schur_poly(shape, nvars)
    marks: dict = {}
    for c in log.checkpoints:
        marks.setdefault(c.position, []).append(c)
    m = expected_matrix(log.start, nvars)

    def check(position: int, current: PolyMatrix) -> None:
        for c in marks.get(position, ()):
            want = expected_matrix(c, nvars)
            sign = _sign_of(determinant(current, nvars), target) if check_det else 1
            report.stages.append(StageReport(position, c.note or c.form, c.decomposition, current == want, sign))

    try:
        check(0, m)
        for k, op in enumerate(log.ops):
            try:
                m = apply_op(m, op, nvars)
            except OpError as exc:
                raise ReplayError(k, exc) from exc
            check(k + 1, m)
    except ReplayError as exc:
        report.error = str(exc)
        return report
    report.endpoint_match = m == expected_matrix(log.end, nvars)
    return report


def verify_chain(shape: SkewShape, nvars: Optional[int] = None) -> ChainReport:
    from .builder import chain

    return verify_log(shape, chain(shape), nvars)
