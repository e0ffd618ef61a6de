"""Giambelli-type matrices of outside decompositions and the Jacobi-Trudi matrices.

Matrices are oriented with rows indexed by initial contents ``p`` and columns
by terminal contents ``q``; entry ``(a, b)`` is ``s_phi[p_a, q_b]``. In this
orientation the canonical form of the horizontal decomposition is the
transpose of the Jacobi-Trudi matrix, and the matrix of the vertical
decomposition (columns of the diagram in order) is the dual Jacobi-Trudi
matrix itself.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import List, Optional, Sequence, Tuple, Union

from .shapes import SkewShape, conjugate
from .strips import (
    CuttingStrip,
    OutsideDecomposition,
    Segment,
    SegmentKind,
    segment,
    strip_to_skew_shape,
)
from .symfun import SymPoly, schur_poly


@dataclass(frozen=True)
class One:
    def __str__(self) -> str:
        return "1"


@dataclass(frozen=True)
class Zero:
    def __str__(self) -> str:
        return "·"


@dataclass(frozen=True)
class SchurOf:
    """The skew Schur function of a nonempty cutting-strip segment."""

    seg: Segment

    @property
    def shape(self) -> SkewShape:
        return strip_to_skew_shape(self.seg)

    def __str__(self) -> str:
        return schur_label(self.shape)


Entry = Union[SchurOf, One, Zero]
ONE = One()
ZERO = Zero()


def entry_of(seg: Segment) -> Entry:
    kind = seg.kind
    if kind is SegmentKind.STRIP:
        return SchurOf(seg)
    if kind is SegmentKind.EMPTY:
        return ONE
    return ZERO


def schur_label(shape: SkewShape) -> str:
    """``s[8,1]`` for straight shapes, ``s[2,2/1]`` for skew ones."""
    return f"s[{shape}]"


def tex_label(shape: SkewShape) -> str:
    """Exponent notation as in ``s_{71^2}``; skew shapes fall back to ``s_{22/1}``."""

    def compact(parts) -> str:
        out = []
        k = 0
        while k < len(parts):
            run = 1
            while k + run < len(parts) and parts[k + run] == parts[k]:
                run += 1
            text = str(parts[k]) if parts[k] < 10 else "{%d}" % parts[k]
            out.append(text if run == 1 else f"{text}^{run}")
            k += run
        return "".join(out)

    body = compact(shape.outer)
    if shape.inner:
        body += "/" + compact(shape.inner)
    return "s_{%s}" % body


@dataclass(frozen=True)
class SymMatrix:
    """A square matrix of symbolic entries with the contents labelling its rows and columns.

    ``row_perm``/``col_perm`` are set on canonical forms: entry ``k`` of
    ``row_perm`` is the index of the strip whose initial content sits in row ``k``.
    """

    entries: Tuple[Tuple[Entry, ...], ...]
    row_labels: Tuple[int, ...]
    col_labels: Tuple[int, ...]
    row_perm: Optional[Tuple[int, ...]] = None
    col_perm: Optional[Tuple[int, ...]] = None

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def __getitem__(self, idx):
        a, b = idx
        return self.entries[a][b]

    def transpose(self) -> "SymMatrix":
        return SymMatrix(
            tuple(zip(*self.entries)) if self.entries else (),
            self.col_labels,
            self.row_labels,
        )

    def labels(self) -> List[List[str]]:
        return [[str(e) for e in row] for row in self.entries]


def _matrix(phi: Optional[CuttingStrip], ps: Sequence[int], qs: Sequence[int], **extra) -> SymMatrix:
    entries = tuple(tuple(entry_of(segment(phi, p, q)) for q in qs) for p in ps)
    return SymMatrix(entries, tuple(ps), tuple(qs), **extra)


def giambelli_matrix(pi: OutsideDecomposition) -> SymMatrix:
    """``M(pi)``: entry ``(a, b)`` is ``s_phi[p(theta_a), q(theta_b)]`` in strip order."""
    ps = [s.p for s in pi.strips]
    qs = [s.q for s in pi.strips]
    return _matrix(pi.cutting, ps, qs)


def permutation_sign(perm: Sequence[int]) -> int:
    sign, seen = 1, set()
    for start in range(len(perm)):
        if start in seen:
            continue
        length, k = 0, start
        while k not in seen:
            seen.add(k)
            k = perm[k]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def canonical_form(pi: OutsideDecomposition) -> SymMatrix:
    """``C(pi)``: rows by initial contents and columns by terminal contents, both decreasing."""
    ps = [s.p for s in pi.strips]
    qs = [s.q for s in pi.strips]
    if len(set(ps)) != len(ps) or len(set(qs)) != len(qs):
        raise RuntimeError(f"repeated initial or terminal contents in {pi}")
    row_perm = tuple(sorted(range(len(ps)), key=lambda k: -ps[k]))
    col_perm = tuple(sorted(range(len(qs)), key=lambda k: -qs[k]))
    return _matrix(
        pi.cutting,
        [ps[k] for k in row_perm],
        [qs[k] for k in col_perm],
        row_perm=row_perm,
        col_perm=col_perm,
    )


def canonical_sign(pi: OutsideDecomposition) -> int:
    """Product of the signs of the two sorting permutations, so ``det C = sign * det M``."""
    c = canonical_form(pi)
    return permutation_sign(c.row_perm) * permutation_sign(c.col_perm)


def _row_strip_matrix(terms: Sequence[int], inits: Sequence[int]) -> SymMatrix:
    """Rows by terminal contents, columns by initial ones, entries ``h`` of the row segments."""
    if not terms:
        return SymMatrix((), (), ())
    lo, hi = min(inits), max(terms)
    phi = CuttingStrip(lo, "R" * max(hi - lo, 0))
    rows = tuple(tuple(entry_of(Segment(phi, p, q)) for p in inits) for q in terms)
    return SymMatrix(rows, tuple(terms), tuple(inits))


def jacobi_trudi(shape: SkewShape) -> SymMatrix:
    """``(h_{lambda_i - mu_j - i + j})``, each ``h_k`` the segment ``[mu_j - j + 1, lambda_i - i]`` of a row.

    Row labels are the terminal contents ``lambda_i - i``, column labels the
    initial contents ``mu_j - j + 1``.
    """
    lam, mu = shape.outer, shape.inner
    mu_ = lambda j: mu[j - 1] if j <= len(mu) else 0
    n = len(lam)
    return _row_strip_matrix(
        [lam[i - 1] - i for i in range(1, n + 1)], [mu_(j) - j + 1 for j in range(1, n + 1)]
    )


def dual_jacobi_trudi(shape: SkewShape) -> SymMatrix:
    """``(e_{lambda'_i - mu'_j - i + j})``, each ``e_k`` the segment ``[-lambda'_i + i, -mu'_j + j - 1]`` of a column.

    Row labels are the initial contents, column labels the terminal ones.
    """
    lam, mu = conjugate(shape.outer), conjugate(shape.inner)
    mu_ = lambda j: mu[j - 1] if j <= len(mu) else 0
    n = len(lam)
    ps = [-lam[i - 1] + i for i in range(1, n + 1)]
    qs = [-mu_(j) + j - 1 for j in range(1, n + 1)]
    if not ps:
        return SymMatrix((), (), ())
    lo, hi = min(ps), max(qs)
    phi = CuttingStrip(lo, "U" * max(hi - lo, 0))
    rows = tuple(tuple(entry_of(Segment(phi, p, q)) for q in qs) for p in ps)
    return SymMatrix(rows, tuple(ps), tuple(qs))


PolyMatrix = List[List[SymPoly]]


def evaluate_entry(entry: Entry, nvars: int) -> SymPoly:
    if isinstance(entry, SchurOf):
        return schur_poly(entry.shape, nvars)
    if isinstance(entry, One):
        return SymPoly.one(nvars)
    return SymPoly.zero(nvars)


def max_degree(m: SymMatrix) -> int:
    return max((e.seg.size for row in m.entries for e in row if isinstance(e, SchurOf)), default=0)


def evaluate(m: SymMatrix, nvars: int) -> PolyMatrix:
    """Entries as polynomials in ``nvars`` variables.

    Truncation to finitely many variables is a ring map, so determinants
    commute with it; it is injective on degrees up to ``nvars``.
    """
    return [[evaluate_entry(e, nvars) for e in row] for row in m.entries]


def determinant(m: Sequence[Sequence[SymPoly]], nvars: Optional[int] = None) -> SymPoly:
    """Exact determinant by Laplace expansion along rows, memoized on the set of used columns."""
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        if nvars is None:
            raise ValueError("variable count needed for a 0x0 determinant")
        return SymPoly.one(nvars)
    nvars = m[0][0].nvars
    memo = {}

    def minor(row: int, used: int) -> SymPoly:
        # determinant of rows row.. over the columns not in `used`
        if row == n:
            return SymPoly.one(nvars)
        key = used
        if key in memo:
            return memo[key]
        total = SymPoly.zero(nvars)
        sign = 1
        for col in range(n):
            if used >> col & 1:
                continue
            a = m[row][col]
            if not a.is_zero():
                term = a * minor(row + 1, used | 1 << col)
                total = total + term if sign > 0 else total - term
            sign = -sign
        memo[key] = total
        return total

    return minor(0, 0)


# rendering --------------------------------------------------------------


def render_ascii(m: SymMatrix) -> str:
    cells = m.labels()
    if not cells:
        return "()"
    width = [max(len(row[b]) for row in cells) for b in range(m.cols)]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(row, width)).rstrip() for row in cells)


def render_tex(m: SymMatrix) -> str:
    def cell(e: Entry) -> str:
        if isinstance(e, SchurOf):
            return tex_label(e.shape)
        return "1" if isinstance(e, One) else r"\cdot"

    body = " \\\\\n".join(" & ".join(cell(e) for e in row) for row in m.entries)
    return "\\begin{pmatrix}\n" + body + "\n\\end{pmatrix}"


def entry_to_json(e: Entry) -> dict:
    if isinstance(e, SchurOf):
        return {"kind": "schur", "shape": str(e.shape)}
    return {"kind": "one"} if isinstance(e, One) else {"kind": "zero"}


def matrix_to_json(m: SymMatrix) -> dict:
    return {
        "rows": m.rows,
        "cols": m.cols,
        "row_labels": list(m.row_labels),
        "col_labels": list(m.col_labels),
        "entries": [[entry_to_json(e) for e in row] for row in m.entries],
    }


def dumps(m: SymMatrix) -> str:
    return json.dumps(matrix_to_json(m), sort_keys=True)
