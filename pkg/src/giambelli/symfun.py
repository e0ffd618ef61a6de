"""Exact symmetric polynomials in finitely many variables.

A :class:`SymPoly` in ``N`` variables is stored by the coefficients of its
monomials whose exponent vector is weakly decreasing (a partition with at most
``N`` parts); every other coefficient follows by symmetry. Products are
computed directly on that data, which keeps determinants of Schur-function
matrices cheap. Symmetric functions of degree at most ``N`` are determined by
their truncation to ``N`` variables, so equality of truncations decides
equality in the ring of symmetric functions.
"""

from __future__ import annotations

import itertools
import json
from collections import defaultdict
from functools import lru_cache
from typing import Dict, Iterable, Iterator, Mapping, Sequence, Tuple

from .shapes import Partition, SkewShape, partitions
from .strips import glue_right, glue_up

Exponent = Tuple[int, ...]


def _sorted_key(exp: Iterable[int]) -> Partition:
    return tuple(sorted((e for e in exp if e), reverse=True))


@lru_cache(maxsize=None)
def _bounded_partitions(n: int, nvars: int) -> Tuple[Partition, ...]:
    return tuple(partitions(n, max_len=nvars))


def _splits(alpha: Partition, size: int) -> Iterator[Tuple[Partition, Partition]]:
    """All ``beta <= alpha`` componentwise with ``|beta| = size``, as sorted (beta, alpha - beta)."""
    n = len(alpha)
    tails = [0] * (n + 1)
    for k in range(n - 1, -1, -1):
        tails[k] = tails[k + 1] + alpha[k]
    beta = [0] * n

    def rec(k: int, left: int) -> Iterator[Tuple[Partition, Partition]]:
        if k == n:
            if left == 0:
                yield _sorted_key(beta), _sorted_key(a - b for a, b in zip(alpha, beta))
            return
        for v in range(max(0, left - tails[k + 1]), min(alpha[k], left) + 1):
            beta[k] = v
            yield from rec(k + 1, left - v)
        beta[k] = 0

    yield from rec(0, size)


class SymPoly:
    """A symmetric polynomial with integer coefficients in ``nvars`` variables."""

    __slots__ = ("nvars", "_coeffs", "_by_degree")

    def __init__(self, nvars: int, coeffs: Mapping[Sequence[int], int] | None = None):
        if nvars < 1:
            raise ValueError("need at least one variable")
        self.nvars = nvars
        clean: Dict[Partition, int] = {}
        for key, value in (coeffs or {}).items():
            key = tuple(key)
            if list(key) != sorted(key, reverse=True) or any(k <= 0 for k in key):
                raise ValueError(f"coefficient key {key} is not a partition")
            if len(key) > nvars:
                raise ValueError(f"partition {key} has more than {nvars} parts")
            if value:
                clean[key] = clean.get(key, 0) + int(value)
        self._coeffs = {k: v for k, v in clean.items() if v}
        self._by_degree = None

    # construction -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "SymPoly":
        return cls(nvars)

    @classmethod
    def constant(cls, value: int, nvars: int) -> "SymPoly":
        return cls(nvars, {(): value})

    @classmethod
    def one(cls, nvars: int) -> "SymPoly":
        return cls.constant(1, nvars)

    @classmethod
    def from_terms(cls, nvars: int, terms: Mapping[Sequence[int], int]) -> "SymPoly":
        """Build from a full monomial expansion, checking that it is symmetric."""
        terms = {tuple(k): v for k, v in terms.items() if v}
        for exp in terms:
            if len(exp) != nvars:
                raise ValueError(f"exponent {exp} does not have {nvars} entries")
        dominant = {k: v for k, v in terms.items() if list(k) == sorted(k, reverse=True)}
        poly = cls(nvars, {_sorted_key(k): v for k, v in dominant.items()})
        if poly.terms != terms:
            raise ValueError("polynomial is not symmetric")
        return poly

    # inspection -------------------------------------------------------

    @property
    def coeffs(self) -> Dict[Partition, int]:
        """Coefficient of each dominant monomial, keyed by the partition of its exponents."""
        return dict(self._coeffs)

    def coefficient(self, exp: Sequence[int]) -> int:
        """Coefficient of the monomial ``x^exp`` (exp of length ``nvars``)."""
        if len(exp) != self.nvars:
            raise ValueError(f"exponent must have {self.nvars} entries")
        return self._coeffs.get(_sorted_key(exp), 0)

    @property
    def terms(self) -> Dict[Exponent, int]:
        """Full monomial expansion ``{exponent vector: coefficient}``."""
        out: Dict[Exponent, int] = {}
        for part, coef in self._coeffs.items():
            padded = part + (0,) * (self.nvars - len(part))
            for exp in set(itertools.permutations(padded)):
                out[exp] = coef
        return out

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        return max((sum(k) for k in self._coeffs), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self._coeffs}) <= 1

    def _degrees(self) -> Dict[int, Dict[Partition, int]]:
        if self._by_degree is None:
            groups: Dict[int, Dict[Partition, int]] = defaultdict(dict)
            for k, v in self._coeffs.items():
                groups[sum(k)][k] = v
            self._by_degree = dict(groups)
        return self._by_degree

    # ring operations --------------------------------------------------

    def _coerce(self, other) -> "SymPoly":
        if isinstance(other, int):
            return SymPoly.constant(other, self.nvars)
        if not isinstance(other, SymPoly):
            return NotImplemented
        if other.nvars != self.nvars:
            raise ValueError(f"variable count mismatch: {self.nvars} vs {other.nvars}")
        return other

    def __add__(self, other) -> "SymPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._coeffs)
        for k, v in other._coeffs.items():
            out[k] = out.get(k, 0) + v
        return SymPoly(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "SymPoly":
        return SymPoly(self.nvars, {k: -v for k, v in self._coeffs.items()})

    def __sub__(self, other) -> "SymPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other) -> "SymPoly":
        return (-self) + other

    def __mul__(self, other) -> "SymPoly":
        if isinstance(other, int):
            return SymPoly(self.nvars, {k: v * other for k, v in self._coeffs.items()})
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return SymPoly(self.nvars)
        if self._coeffs == {(): 1}:
            return other
        if other._coeffs == {(): 1}:
            return self
        out: Dict[Partition, int] = {}
        left, right = self._degrees(), other._degrees()
        for da, fa in left.items():
            for db, gb in right.items():
                for alpha in _bounded_partitions(da + db, self.nvars):
                    total = 0
                    for beta, gamma in _splits(alpha, da):
                        x = fa.get(beta)
                        if x is None:
                            continue
                        y = gb.get(gamma)
                        if y is not None:
                            total += x * y
                    if total:
                        out[alpha] = out.get(alpha, 0) + total
        return SymPoly(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = SymPoly.constant(other, self.nvars)
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._coeffs.items())))

    def __repr__(self) -> str:
        if not self._coeffs:
            return f"SymPoly({self.nvars}, 0)"
        body = " + ".join(f"{v}*m{list(k)}" for k, v in sorted(self._coeffs.items(), reverse=True))
        return f"SymPoly({self.nvars}, {body})"

    def to_json(self) -> dict:
        """``{"nvars": N, "terms": [{"exp": [...], "coef": c}, ...]}`` with terms sorted lexicographically."""
        terms = sorted(self.terms.items())
        return {"nvars": self.nvars, "terms": [{"exp": list(e), "coef": c} for e, c in terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> "SymPoly":
        return cls.from_terms(data["nvars"], {tuple(t["exp"]): t["coef"] for t in data["terms"]})


def _horizontal_strips(inner: Partition, outer: Partition, size: int) -> Iterator[Partition]:
    """Partitions ``nu`` with ``inner <= nu <= outer`` and ``nu/inner`` a horizontal strip of ``size`` boxes."""
    n = len(outer)
    inner = inner + (0,) * (n - len(inner))
    nu = [0] * n

    def rec(r: int, left: int) -> Iterator[Partition]:
        if r == n:
            if left == 0:
                yield tuple(nu)
            return
        cap = outer[r] if r == 0 else min(outer[r], inner[r - 1])
        for v in range(inner[r], cap + 1):
            if v - inner[r] > left:
                break
            nu[r] = v
            yield from rec(r + 1, left - (v - inner[r]))

    yield from rec(0, size)


def kostka(shape: SkewShape, weight: Sequence[int]) -> int:
    """Number of semistandard tableaux of ``shape`` with ``weight[k]`` entries equal to ``k + 1``.

    Tableaux are built value by value: the boxes holding ``k + 1`` form a
    horizontal strip.
    """
    outer = shape.outer
    inner = shape.inner + (0,) * (len(outer) - len(shape.inner))
    weight = tuple(weight)
    if sum(weight) != shape.size:
        return 0

    @lru_cache(maxsize=None)
    def count(nu: Partition, k: int) -> int:
        if k == len(weight):
            return 1 if nu == outer else 0
        return sum(count(nxt, k + 1) for nxt in _horizontal_strips(nu, outer, weight[k]))

    return count(tuple(inner), 0)


@lru_cache(maxsize=4096)
def schur_poly(shape: SkewShape, nvars: int) -> SymPoly:
    """The skew Schur polynomial ``s_shape(x_1, ..., x_nvars)``; 1 for the empty shape."""
    if nvars < 1:
        raise ValueError("need at least one variable")
    coeffs = {}
    for alpha in _bounded_partitions(shape.size, nvars):
        k = kostka(shape, alpha)
        if k:
            coeffs[alpha] = k
    return SymPoly(nvars, coeffs)


def count_ssyt(shape: SkewShape, weight: Sequence[int]) -> int:
    """Count semistandard fillings of ``shape`` with content ``weight`` by direct backtracking.

    Boxes are filled row by row; each value must be at least its left
    neighbour and exceed the value above it.
    """
    boxes = sorted(shape.boxes)
    left = list(weight)
    filled: Dict[Tuple[int, int], int] = {}

    def rec(k: int) -> int:
        if k == len(boxes):
            return 1
        r, c = boxes[k]
        low = max(filled.get((r, c - 1), 1), filled.get((r - 1, c), 0) + 1)
        total = 0
        for v in range(low, len(left) + 1):
            if left[v - 1]:
                left[v - 1] -= 1
                filled[(r, c)] = v
                total += rec(k + 1)
                del filled[(r, c)]
                left[v - 1] += 1
        return total

    return rec(0)


def ssyt_expansion(shape: SkewShape, nvars: int) -> SymPoly:
    """``s_shape`` in ``nvars`` variables computed by enumerating tableaux; an oracle for :func:`schur_poly`."""
    coeffs = {}
    for alpha in _bounded_partitions(shape.size, nvars):
        k = count_ssyt(shape, alpha)
        if k:
            coeffs[alpha] = k
    return SymPoly(nvars, coeffs)


def complete_h(k: int, nvars: int) -> SymPoly:
    """Complete homogeneous ``h_k``; ``h_0 = 1`` and ``h_k = 0`` for ``k < 0``."""
    if k < 0:
        return SymPoly.zero(nvars)
    return SymPoly(nvars, {alpha: 1 for alpha in _bounded_partitions(k, nvars)})


def elementary_e(k: int, nvars: int) -> SymPoly:
    """Elementary ``e_k``; ``e_0 = 1``, zero for ``k < 0`` and ``k > nvars``."""
    if k < 0 or k > nvars:
        return SymPoly.zero(nvars)
    return SymPoly(nvars, {(1,) * k: 1})


def check_glue_identity(I: SkewShape, J: SkewShape, nvars: int | None = None) -> bool:
    """Whether ``s_I * s_J == s_(I glued right of J) + s_(I glued below J)`` in ``nvars`` variables."""
    if I.is_empty or J.is_empty:
        raise ValueError("gluing identity needs nonempty diagrams")
    n = I.size + J.size
    if nvars is None:
        nvars = n
    if nvars < n:
        raise ValueError(f"need at least {n} variables for a faithful check")
    lhs = schur_poly(I, nvars) * schur_poly(J, nvars)
    rhs = schur_poly(glue_right(I, J), nvars) + schur_poly(glue_up(I, J), nvars)
    return lhs == rhs


def dumps(poly: SymPoly) -> str:
    return json.dumps(poly.to_json(), sort_keys=True)
