"""Verification suites over corpora of shapes, shared by the CLI and the test-suite.

Each suite returns a :class:`CheckResult` listing every failing instance, so a
caller can print one line per suite and still inspect what went wrong.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Iterable, List, Optional

from .gmatrix import canonical_form, canonical_sign, determinant, evaluate, giambelli_matrix
from .shapes import SkewShape, is_edgewise_connected
from .strips import (
    CuttingStrip,
    OutsideDecomposition,
    cutting_strip,
    decomposition_from_cutting_strip,
    diagonal_twist_case,
    enumerate_decompositions,
    glue_right,
    glue_up,
    init_term,
    segment,
    strip_to_skew_shape,
    twist,
)
from .symfun import check_glue_identity, schur_poly, ssyt_expansion


@dataclass
class CheckResult:
    name: str
    checked: int = 0
    failures: List[str] = field(default_factory=list)
    notes: List[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def fail(self, message: str) -> None:
        self.failures.append(message)

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        extra = f", first failure: {self.failures[0]}" if self.failures else ""
        return f"{status} {self.name}: {self.checked} checked, {len(self.failures)} failed{extra}"


def _decompositions(shapes: Iterable[SkewShape]):
    for s in shapes:
        if s.is_empty or not is_edgewise_connected(s):
            continue
        for pi in enumerate_decompositions(s):
            yield s, pi


def determinant_suite(shapes: Iterable[SkewShape], with_sign: bool = True) -> List[CheckResult]:
    """``det M(pi)`` against the tableau oracle, and ``det C(pi)`` against the sorting sign."""
    dets = CheckResult("giambelli determinant equals the skew Schur function")
    signs = CheckResult("canonical determinant carries the sorting sign")
    oracle_cache: dict = {}
    for s, pi in _decompositions(shapes):
        n = s.size
        if s not in oracle_cache:
            oracle_cache[s] = ssyt_expansion(s, n)
        target = oracle_cache[s]
        dets.checked += 1
        if determinant(evaluate(giambelli_matrix(pi), n), n) != target:
            dets.fail(f"{s} {pi}")
        if with_sign:
            signs.checked += 1
            got = determinant(evaluate(canonical_form(pi), n), n)
            if got != canonical_sign(pi) * target:
                observed = "+" if got == target else "-" if got == -target else "?"
                signs.fail(f"{s} {pi}: observed sign {observed}")
    return [dets, signs] if with_sign else [dets]


def round_trip_suite(shapes: Iterable[SkewShape]) -> CheckResult:
    """Decomposition to cutting strip and back is the identity."""
    result = CheckResult("decomposition and cutting strip round trip")
    for s, pi in _decompositions(shapes):
        result.checked += 1
        phi = cutting_strip(pi)
        back = decomposition_from_cutting_strip(s, phi)
        if back != pi or cutting_strip(back) != phi:
            result.fail(f"{s} {pi}")
    return result


def twist_case_matches(pi: OutsideDecomposition, new: OutsideDecomposition, i: int) -> List[str]:
    """Names of the cases whose membership conditions and set equalities all hold."""
    old, now = init_term(pi), init_term(new)
    I, T, I2, T2 = old.init, old.term, now.init, now.term
    cases = {
        "a": i not in T and i + 1 not in I and I2 == I | {i + 1} and T2 == T | {i},
        "b": i in T and i + 1 in I and I2 == I - {i + 1} and T2 == T - {i},
        "c": i in T and i + 1 not in I and I2 == I and T2 == T,
        "d": i not in T and i + 1 in I and I2 == I and T2 == T,
    }
    return [k for k, v in cases.items() if v]


def twist_case_suite(shapes: Iterable[SkewShape]) -> CheckResult:
    """Every twist at an occupied content changes (Init, Term) as exactly one case prescribes.

    The case must also be the one predicted from the diagonal type, and
    twisting again must restore the decomposition.
    """
    result = CheckResult("twist changes Init and Term as exactly one case prescribes")
    for s, pi in _decompositions(shapes):
        occupied = set(s.contents)
        for i in range(pi.cutting.start, pi.cutting.end):
            if i not in occupied or i + 1 not in occupied:
                continue
            result.checked += 1
            new = twist(pi, i)
            matched = twist_case_matches(pi, new, i)
            if len(matched) != 1:
                result.fail(f"{s} {pi} at {i}: matched {matched or 'nothing'}")
            elif diagonal_twist_case(s, i, pi.cutting.direction(i)) != matched[0]:
                result.fail(f"{s} {pi} at {i}: case {matched[0]} disagrees with the diagonal type")
            elif twist(new, i) != pi:
                result.fail(f"{s} {pi} at {i}: twisting twice does not return")
    return result


def random_cutting_strip(rng: random.Random, boxes: int, start: int = 0) -> CuttingStrip:
    return CuttingStrip(start, "".join(rng.choice("RU") for _ in range(boxes - 1)))


def gluing_suite(seed: int = 0, count: int = 100, max_boxes: int = 5) -> CheckResult:
    """``s_I s_J = s_(I glued right) + s_(I glued up)`` on segments of random cutting strips."""
    rng = random.Random(seed)
    result = CheckResult(f"gluing identity on {count} random segment pairs (seed {seed})")
    for _ in range(count):
        a, b = rng.randint(1, max_boxes), rng.randint(1, max_boxes)
        phi = random_cutting_strip(rng, a + b)
        I = strip_to_skew_shape(segment(phi, 0, a - 1))
        J = strip_to_skew_shape(segment(phi, a, a + b - 1))
        result.checked += 1
        whole = strip_to_skew_shape(segment(phi, 0, a + b - 1))
        other = strip_to_skew_shape(segment(phi.flip(a - 1), 0, a + b - 1))
        if {whole, other} != {glue_right(I, J), glue_up(I, J)}:
            result.fail(f"{phi}: glued shapes differ from the two cutting strips")
        elif not check_glue_identity(I, J):
            result.fail(f"{phi}: s_{I} s_{J} differs")
    return result


def oracle_suite(shapes: Iterable[SkewShape]) -> CheckResult:
    """The fast Schur polynomial against tableau enumeration."""
    result = CheckResult("schur polynomials agree with tableau enumeration")
    for s in shapes:
        if s.is_empty:
            continue
        result.checked += 1
        if schur_poly(s, s.size) != ssyt_expansion(s, s.size):
            result.fail(str(s))
    return result


def chain_suite(shapes: Iterable[SkewShape], nvars: Optional[int] = None) -> CheckResult:
    """Chain logs replay stage by stage and end at the dual matrix."""
    from .stabeq import verify_chain

    result = CheckResult("chain logs replay through every stage")
    for s in shapes:
        result.checked += 1
        report = verify_chain(s, nvars)
        if not report.ok:
            result.fail(report.summary())
    return result
