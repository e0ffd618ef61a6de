import json
import re
from pathlib import Path

import pytest

from giambelli.shapes import SkewShape, parse_shape

DATA = Path(__file__).parent / "data"
APPENDIX = parse_shape("6,5,3,1/4,4,3")

_ACCEPTANCE_LINES = []


def parse_exponent_label(text):
    """'71^2' -> (7, 1, 1); single digits only, as in the printed tables."""
    parts = []
    for m in re.finditer(r"(\d)(?:\^(\d+))?", text):
        parts += [int(m.group(1))] * int(m.group(2) or 1)
    return tuple(parts)


def load_appendix():
    return json.loads((DATA / "appendix_chain.json").read_text())


def brute_force_decompositions(shape: SkewShape):
    """All outside decompositions found by choosing, for every box, its successor in its strip.

    Each box continues right, continues up, or ends its strip (3^n choices).
    A choice is kept when the strips are disjoint paths, start on the
    left/bottom perimeter, end on the right/top perimeter and agree on the
    direction taken after each content. Returned as a set of frozensets of
    box tuples.
    """
    boxes = sorted(shape.boxes)
    inside = set(boxes)
    found = set()

    def options(b):
        r, c = b
        out = [None]
        if (r, c + 1) in inside:
            out.append((r, c + 1))
        if (r - 1, c) in inside:
            out.append((r - 1, c))
        return out

    import itertools

    for choice in itertools.product(*(options(b) for b in boxes)):
        succ = dict(zip(boxes, choice))
        targets = [t for t in choice if t is not None]
        if len(set(targets)) != len(targets):
            continue
        starts = [b for b in boxes if b not in set(targets)]
        direction = {}
        ok = True
        strips = []
        for s in starts:
            r, c = s
            if (r, c - 1) in inside and (r + 1, c) in inside:
                ok = False
                break
            path = [s]
            while succ[path[-1]] is not None:
                a, b = path[-1], succ[path[-1]]
                step = "R" if b[0] == a[0] else "U"
                if direction.setdefault(a[1] - a[0], step) != step:
                    ok = False
                    break
                path.append(b)
            if not ok:
                break
            r, c = path[-1]
            if (r, c + 1) in inside and (r - 1, c) in inside:
                ok = False
                break
            strips.append(tuple(path))
        if ok:
            found.add(frozenset(strips))
    return found


@pytest.fixture(scope="session")
def acceptance_report():
    def record(number, ok, detail):
        _ACCEPTANCE_LINES.append(f"criterion {number}: {'PASS' if ok else 'FAIL'} - {detail}")
        print(_ACCEPTANCE_LINES[-1])

    return record


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in _ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
