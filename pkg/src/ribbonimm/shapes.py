"""Partitions, skew shapes, infinite ribbons and ribbon decompositions.

Coordinates follow the English convention: row i increases downward, column
j increases rightward, and the content of a cell (i, j) is j - i.  An
infinite ribbon is encoded by its step map content -> {L, B}: the step at
content i records whether box r_{i-1} sits left of or below box r_i.  The
map is eventually constant on both sides (the two tails), so a finite
window suffices.  Copies of a ribbon are its diagonal translates
R + (m, m); these are the only content-preserving translates, and they
tile the plane with one box of each content per copy.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from .errors import EmptySection, IncompatibleShape, NonConsecutiveCopies, NotSkew

LEFT = "L"
BELOW = "B"
STEP_DIRS = (LEFT, BELOW)


def normalize_partition(parts) -> tuple:
    """Trim trailing zeros and validate weak decrease with positive parts."""
    parts = tuple(int(p) for p in parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for k in range(len(parts) - 1):
        if parts[k] < parts[k + 1]:
            raise ValueError(f"not weakly decreasing: {parts}")
    if parts and parts[-1] < 0:
        raise ValueError(f"negative part in {parts}")
    return parts


@dataclass(frozen=True)
class SkewShape:
    """Skew diagram outer/inner, with cells {(i, j) : inner_i < j <= outer_i}.

    Rows with outer_i == inner_i are empty; their common value is
    normalized so that equal cell sets (at equal absolute coordinates)
    compare equal.
    """

    outer: tuple
    inner: tuple

    def __init__(self, outer, inner=()):
        outer = normalize_partition(outer)
        inner = normalize_partition(inner)
        if len(inner) > len(outer):
            raise NotSkew(f"inner longer than outer: {inner} vs {outer}")
        inner = inner + (0,) * (len(outer) - len(inner))
        if any(m > l for l, m in zip(outer, inner)):
            raise NotSkew(f"inner not contained in outer: {inner} vs {outer}")
        # drop trailing empty rows, then normalize remaining empty rows
        n = len(outer)
        while n and outer[n - 1] == inner[n - 1]:
            n -= 1
        outer, inner = list(outer[:n]), list(inner[:n])
        for k in range(n - 2, -1, -1):
            if outer[k] == inner[k]:
                outer[k] = inner[k] = outer[k + 1]
        object.__setattr__(self, "outer", tuple(outer))
        object.__setattr__(self, "inner", tuple(inner))

    @property
    def size(self) -> int:
        return sum(self.outer) - sum(self.inner)

    @property
    def n_rows(self) -> int:
        return len(self.outer)

    def row_interval(self, i):
        """Half-open column interval (inner_i, outer_i] of row i, or None."""
        if not 1 <= i <= len(self.outer):
            return None
        if self.outer[i - 1] == self.inner[i - 1]:
            return None
        return (self.inner[i - 1] + 1, self.outer[i - 1])

    def cells(self):
        """All cells as (row, col, content) in row-major order."""
        out = []
        for i, (l, m) in enumerate(zip(self.outer, self.inner), start=1):
            for j in range(m + 1, l + 1):
                out.append((i, j, j - i))
        return out

    def cell_set(self):
        return {(i, j) for i, j, _ in self.cells()}

    def __contains__(self, cell):
        i, j = cell
        if not 1 <= i <= len(self.outer):
            return False
        return self.inner[i - 1] < j <= self.outer[i - 1]

    def is_connected(self) -> bool:
        cells = self.cell_set()
        if not cells:
            return False
        seen = set()
        stack = [next(iter(cells))]
        while stack:
            c = stack.pop()
            if c in seen:
                continue
            seen.add(c)
            i, j = c
            for nb in ((i + 1, j), (i - 1, j), (i, j + 1), (i, j - 1)):
                if nb in cells and nb not in seen:
                    stack.append(nb)
        return seen == cells

    def is_ribbon(self) -> bool:
        """Connected with no 2x2 block."""
        cells = self.cell_set()
        if not cells or not self.is_connected():
            return False
        for i, j in cells:
            if (i + 1, j) in cells and (i, j + 1) in cells and (i + 1, j + 1) in cells:
                return False
        return True

    @classmethod
    def from_cells(cls, cells, diagonal_only=False):
        """Build a SkewShape from a set of (row, col) cells.

        With diagonal_only the translation applied is of the form (t, t),
        preserving contents; otherwise rows and columns are translated
        independently so both minima become 1.
        """
        cells = set(cells)
        if not cells:
            return cls((), ())
        min_row = min(i for i, _ in cells)
        min_col = min(j for _, j in cells)
        if diagonal_only:
            t = max(1 - min_row, 1 - min_col)
            cells = {(i + t, j + t) for i, j in cells}
        else:
            cells = {(i - min_row + 1, j - min_col + 1) for i, j in cells}
        max_row = max(i for i, _ in cells)
        intervals = {}
        for i in range(1, max_row + 1):
            cols = sorted(j for r, j in cells if r == i)
            if cols:
                if cols != list(range(cols[0], cols[-1] + 1)):
                    raise NotSkew(f"row {i} is not contiguous: {cols}")
                intervals[i] = (cols[0], cols[-1])
        outer, inner = [0] * max_row, [0] * max_row
        nxt = 0  # outer value forced on empty rows, scanning bottom-up
        for i in range(max_row, 0, -1):
            if i in intervals:
                lo, hi = intervals[i]
                outer[i - 1], inner[i - 1] = hi, lo - 1
                nxt = hi
            else:
                outer[i - 1] = inner[i - 1] = nxt
        try:
            shape = cls(tuple(outer), tuple(inner))
        except ValueError as exc:
            raise NotSkew(f"cell set is not a skew diagram: {exc}") from exc
        if shape.cell_set() != cells:
            raise NotSkew("cell set is not a skew diagram")
        return shape

    def translated(self, t):
        """Diagonal translate by (t, t); contents are unchanged."""
        if t < 0 and any(m + t < 0 for m in self.inner):
            raise NotSkew("translation would leave the positive quadrant")
        outer = (self.outer[0],) * t + self.outer if t >= 0 else self.outer[-t:]
        if t >= 0:
            return SkewShape(
                tuple(l + t for l in outer),
                (self.outer[0] + t,) * t + tuple(m + t for m in self.inner),
            )
        return SkewShape.from_cells(
            {(i + t, j + t) for i, j, _ in self.cells()}, diagonal_only=False
        )

    def to_json(self):
        return {"outer": list(self.outer), "inner": list(self.inner)}

    @classmethod
    def from_json(cls, obj):
        return cls(tuple(obj["outer"]), tuple(obj.get("inner", ())))


def cells(shape: SkewShape):
    """Cells of a skew shape as (row, col, content), row-major."""
    return shape.cells()


def is_ribbon(shape: SkewShape) -> bool:
    return shape.is_ribbon()


@dataclass(frozen=True)
class InfiniteRibbon:
    """Doubly infinite ribbon given by its step map.

    steps[k] is the step at content window_lo + 1 + k; contents at or below
    window_lo take tail_lo and contents above window_lo + len(steps) take
    tail_hi.  The representation is canonical: steps never start with
    tail_lo nor end with tail_hi.
    """

    window_lo: int
    steps: tuple
    tail_lo: str
    tail_hi: str

    def __init__(self, window_lo=0, steps=(), tail_lo=LEFT, tail_hi=LEFT):
        steps = tuple(steps)
        if tail_lo not in STEP_DIRS or tail_hi not in STEP_DIRS:
            raise ValueError("tails must be 'L' or 'B'")
        if any(s not in STEP_DIRS for s in steps):
            raise ValueError("steps must be 'L' or 'B'")
        while steps and steps[0] == tail_lo:
            steps = steps[1:]
            window_lo += 1
        while steps and steps[-1] == tail_hi:
            steps = steps[:-1]
        object.__setattr__(self, "window_lo", int(window_lo))
        object.__setattr__(self, "steps", steps)
        object.__setattr__(self, "tail_lo", tail_lo)
        object.__setattr__(self, "tail_hi", tail_hi)

    @property
    def window_hi(self) -> int:
        return self.window_lo + len(self.steps)

    def step(self, i: int) -> str:
        """Relation of box r_{i-1} to box r_i: LEFT or BELOW."""
        if i <= self.window_lo:
            return self.tail_lo
        if i <= self.window_hi:
            return self.steps[i - self.window_lo - 1]
        return self.tail_hi

    def box(self, i: int):
        """Position (row, col) of the content-i box, anchored r_0 = (0, 0)."""
        return _ribbon_box(self, i)

    def shift(self, t: int) -> "InfiniteRibbon":
        """Ribbon with step map shifted: new step(i) = old step(i - t)."""
        return InfiniteRibbon(self.window_lo + t, self.steps, self.tail_lo, self.tail_hi)

    def to_json(self):
        return {
            "window_lo": self.window_lo,
            "steps": list(self.steps),
            "tail_lo": self.tail_lo,
            "tail_hi": self.tail_hi,
        }

    @classmethod
    def from_json(cls, obj):
        return cls(obj.get("window_lo", 0), tuple(obj.get("steps", ())),
                   obj["tail_lo"], obj["tail_hi"])


@functools.lru_cache(maxsize=None)
def _ribbon_box(ribbon: InfiniteRibbon, i: int):
    if i == 0:
        return (0, 0)
    if i > 0:
        r, c = _ribbon_box(ribbon, i - 1)
        # r_{i-1} below r_i: r_i one row up; left: one column right
        return (r - 1, c) if ribbon.step(i) == BELOW else (r, c + 1)
    r, c = _ribbon_box(ribbon, i + 1)
    return (r + 1, c) if ribbon.step(i + 1) == BELOW else (r, c - 1)


def ribbon_section_shape(ribbon: InfiniteRibbon, a: int, b: int) -> SkewShape:
    """Standalone shape of the ribbon section [a, b), fully normalized."""
    if a >= b:
        raise EmptySection(f"section [{a}, {b}) is empty")
    shape = SkewShape.from_cells({ribbon.box(c) for c in range(a, b)})
    assert shape.size == b - a and shape.is_ribbon()
    return shape


@dataclass(frozen=True)
class RibbonDecomposition:
    """A skew shape cut along the copies R + (m, m) of an infinite ribbon.

    sections lists (copy index m, a, b) inside out, i.e. by increasing m;
    section k occupies the content interval [a_k, b_k) of its copy.
    """

    shape: SkewShape
    ribbon: InfiniteRibbon
    sections: tuple

    @property
    def ell(self) -> int:
        return len(self.sections)

    @property
    def abar(self) -> tuple:
        return tuple(a for _, a, _ in self.sections)

    @property
    def bbar(self) -> tuple:
        return tuple(b for _, _, b in self.sections)

    @property
    def copies(self) -> tuple:
        return tuple(m for m, _, _ in self.sections)

    def section_cells(self, k):
        """Cells (row, col) of section k (1-based), keyed by content."""
        m, a, b = self.sections[k - 1]
        out = {}
        for c in range(a, b):
            r, q = self.ribbon.box(c)
            out[c] = (r + m, q + m)
        return out

    def to_json(self):
        return {
            "shape": self.shape.to_json(),
            "ribbon": self.ribbon.to_json(),
            "a": list(self.abar),
            "b": list(self.bbar),
            "copies": list(self.copies),
        }


def decompose(shape: SkewShape, ribbon: InfiniteRibbon) -> RibbonDecomposition:
    """Cut shape along the copies of ribbon; raise if incompatible."""
    if shape.size == 0:
        raise IncompatibleShape("shape is empty")
    by_copy = {}
    for i, j, c in shape.cells():
        r, q = ribbon.box(c)
        m = i - r
        if j - q != m:
            raise IncompatibleShape(
                f"cell {(i, j)} lies on no diagonal copy of the ribbon"
            )
        by_copy.setdefault(m, []).append(c)
    ms = sorted(by_copy)
    if ms != list(range(ms[0], ms[-1] + 1)):
        raise NonConsecutiveCopies(f"occupied copies {ms} are not consecutive")
    sections = []
    for m in ms:
        cs = sorted(by_copy[m])
        if cs != list(range(cs[0], cs[-1] + 1)):
            raise IncompatibleShape(
                f"copy {m} meets the shape in non-contiguous contents {cs}"
            )
        sections.append((m, cs[0], cs[-1] + 1))
    return RibbonDecomposition(shape, ribbon, tuple(sections))


def shape_from_tuples(ribbon: InfiniteRibbon, abar, bbar) -> SkewShape:
    """Place section [a_k, b_k) on copy k and assemble the skew shape.

    The result is translated diagonally only, so decompose round-trips the
    tuples exactly.
    """
    abar, bbar = tuple(abar), tuple(bbar)
    if len(abar) != len(bbar) or not abar:
        raise ValueError("tuple lengths must agree and be positive")
    if any(a >= b for a, b in zip(abar, bbar)):
        raise EmptySection(f"empty section in a={abar}, b={bbar}")
    cells_ = set()
    for k, (a, b) in enumerate(zip(abar, bbar), start=1):
        for c in range(a, b):
            r, q = ribbon.box(c)
            cell = (r + k, q + k)
            if cell in cells_:
                raise NotSkew(f"sections overlap at cell {cell}")
            cells_.add(cell)
    return SkewShape.from_cells(cells_, diagonal_only=True)
