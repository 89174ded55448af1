"""Interleaved (shuffle) diagrams of a ribbon decomposition.

The odd-indexed sections are re-drawn at the (odd, odd) lattice positions
and the even-indexed sections at the (even, even) ones, so that the two
halves of the decomposition occupy complementary sublattices.  A filling
of the interleaved diagram that weakly increases along rows and strictly
increases down columns is exactly a pair of SSYT on the two halves.

Each section keeps a start node Q_k and an end node P_k on the boundary
of its drawn cells.  Reading the filling locally (compare the entry
south-west of each lattice corner with the entry north-east of it) lays
down strand segments whose endpoint-terminated paths form a noncrossing
matching on the nodes: the tableau's type.  Reading words and the
bracket-matching crystal operators act on the fillings without changing
that type.
"""

from __future__ import annotations

import os
from dataclasses import dataclass

from .errors import BudgetExceeded, StrandTraceError, ValidityError
from .shapes import BELOW, RibbonDecomposition, SkewShape
from .symfunc import SchurExpansion, SymPoly, enumerate_ssyt
from .tlalgebra import NoncrossingMatching

NEG = float("-inf")
POS = float("inf")


def _budget() -> int:
    return int(os.environ.get("RIL_BUDGET", "2000000"))


def _shape_at(cells) -> SkewShape:
    """SkewShape with exactly the given absolute (row, col) cells."""
    cells = set(cells)
    if not cells:
        return SkewShape((), ())
    assert min(i for i, _ in cells) >= 1 and min(j for _, j in cells) >= 1
    max_row = max(i for i, _ in cells)
    outer, inner = [0] * max_row, [0] * max_row
    nxt = 0
    for i in range(max_row, 0, -1):
        cols = sorted(j for r, j in cells if r == i)
        if cols:
            outer[i - 1], inner[i - 1] = cols[-1], cols[0] - 1
            nxt = cols[-1]
        else:
            outer[i - 1] = inner[i - 1] = nxt
    shape = SkewShape(tuple(outer), tuple(inner))
    if shape.cell_set() != cells:
        raise StrandTraceError("interleaved half is not a skew diagram")
    return shape


class ShuffleDiagram:
    """Interleaving of the odd (red) and even (blue) section shapes.

    Red cells sit at (odd, odd) positions and blue cells at (even, even);
    red_shape/blue_shape are the halved representatives, so the red cell
    for (i, j) of red_shape is (2i-1, 2j-1) and the blue cell for (i, j)
    of blue_shape is (2i, 2j).  P and Q list the node positions, one pair
    per section.
    """

    __slots__ = ("decomposition", "red_shape", "blue_shape", "cells",
                 "coord_of", "P", "Q", "row_off", "col_off")

    def __init__(self, dec: RibbonDecomposition):
        self.decomposition = dec
        R = dec.ribbon
        m1 = dec.copies[0]
        # offsets chosen so odd sections land on the odd sublattice
        row_off = col_off = (1 + m1) % 2

        def embed(k, c):
            m = dec.copies[k - 1]
            r, q = R.box(c)
            return (2 * (r + m) - m + row_off, 2 * (q + m) - m + col_off)

        def nodes(k):
            a, b = dec.abar[k - 1], dec.bbar[k - 1]
            i, j = embed(k, a)
            qk = (i + 1, j) if R.step(a) == BELOW else (i, j - 1)
            i, j = embed(k, b - 1)
            pk = (i - 1, j) if R.step(b) == BELOW else (i, j + 1)
            return pk, qk

        coords = []
        for k in range(1, dec.ell + 1):
            for c in range(dec.abar[k - 1], dec.bbar[k - 1]):
                coords.append(embed(k, c))
        coords += [v for k in range(1, dec.ell + 1) for v in nodes(k)]
        dr = max(0, 1 - min(r for r, _ in coords))
        dc = max(0, 1 - min(c for _, c in coords))
        row_off += dr + dr % 2
        col_off += dc + dc % 2
        self.row_off, self.col_off = row_off, col_off

        self.cells, self.coord_of = {}, {}
        for k in range(1, dec.ell + 1):
            for c in range(dec.abar[k - 1], dec.bbar[k - 1]):
                pos = embed(k, c)
                assert pos not in self.cells
                assert pos[0] % 2 == pos[1] % 2 == k % 2
                self.cells[pos] = (k, c)
                self.coord_of[(k, c)] = pos
        self.P, self.Q = [], []
        for k in range(1, dec.ell + 1):
            pk, qk = nodes(k)
            self.P.append(pk)
            self.Q.append(qk)
        self.P, self.Q = tuple(self.P), tuple(self.Q)
        pts = set(self.P) | set(self.Q)
        if len(pts) != 2 * dec.ell or pts & set(self.cells):
            raise StrandTraceError("node positions collide")

        self.red_shape = _shape_at(
            {((r + 1) // 2, (c + 1) // 2) for (r, c), (k, _) in
             self.cells.items() if k % 2 == 1})
        self.blue_shape = _shape_at(
            {(r // 2, c // 2) for (r, c), (k, _) in self.cells.items()
             if k % 2 == 0})

    @property
    def ell(self) -> int:
        return self.decomposition.ell

    def color(self, coord) -> str:
        return "red" if coord[0] % 2 else "blue"


def build_diagram(dec: RibbonDecomposition) -> ShuffleDiagram:
    return ShuffleDiagram(dec)


class ShuffleTableau:
    """Filling of an interleaved diagram, entries positive integers."""

    __slots__ = ("diagram", "entries")

    def __init__(self, diagram: ShuffleDiagram, entries):
        self.diagram = diagram
        self.entries = dict(entries)
        if set(self.entries) != set(diagram.cells):
            raise ValidityError("filling does not cover the diagram")

    def __eq__(self, other):
        return (isinstance(other, ShuffleTableau)
                and self.diagram.decomposition == other.diagram.decomposition
                and self.entries == other.entries)

    def __hash__(self):
        return hash(frozenset(self.entries.items()))

    def is_valid(self) -> bool:
        """Rows weakly increase, columns strictly increase.

        Consecutive cells of a diagram row or column are two lattice steps
        apart (the gap position belongs to the other sublattice)."""
        for (r, c), v in self.entries.items():
            if not (isinstance(v, int) and v >= 1):
                return False
            right = self.entries.get((r, c + 2))
            if right is not None and right < v:
                return False
            below = self.entries.get((r + 2, c))
            if below is not None and below <= v:
                return False
        return True

    def weight(self, N: int) -> tuple:
        alpha = [0] * N
        for v in self.entries.values():
            alpha[v - 1] += 1
        return tuple(alpha)

    def component_fillings(self):
        """The red and blue SSYT, keyed by red_shape/blue_shape cells."""
        red, blue = {}, {}
        for (r, c), v in self.entries.items():
            if r % 2:
                red[((r + 1) // 2, (c + 1) // 2)] = v
            else:
                blue[(r // 2, c // 2)] = v
        return red, blue

    def to_json(self):
        red, blue = self.component_fillings()
        return {
            "red": {"shape": self.diagram.red_shape.to_json(),
                    "entries": [[i, j, v] for (i, j), v in sorted(red.items())]},
            "blue": {"shape": self.diagram.blue_shape.to_json(),
                     "entries": [[i, j, v] for (i, j), v in sorted(blue.items())]},
        }


def enumerate_shuffle_tableaux(d: ShuffleDiagram, N: int):
    """All fillings with entries in [1, N]: the product of the two SSYT
    streams, re-keyed to diagram coordinates."""
    blues = list(enumerate_ssyt(d.blue_shape, N))
    for red in enumerate_ssyt(d.red_shape, N):
        base = {(2 * i - 1, 2 * j - 1): v for (i, j), v in red.items()}
        for blue in blues:
            entries = dict(base)
            for (i, j), v in blue.items():
                entries[(2 * i, 2 * j)] = v
            yield ShuffleTableau(d, entries)


# -------------------------------------------------------------- type reading

def _virtual_entry(d: ShuffleDiagram, pos) -> float:
    """Sentinel entry of a cell-parity lattice position outside the diagram.

    The position is pulled back to a (virtual) cell of the decomposed
    shape; positions falling north-west of the shape behave as -inf
    (smaller than any entry), south-east ones as +inf.
    """
    r, c = pos
    dec = d.decomposition
    diff = (c - d.col_off) - (r - d.row_off)
    if diff % 2:
        raise StrandTraceError(f"position {pos} is not on the cell lattice")
    content = diff // 2
    rho, gamma = dec.ribbon.box(content)
    m = r - 2 * rho - d.row_off
    p, q = rho + m, gamma + m
    if 2 * q - m + d.col_off != c:
        raise StrandTraceError(f"inconsistent pullback at {pos}")
    shape = dec.shape
    if p < 1:
        return NEG
    if p > shape.n_rows:
        return POS
    if q <= shape.inner[p - 1]:
        return NEG
    if q > shape.outer[p - 1]:
        return POS
    raise StrandTraceError(f"virtual position {pos} maps inside the shape")


def strand_segments(T: ShuffleTableau):
    """Unit segments of the strand picture, as frozensets of endpoints.

    Every lattice corner has the diagram entry (or sentinel) i to its
    south-west and j to its north-east; i <= j lays the two vertical
    segments of that block, i > j the two horizontal ones.  Only segments
    ending at a real cell are kept.
    """
    entries = T.entries
    blocks = set()
    for (r, c) in entries:
        blocks.add(((r + 1, c - 1), (r, c)))
        blocks.add(((r, c), (r - 1, c + 1)))
    segs = set()
    for sw, ne in blocks:
        i = entries.get(sw)
        if i is None:
            i = _virtual_entry(T.diagram, sw)
        j = entries.get(ne)
        if j is None:
            j = _virtual_entry(T.diagram, ne)
        nw = (sw[0] - 1, sw[1])
        se = (sw[0], sw[1] + 1)
        if i <= j:
            drawn = ((sw, nw), (ne, se))
        else:
            drawn = ((sw, se), (ne, nw))
        for cell_end, corner_end in drawn:
            if cell_end in entries:
                segs.add(frozenset((cell_end, corner_end)))
    return segs


def tl_type(T: ShuffleTableau) -> NoncrossingMatching:
    """Noncrossing matching traced by the strand segments; P_k is the
    left point L_k, Q_k the right point R_k.  Closed loops are ignored."""
    d = T.diagram
    adj = {}
    for s in strand_segments(T):
        a, b = tuple(s)
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    node_label = {}
    for k, pos in enumerate(d.P, start=1):
        node_label[pos] = ("L", k)
    for k, pos in enumerate(d.Q, start=1):
        node_label[pos] = ("R", k)

    for pos, nbs in adj.items():
        want = 1 if pos in node_label else 2
        if pos in d.cells and len(nbs) != 2:
            raise StrandTraceError(f"cell {pos} has degree {len(nbs)}")
        if pos in node_label and len(nbs) != want:
            raise StrandTraceError(f"node {pos} has degree {len(nbs)}")
        if len(nbs) > 2:
            raise StrandTraceError(f"position {pos} has degree {len(nbs)}")
    for pos in node_label:
        if pos not in adj:
            raise StrandTraceError(f"node {pos} received no segment")
    for pos in d.cells:
        if pos not in adj:
            raise StrandTraceError(f"cell {pos} received no segment")

    pairs, seen = [], set()
    for start, label in node_label.items():
        if start in seen:
            continue
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            if not nxt:
                raise StrandTraceError(f"dead end at {cur}")
            prev, cur = cur, nxt[0]
            if cur in node_label:
                seen.add(cur)
                break
        pairs.append((label, node_label[cur]))
    return NoncrossingMatching(d.ell, pairs)


# -------------------------------------------------- covers to shuffle fillings

def tableau_from_cover(d: ShuffleDiagram, family) -> ShuffleTableau:
    """Filling read off a colored cover: the crossing of a path into a
    content records its source height at that content's cell."""
    entries = {}
    for k, verts, _ in family:
        for (c1, h1), (c2, _) in zip(verts, verts[1:]):
            if c2 == c1 - 1:
                entries[d.coord_of[(k, c2)]] = h1
    T = ShuffleTableau(d, entries)
    if not T.is_valid():
        raise ValidityError("cover does not read as a valid filling")
    return T


# ------------------------------------------------------ reading word, crystal

@dataclass(frozen=True)
class ReadingWord:
    index: int
    word: tuple       # letters, each index or index + 1
    positions: tuple  # diagram coordinates, parallel to word


def reading_word(T: ShuffleTableau, i: int) -> ReadingWord:
    """Letters i/i+1 outside column overlaps, rows bottom to top and left
    to right within a row.

    A column holds at most one i and one i+1 (column strictness), with the
    i necessarily above; such a pair is an overlap and is removed."""
    squares = {pos: v for pos, v in T.entries.items() if v in (i, i + 1)}
    by_col = {}
    for (r, c), v in squares.items():
        by_col.setdefault(c, []).append((r, v))
    removed = set()
    for c, items in by_col.items():
        lo = [r for r, v in items if v == i]
        hi = [r for r, v in items if v == i + 1]
        assert len(lo) <= 1 and len(hi) <= 1
        if lo and hi:
            assert lo[0] < hi[0]
            removed.add((lo[0], c))
            removed.add((hi[0], c))
    rest = sorted((pos for pos in squares if pos not in removed),
                  key=lambda pos: (-pos[0], pos[1]))
    return ReadingWord(i, tuple(squares[pos] for pos in rest), tuple(rest))


def unmatched_positions(word, i):
    """Bracket matching with i+1 opening and i closing; returns the word
    positions of unmatched i's and unmatched i+1's, left to right."""
    stack, open_i = [], []
    for pos, v in enumerate(word):
        if v == i + 1:
            stack.append(pos)
        elif stack:
            stack.pop()
        else:
            open_i.append(pos)
    return open_i, stack


def _flip(T: ShuffleTableau, pos, new_value) -> ShuffleTableau:
    entries = dict(T.entries)
    entries[pos] = new_value
    out = ShuffleTableau(T.diagram, entries)
    if not out.is_valid():
        raise ValidityError(f"flip at {pos} broke the filling")
    return out


def crystal_E(T: ShuffleTableau, i: int):
    """Turn the leftmost unmatched i+1 into an i, or None."""
    w = reading_word(T, i)
    _, un_hi = unmatched_positions(w.word, i)
    if not un_hi:
        return None
    return _flip(T, w.positions[un_hi[0]], i)


def crystal_F(T: ShuffleTableau, i: int):
    """Turn the rightmost unmatched i into an i+1, or None."""
    w = reading_word(T, i)
    un_lo, _ = unmatched_positions(w.word, i)
    if not un_lo:
        return None
    return _flip(T, w.positions[un_lo[-1]], i + 1)


def is_yamanouchi(T: ShuffleTableau) -> bool:
    """True iff no raising operator applies."""
    top = max(T.entries.values(), default=1)
    return all(crystal_E(T, i) is None for i in range(1, top))


# -------------------------------------------------------- immanant pipeline

def _record(acc, tau, wt):
    # symmetric sums: only partition-sorted weight vectors are recorded
    if any(wt[k] < wt[k + 1] for k in range(len(wt) - 1)):
        return
    key = wt
    while key and key[-1] == 0:
        key = key[:-1]
    bucket = acc.setdefault(tau, {})
    bucket[key] = bucket.get(key, 0) + 1


def tableaux_by_type(dec: RibbonDecomposition, N: int):
    """Map from type to the summed weights of its fillings."""
    d = build_diagram(dec)
    budget = _budget()
    acc, count = {}, 0
    for T in enumerate_shuffle_tableaux(d, N):
        count += 1
        if count > budget:
            raise BudgetExceeded(f"more than {budget} fillings")
        _record(acc, tl_type(T), T.weight(N))
    return {tau: SymPoly(N, coeffs) for tau, coeffs in acc.items()}


def imm_by_shuffle(dec: RibbonDecomposition, N: int,
                   tau: NoncrossingMatching) -> SymPoly:
    return tableaux_by_type(dec, N).get(tau, SymPoly.zero(N))


def schur_expand_by_crystal(dec: RibbonDecomposition, N: int):
    """Expansion of every immanant read off the source fillings alone.

    Each filling on which no raising operator acts contributes 1 to the
    coefficient of its (necessarily partition) weight, under its type.
    Coefficients are nonnegative by construction.
    """
    d = build_diagram(dec)
    budget = _budget()
    acc, count = {}, 0
    for T in enumerate_shuffle_tableaux(d, N):
        count += 1
        if count > budget:
            raise BudgetExceeded(f"more than {budget} fillings")
        if not is_yamanouchi(T):
            continue
        wt = T.weight(N)
        if any(wt[k] < wt[k + 1] for k in range(N - 1)):
            raise ValidityError(f"source filling has non-partition weight {wt}")
        key = wt
        while key and key[-1] == 0:
            key = key[:-1]
        bucket = acc.setdefault(tl_type(T), {})
        bucket[key] = bucket.get(key, 0) + 1
    return {tau: SchurExpansion(N, coeffs) for tau, coeffs in acc.items()}
