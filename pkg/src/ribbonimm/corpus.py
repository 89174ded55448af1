"""Deterministic sweep corpus: small connected decompositions.

Enumerates canonical infinite ribbons with short step windows, then all
placements of 1..max_ell consecutive sections with at most max_cells
total cells whose assembled shape is a connected skew diagram.  The
enumeration order is deterministic and shifts of the same decomposition
are deduplicated, so the corpus is reproducible run to run.
"""

from __future__ import annotations

import functools
import itertools

from .errors import NotSkew
from .shapes import (BELOW, LEFT, InfiniteRibbon, decompose,
                     shape_from_tuples)


def enumerate_ribbons(max_window: int):
    """Canonical ribbons (window_lo = 0) with at most max_window steps."""
    seen = set()
    for tail_lo, tail_hi in itertools.product((LEFT, BELOW), repeat=2):
        for k in range(max_window + 1):
            for steps in itertools.product((LEFT, BELOW), repeat=k):
                R = InfiniteRibbon(0, steps, tail_lo, tail_hi)
                key = (R.steps, R.tail_lo, R.tail_hi)
                if key not in seen:
                    seen.add(key)
                    yield InfiniteRibbon(0, R.steps, R.tail_lo, R.tail_hi)


def _touches(R: InfiniteRibbon, outer_sec, inner_sec) -> bool:
    """True iff a section on copy m+1 (inner coordinates outer_sec is the
    copy-m one) shares an edge with the section below it.

    A copy-(m+1) cell of content c borders copy m exactly at content c+1
    when the step there is L, or at content c-1 when the step at c is B.
    """
    a0, b0 = outer_sec
    a1, b1 = inner_sec
    for c in range(a1, b1):
        if R.step(c + 1) == LEFT and a0 <= c + 1 < b0:
            return True
        if R.step(c) == BELOW and a0 <= c - 1 < b0:
            return True
    return False


def enumerate_decompositions(max_cells: int = 8, max_window: int = 5,
                             max_ell: int = 4):
    """All corpus decompositions, deduplicated up to content shift."""
    seen = set()
    for R in enumerate_ribbons(max_window):
        lo, hi = -2, R.window_hi + 2  # beyond this the tails repeat
        pairs = [(a, b) for a in range(lo, hi + 1)
                 for b in range(a + 1, hi + 2) if b - a <= max_cells]

        def rec(sections, used):
            if sections:
                yield tuple(sections)
            if len(sections) == max_ell:
                return
            for a, b in pairs:
                if used + (b - a) > max_cells:
                    continue
                if sections and not _touches(R, sections[-1], (a, b)):
                    continue
                sections.append((a, b))
                yield from rec(sections, used + (b - a))
                sections.pop()

        for secs in rec([], 0):
            abar = tuple(a for a, _ in secs)
            bbar = tuple(b for _, b in secs)
            shift = abar[0]
            key = (R.steps, R.tail_lo, R.tail_hi, R.window_lo - shift,
                   tuple(a - shift for a in abar),
                   tuple(b - shift for b in bbar))
            if key in seen:
                continue
            try:
                shape = shape_from_tuples(R, abar, bbar)
            except NotSkew:
                continue
            if not shape.is_connected():
                continue
            seen.add(key)
            dec = decompose(shape, R)
            assert dec.abar == abar and dec.bbar == bbar
            yield dec


def corpus(max_cells: int = 8, max_window: int = 5, max_ell: int = 4,
           limit=None):
    out = []
    for dec in enumerate_decompositions(max_cells, max_window, max_ell):
        out.append(dec)
        if limit is not None and len(out) >= limit:
            break
    return out


@functools.lru_cache(maxsize=None)
def sweep_corpus(max_cells: int = 8, max_window: int = 5, max_ell: int = 4,
                 per_bucket: int = 16) -> tuple:
    """Deterministic diverse subsample: the first per_bucket instances of
    every (section count, cell count) bucket, in enumeration order."""
    wanted = {(l, s) for l in range(1, max_ell + 1)
              for s in range(l, max_cells + 1)}
    buckets = {}
    full = 0
    for dec in enumerate_decompositions(max_cells, max_window, max_ell):
        key = (dec.ell, dec.shape.size)
        got = buckets.setdefault(key, [])
        if len(got) < per_bucket:
            got.append(dec)
            if len(got) == per_bucket:
                full += 1
                if full == len(wanted):
                    break
    out = []
    for key in sorted(buckets):
        out.extend(buckets[key])
    return tuple(out)
