import random

import pytest

from ribbonimm.shapes import (BELOW, LEFT, InfiniteRibbon, decompose,
                              shape_from_tuples)
from ribbonimm.symfunc import SFMatrix, SymPoly


@pytest.fixture(scope="session")
def hook_ribbon():
    # B,LLL,BB,L,B window with a B tail below and an L tail above
    return InfiniteRibbon(-3, (BELOW, LEFT, LEFT, LEFT, BELOW, BELOW,
                               LEFT, BELOW), tail_lo=BELOW, tail_hi=LEFT)


@pytest.fixture(scope="session")
def hook_dec(hook_ribbon):
    shape = shape_from_tuples(hook_ribbon, (0, -4, -3, 3), (3, 5, 9, 6))
    return decompose(shape, hook_ribbon)


@pytest.fixture(scope="session")
def row_ribbon():
    return InfiniteRibbon(tail_lo=LEFT, tail_hi=LEFT)


@pytest.fixture(scope="session")
def column_ribbon():
    return InfiniteRibbon(tail_lo=BELOW, tail_hi=BELOW)


def row_sections_dec(abar, bbar):
    """Decomposition of an all-row ribbon: every matrix entry is a
    complete homogeneous polynomial."""
    ribbon = InfiniteRibbon(tail_lo=LEFT, tail_hi=LEFT)
    return decompose(shape_from_tuples(ribbon, abar, bbar), ribbon)


def random_sf_matrix(rng: random.Random, n: int, nvars: int,
                     max_deg: int = 2) -> SFMatrix:
    """Dense matrix of small random symmetric polynomials."""
    def rand_poly():
        coeffs = {}
        for _ in range(rng.randint(1, 3)):
            parts = sorted((rng.randint(0, max_deg)
                            for _ in range(rng.randint(0, nvars))),
                           reverse=True)
            key = tuple(p for p in parts if p)
            coeffs[key] = coeffs.get(key, 0) + rng.randint(-2, 2)
        return SymPoly(nvars, coeffs)

    grid = [[rand_poly() for _ in range(n)] for _ in range(n)]
    return SFMatrix(n, nvars, grid)
