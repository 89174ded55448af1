"""Ribbon decomposition matrices and the identities built on them.

Entry (i, j) of the matrix for a decomposition with tuples (a_k), (b_k) is
the skew Schur polynomial of the ribbon section [a_j, b_i), with the
convention 1 when a_j = b_i and 0 when a_j > b_i.  The determinant equals
the skew Schur polynomial of the whole shape, and every principal minor is
again a matrix of the same kind.
"""

from __future__ import annotations

import importlib.resources
import json
from dataclasses import dataclass

from .errors import NotSkew
from .shapes import (RibbonDecomposition, SkewShape, decompose,
                     ribbon_section_shape, shape_from_tuples)
from .symfunc import (SFMatrix, SymPoly, determinant, expand_schur,
                      skew_schur)
from . import tlalgebra


@dataclass(frozen=True)
class RibbonMatrix:
    decomposition: RibbonDecomposition
    nvars: int
    matrix: SFMatrix

    @property
    def ell(self) -> int:
        return self.decomposition.ell


def build(dec: RibbonDecomposition, N: int) -> RibbonMatrix:
    R = dec.ribbon
    a, b = dec.abar, dec.bbar
    ell = dec.ell
    rows = []
    for i in range(ell):
        row = []
        for j in range(ell):
            if a[j] < b[i]:
                row.append(skew_schur(ribbon_section_shape(R, a[j], b[i]), N))
            elif a[j] == b[i]:
                row.append(SymPoly.one(N))
            else:
                row.append(SymPoly.zero(N))
        rows.append(row)
    return RibbonMatrix(dec, N, SFMatrix(ell, N, rows))


def check_determinant(rm: RibbonMatrix) -> bool:
    """det == skew Schur polynomial of the decomposed shape, exactly."""
    return determinant(rm.matrix) == skew_schur(rm.decomposition.shape, rm.nvars)


def principal_minor(rm: RibbonMatrix, I) -> RibbonMatrix:
    """Matrix of the shape whose tuples are the I-indexed subtuples."""
    I = sorted(I)
    dec = rm.decomposition
    if not I or any(k < 1 or k > dec.ell for k in I):
        raise ValueError(f"index set {I} out of range")
    a = [dec.abar[k - 1] for k in I]
    b = [dec.bbar[k - 1] for k in I]
    sub_shape = shape_from_tuples(dec.ribbon, a, b)
    sub = build(decompose(sub_shape, dec.ribbon), rm.nvars)
    expected = rm.matrix.submatrix(I, I)
    for i in range(1, len(I) + 1):
        for j in range(1, len(I) + 1):
            assert sub.matrix[i, j] == expected[i, j], (I, i, j)
    return sub


def odd_even_split(dec: RibbonDecomposition):
    """Shapes built from the odd-indexed and even-indexed tuples."""
    odd = [k for k in range(1, dec.ell + 1) if k % 2 == 1]
    even = [k for k in range(1, dec.ell + 1) if k % 2 == 0]

    def subshape(ks):
        if not ks:
            return SkewShape((), ())
        return shape_from_tuples(dec.ribbon,
                                 [dec.abar[k - 1] for k in ks],
                                 [dec.bbar[k - 1] for k in ks])

    return subshape(odd), subshape(even)


def odd_even_product(dec: RibbonDecomposition, N: int) -> SymPoly:
    red, blue = odd_even_split(dec)
    return skew_schur(red, N) * skew_schur(blue, N)


def theorem1_harness(dec: RibbonDecomposition, N: int, method="def"):
    """Schur-expand every Temperley-Lieb immanant of the matrix.

    Returns a report dict; overall_positive is True iff no expansion has a
    negative coefficient.
    """
    if method == "def":
        rm = build(dec, N)
        compute = lambda tau: tlalgebra.imm_tl(tau, rm.matrix)
    elif method == "shuffle":
        from . import shuffle
        compute = lambda tau: shuffle.imm_by_shuffle(dec, N, tau)
    elif method == "covers":
        from . import network
        compute = lambda tau: network.imm_by_covers(dec, N, tau)
    else:
        raise ValueError(f"unknown method {method!r}")

    per_type = []
    ok = True
    for u in tlalgebra.enumerate_321_avoiding(dec.ell):
        tau = tlalgebra.perm_to_matching(u)
        exp = expand_schur(compute(tau))
        positive = exp.schur_positive
        ok = ok and positive
        per_type.append({
            "perm": list(u),
            "type": str(tau),
            "expansion": str(exp),
            "schur_positive": positive,
            "terms": exp.to_json()["terms"],
        })
    return {
        "a": list(dec.abar),
        "b": list(dec.bbar),
        "nvars": N,
        "method": method,
        "immanants": per_type,
        "overall_positive": ok,
    }


def _matrix_from_fixture(obj, N: int) -> SFMatrix:
    n = obj["n"]
    grid = [[None] * n for _ in range(n)]
    for e in obj["entries"]:
        i, j = e["row"], e["col"]
        if "const" in e:
            p = SymPoly.one(N) if e["const"] == 1 else SymPoly.zero(N)
            if e["const"] not in (0, 1):
                raise ValueError("fixture constants must be 0 or 1")
        else:
            p = skew_schur(SkewShape(tuple(e["outer"]), tuple(e["inner"])), N)
        grid[i - 1][j - 1] = p
    if any(p is None for row in grid for p in row):
        raise ValueError("fixture does not cover the full matrix")
    return SFMatrix(n, N, grid)


def _load_fixture():
    data = importlib.resources.files("ribbonimm").joinpath("data/remarks.json")
    return json.loads(data.read_text())


def remark_matrices(N_first=None, N_second=None):
    """The two hardcoded counterexample matrices, as SFMatrix values.

    N defaults keep positivity verdicts faithful for the relevant immanant
    (degree 13) and minor (degree 14).  A negative Schur coefficient found
    at smaller N is still a valid certificate: expansions are stable in N
    for the partitions that survive truncation.
    """
    fixture = _load_fixture()
    first = _matrix_from_fixture(fixture["nonpositive_immanant_4x4"],
                                 13 if N_first is None else N_first)
    second = _matrix_from_fixture(fixture["bad_minor_4x4"],
                                  14 if N_second is None else N_second)
    return first, second


def remark_bad_minor_indices():
    fixture = _load_fixture()
    obj = fixture["bad_minor_4x4"]
    return tuple(obj["bad_minor_rows"]), tuple(obj["bad_minor_cols"])
