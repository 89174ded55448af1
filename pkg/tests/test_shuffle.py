import pytest

from conftest import row_sections_dec
from ribbonimm import network, ribbonmat, shuffle, tlalgebra
from ribbonimm.errors import BudgetExceeded, ValidityError
from ribbonimm.shapes import SkewShape, decompose
from ribbonimm.symfunc import SymPoly, expand_schur

# fillings of the two half diagrams of the four-section fixture, row by row
RED_ROWS = [[3, 4, 6, 6], [1, 3, 6], [2, 4, 5], [2, 3, 6, 6], [7]]
BLUE_ROWS = [[2, 2, 5], [5, 6, 6], [4, 5, 5, 7], [5], [7]]


def _fill(shape, rows):
    out = {}
    rit = iter(rows)
    for i in range(1, shape.n_rows + 1):
        iv = shape.row_interval(i)
        if iv is None:
            continue
        vals = next(rit)
        assert len(vals) == iv[1] - iv[0] + 1
        out.update({(i, j): v
                    for j, v in zip(range(iv[0], iv[1] + 1), vals)})
    return out


@pytest.fixture(scope="module")
def pinned_tableau(hook_dec):
    d = shuffle.build_diagram(hook_dec)
    entries = {(2 * i - 1, 2 * j - 1): v
               for (i, j), v in _fill(d.red_shape, RED_ROWS).items()}
    entries.update({(2 * i, 2 * j): v
                    for (i, j), v in _fill(d.blue_shape, BLUE_ROWS).items()})
    return shuffle.ShuffleTableau(d, entries)


def test_diagram_shapes(hook_dec):
    d = shuffle.build_diagram(hook_dec)
    red_rows = [d.red_shape.outer[i] - d.red_shape.inner[i]
                for i in range(d.red_shape.n_rows)
                if d.red_shape.outer[i] > d.red_shape.inner[i]]
    assert red_rows == [4, 3, 3, 4, 1]
    # red cells on (odd, odd), blue on (even, even)
    for (r, c) in d.cells:
        assert r % 2 == c % 2
        assert d.color((r, c)) == ("red" if r % 2 else "blue")
    assert len(d.P) == len(d.Q) == 4


def test_nodes_are_corners(hook_dec):
    d = shuffle.build_diagram(hook_dec)
    for pos in d.P + d.Q:
        assert sum(pos) % 2 == 1
        assert pos not in d.cells


def test_pinned_type(pinned_tableau):
    assert pinned_tableau.is_valid()
    tau = shuffle.tl_type(pinned_tableau)
    assert str(tau) == "(L1-R1)(L2-R4)(L3-L4)(R2-R3)"


def test_pinned_type_is_generator_product(pinned_tableau):
    expected, loops = tlalgebra.diagram_mul(tlalgebra.generator(4, 3),
                                            tlalgebra.generator(4, 2))
    assert loops == 0
    assert shuffle.tl_type(pinned_tableau) == expected


def test_pinned_type_matches_cover_side(hook_dec, pinned_tableau):
    # reconstruct the cover mapping to the pinned filling and uncross it
    N = max(pinned_tableau.entries.values())
    net = network.build_network(hook_dec, N)
    d = pinned_tableau.diagram
    R = hook_dec.ribbon

    def vertical_run(content, j_from, j_to):
        if j_from == j_to:
            return [(content, j_from)]
        up = net.vertical_up(content)
        assert (j_to > j_from) == up, (content, j_from, j_to)
        step = 1 if up else -1
        return [(content, j) for j in range(j_from, j_to + step, step)]

    family = []
    for k in range(1, 5):
        a, b = hook_dec.abar[k - 1], hook_dec.bbar[k - 1]
        verts = []
        wt = [0] * N
        height = net.starts[k - 1][1]
        for c in range(b, a, -1):
            j = pinned_tableau.entries[d.coord_of[(k, c - 1)]]
            verts.extend(vertical_run(c, height, j))
            wt[j - 1] += 1
            height = j + 1 if R.step(c - 1) == "B" else j
        verts.extend(vertical_run(a, height, net.ends[k - 1][1]))
        family.append((k, tuple(verts), tuple(wt)))
    # paths of the same color are vertex disjoint
    for i, j in ((0, 2), (1, 3)):
        assert not set(family[i][1]) & set(family[j][1])
    assert network.uncross_type(family) == shuffle.tl_type(pinned_tableau)
    assert shuffle.tableau_from_cover(d, family) == pinned_tableau


def test_reading_word_pins():
    ribbon_dec = row_sections_dec((2, 1, 0, -1, -2), (7, 6, 5, 2, 0))
    d = shuffle.build_diagram(ribbon_dec)
    per_row = [[1, 1, 1, 1, 2], [1, 2, 3, 3, 3], [1, 2, 2, 2, 3],
               [2, 2, 3], [2, 2]]
    entries = {}
    rows_present = sorted({r for r, _ in d.cells})
    for r, vals in zip(rows_present, per_row):
        cols = sorted(c for rr, c in d.cells if rr == r)
        assert len(cols) == len(vals)
        entries.update(dict(zip(((r, c) for c in cols), vals)))
    T = shuffle.ShuffleTableau(d, entries)
    assert T.is_valid()
    assert shuffle.reading_word(T, 1).word == (2, 2, 2, 1, 2)
    assert shuffle.reading_word(T, 2).word == (
        2, 2, 2, 2, 2, 2, 2, 3, 3, 3, 3, 2)


def test_unmatched_positions():
    # letter i+1 opens, letter i closes
    lo, hi = shuffle.unmatched_positions((2, 2, 1, 1, 1), 1)
    assert lo == [4] and hi == []
    lo, hi = shuffle.unmatched_positions((1, 2), 1)
    assert lo == [0] and hi == [1]


def test_single_section_types(row_ribbon, column_ribbon):
    for ribbon, shape in ((row_ribbon, SkewShape((4,))),
                          (column_ribbon, SkewShape((1, 1, 1, 1)))):
        dec = decompose(shape, ribbon)
        d = shuffle.build_diagram(dec)
        for T in shuffle.enumerate_shuffle_tableaux(d, 2):
            assert str(shuffle.tl_type(T)) == "(L1-R1)"


def test_three_way_agreement_small():
    dec = row_sections_dec((0, -2, -4), (3, 2, 1))
    N = 3
    by_sh = shuffle.tableaux_by_type(dec, N)
    by_cv = network.covers_by_type(dec, N)
    rm = ribbonmat.build(dec, N)
    for u in tlalgebra.enumerate_321_avoiding(3):
        tau = tlalgebra.perm_to_matching(u)
        v1 = tlalgebra.imm_tl(tau, rm.matrix)
        assert v1 == by_sh.get(tau, SymPoly.zero(N))
        assert v1 == by_cv.get(tau, SymPoly.zero(N))


def test_type_sum_is_minor_product(hook_dec):
    total = SymPoly.zero(2)
    for p in shuffle.tableaux_by_type(hook_dec, 2).values():
        total = total + p
    assert total == ribbonmat.odd_even_product(hook_dec, 2)


def test_cover_bijection(hook_dec):
    dec = row_sections_dec((0, -2, -4), (3, 2, 1))
    for tdec, N in ((dec, 2), (dec, 3), (hook_dec, 2)):
        net = network.build_network(tdec, N)
        d = shuffle.build_diagram(tdec)
        fillings = set()
        for fam, wt in network.enumerate_covers(net):
            T = shuffle.tableau_from_cover(d, fam)
            assert T.weight(N) == wt
            assert shuffle.tl_type(T) == network.uncross_type(fam)
            fillings.add(T)
        assert len(fillings) == network.count_covers(net)
        assert fillings == set(shuffle.enumerate_shuffle_tableaux(d, N))


def test_crystal_operators():
    dec = row_sections_dec((0, -2, -4), (3, 2, 1))
    N = 3
    d = shuffle.build_diagram(dec)
    moves = 0
    for T in shuffle.enumerate_shuffle_tableaux(d, N):
        for i in range(1, N):
            E = shuffle.crystal_E(T, i)
            F = shuffle.crystal_F(T, i)
            if E is not None:
                assert shuffle.crystal_F(E, i) == T
                assert shuffle.tl_type(E) == shuffle.tl_type(T)
                wE, wT = E.weight(N), T.weight(N)
                assert wE[i - 1] == wT[i - 1] + 1 and wE[i] == wT[i] - 1
            if F is not None:
                assert shuffle.crystal_E(F, i) == T
                moves += 1
    assert moves > 0


def test_crystal_expansion_matches_schur_expansion(hook_dec):
    dec = row_sections_dec((0, -2, -4), (3, 2, 1))
    for tdec, N in ((dec, 3), (hook_dec, 2)):
        by_crystal = shuffle.schur_expand_by_crystal(tdec, N)
        by_exp = {tau: expand_schur(p)
                  for tau, p in shuffle.tableaux_by_type(tdec, N).items()}
        assert by_crystal == by_exp


def test_invalid_filling_rejected(hook_dec):
    d = shuffle.build_diagram(hook_dec)
    T = next(iter(shuffle.enumerate_shuffle_tableaux(d, 3)))
    entries = dict(T.entries)
    del entries[next(iter(entries))]
    with pytest.raises(ValidityError):
        shuffle.ShuffleTableau(d, entries)


def test_budget_guard(hook_dec, monkeypatch):
    monkeypatch.setenv("RIL_BUDGET", "3")
    with pytest.raises(BudgetExceeded):
        shuffle.tableaux_by_type(hook_dec, 3)


def test_tableau_json(pinned_tableau):
    blob = pinned_tableau.to_json()
    assert set(blob) >= {"red", "blue"}
