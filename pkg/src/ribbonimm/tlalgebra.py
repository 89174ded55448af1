"""Temperley-Lieb algebra TL_n with loop value 2.

Basis diagrams are noncrossing perfect matchings on boundary points
L_1..L_n, R_1..R_n, read in circular order L_1..L_n, R_n..R_1.
Permutations are tuples in one-line notation with values 1..n.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .symfunc import SFMatrix, SymPoly, determinant


# ---------------------------------------------------------------- permutations

def identity_perm(n) -> tuple:
    return tuple(range(1, n + 1))


def perm_mul(u: tuple, v: tuple) -> tuple:
    """Composition (u*v)(i) = u(v(i))."""
    return tuple(u[v[i] - 1] for i in range(len(u)))


def perm_inverse(u: tuple) -> tuple:
    out = [0] * len(u)
    for i, v in enumerate(u, start=1):
        out[v - 1] = i
    return tuple(out)


def perm_length(u: tuple) -> int:
    """Number of inversions."""
    n = len(u)
    return sum(1 for a in range(n) for b in range(a + 1, n) if u[a] > u[b])


def perm_sign(u: tuple) -> int:
    return -1 if perm_length(u) % 2 else 1


def apply_s(u: tuple, i: int) -> tuple:
    """Right multiplication by s_i (swap positions i, i+1)."""
    v = list(u)
    v[i - 1], v[i] = v[i], v[i - 1]
    return tuple(v)


@functools.lru_cache(maxsize=None)
def reduced_word(u: tuple) -> tuple:
    """Lexicographically smallest reduced word of u."""
    if perm_length(u) == 0:
        return ()
    # greedy smallest left descent gives the lex-smallest word
    best = None
    for i in range(1, len(u)):
        su = tuple(i + 1 if x == i else i if x == i + 1 else x for x in u)
        if perm_length(su) < perm_length(u):
            best = (i,) + reduced_word(su)
            break
    return best


def all_reduced_words(u: tuple):
    if perm_length(u) == 0:
        yield ()
        return
    for i in range(1, len(u)):
        su = tuple(i + 1 if x == i else i if x == i + 1 else x for x in u)
        if perm_length(su) < perm_length(u):
            for rest in all_reduced_words(su):
                yield (i,) + rest


def is_321_avoiding(u: tuple) -> bool:
    n = len(u)
    for a in range(n):
        for b in range(a + 1, n):
            if u[a] > u[b]:
                for c in range(b + 1, n):
                    if u[b] > u[c]:
                        return False
    return True


def enumerate_321_avoiding(n: int):
    for u in itertools.permutations(range(1, n + 1)):
        if is_321_avoiding(u):
            yield u


# ------------------------------------------------------------------- matchings

def _pt_L(i):
    return ("L", i)


def _pt_R(j):
    return ("R", j)


@dataclass(frozen=True)
class NoncrossingMatching:
    """Perfect matching on L_1..L_n, R_1..R_n; noncrossing on the circle."""

    n: int
    pairs: tuple  # sorted tuple of sorted 2-tuples of points

    def __init__(self, n, pairs):
        pairs = tuple(sorted(tuple(sorted(p)) for p in pairs))
        pts = [p for pair in pairs for p in pair]
        expected = {_pt_L(i) for i in range(1, n + 1)} | {
            _pt_R(j) for j in range(1, n + 1)}
        if len(pts) != len(set(pts)) or set(pts) != expected:
            raise ValueError("not a perfect matching on the 2n points")
        if _crosses(n, pairs):
            raise ValueError("matching has crossing strands")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "pairs", pairs)

    def partner(self, point):
        for a, b in self.pairs:
            if a == point:
                return b
            if b == point:
                return a
        raise KeyError(point)

    def __str__(self):
        def fmt(p):
            return f"{p[0]}{p[1]}"
        return "".join(f"({fmt(a)}-{fmt(b)})" for a, b in self.pairs)

    def to_json(self):
        return [[f"{a[0]}{a[1]}", f"{b[0]}{b[1]}"] for a, b in self.pairs]


def _circle_pos(n, point):
    side, k = point
    return k - 1 if side == "L" else 2 * n - k


def _crosses(n, pairs) -> bool:
    arcs = [tuple(sorted((_circle_pos(n, a), _circle_pos(n, b)))) for a, b in pairs]
    for (a1, b1), (a2, b2) in itertools.combinations(arcs, 2):
        if a1 < a2 < b1 < b2 or a2 < a1 < b2 < b1:
            return True
    return False


def identity_matching(n) -> NoncrossingMatching:
    return NoncrossingMatching(n, [(_pt_L(k), _pt_R(k)) for k in range(1, n + 1)])


def generator(n, i) -> NoncrossingMatching:
    if not 1 <= i <= n - 1:
        raise ValueError(f"generator index {i} out of range for n={n}")
    pairs = [(_pt_L(i), _pt_L(i + 1)), (_pt_R(i), _pt_R(i + 1))]
    pairs += [(_pt_L(k), _pt_R(k)) for k in range(1, n + 1) if k not in (i, i + 1)]
    return NoncrossingMatching(n, pairs)


def diagram_mul(m1: NoncrossingMatching, m2: NoncrossingMatching):
    """Concatenate m1 (left) with m2 (right): returns (matching, loops)."""
    if m1.n != m2.n:
        raise ValueError("size mismatch")
    n = m1.n
    # points of the glued diagram: ("A", side, k) from m1, ("B", side, k)
    # from m2; m1's R-side is identified with m2's L-side
    adj = {}

    def link(a, b):
        adj.setdefault(a, []).append(b)
        adj.setdefault(b, []).append(a)

    for a, b in m1.pairs:
        link(("A",) + a, ("A",) + b)
    for a, b in m2.pairs:
        link(("B",) + a, ("B",) + b)
    for k in range(1, n + 1):
        link(("A", "R", k), ("B", "L", k))

    boundary = {("A", "L", k): _pt_L(k) for k in range(1, n + 1)}
    boundary.update({("B", "R", k): _pt_R(k) for k in range(1, n + 1)})

    seen = set()
    pairs = []
    for start in boundary:
        if start in seen:
            continue
        seen.add(start)
        prev, cur = None, start
        while True:
            nxt = [x for x in adj[cur] if x != prev]
            assert len(nxt) >= 1
            prev, cur = cur, nxt[0]
            seen.add(cur)
            if cur in boundary and cur != start:
                break
        pairs.append((boundary[start], boundary[cur]))

    loops = 0
    middle = {("A", "R", k) for k in range(1, n + 1)} | {
        ("B", "L", k) for k in range(1, n + 1)}
    for start in middle:
        if start in seen:
            continue
        loops += 1
        prev, cur = None, start
        while True:
            seen.add(cur)
            nxt = [x for x in adj[cur] if x != prev]
            prev, cur = cur, nxt[0]
            if cur == start:
                break

    return NoncrossingMatching(n, pairs), loops


class TLElement:
    """Integer linear combination of basis matchings, loop value 2."""

    __slots__ = ("n", "terms")

    def __init__(self, n, terms=None):
        self.n = n
        self.terms = {m: c for m, c in (terms or {}).items() if c}

    @classmethod
    def unit(cls, n):
        return cls(n, {identity_matching(n): 1})

    def __eq__(self, other):
        return (isinstance(other, TLElement) and self.n == other.n
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __add__(self, other):
        out = dict(self.terms)
        for m, c in other.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return TLElement(self.n, out)

    def scale(self, c):
        return TLElement(self.n, {m: c * v for m, v in self.terms.items()})

    def __mul__(self, other):
        out = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m, loops = diagram_mul(m1, m2)
                c = c1 * c2 * (2 ** loops)
                v = out.get(m, 0) + c
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return TLElement(self.n, out)

    def coeff(self, m: NoncrossingMatching) -> int:
        return self.terms.get(m, 0)


@functools.lru_cache(maxsize=None)
def theta_of_perm(w: tuple) -> TLElement:
    """Image of w under the algebra map sending s_i to t_i - 1."""
    n = len(w)
    out = TLElement.unit(n)
    for i in reduced_word(w):
        ti = TLElement(n, {generator(n, i): 1})
        out = out * (ti + TLElement.unit(n).scale(-1))
    return out


@functools.lru_cache(maxsize=None)
def perm_to_matching(u: tuple) -> NoncrossingMatching:
    """Basis matching of the product of generators over a reduced word."""
    if not is_321_avoiding(u):
        raise ValueError(f"{u} contains the pattern 321")
    n = len(u)
    m = identity_matching(n)
    for i in reduced_word(u):
        m, loops = diagram_mul(m, generator(n, i))
        assert loops == 0
    return m


def f_coeff(u: tuple, w: tuple) -> int:
    """Coefficient of the basis element of u in theta_of_perm(w)."""
    return theta_of_perm(w).coeff(perm_to_matching(u))


def all_matchings(n):
    """All noncrossing matchings, via the 321-avoiding bijection."""
    return [perm_to_matching(u) for u in enumerate_321_avoiding(n)]


def mirror_matching(m: NoncrossingMatching) -> NoncrossingMatching:
    """Left-right reflection: L_k and R_k trade places."""
    flip = {"L": "R", "R": "L"}
    return NoncrossingMatching(
        m.n, [tuple((flip[s], k) for s, k in pair) for pair in m.pairs])


def imm_tl(tau: NoncrossingMatching, A: SFMatrix) -> SymPoly:
    """Temperley-Lieb immanant of A at type tau, by the defining sum.

    Types are drawn with the row points on the left.  The coefficient of
    the diagram tau in the expanded product for w is read at the mirror
    image because our concatenation order is the reflection of the one the
    immanant definition assumes; the choice is pinned by the general
    product-of-complementary-minors identity on asymmetric matrices.
    """
    n = tau.n
    if A.n != n:
        raise ValueError("dimension mismatch")
    if n > 6:
        raise ValueError("definitional immanant guard: n <= 6")
    target = mirror_matching(tau)
    total = SymPoly.zero(A.nvars)
    for w in itertools.permutations(range(1, n + 1)):
        c = theta_of_perm(w).coeff(target)
        if not c:
            continue
        term = SymPoly.one(A.nvars)
        for i, j in enumerate(w, start=1):
            term = term * A[i, j]
            if term.is_zero():
                break
        total = total + term.scale(c)
    return total


def compatible(tau: NoncrossingMatching, I, J) -> bool:
    """True iff every strand has one black and one white endpoint, where
    L_i is black iff i in I and R_j is white iff j in J."""
    I, J = set(I), set(J)
    if len(I) != len(J):
        raise ValueError("|I| != |J|")

    def black(point):
        side, k = point
        return (k in I) if side == "L" else (k not in J)

    return all(black(a) != black(b) for a, b in tau.pairs)


def compatible_types(n, I, J):
    return [m for m in all_matchings(n) if compatible(m, I, J)]


def minor(A: SFMatrix, rows, cols) -> SymPoly:
    """Determinant of the submatrix on the given row/column sets."""
    return determinant(A.submatrix(rows, cols))
