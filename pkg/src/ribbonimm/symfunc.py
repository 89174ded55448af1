"""Exact symmetric polynomial arithmetic in N variables.

Polynomials are stored in the monomial symmetric basis: a map from
partitions (at most N parts) to exact integers.  Symmetry is therefore
structural.  The coefficient of the single monomial x^gamma equals the
stored coefficient at the sorted exponent vector, which is what the
multiplication routine exploits.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass, field

from .shapes import SkewShape, normalize_partition


def _sorted_key(vec) -> tuple:
    key = tuple(sorted(vec, reverse=True))
    while key and key[-1] == 0:
        key = key[:-1]
    return key


@functools.lru_cache(maxsize=None)
def _orbit(key: tuple, nvars: int) -> tuple:
    """All distinct length-nvars exponent vectors with sorted form key."""
    vec = key + (0,) * (nvars - len(key))
    return tuple(sorted(set(itertools.permutations(vec))))


class SymPoly:
    """Symmetric polynomial in x_1..x_nvars with exact integer coefficients."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs=None):
        self.nvars = nvars
        self.coeffs = {}
        if coeffs:
            for key, c in coeffs.items():
                if c:
                    key = tuple(key)
                    if len(key) > nvars:
                        raise ValueError(f"{key} has more than {nvars} parts")
                    self.coeffs[key] = c

    @classmethod
    def zero(cls, nvars):
        return cls(nvars)

    @classmethod
    def one(cls, nvars):
        return cls(nvars, {(): 1})

    def is_zero(self) -> bool:
        return not self.coeffs

    def degree(self):
        """Total degree, or None for the zero polynomial."""
        return max((sum(k) for k in self.coeffs), default=None)

    def is_homogeneous(self) -> bool:
        return len({sum(k) for k in self.coeffs}) <= 1

    def _check(self, other):
        if self.nvars != other.nvars:
            raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")

    def __eq__(self, other):
        return (isinstance(other, SymPoly) and self.nvars == other.nvars
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def __add__(self, other):
        self._check(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            v = out.get(k, 0) + c
            if v:
                out[k] = v
            else:
                out.pop(k, None)
        return SymPoly(self.nvars, out)

    def __neg__(self):
        return SymPoly(self.nvars, {k: -c for k, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: int):
        if c == 0:
            return SymPoly(self.nvars)
        return SymPoly(self.nvars, {k: c * v for k, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        self._check(other)
        n = self.nvars
        # iterate over the factor whose orbits are smaller
        a, b = self, other
        if sum(len(_orbit(k, n)) for k in a.coeffs) < \
           sum(len(_orbit(k, n)) for k in b.coeffs):
            a, b = b, a
        candidates = set()
        for lam in a.coeffs:
            lvec = lam + (0,) * (n - len(lam))
            for mu in b.coeffs:
                for beta in _orbit(mu, n):
                    candidates.add(_sorted_key(x + y for x, y in zip(lvec, beta)))
        out = {}
        for nu in candidates:
            nvec = nu + (0,) * (n - len(nu))
            total = 0
            for mu, qc in b.coeffs.items():
                s = 0
                for beta in _orbit(mu, n):
                    gamma = tuple(x - y for x, y in zip(nvec, beta))
                    if min(gamma, default=0) >= 0:
                        s += a.coeffs.get(_sorted_key(gamma), 0)
                total += qc * s
            if total:
                out[nu] = total
        return SymPoly(n, out)

    __rmul__ = __mul__

    def evaluate(self, point) -> int:
        """Exact evaluation at an integer point of length nvars."""
        assert len(point) == self.nvars
        total = 0
        for key, c in self.coeffs.items():
            for alpha in _orbit(key, self.nvars):
                term = 1
                for x, e in zip(point, alpha):
                    term *= x ** e
                total += c * term
        return total

    def __repr__(self):
        items = ", ".join(f"m{list(k)}: {c}" for k, c in sorted(
            self.coeffs.items(), reverse=True))
        return f"SymPoly(N={self.nvars}, {{{items}}})"


def enumerate_ssyt(shape: SkewShape, N: int):
    """All fillings with weakly increasing rows and strictly increasing
    columns, entries in [1, N], as cell -> entry maps in row-major
    lexicographic order."""
    cells = [(i, j) for i, j, _ in shape.cells()]
    cell_set = set(cells)

    def fill(pos, entries):
        if pos == len(cells):
            yield dict(entries)
            return
        i, j = cells[pos]
        lo = 1
        if (i, j - 1) in cell_set:
            lo = max(lo, entries[(i, j - 1)])
        if (i - 1, j) in cell_set:
            lo = max(lo, entries[(i - 1, j)] + 1)
        for v in range(lo, N + 1):
            entries[(i, j)] = v
            yield from fill(pos + 1, entries)
        entries.pop((i, j), None)

    yield from fill(0, {})


def ssyt_count(shape: SkewShape, N: int) -> int:
    return sum(1 for _ in enumerate_ssyt(shape, N))


@functools.lru_cache(maxsize=None)
def _skew_schur_cached(shape: SkewShape, N: int) -> SymPoly:
    coeffs = {}
    for filling in enumerate_ssyt(shape, N):
        wt = [0] * N
        for v in filling.values():
            wt[v - 1] += 1
        # symmetric, so only partition-sorted weights need recording
        if all(wt[k] >= wt[k + 1] for k in range(N - 1)):
            key = _sorted_key(wt)
            coeffs[key] = coeffs.get(key, 0) + 1
    return SymPoly(N, coeffs)


def skew_schur(shape: SkewShape, N: int) -> SymPoly:
    """Weight generating function of the SSYT of shape, in N variables."""
    return _skew_schur_cached(shape, N)


def schur_poly(lam, N: int) -> SymPoly:
    lam = normalize_partition(lam)
    if len(lam) > N:
        return SymPoly.zero(N)
    return skew_schur(SkewShape(lam), N)


def h_poly(k: int, N: int) -> SymPoly:
    return schur_poly((k,), N) if k > 0 else SymPoly.one(N)


def e_poly(k: int, N: int) -> SymPoly:
    return schur_poly((1,) * k, N) if k > 0 else SymPoly.one(N)


@dataclass
class SFMatrix:
    """Square matrix of SymPoly entries sharing one variable count."""

    n: int
    nvars: int
    entries: list = field(default_factory=list)

    def __post_init__(self):
        assert len(self.entries) == self.n
        for row in self.entries:
            assert len(row) == self.n
            for p in row:
                assert p.nvars == self.nvars

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i - 1][j - 1]

    def submatrix(self, rows, cols) -> "SFMatrix":
        rows, cols = sorted(rows), sorted(cols)
        assert len(rows) == len(cols)
        return SFMatrix(len(rows), self.nvars,
                        [[self[i, j] for j in cols] for i in rows])


def determinant(M: SFMatrix) -> SymPoly:
    """Exact determinant; Laplace expansion memoized over column subsets."""
    if M.n == 0:
        return SymPoly.one(M.nvars)
    if M.n > 8:
        raise ValueError("determinant guard: n <= 8")
    cache = {}

    def minor(row, colmask):
        # determinant of rows row..n over the columns set in colmask
        if row > M.n:
            return SymPoly.one(M.nvars)
        key = colmask
        if key in cache:
            return cache[key]
        total = SymPoly.zero(M.nvars)
        sign = 1
        for j in range(1, M.n + 1):
            bit = 1 << (j - 1)
            if not colmask & bit:
                continue
            entry = M[row, j]
            if not entry.is_zero():
                total = total + (entry * minor(row + 1, colmask & ~bit)).scale(sign)
            sign = -sign
        cache[key] = total
        return total

    return minor(1, (1 << M.n) - 1)


def determinant_naive(M: SFMatrix) -> SymPoly:
    """Signed sum over permutations; small-n oracle for determinant."""
    total = SymPoly.zero(M.nvars)
    for perm in itertools.permutations(range(1, M.n + 1)):
        sign = _perm_sign(perm)
        term = SymPoly.one(M.nvars)
        for i, j in enumerate(perm, start=1):
            term = term * M[i, j]
            if term.is_zero():
                break
        total = total + term.scale(sign)
    return total


def _perm_sign(perm) -> int:
    inv = sum(1 for a in range(len(perm)) for b in range(a + 1, len(perm))
              if perm[a] > perm[b])
    return -1 if inv % 2 else 1


class SchurExpansion:
    """Integer coefficient map over partitions, in the Schur basis."""

    __slots__ = ("nvars", "coeffs")

    def __init__(self, nvars: int, coeffs=None):
        self.nvars = nvars
        self.coeffs = {tuple(k): c for k, c in (coeffs or {}).items() if c}

    @property
    def schur_positive(self) -> bool:
        return all(c >= 0 for c in self.coeffs.values())

    def negative_part(self):
        return {k: c for k, c in self.coeffs.items() if c < 0}

    def __eq__(self, other):
        return (isinstance(other, SchurExpansion) and self.nvars == other.nvars
                and self.coeffs == other.coeffs)

    def __hash__(self):
        return hash((self.nvars, frozenset(self.coeffs.items())))

    def to_poly(self) -> SymPoly:
        total = SymPoly.zero(self.nvars)
        for lam, c in self.coeffs.items():
            total = total + schur_poly(lam, self.nvars).scale(c)
        return total

    def __str__(self):
        if not self.coeffs:
            return "0"
        parts = []
        for lam in sorted(self.coeffs, reverse=True):
            c = self.coeffs[lam]
            body = "s[" + ",".join(map(str, lam)) + "]"
            mag = abs(c)
            term = body if mag == 1 else f"{mag}*{body}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(("+ " if c > 0 else "- ") + term)
        return " ".join(parts)

    __repr__ = __str__

    def to_json(self):
        return {
            "nvars": self.nvars,
            "terms": [
                {"partition": list(lam), "coeff": str(self.coeffs[lam])}
                for lam in sorted(self.coeffs, reverse=True)
            ],
            "schur_positive": self.schur_positive,
        }


def expand_schur(p: SymPoly) -> SchurExpansion:
    """Expand in the Schur basis by subtracting at the lex-greatest key."""
    n_terms_bound = 4 * (len(p.coeffs) + 1) * (1 + sum(
        abs(c) for c in p.coeffs.values()))
    rem = p
    out = {}
    steps = 0
    while not rem.is_zero():
        steps += 1
        if steps > n_terms_bound:
            raise RuntimeError("expansion did not terminate; input not symmetric?")
        lam = max(rem.coeffs)
        c = rem.coeffs[lam]
        out[lam] = c
        rem = rem - schur_poly(lam, p.nvars).scale(c)
    return SchurExpansion(p.nvars, out)


def is_schur_positive(p: SymPoly):
    exp = expand_schur(p)
    return exp.schur_positive, exp


def lr_coefficient(lam, mu, nu) -> int:
    """Brute-force Littlewood-Richardson coefficient c^lam_{mu,nu}."""
    lam, mu, nu = map(normalize_partition, (lam, mu, nu))
    if sum(lam) != sum(mu) + sum(nu):
        return 0
    try:
        shape = SkewShape(lam, mu)
    except Exception:
        return 0
    N = max(sum(lam), 1)
    return expand_schur(skew_schur(shape, N)).coeffs.get(nu, 0)
