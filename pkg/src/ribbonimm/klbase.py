"""Kazhdan-Lusztig polynomials on S_n and the immanants built from them.

P_{x,w}(q) is computed by the classical length recursion with mu
coefficients tracked.  A second, independent computation solves the
bar-invariance condition in the Hecke algebra directly (triangular solve
in the standard basis) and is used as an oracle in the tests.

Polynomials in q are stored as coefficient tuples, lowest degree first.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

from .symfunc import SFMatrix, SymPoly, determinant
from .tlalgebra import apply_s, identity_perm, perm_inverse, perm_length

# ------------------------------------------------------------ q-polynomials

def _ptrim(p):
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return tuple(p)


def _padd(p, r):
    out = [0] * max(len(p), len(r))
    for i, c in enumerate(p):
        out[i] += c
    for i, c in enumerate(r):
        out[i] += c
    return _ptrim(out)


def _pscale(p, c):
    return _ptrim(x * c for x in p)


def _pshift(p, k):
    """Multiply by q^k."""
    return _ptrim((0,) * k + tuple(p)) if p else ()


def poly_str(p) -> str:
    if not p:
        return "0"
    parts = []
    for k, c in enumerate(p):
        if not c:
            continue
        if k == 0:
            parts.append(str(c))
        else:
            body = "q" if k == 1 else f"q^{k}"
            parts.append(body if c == 1 else f"{c}*{body}")
    return " + ".join(parts)


def _first_right_descent(w):
    for i in range(1, len(w)):
        if w[i - 1] > w[i]:
            return i
    return None


# -------------------------------------------------------------- Bruhat order

@functools.lru_cache(maxsize=None)
def bruhat_leq(x: tuple, w: tuple) -> bool:
    """x <= w in Bruhat order, via the lifting property along a reduced
    word of w (subword criterion)."""
    if len(x) != len(w):
        raise ValueError("size mismatch")
    if x == w:
        return True
    if perm_length(x) >= perm_length(w):
        return False
    i = _first_right_descent(w)
    v = apply_s(w, i)
    xs = apply_s(x, i)
    if perm_length(xs) < perm_length(x):
        return bruhat_leq(xs, v)
    return bruhat_leq(x, v)


# ---------------------------------------------------------------- KL tables

@dataclass(frozen=True)
class KLTable:
    """Full table of P_{x,w} for x <= w in S_n."""

    n: int
    polys: dict  # (x, w) -> coefficient tuple

    def P(self, x, w):
        return self.polys.get((x, w), ())

    def mu(self, x, w) -> int:
        """Coefficient of q^{(l(w)-l(x)-1)/2} in P_{x,w}."""
        d = perm_length(w) - perm_length(x)
        if d <= 0 or d % 2 == 0:
            return 0
        p = self.P(x, w)
        k = (d - 1) // 2
        return p[k] if k < len(p) else 0

    def dump(self):
        """Lines `x w : polynomial`, in (length, lex) order."""
        def key(pair):
            x, w = pair
            return (perm_length(w), w, perm_length(x), x)
        out = []
        for x, w in sorted(self.polys, key=key):
            xs = "".join(map(str, x))
            ws = "".join(map(str, w))
            out.append(f"{xs} {ws} : {poly_str(self.polys[(x, w)])}")
        return out


@functools.lru_cache(maxsize=None)
def kl_polynomials(n: int) -> KLTable:
    """All P_{x,w} by the classical recursion on l(w)."""
    if n > 7:
        raise ValueError("KL table guard: n <= 7")
    perms = sorted(itertools.permutations(range(1, n + 1)), key=perm_length)
    P = {}
    e = identity_perm(n)
    P[(e, e)] = (1,)
    for w in perms:
        if w == e:
            continue
        i = _first_right_descent(w)
        v = apply_s(w, i)
        lw = perm_length(w)
        # z with zs < z and mu(z, v) != 0 contribute correction terms
        relevant = []
        for z in perms:
            if perm_length(z) >= lw - 1:
                continue
            d = lw - 1 - perm_length(z)
            if d % 2 == 0:
                continue
            p = P.get((z, v))
            if not p or len(p) <= (d - 1) // 2:
                continue
            if perm_length(apply_s(z, i)) < perm_length(z):
                relevant.append((z, p[(d - 1) // 2]))
        for x in perms:
            if not bruhat_leq(x, w):
                continue
            xs = apply_s(x, i)
            c = 1 if perm_length(xs) < perm_length(x) else 0
            p = _padd(_pshift(P.get((xs, v), ()), 1 - c),
                      _pshift(P.get((x, v), ()), c))
            for z, m in relevant:
                if bruhat_leq(x, z):
                    corr = _pscale(_pshift(P[(x, z)], (lw - perm_length(z)) // 2), -m)
                    p = _padd(p, corr)
            if x == w:
                assert p == (1,), (x, w, p)
            assert p and p[0] == 1 and all(cf >= 0 for cf in p), (x, w, p)
            if x != w:
                assert 2 * (len(p) - 1) <= lw - perm_length(x) - 1, (x, w, p)
            P[(x, w)] = p
    return KLTable(n, P)


# ------------------------------------------- bar-involution oracle (Hecke)

# Laurent polynomials in v as dicts exponent -> int.

def _ladd(a, b):
    out = dict(a)
    for k, c in b.items():
        u = out.get(k, 0) + c
        if u:
            out[k] = u
        else:
            out.pop(k, None)
    return out


def _lmul(a, b):
    out = {}
    for k1, c1 in a.items():
        for k2, c2 in b.items():
            k = k1 + k2
            u = out.get(k, 0) + c1 * c2
            if u:
                out[k] = u
            else:
                out.pop(k, None)
    return out


def _lbar(a):
    return {-k: c for k, c in a.items()}


def _hecke_mul_s(elem, i, n):
    """Right multiplication of sum(c_x H_x) by H_{s_i}, in the
    normalization H_x H_s = H_{xs} for xs > x and H_{xs} + (v^-1 - v) H_x
    otherwise."""
    out = {}
    for x, c in elem.items():
        xs = apply_s(x, i)
        if perm_length(xs) > perm_length(x):
            out[xs] = _ladd(out.get(xs, {}), c)
        else:
            out[xs] = _ladd(out.get(xs, {}), c)
            out[x] = _ladd(out.get(x, {}), _lmul(c, {-1: 1, 1: -1}))
    return {x: c for x, c in out.items() if c}


@functools.lru_cache(maxsize=None)
def _bar_H(w: tuple):
    """bar(H_w) in the standard basis: bar(H_s) = H_s + (v - v^-1) H_e."""
    n = len(w)
    e = identity_perm(n)
    if w == e:
        return {e: {0: 1}}
    i = _first_right_descent(w)
    v = apply_s(w, i)
    prev = _bar_H(v)
    out = _hecke_mul_s(prev, i, n)  # ... H_s
    for x, c in prev.items():       # ... plus (v - v^-1) H_x
        out[x] = _ladd(out.get(x, {}), _lmul(c, {1: 1, -1: -1}))
    return {x: c for x, c in out.items() if c}


def kl_polynomials_hecke(n: int) -> KLTable:
    """Independent KL computation: solve bar(b_w) = b_w triangularly.

    b_w = H_w + sum h_x H_x with h_x in v*Z[v]; then
    h_x(v) = v^{l(w)-l(x)} P_{x,w}(v^{-2}).
    """
    if n > 6:
        raise ValueError("oracle guard: n <= 6")
    perms = sorted(itertools.permutations(range(1, n + 1)),
                   key=lambda p: (-perm_length(p), p))
    polys = {}
    for w in itertools.permutations(range(1, n + 1)):
        coeffs = {w: {0: 1}}
        for x in perms:
            if x == w or not bruhat_leq(x, w):
                continue
            # defect at x of the current bar image
            gamma = {}
            for y, c in coeffs.items():
                gamma = _ladd(gamma, _lmul(_lbar(c), _bar_H(y).get(x, {})))
            alpha = _ladd(gamma, {k: -c for k, c in coeffs.get(x, {}).items()})
            # alpha is bar-antiinvariant; cancel it with h - bar(h), h in vZ[v]
            assert _ladd(alpha, _lbar(alpha)) == {}, (x, w, alpha)
            h = {k: c for k, c in alpha.items() if k > 0}
            assert all(k != 0 for k in alpha), (x, w, alpha)
            coeffs[x] = _ladd(coeffs.get(x, {}), h)
        # convert h_x to P_{x,w}
        lw = perm_length(w)
        for x, c in coeffs.items():
            lx = perm_length(x)
            p = [0] * ((lw - lx) // 2 + 1)
            for k, cf in c.items():
                diff = (lw - lx) - k
                assert diff >= 0 and diff % 2 == 0, (x, w, c)
                p[diff // 2] = cf
            polys[(x, w)] = _ptrim(p)
    return KLTable(n, polys)


# ----------------------------------------------------------------- immanants

@functools.lru_cache(maxsize=None)
def _kl_weights(n: int, w: tuple):
    """Map v -> (-1)^{l(v)-l(w)} P_{w0 v, w0 w}(1) over v >= w."""
    table = kl_polynomials(n)
    w0 = tuple(range(n, 0, -1))
    out = {}
    for v in itertools.permutations(range(1, n + 1)):
        if not bruhat_leq(w, v):
            continue
        p = table.P(tuple(w0[k - 1] for k in v), tuple(w0[k - 1] for k in w))
        sign = -1 if (perm_length(v) - perm_length(w)) % 2 else 1
        out[v] = sign * sum(p)
    return out


def imm_kl(w: tuple, A: SFMatrix) -> SymPoly:
    """Kazhdan-Lusztig immanant at w: a signed, KL-weighted sum of
    diagonal products; at w = e it is the determinant."""
    n = len(w)
    if A.n != n:
        raise ValueError("dimension mismatch")
    if n > 6:
        raise ValueError("KL immanant guard: n <= 6")
    # w0 v and w0 w compose the reversal on the left
    total = SymPoly.zero(A.nvars)
    for v, c in _kl_weights(n, w).items():
        if not c:
            continue
        term = SymPoly.one(A.nvars)
        for i, j in enumerate(v, start=1):
            term = term * A[i, j]
            if term.is_zero():
                break
        total = total + term.scale(c)
    return total


def conjecture12_harness(dec, N: int):
    """Schur-expand every KL immanant of the decomposition matrix.

    Returns a report; negative coefficients are surfaced as certificates,
    not errors (the underlying positivity statement is unproven).
    """
    from .ribbonmat import build
    from .symfunc import expand_schur

    if dec.ell > 5:
        raise ValueError("harness guard: ell <= 5")
    rm = build(dec, N)
    per_perm, certificates = [], []
    for w in itertools.permutations(range(1, dec.ell + 1)):
        exp = expand_schur(imm_kl(w, rm.matrix))
        entry = {
            "perm": list(w),
            "expansion": str(exp),
            "schur_positive": exp.schur_positive,
        }
        per_perm.append(entry)
        if not exp.schur_positive:
            certificates.append({
                "shape": dec.shape.to_json(),
                "ribbon": dec.ribbon.to_json(),
                "perm": list(w),
                "negative_part": {
                    ",".join(map(str, lam)): c
                    for lam, c in exp.negative_part().items()},
            })
    return {
        "a": list(dec.abar),
        "b": list(dec.bbar),
        "nvars": N,
        "immanants": per_perm,
        "certificates": certificates,
        "all_positive": not certificates,
    }


def imm_det_check(A: SFMatrix) -> bool:
    """Imm at the identity equals the determinant."""
    return imm_kl(identity_perm(A.n), A) == determinant(A)


def kl_inverse_symmetry(table: KLTable) -> bool:
    """P_{x,w} == P_{x^-1,w^-1} over the whole table."""
    for (x, w), p in table.polys.items():
        if table.polys.get((perm_inverse(x), perm_inverse(w))) != p:
            return False
    return True
