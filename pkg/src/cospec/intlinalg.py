"""Exact integer linear algebra: determinants, characteristic polynomials,
Smith normal form over Z, the cofactor-sum polynomial, and determinantal
gcds of xI - M over Q[x].

Matrices are plain square lists of lists of Python ints (arbitrary
precision). Everything here is division-free or fraction-free; no floating
point is used anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import prod

from .errors import UnsupportedSizeError
from .polynomials import (
    IntPolynomial,
    padd,
    pgcd,
    pmonic,
    pmul,
    pprimitive,
    psub,
    trim,
)

IntMatrix = list  # list[list[int]], square

DETERMINANTAL_GCD_MAX_N = 8


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def ones_matrix(n):
    return [[1] * n for _ in range(n)]


def determinant(m):
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [row[:] for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k]:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        rk = a[k]
        pk = rk[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (ri[j] * pk - aik * rk[j]) // prev
        prev = pk
    return sign * a[n - 1][n - 1]


def charpoly_coeffs(m):
    """Coefficients (ascending) of det(xI - m), via the division-free
    Berkowitz recurrence on leading principal blocks."""
    n = len(m)
    c = [1, -m[0][0]]
    for i in range(1, n):
        mi = m[i]
        row_left = mi[:i]
        v = [m[j][i] for j in range(i)]
        t = [1, -mi[i]]
        s = 0
        for j in range(i):
            s += row_left[j] * v[j]
        t.append(-s)
        for _ in range(i - 1):
            w = []
            for r in range(i):
                mr = m[r]
                acc = 0
                for j in range(i):
                    acc += mr[j] * v[j]
                w.append(acc)
            v = w
            s = 0
            for j in range(i):
                s += row_left[j] * v[j]
            t.append(-s)
        lc = len(c)
        cn = []
        for r in range(i + 2):
            acc = 0
            top = r if r < lc else lc - 1
            for j in range(top + 1):
                acc += t[r - j] * c[j]
            cn.append(acc)
        c = cn
    return tuple(reversed(c))


def charpoly(m):
    """Monic characteristic polynomial p(x) = det(xI - m)."""
    return IntPolynomial(charpoly_coeffs(m))


def cof_coeffs(m):
    """Coefficients (ascending) of cof(xI - m), the sum of all signed
    (n-1)-cofactors, computed as det(xI - m + J) - det(xI - m)."""
    shifted = [[v - 1 for v in row] for row in m]
    return psub(charpoly_coeffs(shifted), charpoly_coeffs(m))


def cof_polynomial(m):
    """c(x) with det(xI - m + yJ) = charpoly(m)(x) + y*c(x) for every y."""
    return IntPolynomial(cof_coeffs(m))


@dataclass(frozen=True)
class InvariantFactors:
    """SNF diagonal d_1 | d_2 | ... | d_n, nonnegative, zeros trailing."""

    d: tuple

    def __post_init__(self):
        d = tuple(self.d)
        object.__setattr__(self, "d", d)
        for i, v in enumerate(d):
            if v < 0:
                raise ValueError(f"invariant factor d_{i + 1} = {v} is negative")
            if i and d[i - 1] == 0 and v != 0:
                raise ValueError("zero invariant factors must form a trailing block")
            if i and d[i - 1] != 0 and v != 0 and v % d[i - 1]:
                raise ValueError(f"d_{i} = {d[i - 1]} does not divide d_{i + 1} = {v}")

    @property
    def rank(self):
        return sum(1 for v in self.d if v)

    @property
    def nonzero_product(self):
        return prod(v for v in self.d if v)

    def __iter__(self):
        return iter(self.d)

    def __str__(self):
        return " ".join(str(v) for v in self.d)


def snf_diagonal(m):
    """Invariant factors of an integer matrix as a raw tuple.

    Elimination picks the nonzero entry of minimum absolute value as pivot
    at every stage, which keeps intermediate entries small.
    """
    n = len(m)
    a = [row[:] for row in m]
    out = []
    for k in range(n):
        piv_i = -1
        piv_j = -1
        best = 0
        for i in range(k, n):
            row = a[i]
            for j in range(k, n):
                v = row[j]
                if v:
                    av = -v if v < 0 else v
                    if piv_i < 0 or av < best:
                        best = av
                        piv_i = i
                        piv_j = j
                        if av == 1:
                            break
            if best == 1 and piv_i >= 0:
                break
        if piv_i < 0:
            out.extend([0] * (n - k))
            break
        if piv_i != k:
            a[k], a[piv_i] = a[piv_i], a[k]
        if piv_j != k:
            for row in a:
                row[k], row[piv_j] = row[piv_j], row[k]
        while True:
            rk = a[k]
            p = rk[k]
            dirty = False
            for i in range(k + 1, n):
                ri = a[i]
                v = ri[k]
                if v:
                    q = v // p
                    if q:
                        for j in range(k, n):
                            ri[j] -= q * rk[j]
                    if ri[k]:
                        # Euclid step: the remainder is strictly smaller,
                        # promote it to pivot and start over.
                        a[k], a[i] = a[i], a[k]
                        dirty = True
                        break
            if dirty:
                continue
            for j in range(k + 1, n):
                v = rk[j]
                if v:
                    q = v // p
                    if q:
                        for i in range(k, n):
                            a[i][j] -= q * a[i][k]
                    if rk[j]:
                        for row in a:
                            row[k], row[j] = row[j], row[k]
                        dirty = True
                        break
            if dirty:
                continue
            # Row and column k are clear; enforce divisibility of the rest.
            viol = -1
            for i in range(k + 1, n):
                ri = a[i]
                for j in range(k + 1, n):
                    if ri[j] % p:
                        viol = i
                        break
                if viol >= 0:
                    break
            if viol < 0:
                break
            rv = a[viol]
            for j in range(k, n):
                rk[j] += rv[j]
        out.append(abs(a[k][k]))
    return tuple(out)


def smith_normal_form(m):
    """Smith normal form of an integer matrix, as its invariant factors."""
    return InvariantFactors(snf_diagonal(m))


@dataclass(frozen=True)
class RationalPolyDivisors:
    """Monic gcds g_k of the k x k minors of xI - M over Q[x], k = 1..n."""

    g: tuple  # tuple of tuples of Fraction, each ascending, monic or empty

    def __str__(self):
        from .polynomials import pstr

        return "; ".join(pstr(gk) if gk else "0" for gk in self.g)


def _charmatrix_entries(m):
    n = len(m)
    ent = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                row.append(trim((-m[i][j], 1)))
            else:
                row.append(trim((-m[i][j],)))
        ent.append(row)
    return ent


def _gcd_of_polys(values):
    g = ()
    for p in values:
        if not p:
            continue
        g = pgcd(g, p) if g else pprimitive(p)
        if g == (1,):
            break
    return g


def determinantal_gcds_Qx(m):
    """For k = 1..n, the monic gcd over Q[x] of all k x k minors of xI - m.

    Raw minor enumeration: level-k minors are expanded along their first
    row from the previously computed level-(k-1) minors, so every minor is
    built exactly once. Bounded at n = 8 by combinatorial growth.
    """
    n = len(m)
    if n > DETERMINANTAL_GCD_MAX_N:
        raise UnsupportedSizeError(
            f"determinantal gcds are enumerated from raw minors, supported up to "
            f"n = {DETERMINANTAL_GCD_MAX_N} (got {n})"
        )
    ent = _charmatrix_entries(m)
    idx = range(n)
    cur = {((i,), (j,)): ent[i][j] for i in idx for j in idx}
    gs = [_gcd_of_polys(cur.values())]
    for k in range(2, n + 1):
        nxt = {}
        for rows in combinations(idx, k):
            r0 = rows[0]
            rest = rows[1:]
            ent0 = ent[r0]
            for cols in combinations(idx, k):
                acc = ()
                sign = 1
                for pos, cj in enumerate(cols):
                    e = ent0[cj]
                    if e:
                        sub = cur[(rest, cols[:pos] + cols[pos + 1 :])]
                        if sub:
                            term = pmul(e, sub)
                            acc = padd(acc, term) if sign > 0 else psub(acc, term)
                    sign = -sign
                nxt[(rows, cols)] = acc
        cur = nxt
        gs.append(_gcd_of_polys(cur.values()))
    return RationalPolyDivisors(tuple(pmonic(g) for g in gs))
