"""Exact univariate polynomial arithmetic over the integers and rationals.

Coefficient tuples are ascending (index = degree) with no trailing zeros;
the zero polynomial is the empty tuple. The kernels below work on raw
tuples; :class:`IntPolynomial` is the value type exposed by the public API.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


def trim(coeffs):
    """Drop trailing zero coefficients, canonicalizing the representation."""
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def padd(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def psub(a, b):
    n = max(len(a), len(b))
    return trim((a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n))


def pmul(a, b):
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] += ai * bj
    return trim(out)


def pscale(a, k):
    if k == 0:
        return ()
    return tuple(c * k for c in a)


def peval(a, x):
    """Horner evaluation; exact for int or Fraction x."""
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def pcontent(a):
    g = 0
    for c in a:
        g = gcd(g, abs(c))
        if g == 1:
            return 1
    return g


def pprimitive(a):
    """Primitive part with positive leading coefficient; () for the zero polynomial."""
    a = trim(a)
    if not a:
        return ()
    g = pcontent(a)
    if a[-1] < 0:
        g = -g
    return tuple(c // g for c in a)


def pseudo_rem(a, b):
    """Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) * a mod b."""
    a = list(a)
    db, lb = len(b) - 1, b[-1]
    while len(a) - 1 >= db and any(a):
        while a and a[-1] == 0:
            a.pop()
        if len(a) - 1 < db:
            break
        la = a[-1]
        shift = len(a) - 1 - db
        a = [c * lb for c in a]
        for i in range(db + 1):
            a[shift + i] -= la * b[i]
        a.pop()
    return trim(a)


def pgcd(a, b):
    """Primitive gcd over Z[x] via the primitive pseudo-remainder sequence.

    Content is stripped at every step, so the result generates the same
    ideal as gcd over Q[x] once made monic.
    """
    a, b = pprimitive(a), pprimitive(b)
    while b:
        a, b = b, pprimitive(pseudo_rem(a, b))
    return a


def pmonic(a):
    """Monic image over Q[x] as a tuple of Fractions; () stays ()."""
    a = trim(a)
    if not a:
        return ()
    lead = a[-1]
    return tuple(Fraction(c, lead) for c in a)


def pstr(a, var="x"):
    """Human-readable rendering, highest degree first."""
    a = trim(a)
    if not a:
        return "0"
    parts = []
    for d in range(len(a) - 1, -1, -1):
        c = a[d]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if d == 0:
            body = str(mag)
        elif d == 1:
            body = f"{var}" if mag == 1 else f"{mag}*{var}"
        else:
            body = f"{var}^{d}" if mag == 1 else f"{mag}*{var}^{d}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    text = (first_sign if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        text += f" {sign} {body}"
    return text


@dataclass(frozen=True)
class IntPolynomial:
    """Integer-coefficient polynomial in canonical ascending-coefficient form."""

    coeffs: tuple

    def __post_init__(self):
        object.__setattr__(self, "coeffs", trim(self.coeffs))

    @property
    def degree(self):
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def is_monic(self):
        return bool(self.coeffs) and self.coeffs[-1] == 1

    def __call__(self, x):
        return peval(self.coeffs, x)

    def __add__(self, other):
        return IntPolynomial(padd(self.coeffs, other.coeffs))

    def __sub__(self, other):
        return IntPolynomial(psub(self.coeffs, other.coeffs))

    def __mul__(self, other):
        return IntPolynomial(pmul(self.coeffs, other.coeffs))

    def __str__(self):
        return pstr(self.coeffs)
