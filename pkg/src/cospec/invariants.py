"""Canonical fingerprints and pairwise predicates.

A fingerprint is an opaque byte key; two graphs get equal keys for a given
(kind, flavor) exactly when they stand in the corresponding relation:

  spectral        equal characteristic polynomial of M
  gen-spectral    spectral, and complements spectral
  r-spectral      equal (charpoly, cofactor-polynomial) pair, i.e.
                  (yJ - M)-cospectral for every real y
  invariant       equal Smith normal form of M
  gen-invariant   invariant, and complements invariant

Keys serialize coefficient and factor lists with explicit length prefixes
and two's-complement big-endian integers; no hashing is involved, so equal
keys never collide across distinct values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

from .errors import ConnectivityError
from .graphs import complement, distance_data
from .intlinalg import (
    charpoly_coeffs,
    cof_coeffs,
    determinantal_gcds_Qx,
    snf_diagonal,
)
from .matrices import build_matrix
from .polynomials import pstr


class Flavor(Enum):
    SPECTRAL = "spectral"
    GEN_SPECTRAL = "gen-spectral"
    R_SPECTRAL = "r-spectral"
    INVARIANT = "invariant"
    GEN_INVARIANT = "gen-invariant"

    @property
    def token(self):
        return self.value

    @property
    def uses_complement(self):
        return self in (Flavor.GEN_SPECTRAL, Flavor.GEN_INVARIANT)

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(
                f"unknown flavor {token!r}; expected one of "
                + ", ".join(f.value for f in cls)
            ) from None


def _block(ints):
    parts = [len(ints).to_bytes(4, "big")]
    for v in ints:
        b = v.to_bytes(((v + (v < 0)).bit_length() // 8) + 1, "big", signed=True)
        parts.append(len(b).to_bytes(2, "big"))
        parts.append(b)
    return b"".join(parts)


def compose_key(kind, flavor, blocks):
    """Assemble the byte key from already computed component int lists."""
    return f"{kind.value};{flavor.value};".encode("ascii") + b"".join(
        _block(b) for b in blocks
    )


def _checked_data(g, kind, flavor):
    """DistanceData for g and its complement as the flavor/kind require."""
    data = distance_data(g)
    if kind.requires_connected and not data.connected:
        raise ConnectivityError(
            f"kind {kind.value!r} needs a connected graph"
        )
    cg = cdata = None
    if flavor.uses_complement:
        cg = complement(g)
        cdata = distance_data(cg)
        if kind.requires_connected and not cdata.connected:
            raise ConnectivityError(
                f"generalized {kind.value!r} fingerprints need a connected complement"
            )
    return data, cg, cdata


def fingerprint_blocks(g, kind, flavor, data=None, cg=None, cdata=None):
    if data is None:
        data, cg, cdata = _checked_data(g, kind, flavor)
    m = build_matrix(g, kind, data=data)
    if flavor is Flavor.SPECTRAL:
        return [charpoly_coeffs(m)]
    if flavor is Flavor.R_SPECTRAL:
        return [charpoly_coeffs(m), cof_coeffs(m)]
    if flavor is Flavor.INVARIANT:
        return [snf_diagonal(m)]
    mbar = build_matrix(cg, kind, data=cdata)
    if flavor is Flavor.GEN_SPECTRAL:
        return [charpoly_coeffs(m), charpoly_coeffs(mbar)]
    return [snf_diagonal(m), snf_diagonal(mbar)]


def fingerprint(g, kind, flavor):
    """Byte-comparable key for the (kind, flavor) equivalence class of g."""
    return compose_key(kind, flavor, fingerprint_blocks(g, kind, flavor))


def describe_fingerprint(g, kind, flavor):
    """Human-readable rendering of what the fingerprint encodes."""
    blocks = fingerprint_blocks(g, kind, flavor)
    names = {
        Flavor.SPECTRAL: ("charpoly",),
        Flavor.GEN_SPECTRAL: ("charpoly", "charpoly of complement"),
        Flavor.R_SPECTRAL: ("charpoly", "cof polynomial"),
        Flavor.INVARIANT: ("invariant factors",),
        Flavor.GEN_INVARIANT: ("invariant factors", "invariant factors of complement"),
    }[flavor]
    rendered = []
    for name, ints in zip(names, blocks):
        if "factors" in name:
            rendered.append(f"{name}: " + " ".join(str(v) for v in ints))
        else:
            rendered.append(f"{name}: " + pstr(ints))
    return f"kind {kind.value}, flavor {flavor.value}; " + "; ".join(rendered)


def related(g, h, kind, flavor):
    """True exactly when g and h stand in the (kind, flavor) relation."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ ({g.n} vs {h.n})")
    return fingerprint(g, kind, flavor) == fingerprint(h, kind, flavor)


def is_codeterminantal_Qx(g, h, kind):
    """True when the Q[x] determinantal gcd chains of xI - M agree at
    every order for M of the given kind."""
    if g.n != h.n:
        raise ValueError(f"vertex counts differ ({g.n} vs {h.n})")
    mg = build_matrix(g, kind)
    mh = build_matrix(h, kind)
    return determinantal_gcds_Qx(mg) == determinantal_gcds_Qx(mh)


@dataclass(frozen=True)
class CokernelGroup:
    """Z^n / Im M as torsion invariant factors (> 1) plus free rank."""

    torsion: tuple
    free_rank: int

    def __str__(self):
        parts = [f"Z_{d}" for d in self.torsion]
        parts.extend(["Z"] * self.free_rank)
        return " + ".join(parts) if parts else "0"


def cokernel_group(g, kind):
    """Torsion/free decomposition of the cokernel, read off the SNF."""
    factors = snf_diagonal(build_matrix(g, kind))
    return CokernelGroup(
        torsion=tuple(d for d in factors if d > 1),
        free_rank=sum(1 for d in factors if d == 0),
    )
