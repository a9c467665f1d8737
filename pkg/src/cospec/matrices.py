"""The ten graph matrices and the complement-shift parameters.

Every matrix is materialized densely with exact integer entries. The
distance-derived kinds require a connected graph; building them for a
disconnected one raises ConnectivityError.
"""

from __future__ import annotations

from enum import Enum
from typing import NamedTuple

from .errors import ConnectivityError
from .graphs import distance_data


class MatrixKind(Enum):
    ADJACENCY = "a"
    LAPLACIAN = "l"
    SIGNLESS_LAPLACIAN = "q"
    DISTANCE = "d"
    DISTANCE_LAPLACIAN = "dl"
    SIGNLESS_DISTANCE_LAPLACIAN = "dq"
    TRANSMISSION_ADJACENCY = "atrs"
    SIGNLESS_TRANSMISSION_ADJACENCY = "atrs+"
    DEGREE_DISTANCE = "ddeg"
    SIGNLESS_DEGREE_DISTANCE = "ddeg+"

    @property
    def token(self):
        return self.value

    @property
    def requires_connected(self):
        return self not in _ADJACENCY_KINDS

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(
                f"unknown matrix kind {token!r}; expected one of "
                + ", ".join(k.value for k in cls)
            ) from None


_ADJACENCY_KINDS = frozenset(
    {MatrixKind.ADJACENCY, MatrixKind.LAPLACIAN, MatrixKind.SIGNLESS_LAPLACIAN}
)

ALL_KINDS = tuple(MatrixKind)
DISTANCE_KINDS = tuple(k for k in MatrixKind if k.requires_connected)


class ShiftParams(NamedTuple):
    """(x, y) with M(complement) = x*I + y*J - M(graph).

    Unconditional for the adjacency and (signless) Laplacian kinds; for the
    seven distance-derived kinds valid exactly when the graph and its
    complement both have diameter at most 2.
    """

    x: int
    y: int


def build_matrix(g, kind, data=None):
    """Exact integer matrix of the requested kind for g.

    data may carry a precomputed DistanceData for g to avoid repeating the
    BFS; it is required to be g's own.
    """
    n = g.n
    rows = g.rows
    adj = [[(rows[i] >> j) & 1 for j in range(n)] for i in range(n)]
    if kind is MatrixKind.ADJACENCY:
        return adj
    if kind in _ADJACENCY_KINDS:
        deg = [bin(r).count("1") for r in rows]
        if kind is MatrixKind.LAPLACIAN:
            return [
                [deg[i] - adj[i][j] if i == j else -adj[i][j] for j in range(n)]
                for i in range(n)
            ]
        return [
            [deg[i] + adj[i][j] if i == j else adj[i][j] for j in range(n)]
            for i in range(n)
        ]
    if data is None:
        data = distance_data(g)
    if not data.connected:
        raise ConnectivityError(
            f"matrix kind {kind.value!r} needs a connected graph"
        )
    dist = data.dist
    if kind is MatrixKind.DISTANCE:
        return [list(row) for row in dist]
    if kind is MatrixKind.DISTANCE_LAPLACIAN:
        diag = data.trs
        sign = -1
    elif kind is MatrixKind.SIGNLESS_DISTANCE_LAPLACIAN:
        diag = data.trs
        sign = 1
    elif kind is MatrixKind.TRANSMISSION_ADJACENCY:
        diag = data.trs
        return [
            [diag[i] if i == j else -adj[i][j] for j in range(n)] for i in range(n)
        ]
    elif kind is MatrixKind.SIGNLESS_TRANSMISSION_ADJACENCY:
        diag = data.trs
        return [
            [diag[i] if i == j else adj[i][j] for j in range(n)] for i in range(n)
        ]
    elif kind is MatrixKind.DEGREE_DISTANCE:
        diag = data.deg
        sign = -1
    elif kind is MatrixKind.SIGNLESS_DEGREE_DISTANCE:
        diag = data.deg
        sign = 1
    else:  # pragma: no cover
        raise AssertionError(kind)
    return [
        [diag[i] + sign * dist[i][j] if i == j else sign * dist[i][j] for j in range(n)]
        for i in range(n)
    ]


def complement_shift(kind, n):
    """Shift parameters (x, y) taking M(G) to M(complement of G)."""
    if n < 2:
        raise ValueError(f"complement shift needs n >= 2 (got {n})")
    table = {
        MatrixKind.ADJACENCY: (-1, 1),
        MatrixKind.LAPLACIAN: (n, -1),
        MatrixKind.SIGNLESS_LAPLACIAN: (n - 2, 1),
        MatrixKind.DISTANCE: (-3, 3),
        MatrixKind.DISTANCE_LAPLACIAN: (3 * n, -3),
        MatrixKind.SIGNLESS_DISTANCE_LAPLACIAN: (3 * n - 6, 3),
        MatrixKind.TRANSMISSION_ADJACENCY: (3 * n - 2, -1),
        MatrixKind.SIGNLESS_TRANSMISSION_ADJACENCY: (3 * n - 4, 1),
        MatrixKind.DEGREE_DISTANCE: (n + 2, -3),
        MatrixKind.SIGNLESS_DEGREE_DISTANCE: (n - 4, 3),
    }
    return ShiftParams(*table[kind])


def apply_shift(m, x, y):
    """x*I + y*J - m."""
    n = len(m)
    return [
        [(x if i == j else 0) + y - m[i][j] for j in range(n)] for i in range(n)
    ]
