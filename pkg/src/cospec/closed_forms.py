"""Closed-form Smith normal forms: stars, trees via minimal 2-matchings,
and transmission-regular complete multipartite graphs.

The tree route computes each Delta_k as a gcd of principal minors of the
transmission-adjacency matrix indexed by the looped vertices of minimal
2-matchings; the top value Delta_n has three independent routes that are
always cross-checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from math import gcd, prod

from .errors import ConsistencyError, UnsupportedSizeError
from .graphs import Graph, distance_data
from .intlinalg import InvariantFactors, determinant, snf_diagonal
from .matrices import MatrixKind, build_matrix

TWO_MATCHING_MAX_N = 12


@dataclass(frozen=True)
class TreeData:
    """A tree together with c(u) = trs(u) - deg(u) per vertex."""

    tree: Graph
    c: tuple

    @classmethod
    def from_graph(cls, g):
        if g.edge_count != g.n - 1:
            raise ValueError("not a tree: edge count differs from n - 1")
        data = distance_data(g)
        if not data.connected:
            raise ValueError("not a tree: graph is disconnected")
        return cls(g, tuple(t - d for t, d in zip(data.trs, data.deg)))


@dataclass(frozen=True)
class TwoMatching:
    """Edge/loop subset with at most two incidences per vertex (a loop
    counts as two); loops is the set of looped vertices."""

    edges: frozenset
    loops: frozenset

    @property
    def size(self):
        return len(self.edges) + len(self.loops)


def star_snf(leaves):
    """Invariant factors of the transmission-adjacency matrix (plain and
    signless alike) of the star with the given number of leaves."""
    k = leaves
    if k < 2:
        raise ValueError(f"star closed form needs at least 2 leaves (got {k})")
    w = 2 * k - 1
    return InvariantFactors((1, 1) + (w,) * (k - 2) + (2 * k * (k - 1) * w,))


def _check_tree_size(t):
    if t.tree.n > TWO_MATCHING_MAX_N:
        raise UnsupportedSizeError(
            f"2-matching enumeration is brute force, supported up to "
            f"n = {TWO_MATCHING_MAX_N} (got {t.tree.n})"
        )


def _matching_items(g):
    return list(g.edges()), list(range(g.n))


def _enumerate_two_matchings(g, visit):
    """DFS over all 2-matchings of the looped tree; visit(edges, loops)."""
    edges, loopable = _matching_items(g)
    items = [("e", e) for e in edges] + [("l", v) for v in loopable]
    inc = [0] * g.n
    chosen_e = []
    chosen_l = []

    def rec(i):
        if i == len(items):
            visit(chosen_e, chosen_l)
            return
        kind, item = items[i]
        rec(i + 1)
        if kind == "e":
            u, v = item
            if inc[u] < 2 and inc[v] < 2:
                inc[u] += 1
                inc[v] += 1
                chosen_e.append(item)
                rec(i + 1)
                chosen_e.pop()
                inc[u] -= 1
                inc[v] -= 1
        else:
            if inc[item] == 0:
                inc[item] = 2
                chosen_l.append(item)
                rec(i + 1)
                chosen_l.pop()
                inc[item] = 0

    rec(0)


def minimal_two_matchings(t, k):
    """All size-k 2-matchings of the looped tree achieving the minimum loop
    count among size-k 2-matchings."""
    _check_tree_size(t)
    found = []
    best = [None]

    def visit(chosen_e, chosen_l):
        if len(chosen_e) + len(chosen_l) != k:
            return
        loops = len(chosen_l)
        if best[0] is None or loops < best[0]:
            best[0] = loops
            found.clear()
        if loops == best[0]:
            found.append(
                TwoMatching(frozenset(chosen_e), frozenset(chosen_l))
            )

    _enumerate_two_matchings(t.tree, visit)
    return found


def _loop_sets_by_size(g):
    """size -> set of looped-vertex frozensets over all 2-matchings."""
    table = {}

    def visit(chosen_e, chosen_l):
        size = len(chosen_e) + len(chosen_l)
        table.setdefault(size, set()).add(frozenset(chosen_l))

    _enumerate_two_matchings(g, visit)
    return table


def _inclusion_minimal(sets):
    return [s for s in sets if not any(o < s for o in sets)]


def _principal_minor(m, subset):
    idx = sorted(subset)
    return determinant([[m[i][j] for j in idx] for i in idx])


def tree_snf(t):
    """Invariant factors of the transmission-adjacency matrix of a tree
    (the signless variant has the same SNF), via 2-matching minor gcds.

    Delta_k is the gcd of the principal minors indexed by the
    inclusion-minimal loop sets of size-k 2-matchings of the looped tree.
    Minimality by loop count alone is not enough: on the 5-vertex chair the
    count-minimal loop sets give 8 at k = 4 while the true gcd is 1,
    witnessed by the loop set of a 2-matching whose edges form a longer
    path. The acceptance suite pins this route against the direct SNF for
    every tree up to 9 vertices.
    """
    n = t.tree.n
    if n < 3:
        raise ValueError(f"tree closed form needs n >= 3 (got {n})")
    _check_tree_size(t)
    m = build_matrix(t.tree, MatrixKind.TRANSMISSION_ADJACENCY)
    loop_sets = _loop_sets_by_size(t.tree)
    deltas = [1]  # Delta_2
    for k in range(3, n + 1):
        if k not in loop_sets:
            raise ConsistencyError(f"no 2-matching of size {k} in a tree on {n} vertices")
        g = 0
        for subset in _inclusion_minimal(loop_sets[k]):
            g = gcd(g, abs(_principal_minor(m, subset)))
            if g == 1:
                break
        deltas.append(g)
    d = [1, 1]
    for prev, cur in zip(deltas, deltas[1:]):
        d.append(cur // prev)
    return InvariantFactors(tuple(d))


@lru_cache(maxsize=None)
def _path_edge_masks(tree):
    """For each vertex pair of the tree, the bitmask (over the edge list)
    of the unique path between them."""
    n = tree.n
    edges = list(tree.edges())
    eindex = {}
    for i, (u, v) in enumerate(edges):
        eindex[(u, v)] = i
        eindex[(v, u)] = i
    parent = [[-1] * n for _ in range(n)]
    for s in range(n):
        stack = [s]
        seen = 1 << s
        while stack:
            u = stack.pop()
            r = tree.rows[u]
            while r:
                w = (r & -r).bit_length() - 1
                r &= r - 1
                if not (seen >> w) & 1:
                    seen |= 1 << w
                    parent[s][w] = u
                    stack.append(w)
    masks = {}
    for s in range(n):
        for v in range(n):
            if v == s:
                continue
            mask = 0
            w = v
            while w != s:
                p = parent[s][w]
                mask |= 1 << eindex[(p, w)]
                w = p
            masks[(s, v)] = mask
    return edges, masks


def rho(t, U):
    """Number of (|U|-1)-subsets of tree edges meeting every path between
    distinct vertices of U. Brute force over edge subsets."""
    verts = sorted(set(U))
    if not verts:
        raise ValueError("rho needs a nonempty vertex set")
    _check_tree_size(t)
    edges, masks = _path_edge_masks(t.tree)
    pair_masks = [masks[(u, v)] for u, v in combinations(verts, 2)]
    m = len(edges)
    size = len(verts) - 1
    count = 0
    for subset in combinations(range(m), size):
        fmask = 0
        for i in subset:
            fmask |= 1 << i
        if all(fmask & pm for pm in pair_masks):
            count += 1
    return count


def tree_delta_n(t):
    """Full-size minor gcd Delta_n of the transmission-adjacency matrix,
    computed by (a) the rho-weighted sum over vertex subsets, (b) the
    absolute determinant, and (c) the invariant-factor product, asserting
    that all routes agree."""
    n = t.tree.n
    m = build_matrix(t.tree, MatrixKind.TRANSMISSION_ADJACENCY)
    by_det = abs(determinant(m))
    by_snf = prod(snf_diagonal(m))
    routes = {"determinant": by_det, "invariant factor product": by_snf}
    if n <= TWO_MATCHING_MAX_N:
        c = t.c
        total = 0
        for a in range(1, n + 1):
            for U in combinations(range(n), a):
                weight = 1
                for u in U:
                    weight *= c[u]
                    if weight == 0:
                        break
                if weight == 0:
                    continue
                total += rho(t, U) * weight
        routes["rho sum"] = total
    values = set(routes.values())
    if len(values) != 1:
        raise ConsistencyError(
            "Delta_n routes disagree: "
            + ", ".join(f"{k} = {v}" for k, v in sorted(routes.items()))
        )
    return by_det


def multipartite_snf(m, s, signless=False):
    """Invariant factors of the (signless) transmission-adjacency matrix of
    the complete multipartite graph with m parts of size s (transmission
    regular by construction)."""
    if m < 2 or s < 2:
        raise ValueError(f"need m >= 2 and s >= 2 (got m = {m}, s = {s})")
    t = m * s + s - 2
    a = gcd(m - 1, 2 * (s - 1))
    both_even = m % 2 == 0 and s % 2 == 0
    if signless:
        block = t * (t - s)
        last_num = (m * s - 1) * t * (t - s)
    else:
        block = t * (t + s)
        last_num = (s - 1) * t * (t + s)
    if both_even:
        middle = 2 * t
        last = last_num // a
        exact = last_num % a == 0
    else:
        middle = t
        last = 2 * last_num // a
        exact = (2 * last_num) % a == 0
    if not exact:
        raise ConsistencyError("closed-form last invariant factor is not integral")
    chain = (1,) * (m - 1) + (a,) + (t,) * (m * s - 2 * m) + (middle,) + (block,) * (
        m - 2
    ) + (last,)
    return InvariantFactors(chain)
