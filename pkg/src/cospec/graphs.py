"""Graphs as immutable adjacency bitsets, graph6 I/O, BFS metric data,
canonical keys, and self-contained generators for small vertex counts.

graph6 here is the short form: one header byte n+63, then the upper
triangle in column-major pair order (0,1),(0,2),(1,2),(0,3),... packed
big-endian into 6-bit groups, each offset by 63.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import Graph6ParseError, UnsupportedSizeError

MAX_VERTICES = 64  # representable
MAX_GRAPH6_VERTICES = 63  # header byte must stay within [63, 126]
CANONICAL_MAX_N = 8
GENERATOR_MAX_N = 8
TREE_MAX_N = 12

UNREACHABLE = -1


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph; rows[v] is the neighbor bitmask of v."""

    n: int
    rows: tuple

    def __post_init__(self):
        n = self.n
        rows = tuple(self.rows)
        object.__setattr__(self, "rows", rows)
        if not 1 <= n <= MAX_VERTICES:
            raise ValueError(f"vertex count {n} outside [1, {MAX_VERTICES}]")
        if len(rows) != n:
            raise ValueError("adjacency rows do not match the vertex count")
        for u in range(n):
            r = rows[u]
            if r >> n:
                raise ValueError(f"row {u} has bits beyond vertex {n - 1}")
            if (r >> u) & 1:
                raise ValueError(f"loop at vertex {u}")
        for u in range(n):
            ru = rows[u]
            for v in range(u + 1, n):
                if ((ru >> v) ^ (rows[v] >> u)) & 1:
                    raise ValueError(f"adjacency not symmetric at ({u}, {v})")

    def has_edge(self, u, v):
        return bool((self.rows[u] >> v) & 1)

    def degree(self, v):
        return bin(self.rows[v]).count("1")

    def degrees(self):
        return tuple(bin(r).count("1") for r in self.rows)

    @property
    def edge_count(self):
        return sum(bin(r).count("1") for r in self.rows) // 2

    def edges(self):
        for u in range(self.n):
            r = self.rows[u] >> (u + 1)
            v = u + 1
            while r:
                if r & 1:
                    yield (u, v)
                r >>= 1
                v += 1

    def is_connected(self):
        n, rows = self.n, self.rows
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
        return seen == (1 << n) - 1


def from_edges(n, edges):
    rows = [0] * n
    for u, v in edges:
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(n):
    full = (1 << n) - 1
    return Graph(n, tuple(full ^ (1 << v) for v in range(n)))


def empty(n):
    return Graph(n, (0,) * n)


def path(n):
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n):
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def star(leaves):
    """Star with the given number of leaves; the hub is the last vertex."""
    n = leaves + 1
    return from_edges(n, [(i, leaves) for i in range(leaves)])


def complete_multipartite(m, s):
    """Complete multipartite graph with m parts of equal size s."""
    n = m * s
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if u // s != v // s:
                edges.append((u, v))
    return from_edges(n, edges)


def disjoint_union(g, h):
    rows = list(g.rows) + [r << g.n for r in h.rows]
    return Graph(g.n + h.n, tuple(rows))


def complement(g):
    """Off-diagonal negation; complement(complement(g)) == g."""
    full = (1 << g.n) - 1
    return Graph(g.n, tuple((full ^ r ^ (1 << v)) for v, r in enumerate(g.rows)))


# ---------------------------------------------------------------------------
# graph6


def parse_graph6(s):
    """Parse one canonical short-form graph6 line into a Graph.

    Rejects bytes outside [63, 126], truncated input, trailing garbage and
    nonzero padding bits, naming the offending byte offset.
    """
    s = s.rstrip("\n")
    if not s:
        raise Graph6ParseError("empty graph6 string")
    b0 = ord(s[0])
    if not 63 <= b0 <= 126:
        raise Graph6ParseError(f"header byte {b0} outside [63, 126]", offset=0)
    n = b0 - 63
    if n == 0:
        raise Graph6ParseError("graph6 encodes an empty vertex set", offset=0)
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(s) - 1 < nbytes:
        raise Graph6ParseError(
            f"need {nbytes} data bytes for n = {n}, got {len(s) - 1}", offset=len(s)
        )
    if len(s) - 1 > nbytes:
        raise Graph6ParseError("trailing garbage after graph6 data", offset=1 + nbytes)
    rows = [0] * n
    pairs = _PAIR_CACHE(n)
    bitpos = 0
    for k in range(nbytes):
        b = ord(s[1 + k])
        if not 63 <= b <= 126:
            raise Graph6ParseError(f"data byte {b} outside [63, 126]", offset=1 + k)
        group = b - 63
        for t in range(5, -1, -1):
            bit = (group >> t) & 1
            if bitpos < nbits:
                if bit:
                    # column-major order: bit index -> pair (u, v)
                    u, v = pairs[bitpos]
                    rows[u] |= 1 << v
                    rows[v] |= 1 << u
            elif bit:
                raise Graph6ParseError("nonzero padding bit", offset=1 + k)
            bitpos += 1
    return Graph(n, tuple(rows))


@lru_cache(maxsize=None)
def _PAIR_CACHE(n):
    pairs = []
    for v in range(1, n):
        for u in range(v):
            pairs.append((u, v))
    return tuple(pairs)


def write_graph6(g):
    """Canonical short-form graph6 line; inverse of parse_graph6."""
    n = g.n
    if n > MAX_GRAPH6_VERTICES:
        raise UnsupportedSizeError(
            f"graph6 short form caps at {MAX_GRAPH6_VERTICES} vertices (got {n})"
        )
    cols = []
    rows = g.rows
    for v in range(1, n):
        c = 0
        for u in range(v):
            c = (c << 1) | ((rows[u] >> v) & 1)
        cols.append(c)
    return chr(n + 63) + _pack_columns(n, cols)


def _pack_columns(n, cols):
    acc = 0
    nbits = 0
    for v, c in enumerate(cols, start=1):
        acc = (acc << v) | c
        nbits += v
    pad = (-nbits) % 6
    acc <<= pad
    nbits += pad
    chars = []
    for k in range(nbits - 6, -1, -6):
        chars.append(chr(((acc >> k) & 63) + 63))
    return "".join(chars)


def iter_graph6_lines(lines):
    """Yield (lineno, Graph) from an iterable of text lines.

    Blank lines and '>'-prefixed header/comment lines are skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith(">"):
            continue
        try:
            yield lineno, parse_graph6(line)
        except Graph6ParseError as exc:
            raise Graph6ParseError(str(exc), lineno=lineno) from exc


def read_graph6_file(pathname):
    with open(pathname, "r", encoding="ascii") as handle:
        yield from iter_graph6_lines(handle)


# ---------------------------------------------------------------------------
# BFS metric data


@dataclass(frozen=True)
class DistanceData:
    """Per-pair hop counts plus the derived transmission/degree vectors.

    Unreachable pairs hold UNREACHABLE (-1); trs and diameter are None for
    disconnected graphs rather than pretending a value.
    """

    dist: tuple
    trs: tuple
    deg: tuple
    diameter: int
    connected: bool


def distance_data(g):
    n, rows = g.n, g.rows
    full = (1 << n) - 1
    dist = []
    connected = True
    for s in range(n):
        drow = [UNREACHABLE] * n
        drow[s] = 0
        seen = 1 << s
        frontier = 1 << s
        d = 0
        while frontier:
            d += 1
            nxt = 0
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                nxt |= rows[v]
            frontier = nxt & ~seen
            seen |= frontier
            f = frontier
            while f:
                v = (f & -f).bit_length() - 1
                f &= f - 1
                drow[v] = d
        if seen != full:
            connected = False
        dist.append(tuple(drow))
    deg = tuple(bin(r).count("1") for r in rows)
    if connected:
        trs = tuple(sum(row) for row in dist)
        diameter = max(max(row) for row in dist)
    else:
        trs = None
        diameter = None
    return DistanceData(tuple(dist), trs, deg, diameter, connected)


# ---------------------------------------------------------------------------
# canonical keys (brute-force bound, exact minimum over all relabelings)


def _is_twin(rows, u, v):
    mask = ~((1 << u) | (1 << v))
    return (rows[u] & mask) == (rows[v] & mask)


def _canonical_columns(n, rows):
    """Column codes of the lexicographically minimal graph6 labeling.

    Greedy level search: the minimal bit stream must route through a
    minimal column at every position, so only tied extensions survive.
    Twin vertices (swappable by a transposition automorphism) are explored
    once per frontier entry.
    """
    first = []
    for v in range(n):
        if not any(_is_twin(rows, v, w) for w in first):
            first.append(v)
    partials = [(v,) for v in first]
    cols = []
    for _ in range(1, n):
        best = None
        chosen = []
        for p in partials:
            used = 0
            for u in p:
                used |= 1 << u
            for v in range(n):
                if (used >> v) & 1:
                    continue
                c = 0
                for u in p:
                    c = (c << 1) | ((rows[u] >> v) & 1)
                if best is None or c < best:
                    best = c
                    chosen = [(p, [v])]
                elif c == best:
                    if chosen[-1][0] is p:
                        chosen[-1][1].append(v)
                    else:
                        chosen.append((p, [v]))
        cols.append(best)
        partials = []
        for p, vs in chosen:
            kept = []
            for v in vs:
                if any(_is_twin(rows, v, w) for w in kept):
                    continue
                kept.append(v)
                partials.append(p + (v,))
    return cols


def _canonical_g6(n, rows):
    if n == 1:
        return "@"
    return chr(n + 63) + _pack_columns(n, _canonical_columns(n, rows))


def canonical_key(g):
    """Minimum graph6 string over all vertex relabelings, as bytes.

    Equal keys hold exactly for isomorphic graphs. Brute-force search,
    bounded at n = CANONICAL_MAX_N.
    """
    if g.n > CANONICAL_MAX_N:
        raise UnsupportedSizeError(
            f"canonical keys use brute-force search, supported up to "
            f"n = {CANONICAL_MAX_N} (got {g.n})"
        )
    return _canonical_g6(g.n, g.rows).encode("ascii")


# ---------------------------------------------------------------------------
# generators


@lru_cache(maxsize=None)
def connected_graph6_lines(n):
    """Canonical graph6 lines, sorted, one per isomorphism class of
    connected graphs on n vertices. Built by vertex extension."""
    if n == 1:
        return ("@",)
    prev = connected_graph6_lines(n - 1)
    keys = set()
    m = n - 1
    for line in prev:
        base = parse_graph6(line)
        brows = base.rows
        for mask in range(1, 1 << m):
            rows = list(brows)
            rest = mask
            while rest:
                u = (rest & -rest).bit_length() - 1
                rest &= rest - 1
                rows[u] |= 1 << m
            rows.append(mask)
            keys.add(_canonical_g6(n, rows))
    return tuple(sorted(keys))


def generate_connected(n):
    """Yield one representative per isomorphism class of connected graphs
    on n vertices, in sorted canonical-key order. Bounded at n = 8."""
    if not 2 <= n <= GENERATOR_MAX_N:
        raise UnsupportedSizeError(
            f"bundled generator covers 2 <= n <= {GENERATOR_MAX_N} (got {n}); "
            "supply an external graph6 file for larger sizes"
        )
    for line in connected_graph6_lines(n):
        yield parse_graph6(line)


def _tree_center(n, rows):
    deg = [bin(r).count("1") for r in rows]
    alive = list(range(n))
    removed = [False] * n
    while len(alive) > 2:
        leaves = [v for v in alive if deg[v] == 1]
        for v in leaves:
            removed[v] = True
            r = rows[v]
            while r:
                u = (r & -r).bit_length() - 1
                r &= r - 1
                if not removed[u]:
                    deg[u] -= 1
        alive = [v for v in alive if not removed[v]]
    return alive


def _ahu(rows, v, parent):
    parts = []
    r = rows[v]
    while r:
        u = (r & -r).bit_length() - 1
        r &= r - 1
        if u != parent:
            parts.append(_ahu(rows, u, v))
    parts.sort()
    return "(" + "".join(parts) + ")"


def tree_key(g):
    """Canonical string for a tree of any supported size, via center-rooted
    AHU encoding (min over the one or two centers)."""
    centers = _tree_center(g.n, g.rows)
    return min(_ahu(g.rows, c, -1) for c in centers)


@lru_cache(maxsize=None)
def _tree_rows(n):
    if n == 1:
        return ((0,),)
    out = {}
    for rows in _tree_rows(n - 1):
        for v in range(n - 1):
            new_rows = [r for r in rows]
            new_rows[v] |= 1 << (n - 1)
            new_rows.append(1 << v)
            t = Graph(n, tuple(new_rows))
            out.setdefault(tree_key(t), t.rows)
    return tuple(rows for _, rows in sorted(out.items()))


def generate_trees(n):
    """All trees on n vertices up to isomorphism, deterministic order."""
    if not 1 <= n <= TREE_MAX_N:
        raise UnsupportedSizeError(f"tree generator covers n <= {TREE_MAX_N} (got {n})")
    return [Graph(n, rows) for rows in _tree_rows(n)]
