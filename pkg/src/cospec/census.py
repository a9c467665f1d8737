"""Streaming census engine over graph6 sources.

Graphs are bucketed by exact fingerprint byte keys; a graph "has a mate"
when its bucket holds at least two graphs, so with_mate is the sum of the
sizes of all buckets of size >= 2. Buckets store counts plus one
representative line number, never whole graphs, and merging count maps is
commutative, so results do not depend on input order or worker count.
"""

from __future__ import annotations

import os
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from multiprocessing import Pool

from .errors import CensusInputError, Graph6ParseError, UnsupportedSizeError
from .graphs import (
    GENERATOR_MAX_N,
    complement,
    connected_graph6_lines,
    distance_data,
    parse_graph6,
)
from .intlinalg import charpoly_coeffs, cof_coeffs, snf_diagonal
from .invariants import Flavor, compose_key
from .matrices import MatrixKind, build_matrix


class Domain(Enum):
    CONNECTED = "connected"
    CONNECTED_COMPLEMENT = "connected-with-connected-complement"
    DIAM2_PAIR = "diam2-pair"

    @property
    def token(self):
        return self.value

    @classmethod
    def from_token(cls, token):
        try:
            return cls(token.lower())
        except ValueError:
            raise ValueError(
                f"unknown domain {token!r}; expected one of "
                + ", ".join(d.value for d in cls)
            ) from None


def _check_task(kind, flavor, domain):
    if (
        kind.requires_connected
        and flavor.uses_complement
        and domain is Domain.CONNECTED
    ):
        raise ValueError(
            f"generalized {kind.value!r} fingerprints need connected complements; "
            f"use domain {Domain.CONNECTED_COMPLEMENT.value!r} or "
            f"{Domain.DIAM2_PAIR.value!r}"
        )


@dataclass(frozen=True)
class CensusTask:
    kind: MatrixKind
    flavor: Flavor
    domain: Domain

    def __post_init__(self):
        _check_task(self.kind, self.flavor, self.domain)


@dataclass(frozen=True)
class CensusSpec:
    """One census request: bucket the domain graphs of every listed kind
    under the given flavor."""

    n: int
    domain: Domain
    kinds: tuple
    flavor: Flavor
    source: str = None  # path of a graph6 file; None = bundled generator

    def __post_init__(self):
        object.__setattr__(self, "kinds", tuple(self.kinds))
        if self.n < 2:
            raise ValueError(f"census needs n >= 2 (got {self.n})")
        if not self.kinds:
            raise ValueError("census needs at least one matrix kind")
        for kind in self.kinds:
            _check_task(kind, self.flavor, self.domain)

    def tasks(self):
        return [CensusTask(kind, self.flavor, self.domain) for kind in self.kinds]


@dataclass(frozen=True)
class CensusRow:
    kind: MatrixKind
    flavor: Flavor
    n: int
    domain_size: int
    with_mate: int
    uncertainty: Fraction


@dataclass
class TaskCensus:
    """Raw bucket data for one (kind, flavor, domain) stream."""

    task: CensusTask
    domain_size: int
    buckets: Counter
    first_line: dict

    @property
    def with_mate(self):
        return sum(c for c in self.buckets.values() if c >= 2)


# ---------------------------------------------------------------------------
# per-graph fingerprint computation shared by all tasks of a sweep

_WORK_N = None
_WORK_TASKS = None


def _init_worker(n, tasks):
    global _WORK_N, _WORK_TASKS
    _WORK_N = n
    _WORK_TASKS = tasks


class _Parts:
    """Lazy cache of matrices, charpolys, SNFs and cof polynomials for one
    graph and its complement."""

    __slots__ = ("g", "dd", "cg", "cdd", "mats", "polys", "snfs", "cofs")

    def __init__(self, g, dd, cg, cdd):
        self.g = g
        self.dd = dd
        self.cg = cg
        self.cdd = cdd
        self.mats = {}
        self.polys = {}
        self.snfs = {}
        self.cofs = {}

    def matrix(self, kind, side):
        key = (kind, side)
        m = self.mats.get(key)
        if m is None:
            if side:
                m = build_matrix(self.cg, kind, data=self.cdd)
            else:
                m = build_matrix(self.g, kind, data=self.dd)
            self.mats[key] = m
        return m

    def poly(self, kind, side):
        key = (kind, side)
        p = self.polys.get(key)
        if p is None:
            p = charpoly_coeffs(self.matrix(kind, side))
            self.polys[key] = p
        return p

    def snf(self, kind, side):
        key = (kind, side)
        d = self.snfs.get(key)
        if d is None:
            d = snf_diagonal(self.matrix(kind, side))
            self.snfs[key] = d
        return d

    def cof(self, kind):
        c = self.cofs.get(kind)
        if c is None:
            c = cof_coeffs(self.matrix(kind, 0))
            self.cofs[kind] = c
        return c

    def blocks(self, kind, flavor):
        if flavor is Flavor.SPECTRAL:
            return [self.poly(kind, 0)]
        if flavor is Flavor.GEN_SPECTRAL:
            return [self.poly(kind, 0), self.poly(kind, 1)]
        if flavor is Flavor.R_SPECTRAL:
            return [self.poly(kind, 0), self.cof(kind)]
        if flavor is Flavor.INVARIANT:
            return [self.snf(kind, 0)]
        return [self.snf(kind, 0), self.snf(kind, 1)]


def _graph_task_keys(n, tasks, lineno, line):
    """(task_index, key) pairs plus domain membership flags for one line."""
    try:
        g = parse_graph6(line.strip())
    except Graph6ParseError as exc:
        raise Graph6ParseError(str(exc), lineno=lineno) from exc
    if g.n != n:
        raise CensusInputError(f"expected {n} vertices, got {g.n}", lineno=lineno)
    dd = distance_data(g)
    if not dd.connected:
        return None  # outside every census domain
    cg = complement(g)
    cdd = distance_data(cg)
    member = {
        Domain.CONNECTED: True,
        Domain.CONNECTED_COMPLEMENT: cdd.connected,
        Domain.DIAM2_PAIR: cdd.connected
        and dd.diameter == 2
        and cdd.diameter == 2,
    }
    parts = _Parts(g, dd, cg, cdd)
    out = []
    for ti, task in enumerate(tasks):
        if member[task.domain]:
            key = compose_key(task.kind, task.flavor, parts.blocks(task.kind, task.flavor))
            out.append((ti, key))
    return member, out


def _sweep_chunk(chunk):
    n, tasks = _WORK_N, _WORK_TASKS
    counters = [Counter() for _ in tasks]
    firsts = [{} for _ in tasks]
    sizes = {d: 0 for d in Domain}
    for lineno, line in chunk:
        res = _graph_task_keys(n, tasks, lineno, line)
        if res is None:
            continue
        member, keys = res
        for d in Domain:
            if member[d]:
                sizes[d] += 1
        for ti, key in keys:
            counters[ti][key] += 1
            first = firsts[ti]
            if key not in first or lineno < first[key]:
                first[key] = lineno
    return sizes, counters, firsts


def _worker_chunk(chunk):
    return _sweep_chunk(chunk)


def default_jobs():
    env = os.environ.get("COSPEC_JOBS")
    if env:
        return max(1, int(env))
    return os.cpu_count() or 1


def sweep(n, tasks, lines, jobs=None):
    """Run every task over the lines in one pass.

    Returns (list of TaskCensus aligned with tasks, domain size dict).
    """
    tasks = list(tasks)
    numbered = [
        (lineno, line)
        for lineno, line in enumerate(lines, start=1)
        if line.strip() and not line.startswith(">")
    ]
    if jobs is None:
        jobs = default_jobs()
    if jobs > 1:
        chunk_size = max(1, min(250, (len(numbered) + 2 * jobs - 1) // (2 * jobs)))
    else:
        chunk_size = 250
    chunks = [
        numbered[i : i + chunk_size] for i in range(0, len(numbered), chunk_size)
    ]
    results = [TaskCensus(t, 0, Counter(), {}) for t in tasks]
    sizes = {d: 0 for d in Domain}
    if jobs > 1 and len(chunks) > 1:
        with Pool(jobs, initializer=_init_worker, initargs=(n, tasks)) as pool:
            parts = pool.imap_unordered(_worker_chunk, chunks)
            for chunk_sizes, counters, firsts in parts:
                _merge(results, sizes, chunk_sizes, counters, firsts)
    else:
        _init_worker(n, tasks)
        for chunk in chunks:
            chunk_sizes, counters, firsts = _sweep_chunk(chunk)
            _merge(results, sizes, chunk_sizes, counters, firsts)
    for res in results:
        res.domain_size = sizes[res.task.domain]
        assert sum(res.buckets.values()) == res.domain_size
    return results, sizes


def _merge(results, sizes, chunk_sizes, counters, firsts):
    for d, v in chunk_sizes.items():
        sizes[d] += v
    for res, counter, first in zip(results, counters, firsts):
        res.buckets.update(counter)
        rf = res.first_line
        for key, lineno in first.items():
            if key not in rf or lineno < rf[key]:
                rf[key] = lineno


def source_lines(spec):
    """Resolve the graph6 lines for a census spec."""
    if spec.source is None:
        if spec.n > GENERATOR_MAX_N:
            raise UnsupportedSizeError(
                f"bundled generator stops at n = {GENERATOR_MAX_N}; supply an "
                f"external graph6 file for n = {spec.n}"
            )
        return connected_graph6_lines(spec.n)
    with open(spec.source, "r", encoding="ascii") as handle:
        return [line.rstrip("\n") for line in handle]


def run_census(spec, lines=None, jobs=None):
    """Execute a census and return one CensusRow per kind."""
    if lines is None:
        lines = source_lines(spec)
    tasks = spec.tasks()
    results, _ = sweep(spec.n, tasks, lines, jobs=jobs)
    rows = []
    for res in results:
        with_mate = res.with_mate
        uncertainty = (
            Fraction(with_mate, res.domain_size) if res.domain_size else Fraction(0)
        )
        rows.append(
            CensusRow(
                kind=res.task.kind,
                flavor=res.task.flavor,
                n=spec.n,
                domain_size=res.domain_size,
                with_mate=with_mate,
                uncertainty=uncertainty,
            )
        )
    return rows


# ---------------------------------------------------------------------------
# the published reference tables


@dataclass(frozen=True)
class ExpectedCell:
    table: int
    row: str  # "domain-size" | "gin" | "gsp"
    kind: MatrixKind  # None for domain-size rows
    flavor: Flavor  # None for domain-size rows
    domain: Domain
    n: int
    value: int
    long_running: bool


_K = MatrixKind
_GENERAL_NS = (4, 5, 6, 7, 8, 9, 10)
_DIAM2_NS = (6, 7, 8, 9, 10, 11)

_SIZES_CONNECTED = (6, 21, 112, 853, 11117, 261080, 11716571)
_SIZES_CC = (1, 8, 68, 662, 9888, 247492, 11427974)
_SIZES_DIAM2 = (2, 18, 218, 6069, 364270, 44343606)

_ADJ_KINDS = (_K.ADJACENCY, _K.LAPLACIAN, _K.SIGNLESS_LAPLACIAN)

_TABLE1_GIN = {
    _K.ADJACENCY: (0, 12, 95, 830, 11079, 261021, 11716497),
    _K.LAPLACIAN: (0, 0, 0, 14, 886, 22124, 950291),
    _K.SIGNLESS_LAPLACIAN: (0, 2, 42, 122, 1000, 10467, 450816),
    _K.DISTANCE: (0, 0, 12, 340, 7467, 232611, 11316322),
    _K.DISTANCE_LAPLACIAN: (0, 0, 0, 0, 45, 2114, 185406),
    _K.SIGNLESS_DISTANCE_LAPLACIAN: (0, 0, 0, 0, 18, 891, 78208),
    _K.TRANSMISSION_ADJACENCY: (0, 0, 0, 0, 32, 616, 87841),
    _K.SIGNLESS_TRANSMISSION_ADJACENCY: (0, 0, 0, 0, 36, 2206, 179094),
    _K.DEGREE_DISTANCE: (0, 0, 0, 0, 48, 964, 98588),
    _K.SIGNLESS_DEGREE_DISTANCE: (0, 3, 4, 34, 500, 7915, 427394),
}

_TABLE2_GSP = {
    _K.ADJACENCY: (0, 0, 0, 32, 1042, 41212, 2338933),
    _K.LAPLACIAN: (0, 0, 4, 115, 1611, 40560, 1367215),
    _K.SIGNLESS_LAPLACIAN: (0, 2, 10, 80, 998, 17453, 613954),
    _K.DISTANCE: (0, 0, 0, 0, 48, 3480, 276328),
    _K.DISTANCE_LAPLACIAN: (0, 0, 0, 0, 105, 4118, 245140),
    _K.SIGNLESS_DISTANCE_LAPLACIAN: (0, 0, 0, 4, 86, 1519, 95296),
    _K.TRANSMISSION_ADJACENCY: (0, 0, 0, 4, 56, 1212, 75364),
    _K.SIGNLESS_TRANSMISSION_ADJACENCY: (0, 0, 0, 0, 105, 3624, 232962),
    _K.DEGREE_DISTANCE: (0, 0, 0, 4, 76, 2370, 124866),
    _K.SIGNLESS_DEGREE_DISTANCE: (0, 0, 0, 24, 413, 11536, 445738),
}

_TABLE3_GSP = {
    _K.ADJACENCY: (0, 0, 0, 420, 48992, 6935002),
    _K.LAPLACIAN: (0, 0, 23, 952, 60884, 4849676),
    _K.SIGNLESS_LAPLACIAN: (0, 0, 2, 212, 20710, 1918758),
}

_TABLE3_GIN = {
    _K.ADJACENCY: (0, 10, 163, 5918, 363834, 44342414),
    _K.LAPLACIAN: (0, 0, 9, 382, 45250, 2466748),
    _K.SIGNLESS_LAPLACIAN: (0, 0, 0, 84, 18760, 902038),
}

_TABLE4_GIN = {
    _K.DISTANCE: (0, 4, 126, 5206, 353826, 44245420),
    _K.DISTANCE_LAPLACIAN: (0, 0, 9, 428, 45186, 2615994),
    _K.SIGNLESS_DISTANCE_LAPLACIAN: (0, 0, 0, 84, 19048, 932632),
    _K.DEGREE_DISTANCE: (0, 0, 0, 96, 19280, 953406),
    _K.SIGNLESS_DEGREE_DISTANCE: (0, 0, 110, 1523, 116854, 3495822),
    _K.TRANSMISSION_ADJACENCY: (0, 0, 0, 84, 18872, 945612),
    _K.SIGNLESS_TRANSMISSION_ADJACENCY: (0, 0, 8, 492, 45544, 2463526),
}


def _general_domain(kind):
    return Domain.CONNECTED if kind in _ADJ_KINDS else Domain.CONNECTED_COMPLEMENT


def expected_tables():
    """Every published table cell as a machine-readable record."""
    cells = []

    def add(table, row, kind, flavor, domain, n, value, long_n):
        cells.append(
            ExpectedCell(table, row, kind, flavor, domain, n, value, n >= long_n)
        )

    for i, n in enumerate(_GENERAL_NS):
        for table in (1, 2):
            add(table, "domain-size", None, None, Domain.CONNECTED, n, _SIZES_CONNECTED[i], 9)
            add(table, "domain-size", None, None, Domain.CONNECTED_COMPLEMENT, n, _SIZES_CC[i], 9)
        for kind, values in _TABLE1_GIN.items():
            add(1, "gin", kind, Flavor.GEN_INVARIANT, _general_domain(kind), n, values[i], 9)
        for kind, values in _TABLE2_GSP.items():
            add(2, "gsp", kind, Flavor.GEN_SPECTRAL, _general_domain(kind), n, values[i], 9)
    for i, n in enumerate(_DIAM2_NS):
        add(3, "domain-size", None, None, Domain.DIAM2_PAIR, n, _SIZES_DIAM2[i], 10)
        for kind, values in _TABLE3_GSP.items():
            add(3, "gsp", kind, Flavor.GEN_SPECTRAL, Domain.DIAM2_PAIR, n, values[i], 10)
        for kind, values in _TABLE3_GIN.items():
            add(3, "gin", kind, Flavor.GEN_INVARIANT, Domain.DIAM2_PAIR, n, values[i], 10)
        for kind, values in _TABLE4_GIN.items():
            add(4, "gin", kind, Flavor.GEN_INVARIANT, Domain.DIAM2_PAIR, n, values[i], 10)
    return tuple(cells)


@dataclass(frozen=True)
class DiffResult:
    cell: ExpectedCell
    actual: int
    ok: bool


def diff_paper(max_n=8, sources=None, jobs=None):
    """Recompute every runnable expected cell and diff it against the
    published reference value.

    Cells with n above the bundled generator bound run only when sources
    maps that n to a graph6 file path.
    """
    sources = sources or {}
    cells = [c for c in expected_tables() if c.n <= max_n]
    by_n = {}
    for cell in cells:
        if cell.n <= GENERATOR_MAX_N or cell.n in sources:
            by_n.setdefault(cell.n, []).append(cell)
    out = []
    for n in sorted(by_n):
        group = by_n[n]
        task_index = {}
        tasks = []
        for cell in group:
            if cell.row == "domain-size":
                continue
            task = CensusTask(cell.kind, cell.flavor, cell.domain)
            if task not in task_index:
                task_index[task] = len(tasks)
                tasks.append(task)
        if n in sources:
            with open(sources[n], "r", encoding="ascii") as handle:
                lines = [line.rstrip("\n") for line in handle]
        else:
            lines = connected_graph6_lines(n)
        results, sizes = sweep(n, tasks, lines, jobs=jobs)
        for cell in group:
            if cell.row == "domain-size":
                actual = sizes[cell.domain]
            else:
                actual = results[task_index[CensusTask(cell.kind, cell.flavor, cell.domain)]].with_mate
            out.append(DiffResult(cell, actual, actual == cell.value))
    return out
