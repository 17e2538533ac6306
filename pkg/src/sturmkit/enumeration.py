"""Octahedron experiments: Hamiltonian paths, template census, Sturm pair scan.

Worker processes are bounded by the ``STURMKIT_THREADS`` environment
variable (default 1, i.e. everything runs in-process).  Results never depend
on the worker count.
"""

from __future__ import annotations

import os
from collections import defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from typing import Iterator

from .builders import OCT_EDGES, solid_octahedron
from .cells import (
    ComplexError,
    RegularCellComplex,
    TemplateDecoration,
    hemisphere_regions,
    is_acyclic,
    meridian_vertices,
    open_region_cells,
    orientation_extrema,
    validate_three_cell_template,
)
from .pairs import PairError, sigma_from_pair, szs_pair
from .perm import Permutation, trivial_equivalence_orbit

ADJACENT_POLES = (1, 2)
ANTIPODAL_POLES = (1, 6)


def worker_count() -> int:
    raw = os.environ.get("STURMKIT_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def pole_pair(choice: str) -> tuple:
    if choice == "adjacent":
        return ADJACENT_POLES
    if choice == "antipodal":
        return ANTIPODAL_POLES
    raise ValueError("pole choice must be 'adjacent' or 'antipodal'")


# -- barycenter graph -----------------------------------------------------


@dataclass(frozen=True)
class BarycenterGraph:
    nodes: tuple  # cell ids, sorted
    adjacency: dict  # id -> frozenset of ids

    @classmethod
    def of(cls, c: RegularCellComplex) -> "BarycenterGraph":
        adj = defaultdict(set)
        for x in c.dims:
            for b in c.boundary(x):
                adj[x].add(b)
                adj[b].add(x)
        nodes = tuple(sorted(c.dims))
        return cls(nodes, {v: frozenset(adj[v]) for v in nodes})

    def is_symmetric(self) -> bool:
        return all(v in self.adjacency[w] for v in self.nodes for w in self.adjacency[v])


@dataclass(frozen=True)
class _Bits:
    """The graph as bit masks over node indices, for the inner loops."""
    nodes: tuple
    adj: tuple
    nbrs: tuple

    @classmethod
    def of(cls, g: BarycenterGraph) -> "_Bits":
        idx = {v: i for i, v in enumerate(g.nodes)}
        adj = [0] * len(g.nodes)
        for v, ws in g.adjacency.items():
            for w in ws:
                adj[idx[v]] |= 1 << idx[w]
        nbrs = tuple(tuple(j for j in range(len(adj)) if adj[i] >> j & 1) for i in range(len(adj)))
        return cls(g.nodes, tuple(adj), nbrs)


def _walk(bits: _Bits, start: int, end: int, seen: int, emit) -> int:
    """Depth-first Hamiltonian search from ``start``; returns the count.

    Moving the tip from v to w is pruned when a free neighbour of v is left
    with fewer than two ways in and out, or the end becomes unreachable.
    """
    adj, nbrs = bits.adj, bits.nbrs
    full = (1 << len(adj)) - 1
    path = [start]

    def dfs(v, seen):
        if seen == full:
            if v == end:
                if emit is not None:
                    emit(path)
                return 1
            return 0
        if v == end:
            return 0
        free = ~seen & full
        total = 0
        for w in nbrs[v]:
            b = 1 << w
            if seen & b:
                continue
            nfree = free & ~b
            avail = nfree | b
            ok = True
            for u in nbrs[v]:
                if u != end and nfree >> u & 1 and (adj[u] & avail).bit_count() < 2:
                    ok = False
                    break
            if ok and w != end and not adj[end] & avail:
                ok = False
            if ok:
                path.append(w)
                total += dfs(w, seen | b)
                path.pop()
        return total

    return dfs(start, seen)


def _count_branch(args) -> int:
    bits, start, first, end = args
    if first == end:
        return 1 if len(bits.adj) == 2 else 0
    return _walk(bits, first, end, (1 << start) | (1 << first), None)


def count_hamiltonian_paths(g: BarycenterGraph, start, end, workers: int | None = None) -> int:
    if start == end:
        raise ValueError("start and end must differ")
    bits = _Bits.of(g)
    s, e = bits.nodes.index(start), bits.nodes.index(end)
    if len(bits.adj) == 1:
        return 0
    jobs = [(bits, s, w, e) for w in bits.nbrs[s]]
    workers = worker_count() if workers is None else workers
    if workers <= 1 or len(jobs) <= 1:
        return sum(map(_count_branch, jobs))
    with ProcessPoolExecutor(max_workers=min(workers, len(jobs))) as ex:
        return sum(ex.map(_count_branch, jobs))


def iter_hamiltonian_paths(g: BarycenterGraph, start, end) -> Iterator[tuple]:
    """All Hamiltonian paths, lexicographic in node ids."""
    if start == end:
        raise ValueError("start and end must differ")
    bits = _Bits.of(g)
    s, e = bits.nodes.index(start), bits.nodes.index(end)
    out: list = []
    # collecting then yielding keeps the search simple; 10^5 paths fit easily
    _walk(bits, s, e, 1 << s, lambda p: out.append(tuple(bits.nodes[i] for i in p)))
    yield from out


def hamiltonian_paths(g: BarycenterGraph, start, end, mode: str = "count"):
    if mode == "count":
        return count_hamiltonian_paths(g, start, end)
    if mode == "list":
        return iter_hamiltonian_paths(g, start, end)
    raise ValueError("mode must be 'count' or 'list'")


# -- template census ------------------------------------------------------


@dataclass(frozen=True)
class Survivor:
    complex: RegularCellComplex
    decoration: TemplateDecoration
    sigma: Permutation

    @property
    def face_split(self) -> tuple:
        w = sum(1 for x in self.decoration.west if self.complex.dims[x] == 2)
        e = sum(1 for x in self.decoration.east if self.complex.dims[x] == 2)
        return w, e

    @property
    def meridian_lengths(self) -> tuple:
        return len(self.decoration.meridian_ew), len(self.decoration.meridian_we)


@dataclass
class Census:
    poles: tuple
    bipolar_orientations: int = 0
    candidates: int = 0
    survivors: list = field(default_factory=list)

    def orbits(self) -> dict:
        """Survivors bucketed by the trivial-equivalence orbit of their sigma."""
        out = defaultdict(list)
        for s in self.survivors:
            out[trivial_equivalence_orbit(s.sigma)].append(s)
        return dict(out)

    def orbits_with_split(self, small: int) -> dict:
        return {k: v for k, v in self.orbits().items() if min(v[0].face_split) == small}


def _directed_paths(edges: dict, north, south) -> list[tuple]:
    out_edges = defaultdict(list)
    for e, (t, h) in sorted(edges.items()):
        out_edges[t].append(e)
    found = []

    def go(v, path):
        if v == south:
            found.append(tuple(path))
            return
        for e in out_edges[v]:
            path.append(e)
            go(edges[e][1], path)
            path.pop()

    go(north, [])
    return found


def bipolar_octahedron_orientations(poles: tuple) -> Iterator[dict]:
    """Edge orientations of the octahedron with source and sink at ``poles``."""
    north, south = poles
    base = sorted(OCT_EDGES.items())
    for flips in product((False, True), repeat=len(base)):
        edges = {e: ((h, t) if f else (t, h)) for (e, (t, h)), f in zip(base, flips)}
        c = solid_octahedron(edges)
        sources, sinks = orientation_extrema(c)
        if sources == [north] and sinks == [south] and is_acyclic(c):
            yield edges


def _decorations(c: RegularCellComplex, north, south) -> Iterator[TemplateDecoration]:
    paths = _directed_paths(c.edges, north, south)
    for ew in paths:
        inner_ew = set(meridian_vertices(c, ew)[1:-1])
        for we in paths:
            if we == ew or inner_ew & set(meridian_vertices(c, we)[1:-1]):
                continue
            rim = {north, south} | set(ew) | set(we) | inner_ew
            rim |= set(meridian_vertices(c, we))
            regions = hemisphere_regions(c, set(ew) | set(we))
            if len(regions) != 2:
                continue
            a, b = (frozenset(open_region_cells(c, r, rim)) for r in regions)
            # both hemisphere assignments; the validator decides
            yield TemplateDecoration(north, south, ew, we, a, b)
            yield TemplateDecoration(north, south, ew, we, b, a)


def enumerate_octahedron_templates(pole_choice: str = "adjacent") -> Census:
    """All decorated solid octahedra with the given pole type that are 3-cell templates.

    The north pole is fixed at vertex 1; rotations of the octahedron act
    transitively on ordered pole pairs of each type, so nothing is lost.
    """
    north, south = pole_pair(pole_choice)
    census = Census((north, south))
    for edges in bipolar_octahedron_orientations((north, south)):
        census.bipolar_orientations += 1
        c = solid_octahedron(edges)
        for d in _decorations(c, north, south):
            census.candidates += 1
            try:
                if not validate_three_cell_template(c, d).ok:
                    continue
            except ComplexError:
                continue
            try:
                sigma = sigma_from_pair(szs_pair(c, d))
            except PairError as exc:
                raise PairError(f"valid template without an SZS pair: {d}") from exc
            census.survivors.append(Survivor(c, d, sigma))
    return census


# -- brute-force Sturm pair scan ------------------------------------------


@dataclass(frozen=True)
class ScanConfig:
    """Knobs for the pair scan.

    ``level`` picks what counts as a hit:

    * "sturm": sigma is a Sturm permutation, nothing else asked;
    * "dimension": additionally every crossing's Morse number is the
      dimension of its cell (this also prunes the search);
    * "complex": additionally the connection graph equals the cell
      incidence of the complex, i.e. a Sturm realization of it.
    """
    level: str = "complex"
    limit_h0: int | None = None  # scan only the first h0 paths
    cap_hits: int = 1000
    workers: int | None = None

    def __post_init__(self):
        if self.level not in ("sturm", "dimension", "complex"):
            raise ValueError("level must be 'sturm', 'dimension' or 'complex'")


@dataclass
class ScanStats:
    poles: tuple
    level: str = "complex"
    paths: int = 0
    h0_scanned: int = 0
    sturm_pairs: int = 0  # pairs passing the search filters (level-dependent)
    hits_total: int = 0  # pairs passing the full level test
    hits: list = field(default_factory=list)  # (h0, h1) label tuples, capped

    def merge(self, other: "ScanStats", cap: int) -> None:
        self.h0_scanned += other.h0_scanned
        self.sturm_pairs += other.sturm_pairs
        self.hits_total += other.hits_total
        self.hits.extend(other.hits[: max(0, cap - len(self.hits))])


def _scan_h0(bits: _Bits, h0: tuple, start: int, end: int, cap: int,
             dims: tuple | None = None, accept=None) -> ScanStats:
    """All h1 paths making sigma = h0^-1 h1 Sturm, for one fixed h0.

    h1 is grown one axis position at a time.  Each new crossing gets its
    Morse number from the axis recursion; we cut as soon as a number goes
    negative (or differs from ``dims``), an arc to an already placed
    h0-neighbour disagrees with the curve recursion, or an arc closes out
    of nesting order.  ``accept`` is an optional final test on (h0, h1).
    """
    n = len(h0)
    pos0 = [0] * n  # node index -> 1-based h0 position
    for k, v in enumerate(h0, 1):
        pos0[v] = k
    adj, nbrs = bits.adj, bits.nbrs
    full = (1 << n) - 1
    morse = [None] * (n + 2)  # by h0 position
    stacks = ([], [])  # open arcs (by lower h0 endpoint), one per arc family
    path = [start]
    stats = ScanStats(())
    labels0 = tuple(bits.nodes[i] for i in h0)

    def place(j, i_new):
        """Put h0 position j at the next axis slot; False if that breaks something."""
        for k in (j - 1, j + 1):
            if 1 <= k <= n and morse[k] is not None:
                lo = min(j, k)
                s = 1 if lo == k else -1  # k sits left of j on the axis
                inc = s if lo % 2 == 1 else -s
                i_lo = morse[lo] if lo == k else i_new
                i_hi = i_new if lo == k else morse[k]
                if i_hi != i_lo + inc:
                    return False
                if stacks[lo % 2][-1:] != [lo]:
                    return False
        # the two arcs at j belong to different families, so checking first is enough
        for k in (j - 1, j + 1):
            if 1 <= k <= n:
                lo = min(j, k)
                if morse[k] is None:
                    stacks[lo % 2].append(lo)
                else:
                    stacks[lo % 2].pop()
        morse[j] = i_new
        return True

    def unplace(j):
        morse[j] = None
        for k in (j - 1, j + 1):
            if 1 <= k <= n:
                lo = min(j, k)
                if morse[k] is None:
                    stacks[lo % 2].pop()
                else:
                    stacks[lo % 2].append(lo)

    def dfs(v, seen, m, cur):
        # v = h1(m) is on the axis with Morse number cur
        if seen == full:
            if v == end and cur == 0:
                stats.sturm_pairs += 1
                h1 = tuple(bits.nodes[i] for i in path)
                if accept is None or accept(labels0, h1):
                    stats.hits_total += 1
                    if len(stats.hits) < cap:
                        stats.hits.append((labels0, h1))
            return
        if v == end:
            return
        free = ~seen & full
        for w in nbrs[v]:
            b = 1 << w
            if seen & b:
                continue
            if w != end and not adj[end] & ((free & ~b) | b):
                continue
            step = 1 if pos0[w] > pos0[v] else -1
            nxt = cur + (step if m % 2 == 1 else -step)
            if nxt < 0 or (dims is not None and nxt != dims[w]):
                continue
            if not place(pos0[w], nxt):
                continue
            path.append(w)
            dfs(w, seen | b, m + 1, nxt)
            path.pop()
            unplace(pos0[w])

    if (dims is None or dims[start] == 0) and place(pos0[start], 0):
        dfs(start, 1 << start, 1, 0)
    stats.h0_scanned = 1
    return stats


class _RealizationTest:
    """Picklable check that a pair's connection graph is the cell incidence."""

    def __init__(self, incidence: set):
        self.incidence = incidence

    def __call__(self, h0, h1) -> bool:
        from .pairs import PathPair, pair_meander
        from .zero_numbers import connection_graph, graph_edges, zero_matrix

        m = pair_meander(PathPair(h0, h1, "scan"))
        return graph_edges(connection_graph(zero_matrix(m))) == self.incidence


def _scan_chunk(args) -> ScanStats:
    bits, h0s, start, end, cap, dims, accept = args
    total = ScanStats(())
    for h0 in h0s:
        total.merge(_scan_h0(bits, h0, start, end, cap, dims, accept), cap)
    return total


def scan_sturm_pairs(c: RegularCellComplex, poles: tuple, config: ScanConfig = ScanConfig()) -> ScanStats:
    """Scan ordered Hamiltonian pairs (h0, h1) on the barycenter graph of ``c``.

    Counts pairs whose sigma = h0^-1 h1 passes ``config.level``; hits are
    reported as (h0, h1) label tuples.
    """
    north, south = poles
    g = BarycenterGraph.of(c)
    bits = _Bits.of(g)
    s, e = bits.nodes.index(north), bits.nodes.index(south)
    h0_idx: list = []
    _walk(bits, s, e, 1 << s, lambda p: h0_idx.append(tuple(p)))
    stats = ScanStats((north, south), config.level, paths=len(h0_idx))
    todo = h0_idx if config.limit_h0 is None else h0_idx[: config.limit_h0]
    dims = None if config.level == "sturm" else tuple(c.dims[v] for v in bits.nodes)
    accept = None
    if config.level == "complex":
        accept = _RealizationTest({(x, b) for x in c.dims for b in c.boundary(x)})
    workers = worker_count() if config.workers is None else config.workers
    chunks = max(1, workers * 8)
    cap = config.cap_hits
    jobs = [(bits, todo[k::chunks], s, e, cap, dims, accept) for k in range(chunks)]
    if workers <= 1:
        results = map(_scan_chunk, jobs)
        for r in results:
            stats.merge(r, cap)
    else:
        with ProcessPoolExecutor(max_workers=workers) as ex:
            for r in ex.map(_scan_chunk, jobs):
                stats.merge(r, cap)
    return stats
