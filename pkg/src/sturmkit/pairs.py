"""Boundary orders h0, h1 on disks and 3-cell templates.

Each order is a Hamiltonian path from N to S through all cells, moving only
between a cell and a codimension-one boundary cell:

* vertex -> edge leaving it, edge -> its head vertex;
* edge -> face when the edge is the face's entry corner for that order;
* face -> edge when the edge is the face's exit corner.

Which corner pair an order uses depends on the pair style: ZS gives h0 the
0-corners and h1 the 1-corners, SZ swaps them.  On a 3-cell template the
west hemisphere uses SZ, the east one ZS, and both orders tunnel through the
3-cell between the two hemispheres.
"""

from __future__ import annotations

from dataclasses import dataclass

from .cells import (
    ComplexError,
    RegularCellComplex,
    TemplateDecoration,
    closed_hemisphere,
    corner_faces,
    face_corners,
    meridian_vertices,
    poles,
)
from .meander import Meander
from .perm import Permutation
from .report import Report


class PairError(ValueError):
    pass


@dataclass(frozen=True)
class PathPair:
    h0: tuple
    h1: tuple
    style: str

    @property
    def n(self) -> int:
        return len(self.h0)

    def order(self, iota: int) -> tuple:
        return self.h0 if iota == 0 else self.h1


def hamiltonian_search(succ: dict, start, end, limit: int = 2) -> list[tuple]:
    """Up to ``limit`` Hamiltonian paths start -> end in a directed graph."""
    nodes = list(succ)
    total = len(nodes)
    found: list[tuple] = []
    path = [start]
    on_path = {start}
    # preds help prune nodes that can no longer be entered
    preds = {v: set() for v in nodes}
    for v, ws in succ.items():
        for w in ws:
            preds[w].add(v)

    def dead_end() -> bool:
        tip = path[-1]
        for v in nodes:
            if v in on_path:
                continue
            if not any(p == tip or p not in on_path for p in preds[v]):
                return True
            if v != end and not any(w not in on_path for w in succ[v]):
                return True
        return False

    def dfs():
        if len(found) >= limit:
            return
        tip = path[-1]
        if len(path) == total:
            if tip == end:
                found.append(tuple(path))
            return
        if tip == end or dead_end():
            return
        for w in succ[tip]:
            if w not in on_path:
                path.append(w)
                on_path.add(w)
                dfs()
                on_path.discard(w)
                path.pop()

    dfs()
    return found


def _corner_table(c: RegularCellComplex) -> dict:
    return {f: face_corners(c, f) for f in c.cells(2)}


def transitions(c: RegularCellComplex, corner_set: dict, corners: dict | None = None) -> dict:
    """Successor lists for one order; ``corner_set[f]`` is 0 or 1 per face."""
    if corners is None:
        corners = _corner_table(c)
    succ = {x: [] for x in c.cells() if c.dims[x] < 3}
    for e, (t, h) in sorted(c.edges.items()):
        succ[t].append(e)
        succ[e].append(h)
    for f, fc in sorted(corners.items()):
        k = corner_set[f]
        succ[fc.entry(k)].append(f)
        succ[f].append(fc.exit(k))
    for x in succ:
        succ[x].sort()
    return succ


def _unique_order(succ, start, end, what: str) -> tuple:
    sols = hamiltonian_search(succ, start, end, limit=2)
    if len(sols) != 1:
        raise PairError(f"{what}: found {len(sols)} admissible orders, expected exactly one")
    return sols[0]


def _disk_pair(c: RegularCellComplex, h0_set: int, style: str) -> PathPair:
    if c.ball is not None:
        raise PairError("disk orders need a complex without a 3-cell")
    north, south = poles(c)
    corners = _corner_table(c)
    faces = c.cells(2)
    s0 = transitions(c, {f: h0_set for f in faces}, corners)
    s1 = transitions(c, {f: 1 - h0_set for f in faces}, corners)
    return PathPair(
        _unique_order(s0, north, south, f"{style} h0"),
        _unique_order(s1, north, south, f"{style} h1"),
        style,
    )


def zs_pair(c: RegularCellComplex) -> PathPair:
    return _disk_pair(c, 0, "ZS")


def sz_pair(c: RegularCellComplex) -> PathPair:
    return _disk_pair(c, 1, "SZ")


def szs_corners(c: RegularCellComplex, d: TemplateDecoration) -> dict:
    """The faces next to O in h0 and h1: w_minus_0, w_minus_1, w_plus_0, w_plus_1."""
    cf = corner_faces(c, d)
    return {"w_minus_0": cf["NE"], "w_minus_1": cf["NW"], "w_plus_0": cf["SE"], "w_plus_1": cf["SW"]}


def szs_direct(c: RegularCellComplex, d: TemplateDecoration, limit: int = 2) -> list[list[tuple]]:
    """Orders found by searching the whole template at once, per iota."""
    corners = _corner_table(c)
    w = szs_corners(c, d)
    o = c.ball
    out = []
    for iota in (0, 1):
        cset = {f: (1 - iota if f in d.west else iota) for f in c.cells(2)}
        succ = transitions(c, cset, corners)
        succ[o] = [w[f"w_plus_{iota}"]]
        succ[w[f"w_minus_{iota}"]] = sorted(succ[w[f"w_minus_{iota}"]] + [o])
        out.append(hamiltonian_search(succ, d.north, d.south, limit))
    return out


def szs_pair(c: RegularCellComplex, d: TemplateDecoration, cross_check: bool = True) -> PathPair:
    if c.ball is None:
        raise PairError("SZS orders need a 3-cell")
    west = sz_pair(closed_hemisphere(c, d, "W"))
    east = zs_pair(closed_hemisphere(c, d, "E"))
    ew_cells = set(d.meridian_ew) | set(meridian_vertices(c, d.meridian_ew)[1:-1])
    we_cells = set(d.meridian_we) | set(meridian_vertices(c, d.meridian_we)[1:-1])
    o = c.ball
    h0 = [x for x in west.h0 if x == d.north or x in ew_cells or x in d.west]
    h0 += [o] + [x for x in east.h0 if x == d.south or x in we_cells or x in d.east]
    h1 = [x for x in west.h1 if x == d.north or x in we_cells or x in d.west]
    h1 += [o] + [x for x in east.h1 if x == d.south or x in ew_cells or x in d.east]
    pair = PathPair(tuple(h0), tuple(h1), "SZS")
    if sorted(h0) != sorted(c.dims) or sorted(h1) != sorted(c.dims):
        raise PairError("spliced orders do not cover the template")
    if cross_check:
        direct = szs_direct(c, d)
        for iota, sols in enumerate(direct):
            if sols != [pair.order(iota)]:
                raise PairError(
                    f"h{iota}: splice gives {pair.order(iota)}, direct search gives {sols}"
                )
    return pair


def sigma_from_pair(p: PathPair) -> Permutation:
    """sigma(k) = position in h0 of the cell h1(k)."""
    pos = {v: k for k, v in enumerate(p.h0, 1)}
    if set(pos) != set(p.h1) or len(p.h1) != len(p.h0):
        raise PairError("h0 and h1 list different cells")
    return Permutation(tuple(pos[v] for v in p.h1))


def pair_meander(p: PathPair) -> Meander:
    return Meander.build(sigma_from_pair(p), p.h0)


def szs_report(p: PathPair) -> Report:
    """The meander properties an SZS pair is expected to produce."""
    m = pair_meander(p)
    r = Report("SZS pair")
    r.add("dissipative", m.is_dissipative())
    mo_ok = m.is_morse()
    tops = [v for v, i in m.morse.items() if i == 3] if mo_ok else []
    r.add("Morse, with i(O) = 3", mo_ok and len(tops) == 1, f"O={tops}" if tops else "")
    r.add("meander", m.is_meander())
    if not (m.is_sturm() and len(tops) == 1):
        return r
    t = m.template_report()
    r.add("serpent overlaps", t.get("anti-polar serpent overlaps").ok)
    r.add("polar arcs overarch O", t.get("polar arcs overarch O").ok)
    r.add("extreme sources", t.get("neighbors of O are extreme sources").ok)
    r.add("3-meander template", t.ok)
    return r


def check_pair(p: PathPair, c: RegularCellComplex) -> Report:
    """Hamiltonicity and adjacency of both orders."""
    r = Report("pair")
    cells = sorted(x for x in c.dims)
    adj = {x: set(c.boundary(x)) for x in cells}
    for x in cells:
        for b in adj[x]:
            adj.setdefault(b, set()).add(x)
    try:
        north, south = poles(c)
    except ComplexError:
        north = south = None
    for iota in (0, 1):
        h = p.order(iota)
        r.add(f"h{iota} visits every cell once", sorted(h) == cells)
        r.add(f"h{iota} runs from N to S", (h[0], h[-1]) == (north, south))
        r.add(f"h{iota} steps between incident cells", all(b in adj[a] for a, b in zip(h, h[1:])))
    return r


# -- scoops ---------------------------------------------------------------


def scoop_set(m: Meander, side: str) -> set:
    o = m.o_crossing()
    wm0, wp0 = m.neighbors(0)
    wm1, wp1 = m.neighbors(1)
    p0 = lambda v: m.position(0, v)  # noqa: E731
    p1 = lambda v: m.position(1, v)  # noqa: E731
    if side == "E":
        a0, b0, a1, b1 = wp0, wp1, wp1, wp0
    elif side == "W":
        a0, b0, a1, b1 = wm1, wm0, wm0, wm1
    else:
        raise ValueError("side must be 'E' or 'W'")
    gone = {v for v in m.labels
            if p0(a0) <= p0(v) <= p0(b0) and p1(a1) <= p1(v) <= p1(b1)}
    return gone | {o}


def scoop(m: Meander, side: str) -> Meander:
    """Remove O and one open hemisphere, keeping the induced boundary orders."""
    if not (m.is_sturm() and m.template_report().ok):
        raise ValueError("scoops need a 3-meander template")
    gone = scoop_set(m, side)
    h0 = [v for v in m.h(0) if v not in gone]
    h1 = [v for v in m.h(1) if v not in gone]
    pos = {v: k for k, v in enumerate(h0, 1)}
    return Meander.build(Permutation(tuple(pos[v] for v in h1)), h0)
