"""Regular cell complexes of dimension at most three.

Edges carry their orientation as ``(tail, head)``.  Faces carry a boundary
circuit ``(v0, e0, v1, e1, ...)`` listed in the embedding orientation; on a
2-sphere all faces are listed counterclockwise as seen from outside.  The
orientation is data: reversing every circuit is the mirror image.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from graphlib import CycleError, TopologicalSorter
from typing import Iterable

from .report import Report


class ComplexError(ValueError):
    pass


@dataclass(frozen=True)
class RegularCellComplex:
    dims: dict  # id -> dimension
    edges: dict  # edge id -> (tail, head)
    faces: dict  # face id -> circuit tuple
    ball: int | None = None

    # -- queries ------------------------------------------------------------

    def cells(self, dim: int | None = None) -> list:
        if dim is None:
            return sorted(self.dims)
        return sorted(c for c, d in self.dims.items() if d == dim)

    @property
    def vertices(self) -> list:
        return self.cells(0)

    def face_edges(self, f) -> tuple:
        return self.faces[f][1::2]

    def face_vertices(self, f) -> tuple:
        return self.faces[f][0::2]

    def boundary(self, c) -> tuple:
        """Codimension-one boundary cells."""
        d = self.dims[c]
        if d == 1:
            return tuple(self.edges[c])
        if d == 2:
            return self.face_edges(c)
        if d == 3:
            return tuple(self.cells(2))
        return ()

    def closure(self, c) -> set:
        out = {c}
        todo = [c]
        while todo:
            for b in self.boundary(todo.pop()):
                if b not in out:
                    out.add(b)
                    todo.append(b)
        return out

    def incidence(self) -> dict:
        return {c: set(self.boundary(c)) for c in self.cells()}

    def edge_faces(self) -> dict:
        out = {e: [] for e in self.cells(1)}
        for f in self.cells(2):
            for e in self.face_edges(f):
                out.setdefault(e, []).append(f)
        return out

    def boundary_edges(self) -> list:
        return [e for e, fs in self.edge_faces().items() if len(fs) == 1]

    def boundary_vertices(self) -> set:
        out = set()
        for e in self.boundary_edges():
            out.update(self.edges[e])
        return out

    def circuit_direction(self, f, e) -> tuple:
        """(from, to) in which face f traverses edge e."""
        circ = self.faces[f]
        k = circ.index(e)
        return circ[k - 1], circ[(k + 1) % len(circ)]

    # -- transformations ----------------------------------------------------

    def restrict(self, keep: Iterable) -> "RegularCellComplex":
        keep = set(keep)
        for c in keep:
            if not set(self.boundary(c)) <= keep and self.dims[c] < 3:
                raise ComplexError(f"cell {c} has boundary outside the restriction")
        return RegularCellComplex(
            {c: d for c, d in self.dims.items() if c in keep},
            {e: t for e, t in self.edges.items() if e in keep},
            {f: t for f, t in self.faces.items() if f in keep},
            self.ball if self.ball in keep else None,
        )

    def with_edges_reversed(self) -> "RegularCellComplex":
        return RegularCellComplex(
            dict(self.dims), {e: (h, t) for e, (t, h) in self.edges.items()},
            dict(self.faces), self.ball,
        )

    def with_circuits_reversed(self) -> "RegularCellComplex":
        return RegularCellComplex(
            dict(self.dims), dict(self.edges),
            {f: reverse_circuit(c) for f, c in self.faces.items()}, self.ball,
        )

    def with_edge_flipped(self, e) -> "RegularCellComplex":
        edges = dict(self.edges)
        t, h = edges[e]
        edges[e] = (h, t)
        return RegularCellComplex(dict(self.dims), edges, dict(self.faces), self.ball)

    # -- serialization ------------------------------------------------------

    def to_dict(self) -> dict:
        out = {
            "cells": [{"id": c, "dim": self.dims[c]} for c in self.cells()],
            "edges": [{"id": e, "tail": t, "head": h} for e, (t, h) in sorted(self.edges.items())],
            "faces": [{"id": f, "circuit": list(c)} for f, c in sorted(self.faces.items())],
        }
        if self.ball is not None:
            out["ball"] = self.ball
        return out

    @classmethod
    def from_dict(cls, data: dict) -> "RegularCellComplex":
        try:
            dims = {int(c["id"]): int(c["dim"]) for c in data["cells"]}
            edges = {int(e["id"]): (int(e["tail"]), int(e["head"])) for e in data.get("edges", [])}
            faces = {int(f["id"]): tuple(int(x) for x in f["circuit"]) for f in data.get("faces", [])}
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError(f"malformed complex data: {exc}") from None
        ball = data.get("ball")
        return cls(dims, edges, faces, None if ball is None else int(ball))


def reverse_circuit(circ: tuple) -> tuple:
    """Same cyclic boundary, opposite direction, same starting vertex."""
    return (circ[0],) + tuple(reversed(circ[1:]))


def _canonical_circuit(circ: tuple) -> tuple:
    k = min(range(0, len(circ), 2), key=lambda i: circ[i])
    return circ[k:] + circ[:k]


def same_complex(a: RegularCellComplex, b: RegularCellComplex) -> bool:
    """Label-preserving equality, up to the starting point of circuits."""
    return (
        a.dims == b.dims
        and a.edges == b.edges
        and a.ball == b.ball
        and {f: _canonical_circuit(c) for f, c in a.faces.items()}
        == {f: _canonical_circuit(c) for f, c in b.faces.items()}
    )


@dataclass(frozen=True)
class TemplateDecoration:
    north: int
    south: int
    meridian_ew: tuple  # edge ids, north to south
    meridian_we: tuple
    west: frozenset = field(default_factory=frozenset)
    east: frozenset = field(default_factory=frozenset)

    def to_dict(self) -> dict:
        return {
            "north": self.north,
            "south": self.south,
            "meridian_ew": list(self.meridian_ew),
            "meridian_we": list(self.meridian_we),
            "west": sorted(self.west),
            "east": sorted(self.east),
        }

    @classmethod
    def from_dict(cls, d: dict) -> "TemplateDecoration":
        try:
            return cls(
                int(d["north"]), int(d["south"]),
                tuple(int(x) for x in d["meridian_ew"]), tuple(int(x) for x in d["meridian_we"]),
                frozenset(int(x) for x in d.get("west", [])),
                frozenset(int(x) for x in d.get("east", [])),
            )
        except (KeyError, TypeError, ValueError) as exc:
            raise ComplexError(f"malformed decoration: {exc}") from None

    def swapped_meridians(self) -> "TemplateDecoration":
        return TemplateDecoration(self.north, self.south, self.meridian_we, self.meridian_ew,
                                  self.west, self.east)


def meridian_vertices(c: RegularCellComplex, path: tuple) -> list:
    """Vertices along an edge path, endpoints included."""
    if not path:
        return []
    out = [c.edges[path[0]][0]]
    for e in path:
        out.append(c.edges[e][1])
    return out


def dump_json(c: RegularCellComplex, d: TemplateDecoration | None = None) -> str:
    data = c.to_dict()
    if d is not None:
        data["decoration"] = d.to_dict()
    return json.dumps(data, indent=1, sort_keys=True)


def load_json(text: str) -> tuple[RegularCellComplex, TemplateDecoration | None]:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ComplexError(f"invalid JSON: {exc}") from None
    c = RegularCellComplex.from_dict(data)
    d = data.get("decoration")
    return c, (TemplateDecoration.from_dict(d) if d else None)


# -- validators -----------------------------------------------------------


def _vertex_links(c: RegularCellComplex) -> dict:
    """For each vertex: edges linked when consecutive around it in some face."""
    links = {v: {} for v in c.vertices}
    for f, circ in c.faces.items():
        m = len(circ)
        for k in range(0, m, 2):
            v, e_in, e_out = circ[k], circ[k - 1], circ[(k + 1) % m]
            adj = links[v]
            adj.setdefault(e_in, []).append(e_out)
            adj.setdefault(e_out, []).append(e_in)
    return links


def _is_connected(nodes: set, adj: dict) -> bool:
    if not nodes:
        return True
    start = next(iter(nodes))
    seen = {start}
    todo = [start]
    while todo:
        for w in adj.get(todo.pop(), ()):
            if w in nodes and w not in seen:
                seen.add(w)
                todo.append(w)
    return seen == nodes


def validate_regular(c: RegularCellComplex) -> Report:
    r = Report("regular complex")
    bad_dim = [x for x, d in c.dims.items() if d not in (0, 1, 2, 3)]
    r.add("cell dimensions in 0..3", not bad_dim, str(bad_dim[:3]) if bad_dim else "")
    balls = c.cells(3)
    r.add("at most one 3-cell, recorded as the ball",
          balls == ([c.ball] if c.ball is not None else []), f"3-cells {balls}")

    bad = []
    for e in c.cells(1):
        if e not in c.edges:
            bad.append((e, "no endpoints"))
            continue
        t, h = c.edges[e]
        if c.dims.get(t) != 0 or c.dims.get(h) != 0:
            bad.append((e, "endpoint not a vertex"))
        elif t == h:
            bad.append((e, "coincident endpoints"))
    bad += [(e, "not a 1-cell") for e in c.edges if c.dims.get(e) != 1]
    r.add("edges join two distinct vertices", not bad, str(bad[:3]) if bad else "")

    bad = []
    for f in c.cells(2):
        circ = c.faces.get(f)
        if circ is None or len(circ) < 4 or len(circ) % 2:
            bad.append((f, "circuit length"))
            continue
        vs, es = circ[0::2], circ[1::2]
        if any(c.dims.get(v) != 0 for v in vs) or any(c.dims.get(e) != 1 for e in es):
            bad.append((f, "circuit does not alternate vertex/edge"))
            continue
        if len(set(vs)) != len(vs) or len(set(es)) != len(es):
            bad.append((f, "circuit not simple"))
            continue
        for k, e in enumerate(es):
            a, b = vs[k], vs[(k + 1) % len(vs)]
            if set(c.edges[e]) != {a, b}:
                bad.append((f, f"edge {e} does not join {a} and {b}"))
    bad += [(f, "not a 2-cell") for f in c.faces if c.dims.get(f) != 2]
    r.add("face boundaries are simple circuits", not bad, str(bad[:3]) if bad else "")
    if not r.ok or not c.faces:
        return r

    ef = c.edge_faces()
    V, E, F = len(c.cells(0)), len(c.cells(1)), len(c.cells(2))
    adj = {}
    for e, (t, h) in c.edges.items():
        adj.setdefault(t, set()).add(h)
        adj.setdefault(h, set()).add(t)
    r.add("connected 1-skeleton", _is_connected(set(c.vertices), adj))

    # opposite traversal of shared edges
    incoherent = []
    for e, fs in ef.items():
        if len(fs) == 2:
            if c.circuit_direction(fs[0], e) != tuple(reversed(c.circuit_direction(fs[1], e))):
                incoherent.append(e)
    r.add("coherent circuit orientation", not incoherent, str(incoherent[:3]) if incoherent else "")

    links = _vertex_links(c)
    if c.ball is not None:
        r.add("every edge on exactly two faces", all(len(fs) == 2 for fs in ef.values()))
        bad_links = [v for v, adj_v in links.items()
                     if not adj_v or any(len(x) != 2 for x in adj_v.values())
                     or not _is_connected(set(adj_v), adj_v)]
        r.add("vertex links are circles", not bad_links, str(bad_links[:3]) if bad_links else "")
        r.add("Euler characteristic 2", V - E + F == 2, f"V={V} E={E} F={F}")
    else:
        r.add("every edge on one or two faces", all(len(fs) in (1, 2) for fs in ef.values()))
        bnd = c.boundary_edges()
        bverts = {}
        for e in bnd:
            for v in c.edges[e]:
                bverts.setdefault(v, []).append(e)
        circle = all(len(x) == 2 for x in bverts.values())
        badj = {}
        for e in bnd:
            t, h = c.edges[e]
            badj.setdefault(t, set()).add(h)
            badj.setdefault(h, set()).add(t)
        r.add("boundary is one circle", bool(bnd) and circle and _is_connected(set(bverts), badj))
        bad_links = []
        for v, adj_v in links.items():
            degs = [len(x) for x in adj_v.values()]
            expect_path = v in bverts
            if not adj_v or not _is_connected(set(adj_v), adj_v):
                bad_links.append(v)
            elif expect_path and sorted(degs)[:2] != [1, 1] or any(d > 2 for d in degs):
                bad_links.append(v)
            elif not expect_path and any(d != 2 for d in degs):
                bad_links.append(v)
        r.add("vertex links are arcs or circles", not bad_links, str(bad_links[:3]) if bad_links else "")
        r.add("Euler characteristic 1", V - E + F == 1, f"V={V} E={E} F={F}")
    return r


def orientation_extrema(c: RegularCellComplex) -> tuple[list, list]:
    indeg = {v: 0 for v in c.vertices}
    outdeg = {v: 0 for v in c.vertices}
    for t, h in c.edges.values():
        outdeg[t] += 1
        indeg[h] += 1
    return [v for v in c.vertices if indeg[v] == 0], [v for v in c.vertices if outdeg[v] == 0]


def is_acyclic(c: RegularCellComplex) -> bool:
    ts = TopologicalSorter({v: set() for v in c.vertices})
    for t, h in c.edges.values():
        ts.add(h, t)
    try:
        tuple(ts.static_order())
    except CycleError:
        return False
    return True


def validate_bipolar(c: RegularCellComplex) -> Report:
    r = Report("bipolar orientation")
    r.add("no directed cycles", is_acyclic(c))
    sources, sinks = orientation_extrema(c)
    r.add("single source", len(sources) == 1, f"sources {sources}")
    r.add("single sink", len(sinks) == 1, f"sinks {sinks}")
    r.add("poles distinct", not (len(sources) == 1 and sources == sinks))
    if c.ball is None and c.faces:
        bv = c.boundary_vertices()
        r.add("poles on the boundary", set(sources) <= bv and set(sinks) <= bv)
    return r


def poles(c: RegularCellComplex) -> tuple:
    sources, sinks = orientation_extrema(c)
    if len(sources) != 1 or len(sinks) != 1 or sources == sinks:
        raise ComplexError(f"not bipolar: sources {sources}, sinks {sinks}")
    return sources[0], sinks[0]


# -- face corners ---------------------------------------------------------


@dataclass(frozen=True)
class FaceCorners:
    """Bipolar extrema of a face and the corner edges used by the boundary orders.

    The circuit splits at the extrema into two directed paths from min to max:
    ``A`` follows the stored circuit direction and ``B`` runs against it.
    ``h0``-type paths enter the face at ``w_minus_0`` and leave at ``w_plus_0``;
    ``h1``-type paths use ``w_minus_1`` and ``w_plus_1``.
    """

    face: int
    min_vertex: int
    max_vertex: int
    path_a: tuple
    path_b: tuple
    w_minus_0: int
    w_plus_0: int
    w_minus_1: int
    w_plus_1: int

    def entry(self, corner_set: int) -> int:
        return self.w_minus_0 if corner_set == 0 else self.w_minus_1

    def exit(self, corner_set: int) -> int:
        return self.w_plus_0 if corner_set == 0 else self.w_plus_1


def face_corners(c: RegularCellComplex, f) -> FaceCorners:
    circ = c.faces[f]
    m = len(circ)
    mins, maxs = [], []
    for k in range(0, m, 2):
        v = circ[k]
        e_prev, e_next = circ[k - 1], circ[(k + 1) % m]
        out_prev = c.edges[e_prev][0] == v
        out_next = c.edges[e_next][0] == v
        if out_prev and out_next:
            mins.append(k)
        elif not out_prev and not out_next:
            maxs.append(k)
    if len(mins) != 1 or len(maxs) != 1:
        raise ComplexError(f"face {f} has {len(mins)} minima and {len(maxs)} maxima on its boundary")
    k0, k1 = mins[0], maxs[0]
    path_a, path_b = [], []
    k = k0
    while k != k1:
        path_a.append(circ[(k + 1) % m])
        k = (k + 2) % m
    k = k0
    while k != k1:
        path_b.append(circ[k - 1])
        k = (k - 2) % m
    return FaceCorners(
        f, circ[k0], circ[k1], tuple(path_a), tuple(path_b),
        w_minus_0=path_a[-1], w_plus_0=path_b[0], w_minus_1=path_b[-1], w_plus_1=path_a[0],
    )


# -- planar disks ---------------------------------------------------------


def boundary_circuit(c: RegularCellComplex, start) -> tuple:
    """Boundary circle of a disk, in the direction induced by the faces."""
    ef = c.edge_faces()
    nxt = {}
    for e, fs in ef.items():
        if len(fs) == 1:
            a, b = c.circuit_direction(fs[0], e)
            nxt[a] = (e, b)
    if start not in nxt:
        raise ComplexError(f"vertex {start} is not on the boundary")
    out = []
    v = start
    while True:
        e, w = nxt[v]
        out += [v, e]
        v = w
        if v == start:
            return tuple(out)
        if len(out) > 2 * len(nxt):
            raise ComplexError("boundary is not a single circle")


def boundary_sides(c: RegularCellComplex, north, south) -> tuple[tuple, tuple]:
    """Edge paths north -> south: along the boundary direction, and against it."""
    circ = boundary_circuit(c, north)
    k = circ.index(south)
    forward = circ[1:k:2]
    backward = tuple(reversed(circ[k + 1::2]))
    return forward, backward


def is_disk(c: RegularCellComplex) -> bool:
    return c.ball is None and bool(c.faces) and validate_regular(c).ok


def _disk_orientation_check(c, north, south, toward: bool, exempt) -> bool:
    if not is_disk(c):
        raise ComplexError("not a planar disk")
    if poles(c) != (north, south):
        return False
    bnd_edges = set(c.boundary_edges())
    bverts = c.boundary_vertices() - {exempt}
    for e, (t, h) in c.edges.items():
        if e in bnd_edges:
            continue
        for v in (t, h):
            if v in bverts and (h != v if toward else t != v):
                return False
    return True


def validate_western_disk(c: RegularCellComplex, north, south) -> bool:
    """Interior edges at boundary vertices other than north point to the boundary."""
    return _disk_orientation_check(c, north, south, True, north)


def validate_eastern_disk(c: RegularCellComplex, north, south) -> bool:
    """Interior edges at boundary vertices other than south point into the disk."""
    return _disk_orientation_check(c, north, south, False, south)


# -- 3-cell templates -----------------------------------------------------


def _edge_path_ok(c, path, north, south) -> bool:
    if not path or any(e not in c.edges for e in path):
        return False
    v = north
    for e in path:
        t, h = c.edges[e]
        if t != v:
            return False
        v = h
    return v == south


def hemisphere_regions(c: RegularCellComplex, cut_edges: set) -> list[set]:
    """Faces grouped by connectivity across edges outside ``cut_edges``."""
    ef = c.edge_faces()
    adj = {f: set() for f in c.cells(2)}
    for e, fs in ef.items():
        if e not in cut_edges and len(fs) == 2:
            adj[fs[0]].add(fs[1])
            adj[fs[1]].add(fs[0])
    seen, out = set(), []
    for f in c.cells(2):
        if f in seen:
            continue
        comp, todo = {f}, [f]
        while todo:
            for g in adj[todo.pop()]:
                if g not in comp:
                    comp.add(g)
                    todo.append(g)
        seen |= comp
        out.append(comp)
    return out


def open_region_cells(c: RegularCellComplex, faces: set, rim: set) -> set:
    """Faces plus the edges and vertices in their closure that avoid ``rim``."""
    out = set()
    for f in faces:
        out |= c.closure(f)
    return out - rim


def corner_faces(c: RegularCellComplex, d: TemplateDecoration) -> dict:
    """The four faces at the ends of the meridians, keyed NE, SW, NW, SE."""
    ef = c.edge_faces()

    def pick(edge, side):
        fs = [f for f in ef.get(edge, ()) if f in side]
        if len(fs) != 1:
            raise ComplexError(f"edge {edge} does not bound exactly one face of the hemisphere")
        return fs[0]

    return {
        "NE": pick(d.meridian_we[0], d.west),
        "SW": pick(d.meridian_we[-1], d.east),
        "NW": pick(d.meridian_ew[0], d.west),
        "SE": pick(d.meridian_ew[-1], d.east),
    }


def validate_three_cell_template(c: RegularCellComplex, d: TemplateDecoration) -> Report:
    r = Report("3-cell template")
    reg = validate_regular(c)
    others = set(c.dims) - {c.ball}
    r.add("closure of a single 3-cell", reg.ok and c.ball is not None,
          "; ".join(reg.failures()) if not reg.ok else "")
    if not r.ok:
        return r
    known = set(c.dims)
    ids_ok = {d.north, d.south} <= set(c.vertices) and set(d.meridian_ew) | set(
        d.meridian_we) <= set(c.cells(1)) and d.west | d.east <= known
    if not ids_ok:
        raise ComplexError("decoration refers to unknown or mistyped cells")

    sources, sinks = orientation_extrema(c)
    bip = is_acyclic(c) and sources == [d.north] and sinks == [d.south]
    mer_ok = _edge_path_ok(c, d.meridian_ew, d.north, d.south) and _edge_path_ok(
        c, d.meridian_we, d.north, d.south)
    if mer_ok:
        inner_ew = set(meridian_vertices(c, d.meridian_ew)[1:-1])
        inner_we = set(meridian_vertices(c, d.meridian_we)[1:-1])
        mer_ok = not (inner_ew & inner_we) and not (set(d.meridian_ew) & set(d.meridian_we))
    r.add("bipolar from N to S with two disjoint directed meridians", bip and mer_ok,
          f"sources {sources}, sinks {sinks}" if not bip else ("" if mer_ok else "bad meridians"))
    if not mer_ok:
        return r

    rim = {d.north, d.south} | set(d.meridian_ew) | set(d.meridian_we)
    rim |= set(meridian_vertices(c, d.meridian_ew)) | set(meridian_vertices(c, d.meridian_we))
    regions = hemisphere_regions(c, set(d.meridian_ew) | set(d.meridian_we))
    opens = [open_region_cells(c, reg_f, rim) for reg_f in regions]
    split_ok = (
        len(regions) == 2
        and {frozenset(o) for o in opens} == {frozenset(d.west), frozenset(d.east)}
        and not (d.west & d.east)
        and rim | d.west | d.east == others
    )
    r.add("hemispheres are the two sides of the meridian circle", split_ok)
    if not split_ok:
        return r

    # W follows WE counterclockwise around N
    try:
        ne = corner_faces(c, d)["NE"]
        hand = c.circuit_direction(ne, d.meridian_we[0]) == (d.north, c.edges[d.meridian_we[0]][1])
    except ComplexError:
        hand = False
    r.add("hemisphere handedness", hand)

    mer_v = (set(meridian_vertices(c, d.meridian_ew)) | set(meridian_vertices(c, d.meridian_we))) - {
        d.north, d.south}
    bad = []
    for e, (t, h) in c.edges.items():
        if e in d.west:
            bad += [e for v in (t, h) if v in mer_v and h != v]
        elif e in d.east:
            bad += [e for v in (t, h) if v in mer_v and t != v]
    r.add("edges point to the meridians in W and away in E", not bad,
          f"edges {sorted(set(bad))}" if bad else "")

    try:
        cf = corner_faces(c, d)
        we_share = set(c.face_edges(cf["NE"])) & set(c.face_edges(cf["SW"])) & set(d.meridian_we)
        ew_share = set(c.face_edges(cf["NW"])) & set(c.face_edges(cf["SE"])) & set(d.meridian_ew)
        ok = bool(we_share) and bool(ew_share)
        detail = f"NE={cf['NE']} SW={cf['SW']} NW={cf['NW']} SE={cf['SE']}"
    except ComplexError as exc:
        ok, detail = False, str(exc)
    r.add("corner faces overlap along the meridians", ok, detail)
    return r


def closed_hemisphere(c: RegularCellComplex, d: TemplateDecoration, side: str) -> RegularCellComplex:
    rim = {d.north, d.south} | set(d.meridian_ew) | set(d.meridian_we)
    rim |= set(meridian_vertices(c, d.meridian_ew)) | set(meridian_vertices(c, d.meridian_we))
    cells = (d.west if side == "W" else d.east) | rim
    return c.restrict(cells)
