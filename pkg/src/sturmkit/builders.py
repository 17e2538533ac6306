"""Example complexes: disks, Chafee-Infante balls, octahedra and welds."""

from __future__ import annotations

from dataclasses import dataclass

from .cells import (
    ComplexError,
    RegularCellComplex,
    TemplateDecoration,
    boundary_sides,
    reverse_circuit,
)


@dataclass(frozen=True)
class Disk:
    complex: RegularCellComplex
    north: int
    south: int


def _path_cells(tail, head, n_edges, next_id):
    """Fresh ids for a directed path with ``n_edges`` edges; returns (verts, edges, next_id)."""
    verts = [tail]
    for _ in range(n_edges - 1):
        verts.append(next_id)
        next_id += 1
    verts.append(head)
    return verts, next_id


def disk(m: int, n: int, chords: int = 0) -> Disk:
    """Planar disk with boundary paths of m and n edges from N to S.

    Vertices come first (N = 1, S = 2), then edges, then faces.  With
    ``chords > 0`` extra N -> S edges split the disk into ``chords + 1``
    faces.  The boundary circuit runs N, the m-side, S, the n-side.
    """
    if m < 1 or n < 1 or chords < 0:
        raise ValueError("need m, n >= 1 and chords >= 0")
    N, S = 1, 2
    nid = 3
    left_v, nid = _path_cells(N, S, m, nid)
    right_v, nid = _path_cells(N, S, n, nid)
    dims = {v: 0 for v in set(left_v) | set(right_v)}
    edges = {}

    def add_path(verts):
        nonlocal nid
        out = []
        for a, b in zip(verts, verts[1:]):
            edges[nid] = (a, b)
            dims[nid] = 1
            out.append(nid)
            nid += 1
        return out

    left_e = add_path(left_v)
    chord_e = [add_path([N, S])[0] for _ in range(chords)]
    right_e = add_path(right_v)
    # each side as an alternating N -> S sequence
    sides = [_alternate(left_v, left_e)]
    sides += [(N, e, S) for e in chord_e]
    sides.append(_alternate(right_v, right_e))
    faces = {}
    for a, b in zip(sides, sides[1:]):
        # along a from N to S, then back along b from S to N
        faces[nid] = a + tuple(reversed(b[1:-1]))
        dims[nid] = 2
        nid += 1
    return Disk(RegularCellComplex(dims, edges, faces), N, S)


def _alternate(verts, edges) -> tuple:
    out = []
    for v, e in zip(verts, edges):
        out += [v, e]
    out.append(verts[-1])
    return tuple(out)


def chafee_infante(m: int):
    """The Chafee-Infante complex with one cell per dimension and sign.

    Returns (complex, decoration); the decoration is None below dimension 3.
    Ids: N = 1, S = 2, then the cells of each further dimension, minus side
    first.
    """
    if not 0 <= m <= 3:
        raise ValueError("Chafee-Infante complexes are built for m <= 3")
    if m == 0:
        return RegularCellComplex({1: 0}, {}, {}), None
    dims = {1: 0, 2: 0}
    edges, faces = {}, {}
    if m == 1:
        dims[3] = 1
        edges[3] = (1, 2)
        return RegularCellComplex(dims, edges, faces), None
    # two edges N -> S, minus side 3, plus side 4
    dims.update({3: 1, 4: 1})
    edges.update({3: (1, 2), 4: (1, 2)})
    if m == 2:
        dims[5] = 2
        faces[5] = (1, 3, 2, 4)
        return RegularCellComplex(dims, edges, faces), None
    # west face 5 runs N along the plus meridian, east face 6 along the minus one
    dims.update({5: 2, 6: 2, 7: 3})
    faces[5] = (1, 4, 2, 3)
    faces[6] = (1, 3, 2, 4)
    c = RegularCellComplex(dims, edges, faces, ball=7)
    d = TemplateDecoration(1, 2, (3,), (4,), frozenset({5}), frozenset({6}))
    return c, d


# -- the solid octahedron -------------------------------------------------

OCT_VERTICES = (1, 2, 3, 4, 5, 6)
# antipodal pairs (1, 6), (2, 4), (3, 5)
OCT_EDGES = {
    7: (1, 2), 8: (1, 3), 9: (1, 4), 10: (1, 5), 11: (3, 2), 12: (4, 3),
    13: (4, 5), 14: (5, 2), 15: (6, 2), 16: (6, 3), 17: (4, 6), 18: (6, 5),
}
# counterclockwise from outside
OCT_FACES = {
    19: (1, 8, 3, 12, 4, 9),
    20: (1, 9, 4, 13, 5, 10),
    21: (1, 10, 5, 14, 2, 7),
    22: (2, 15, 6, 16, 3, 11),
    23: (3, 16, 6, 17, 4, 12),
    24: (4, 17, 6, 18, 5, 13),
    25: (2, 14, 5, 18, 6, 15),
    26: (1, 7, 2, 11, 3, 8),
}
OCT_BALL = 27


def solid_octahedron(edges: dict | None = None) -> RegularCellComplex:
    """The solid octahedron; ``edges`` may override the orientation."""
    dims = {v: 0 for v in OCT_VERTICES}
    dims.update({e: 1 for e in OCT_EDGES})
    dims.update({f: 2 for f in OCT_FACES})
    dims[OCT_BALL] = 3
    if edges is None:
        edges = OCT_EDGES
    return RegularCellComplex(dims, dict(edges), dict(OCT_FACES), OCT_BALL)


def octahedron(north: int = 1, south: int = 2, we=(8, 11), ew=(10, 14), edges: dict | None = None):
    """Decorated solid octahedron; defaults give the 2 + 6 face template."""
    c = solid_octahedron(edges)
    return c, decorate(c, north, south, tuple(ew), tuple(we))


def decorate(c: RegularCellComplex, north, south, ew: tuple, we: tuple) -> TemplateDecoration:
    """Decoration whose west side lies counterclockwise after ``we`` around north."""
    from .cells import hemisphere_regions, meridian_vertices, open_region_cells

    rim = {north, south} | set(ew) | set(we)
    rim |= set(meridian_vertices(c, ew)) | set(meridian_vertices(c, we))
    regions = hemisphere_regions(c, set(ew) | set(we))
    if len(regions) != 2:
        raise ComplexError("meridians do not split the sphere in two")
    first = we[0]
    west = None
    for reg in regions:
        for f in reg:
            circ = c.faces[f]
            if first in circ and c.circuit_direction(f, first)[0] == north:
                west = reg
    if west is None:
        raise ComplexError("cannot place the west hemisphere")
    east = next(r for r in regions if r is not west)
    return TemplateDecoration(north, south, ew, we,
                              frozenset(open_region_cells(c, west, rim)),
                              frozenset(open_region_cells(c, east, rim)))


# -- welding two disks ----------------------------------------------------


def weld(west: Disk, east: Disk):
    """Glue two disks along their boundaries into a decorated 3-ball.

    The west disk keeps its ids.  Its boundary path leaving N along the
    boundary direction becomes WE; for the east disk that path is EW.
    East interior cells are renumbered after the west ids.
    """
    wc, ec = west.complex, east.complex
    w_fwd, w_bwd = boundary_sides(wc, west.north, west.south)
    e_fwd, e_bwd = boundary_sides(ec, east.north, east.south)
    we, ew = w_fwd, w_bwd
    e_ew, e_we = e_fwd, e_bwd
    if len(we) != len(e_we) or len(ew) != len(e_ew):
        raise ComplexError(
            f"meridian lengths differ: west WE/EW {len(we)}/{len(ew)}, east {len(e_we)}/{len(e_ew)}"
        )
    for path, cx in ((we, wc), (ew, wc), (e_we, ec), (e_ew, ec)):
        _check_directed(cx, path)
    relabel = {east.north: west.north, east.south: west.south}
    for a, b in ((e_we, we), (e_ew, ew)):
        for ea, eb in zip(a, b):
            relabel[ea] = eb
            relabel[ec.edges[ea][1]] = wc.edges[eb][1]
    nid = max(wc.dims) + 1
    for cell in sorted(ec.dims):
        if cell not in relabel:
            relabel[cell] = nid
            nid += 1
    dims = dict(wc.dims)
    edges = dict(wc.edges)
    faces = dict(wc.faces)
    for cell, dim in ec.dims.items():
        dims[relabel[cell]] = dim
    for e, (t, h) in ec.edges.items():
        edges[relabel[e]] = (relabel[t], relabel[h])
    for f, circ in ec.faces.items():
        faces[relabel[f]] = tuple(relabel[x] for x in circ)
    dims[nid] = 3
    c = RegularCellComplex(dims, edges, faces, ball=nid)
    rim_w = set(we) | set(ew) | wc.boundary_vertices()
    rim_e = {relabel[x] for x in set(e_we) | set(e_ew) | ec.boundary_vertices()}
    d = TemplateDecoration(
        west.north, west.south, tuple(ew), tuple(we),
        frozenset(set(wc.dims) - rim_w),
        frozenset({relabel[x] for x in ec.dims} - rim_e),
    )
    return c, d


def _check_directed(c, path):
    for a, b in zip(path, path[1:]):
        if c.edges[a][1] != c.edges[b][0]:
            raise ComplexError(f"boundary path {path} is not directed")


# -- two mirror-image 13-cell templates -----------------------------------


def single_face_west_template():
    """13-cell template: one face in W, three faces and an inner vertex in E."""
    dims = {1: 0, 7: 0, 13: 0, 2: 1, 6: 1, 8: 1, 10: 1, 12: 1, 3: 2, 5: 2, 9: 2, 11: 2, 4: 3}
    edges = {2: (1, 13), 12: (1, 13), 6: (1, 7), 8: (7, 13), 10: (7, 13)}
    faces = {
        3: (1, 12, 13, 2),
        5: (1, 2, 13, 8, 7, 6),
        9: (7, 8, 13, 10),
        11: (1, 6, 7, 10, 13, 12),
    }
    c = RegularCellComplex(dims, edges, faces, ball=4)
    d = TemplateDecoration(1, 13, (2,), (12,), frozenset({3}), frozenset({5, 6, 7, 8, 9, 10, 11}))
    return c, d


def single_face_east_template():
    """13-cell template: three faces and an inner vertex in W, one face in E."""
    dims = {1: 0, 5: 0, 13: 0, 2: 1, 4: 1, 6: 1, 8: 1, 12: 1, 3: 2, 7: 2, 9: 2, 11: 2, 10: 3}
    edges = {2: (1, 13), 12: (1, 13), 4: (1, 5), 6: (5, 13), 8: (5, 13)}
    faces = {
        3: (1, 4, 5, 6, 13, 2),
        7: (5, 8, 13, 6),
        9: (1, 12, 13, 8, 5, 4),
        11: (1, 2, 13, 12),
    }
    c = RegularCellComplex(dims, edges, faces, ball=10)
    d = TemplateDecoration(1, 13, (2,), (12,), frozenset({3, 4, 5, 6, 7, 8, 9}), frozenset({11}))
    return c, d


def mirror_template(c: RegularCellComplex, d: TemplateDecoration):
    """Reverse every circuit and swap the meridians."""
    return c.with_circuits_reversed(), d.swapped_meridians()


def flip_template(c: RegularCellComplex, d: TemplateDecoration):
    """Reverse edges and circuits; swap poles, meridians and hemispheres."""
    flipped = c.with_edges_reversed().with_circuits_reversed()
    rev = lambda p: tuple(reversed(p))  # noqa: E731
    return flipped, TemplateDecoration(d.south, d.north, rev(d.meridian_we), rev(d.meridian_ew),
                                       d.east, d.west)


__all__ = [
    "Disk", "disk", "chafee_infante", "solid_octahedron", "octahedron", "decorate", "weld",
    "single_face_west_template", "single_face_east_template", "mirror_template",
    "flip_template", "reverse_circuit",
]
