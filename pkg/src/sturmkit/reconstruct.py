"""Rebuild a decorated cell complex from a signed hemisphere template.

Crossings of Morse number 0, 1, 2, 3 become vertices, edges, faces and the
ball.  Each edge runs from its minus sink to its plus sink.  The boundary of
a face w is two directed edge paths from the minus pole of w to its plus
pole, one per signed half ``E_-^1(w)``, ``E_+^1(w)``; the circuit goes out
along one of them and back along the other.  Which half goes first fixes the
embedding orientation: east faces (and ZS disks) go out along the minus
half, west faces (and SZ disks) along the plus half.
"""

from __future__ import annotations

from .cells import ComplexError, RegularCellComplex, TemplateDecoration
from .meander import Meander
from .perm import Permutation
from .zero_numbers import SignedHemisphereTemplate, hemisphere_template, zero_matrix


def _single(s: frozenset, what: str):
    if len(s) != 1:
        raise ComplexError(f"{what}: expected one cell, got {sorted(s)}")
    return next(iter(s))


def _chain(cells: frozenset, edges: dict, dims: dict, start, stop, what: str) -> list:
    """Edge ids of the directed path start -> stop through exactly ``cells``."""
    es = [x for x in cells if dims[x] == 1]
    inner = {x for x in cells if dims[x] == 0}
    by_tail = {}
    for e in es:
        t = edges[e][0]
        if t in by_tail:
            raise ComplexError(f"{what}: two edges leave {t}")
        by_tail[t] = e
    path, cur, seen = [], start, set()
    while cur != stop:
        e = by_tail.get(cur)
        if e is None:
            raise ComplexError(f"{what}: path stops at {cur}")
        path.append(e)
        cur = edges[e][1]
        if cur != stop:
            seen.add(cur)
    if len(path) != len(es) or seen != inner:
        raise ComplexError(f"{what}: cells {sorted(cells)} do not form one directed path")
    return path


def _circuit(first: list, second: list, edges: dict, start) -> tuple:
    out = [start]
    for e in first:
        out += [e, edges[e][1]]
    back = []
    for e in reversed(second):
        back += [e, edges[e][0]]
    return tuple(out + back[:-1])


def complex_from_signed_template(t: SignedHemisphereTemplate, style: str = "sphere"):
    """Returns (complex, decoration); decoration is None for planar styles.

    ``style`` is "sphere" for a 3-cell template, or "ZS" / "SZ" for a disk.
    """
    if style not in ("sphere", "ZS", "SZ"):
        raise ValueError("style must be 'sphere', 'ZS' or 'SZ'")
    mo = t.morse
    dims = dict(mo)
    tops = [v for v, i in mo.items() if i == 3]
    if any(i > 3 for i in mo.values()):
        raise ComplexError("Morse numbers above 3")
    if style == "sphere" and len(tops) != 1:
        raise ComplexError("a 3-cell template needs exactly one crossing of Morse number 3")
    if style != "sphere" and tops:
        raise ComplexError("planar reconstruction needs Morse numbers at most 2")

    edges = {}
    for e in (v for v, i in mo.items() if i == 1):
        edges[e] = (_single(t.E(e, 0, -1), f"edge {e} minus end"),
                    _single(t.E(e, 0, +1), f"edge {e} plus end"))

    west = east = frozenset()
    deco = None
    if style == "sphere":
        o = tops[0]
        west, east = t.E(o, 2, -1), t.E(o, 2, +1)
        north = _single(t.E(o, 0, -1), "north pole")
        south = _single(t.E(o, 0, +1), "south pole")
        ew = _chain(t.E(o, 1, -1), edges, dims, north, south, "meridian EW")
        we = _chain(t.E(o, 1, +1), edges, dims, north, south, "meridian WE")
        deco = TemplateDecoration(north, south, tuple(ew), tuple(we),
                                  frozenset(west), frozenset(east))

    faces = {}
    for f in (v for v, i in mo.items() if i == 2):
        lo = _single(t.E(f, 0, -1), f"face {f} minus pole")
        hi = _single(t.E(f, 0, +1), f"face {f} plus pole")
        minus = _chain(t.E(f, 1, -1), edges, dims, lo, hi, f"face {f} minus half")
        plus = _chain(t.E(f, 1, +1), edges, dims, lo, hi, f"face {f} plus half")
        if style == "sphere":
            if f in west:
                plus_first = True
            elif f in east:
                plus_first = False
            else:
                raise ComplexError(f"face {f} lies in neither hemisphere")
        else:
            plus_first = style == "SZ"
        faces[f] = _circuit(plus, minus, edges, lo) if plus_first else _circuit(minus, plus, edges, lo)

    c = RegularCellComplex(dims, edges, faces, ball=tops[0] if tops else None)
    return c, deco


def complex_from_meander(m: Meander | Permutation, style: str = "sphere"):
    """Shortcut: zero numbers, hemisphere template, then reconstruction."""
    return complex_from_signed_template(hemisphere_template(zero_matrix(m)), style)
