"""Arch diagrams of permutations.

A permutation ``sigma`` is read as a pair of boundary orders with ``h0 = id``
and ``h1 = sigma``.  The curve visits the crossings in ``h0`` order and meets
the horizontal axis in ``h1`` order, so crossing number ``j`` (its ``h0``
position) sits at axis position ``sigma^{-1}(j)``.  The arc joining ``j`` and
``j + 1`` lies above the axis for odd ``j`` and below it for even ``j``.

Crossings may carry arbitrary labels (cell ids); ``labels[j - 1]`` names the
crossing at ``h0`` position ``j``.  All public queries speak labels.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Hashable, Sequence

from .perm import Permutation, inverse
from .report import Report


class MorseInconsistency(ValueError):
    """The two Morse recursions disagree, or the last crossing is not 0."""


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def morse_along_h0(sigma: Permutation) -> list[int]:
    """Morse numbers by h0 position, accumulated along the curve."""
    pos = inverse(sigma).images
    n = sigma.n
    out = [0] * n
    for j in range(1, n):
        # arc j -> j + 1; (-1)^(j+1) flips between upper and lower arcs
        step = _sign(pos[j] - pos[j - 1])
        out[j] = out[j - 1] + (step if j % 2 == 1 else -step)
    return out


def morse_along_h1(sigma: Permutation) -> list[int]:
    """Morse numbers by h0 position, accumulated along the axis order."""
    n = sigma.n
    out = [0] * n
    cur = 0
    out[sigma(1) - 1] = 0
    for m in range(1, n):
        v, w = sigma(m), sigma(m + 1)
        step = _sign(w - v)
        cur += step if m % 2 == 1 else -step
        out[w - 1] = cur
    return out


def morse_numbers(sigma: Permutation) -> tuple[int, ...]:
    """Morse numbers indexed by h0 position, after both consistency checks."""
    a = morse_along_h0(sigma)
    if a[-1] != 0:
        raise MorseInconsistency(f"last crossing has Morse number {a[-1]}, not 0")
    b = morse_along_h1(sigma)
    if a != b:
        raise MorseInconsistency("recursions along h0 and h1 disagree")
    return tuple(a)


def try_morse_numbers(sigma: Permutation) -> tuple[int, ...] | None:
    try:
        return morse_numbers(sigma)
    except MorseInconsistency:
        return None


def _arcs_noncrossing(arcs: Sequence[tuple[int, int]], n: int) -> bool:
    # every axis position is an endpoint of at most one arc of the family
    owner = [0] * (n + 2)
    for idx, (a, b) in enumerate(arcs, 1):
        lo, hi = min(a, b), max(a, b)
        owner[lo] = idx
        owner[hi] = -idx
    stack = []
    for p in range(1, n + 1):
        o = owner[p]
        if o > 0:
            stack.append(o)
        elif o < 0:
            if not stack or stack[-1] != -o:
                return False
            stack.pop()
    return True


@dataclass(frozen=True)
class Serpent:
    iota: int
    pole: str  # "N" or "S"
    members: tuple  # labels in h_iota order
    start: int  # 1-based h_iota index range, inclusive
    stop: int

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members


@dataclass(frozen=True)
class Meander:
    sigma: Permutation
    labels: tuple = field(default=())
    upper_arcs: tuple = field(default=(), compare=False)
    lower_arcs: tuple = field(default=(), compare=False)
    morse_seq: tuple | None = field(default=None, compare=False)

    @classmethod
    def build(cls, sigma: Permutation, labels: Sequence[Hashable] | None = None) -> "Meander":
        n = sigma.n
        if labels is None:
            labels = tuple(range(1, n + 1))
        labels = tuple(labels)
        if len(labels) != n or len(set(labels)) != n:
            raise ValueError("labels must be n distinct values")
        pos = inverse(sigma).images
        upper, lower = [], []
        for j in range(1, n):
            arc = (pos[j - 1], pos[j])
            (upper if j % 2 == 1 else lower).append(arc)
        return cls(sigma, labels, tuple(upper), tuple(lower), try_morse_numbers(sigma))

    # -- orders -------------------------------------------------------------

    @property
    def n(self) -> int:
        return self.sigma.n

    def h(self, iota: int) -> tuple:
        """Labels listed in h_iota order."""
        if iota == 0:
            return self.labels
        return tuple(self.labels[k - 1] for k in self.sigma.images)

    def position(self, iota: int, label) -> int:
        """1-based index of ``label`` in h_iota order."""
        return self._index(iota)[label]

    def _index(self, iota: int) -> dict:
        cache = self.__dict__.setdefault("_idx", {})
        if iota not in cache:
            cache[iota] = {v: k for k, v in enumerate(self.h(iota), 1)}
        return cache[iota]

    # -- Morse data ---------------------------------------------------------

    @property
    def morse(self) -> dict:
        if self.morse_seq is None:
            raise MorseInconsistency("Morse recursions are inconsistent for this permutation")
        return dict(zip(self.labels, self.morse_seq))

    def morse_of(self, label) -> int:
        return self.morse[label]

    # -- classification -----------------------------------------------------

    def is_dissipative(self) -> bool:
        return self.sigma(1) == 1 and self.sigma(self.n) == self.n

    def is_morse(self) -> bool:
        return self.morse_seq is not None and min(self.morse_seq) >= 0

    def is_meander(self) -> bool:
        return _arcs_noncrossing(self.upper_arcs, self.n) and _arcs_noncrossing(
            self.lower_arcs, self.n
        )

    def is_sturm(self) -> bool:
        return self.n % 2 == 1 and self.is_dissipative() and self.is_morse() and self.is_meander()

    def sturm_report(self) -> Report:
        r = Report("Sturm")
        r.add("dissipative", self.is_dissipative())
        r.add("odd crossing count", self.n % 2 == 1, f"n={self.n}")
        r.add("consistent Morse recursions", self.morse_seq is not None)
        r.add("nonnegative Morse numbers", self.is_morse())
        r.add("noncrossing arcs", self.is_meander())
        return r

    # -- serpents -----------------------------------------------------------

    def polar_serpent(self, iota: int, pole: str) -> Serpent:
        if self.n < 3:
            raise ValueError("serpents need at least 3 crossings")
        order = self.h(iota)
        mo = self.morse
        if pole == "N":
            k = 1
            while k < self.n and mo[order[k]] in (0, 1):
                k += 1
            return Serpent(iota, "N", tuple(order[:k]), 1, k)
        if pole == "S":
            k = self.n - 1
            while k > 0 and mo[order[k - 1]] in (0, 1):
                k -= 1
            return Serpent(iota, "S", tuple(order[k:]), k + 1, self.n)
        raise ValueError(f"pole must be 'N' or 'S', not {pole!r}")

    def is_full(self, s: Serpent) -> bool:
        other = self.h(1 - s.iota)
        target = other[self.n - 2] if s.pole == "N" else other[1]
        return target in s.members

    @staticmethod
    def overlap(s1: Serpent, s2: Serpent) -> set:
        return set(s1.members) & set(s2.members)

    # -- the i = 3 crossing -------------------------------------------------

    def o_crossing(self):
        tops = [v for v, i in self.morse.items() if i == 3]
        if len(tops) != 1:
            raise ValueError(f"expected one crossing of Morse number 3, found {len(tops)}")
        return tops[0]

    def neighbors(self, iota: int) -> tuple:
        o = self.o_crossing()
        order = self.h(iota)
        k = self.position(iota, o)
        if k == 1 or k == self.n:
            raise ValueError("the Morse-3 crossing sits at an end of the order")
        return order[k - 2], order[k]

    def extreme_sources(self, iota: int) -> tuple:
        mo = self.morse
        srcs = [v for v in self.h(iota) if mo[v] == 2]
        if not srcs:
            raise ValueError("no crossing of Morse number 2")
        return srcs[0], srcs[-1]

    # -- 3-meander templates ------------------------------------------------

    def template_report(self) -> Report:
        """Per-condition verdict on the 3-meander template conditions."""
        r = Report("3-meander template")
        mo = self.morse
        tops = [v for v, i in mo.items() if i == 3]
        r.add(
            "single Morse-3 crossing, all others at most 2",
            len(tops) == 1 and all(i <= 2 for v, i in mo.items() if v not in tops),
            f"{len(tops)} crossing(s) of Morse number 3",
        )
        if len(tops) != 1:
            for name in ("anti-polar serpent overlaps", "polar arcs overarch O",
                         "neighbors of O are extreme sources"):
                r.add(name, False, "no unique Morse-3 crossing")
            return r
        o = tops[0]
        sp = {(i, p): self.polar_serpent(i, p) for i in (0, 1) for p in "NS"}

        empty = []
        for i in (0, 1):
            for p, q in (("N", "S"), ("S", "N")):
                if not self.overlap(sp[(i, p)], sp[(1 - i, q)]):
                    empty.append(f"{p}-polar h{i}")
        r.add("anti-polar serpent overlaps", not empty,
              "empty for " + ", ".join(empty) if empty else "")

        bad = []
        for i in (0, 1):
            order = self.h(i)
            o_pos = self.position(1 - i, o)
            for p, (a, b) in (("N", (order[0], order[1])), ("S", (order[-2], order[-1]))):
                pa, pb = self.position(1 - i, a), self.position(1 - i, b)
                if not min(pa, pb) < o_pos < max(pa, pb):
                    bad.append(f"{p}-polar h{i}")
        r.add("polar arcs overarch O", not bad, ", ".join(bad))

        bad = []
        for i in (0, 1):
            nb, ex = self.neighbors(i), self.extreme_sources(1 - i)
            if nb != ex:
                bad.append(f"h{i} neighbors {nb} vs h{1 - i} extreme sources {ex}")
        r.add("neighbors of O are extreme sources", not bad, "; ".join(bad))
        return r

    def is_three_meander_template(self) -> bool:
        if not self.is_sturm():
            raise ValueError("3-meander template check needs a Sturm meander")
        return self.template_report().ok


def build(sigma: Permutation, labels: Sequence[Hashable] | None = None) -> Meander:
    return Meander.build(sigma, labels)
