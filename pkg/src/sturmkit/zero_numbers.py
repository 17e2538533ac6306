"""Signed zero numbers, heteroclinic connections and hemisphere templates.

The zero number of ``v - w`` counts sign changes of the difference of two
equilibria; its sign records which one is larger at the left boundary, i.e.
which comes later in ``h0`` order.

Counts come from a closed formula in terms of the permutation.  Read the
meander as a shooting curve: while the moving end of a chord from a fixed
crossing travels along the curve, the chord angle stays inside an open
half-turn until the moving end hits the axis again.  Accumulating those
half-turns from crossing ``j`` to crossing ``k > j`` (h0 positions) gives

    z(v_k - v_j) = i_j + ((-1)^k s_k - 1) / 2 + sum_{j<l<k} (-1)^l s_l,

with ``s_l = sign(p(l) - p(j))`` and ``p`` the axis position.  The reverse
difference ``z(v_j - v_k)`` is evaluated independently on the u-flipped
permutation, so the symmetry of the unsigned count is a genuine check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .meander import Meander
from .perm import Permutation, conjugate_by_kappa, inverse
from .report import Report


class SignedZero(NamedTuple):
    j: int
    sign: int  # +1 or -1

    def __str__(self) -> str:
        return f"{self.j}{'+' if self.sign > 0 else '-'}"


def _d(items) -> str:
    return str(items[:3]) if items else ""


def _sign(x: int) -> int:
    return (x > 0) - (x < 0)


def _forward_counts(sigma: Permutation, morse: tuple[int, ...]) -> list[list[int]]:
    """table[j][k] = z(v_k - v_j) for h0 positions j < k (0-based)."""
    n = sigma.n
    pos = inverse(sigma).images
    table = [[0] * n for _ in range(n)]
    for j in range(n):
        acc = 0  # running sum over j < l < k
        for k in range(j + 1, n):
            s_k = _sign(pos[k] - pos[j])
            par = 1 if (k + 1) % 2 == 0 else -1  # (-1)^k with 1-based k
            table[j][k] = morse[j] + (par * s_k - 1) // 2 + acc
            acc += par * s_k
    return table


@dataclass(frozen=True)
class ZeroMatrix:
    meander: Meander
    entries: dict  # (v, w) -> SignedZero of v - w
    morse: dict

    @property
    def n(self) -> int:
        return self.meander.n

    @property
    def labels(self) -> tuple:
        return self.meander.labels

    def z(self, v, w) -> SignedZero:
        return self.entries[(v, w)]

    def h0_pos(self, v) -> int:
        return self.meander.position(0, v)

    def between(self, a, b):
        """Crossings strictly between a and b in h0 order."""
        pa, pb = self.h0_pos(a), self.h0_pos(b)
        lo, hi = min(pa, pb), max(pa, pb)
        return self.labels[lo:hi - 1]


def zero_matrix(m: Meander | Permutation) -> ZeroMatrix:
    if isinstance(m, Permutation):
        m = Meander.build(m)
    if not m.is_sturm():
        raise ValueError("zero numbers need a Sturm permutation")
    n = m.n
    morse = m.morse_seq
    fwd = _forward_counts(m.sigma, morse)
    flipped = conjugate_by_kappa(m.sigma)
    bwd = _forward_counts(flipped, tuple(reversed(morse)))
    lab = m.labels
    entries = {}
    for j in range(n):
        for k in range(j + 1, n):
            # v_k lies above v_j at x = 0
            entries[(lab[k], lab[j])] = SignedZero(fwd[j][k], +1)
            entries[(lab[j], lab[k])] = SignedZero(bwd[n - 1 - k][n - 1 - j], -1)
    return ZeroMatrix(m, entries, dict(zip(lab, morse)))


def matrix_report(z: ZeroMatrix) -> Report:
    r = Report("zero matrix")
    asym = [(v, w) for (v, w), e in z.entries.items() if e.j != z.entries[(w, v)].j]
    r.add("unsigned symmetry", not asym, f"{len(asym)} asymmetric pairs" if asym else "")
    neg = [k for k, e in z.entries.items() if e.j < 0]
    r.add("nonnegative counts", not neg)
    bad = []
    mo = z.morse
    for iota in (0, 1):
        order = z.meander.h(iota)
        for a, b in zip(order, order[1:]):
            if z.z(a, b).j != min(mo[a], mo[b]):
                bad.append((a, b))
    r.add("adjacent crossings: z = min Morse", not bad, _d(bad))
    return r


# -- connections ----------------------------------------------------------


def blocks(z: ZeroMatrix, v_minus, v_plus, w) -> bool:
    """Whether w obstructs a connection from v_minus to v_plus."""
    if w in (v_minus, v_plus):
        return False
    zp, zm = z.z(v_plus, w), z.z(v_minus, w)
    if zp.j > zm.j:
        return True
    if w not in z.between(v_minus, v_plus):
        return False
    k = z.z(v_plus, v_minus).j
    return zp.j == zm.j == k and zp.sign != zm.sign


def k_adjacent(z: ZeroMatrix, v_minus, v_plus, k: int) -> bool:
    for w in z.between(v_minus, v_plus):
        zp, zm = z.z(v_plus, w), z.z(v_minus, w)
        if zp.j == zm.j == k and zp.sign != zm.sign:
            return False
    return True


def connects(z: ZeroMatrix, v_minus, v_plus) -> bool:
    """Heteroclinic connection v_minus -> v_plus, by the adjacency criterion."""
    if v_minus == v_plus or z.morse[v_minus] <= z.morse[v_plus]:
        return False
    return k_adjacent(z, v_minus, v_plus, z.z(v_plus, v_minus).j)


def connects_relation(z: ZeroMatrix) -> dict:
    return {v: {w for w in z.labels if connects(z, v, w)} for v in z.labels}


def connection_graph(z: ZeroMatrix) -> dict:
    """Successors along connections that drop the Morse number by one."""
    mo = z.morse
    return {
        v: {w for w in z.labels if mo[w] == mo[v] - 1 and connects(z, v, w)}
        for v in z.labels
    }


def graph_edges(g: dict) -> set:
    return {(v, w) for v, ws in g.items() for w in ws}


# -- hemisphere templates -------------------------------------------------


@dataclass(frozen=True)
class SignedHemisphereTemplate:
    sets: dict  # (v, j, sign) -> frozenset
    morse: dict
    labels: tuple

    def E(self, v, j: int, sign: int) -> frozenset:
        return self.sets.get((v, j, sign), frozenset())

    def targets(self, v) -> set:
        out = set()
        for j in range(self.morse[v]):
            out |= self.E(v, j, +1) | self.E(v, j, -1)
        return out

    def closure(self, v, j: int, sign: int) -> set:
        """A hemisphere together with everything of lower dimension."""
        out = set(self.E(v, j, sign))
        for jj in range(j):
            out |= self.E(v, jj, +1) | self.E(v, jj, -1)
        return out


def hemisphere_template(z: ZeroMatrix) -> SignedHemisphereTemplate:
    sets = {}
    mo = z.morse
    for v in z.labels:
        for j in range(mo[v]):
            for s in (+1, -1):
                sets[(v, j, s)] = set()
        for w in z.labels:
            if not connects(z, v, w):
                continue
            e = z.z(w, v)
            if e.j >= mo[v]:
                raise ValueError(f"target {w} of {v} has zero number {e} beyond Morse {mo[v]}")
            sets[(v, e.j, e.sign)].add(w)
    frozen = {k: frozenset(s) for k, s in sets.items()}
    return SignedHemisphereTemplate(frozen, dict(mo), z.labels)


def hemisphere_report(z: ZeroMatrix, t: SignedHemisphereTemplate) -> Report:
    """Dimension, zero-number and closure bounds for every crossing's hemispheres."""
    r = Report("hemispheres")
    mo = z.morse
    dim_bad, z_bad, exact_bad, clos_bad, part_bad = [], [], [], [], []
    for v in z.labels:
        if t.targets(v) != {w for w in z.labels if connects(z, v, w)}:
            part_bad.append(v)
        for j in range(mo[v]):
            lower = t.closure(v, j, +1) | t.closure(v, j, -1)
            for w in lower:
                if mo[w] > j:
                    dim_bad.append((v, w))
                if z.z(w, v).j > j:
                    z_bad.append((v, w))
            for s in (+1, -1):
                for w in t.E(v, j, s):
                    if z.z(w, v) != SignedZero(j, s):
                        exact_bad.append((v, w))
                for a, b in combinations(sorted(t.closure(v, j, s), key=z.h0_pos), 2):
                    if z.z(a, b).j > j - 1:
                        clos_bad.append((v, j, s, a, b))
    r.add("targets partitioned", not part_bad, _d(part_bad))
    r.add("hemisphere members have Morse at most j", not dim_bad, _d(dim_bad))
    r.add("hemisphere members have z(w - v) at most j", not z_bad, _d(z_bad))
    r.add("hemisphere members have z(w - v) exactly j with its sign", not exact_bad,
          _d(exact_bad))
    r.add("closed hemispheres have pairwise z at most j - 1", not clos_bad, _d(clos_bad))
    return r
