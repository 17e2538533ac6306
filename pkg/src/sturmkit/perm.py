"""Permutations of {1..n} with one-line and cycle codecs.

All user-facing values are 1-based.  ``images[k - 1]`` is the image of ``k``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence


class PermutationError(ValueError):
    pass


@dataclass(frozen=True)
class Permutation:
    images: tuple[int, ...]

    def __post_init__(self):
        imgs = tuple(int(x) for x in self.images)
        object.__setattr__(self, "images", imgs)
        n = len(imgs)
        if n == 0:
            raise PermutationError("empty permutation")
        seen = set()
        for x in imgs:
            if not 1 <= x <= n:
                raise PermutationError(f"symbol {x} out of range 1..{n}")
            if x in seen:
                raise PermutationError(f"duplicate symbol {x}")
            seen.add(x)

    @classmethod
    def of(cls, images: Iterable[int]) -> "Permutation":
        return cls(tuple(images))

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(tuple(range(1, n + 1)))

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, k: int) -> int:
        return self.images[k - 1]

    def __len__(self) -> int:
        return len(self.images)

    def __iter__(self):
        return iter(self.images)

    def __mul__(self, other: "Permutation") -> "Permutation":
        return compose(self, other)

    def __str__(self) -> str:
        return format_one_line(self)

    def is_identity(self) -> bool:
        return all(x == k for k, x in enumerate(self.images, 1))

    def cycles(self) -> list[tuple[int, ...]]:
        """Nontrivial cycles, each starting at its smallest element."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            k = self(start)
            while k != start:
                cyc.append(k)
                seen.add(k)
                k = self(k)
            if len(cyc) > 1:
                out.append(tuple(cyc))
        return out


def compose(a: Permutation, b: Permutation) -> Permutation:
    """(a o b)(k) = a(b(k))."""
    if a.n != b.n:
        raise PermutationError(f"size mismatch: {a.n} vs {b.n}")
    return Permutation(tuple(a(x) for x in b.images))


def inverse(a: Permutation) -> Permutation:
    out = [0] * a.n
    for k, x in enumerate(a.images, 1):
        out[x - 1] = k
    return Permutation(tuple(out))


def kappa(n: int) -> Permutation:
    """The order reversing involution k -> n + 1 - k."""
    return Permutation(tuple(range(n, 0, -1)))


def conjugate_by_kappa(a: Permutation) -> Permutation:
    n = a.n
    return Permutation(tuple(n + 1 - a(n + 1 - k) for k in range(1, n + 1)))


def trivial_equivalence_orbit(sigma: Permutation) -> frozenset[Permutation]:
    """Orbit of sigma under inversion and conjugation by kappa."""
    inv = inverse(sigma)
    return frozenset({sigma, conjugate_by_kappa(sigma), inv, conjugate_by_kappa(inv)})


def from_cycles(cycles: Sequence[Sequence[int]], n: int) -> Permutation:
    images = list(range(1, n + 1))
    seen = set()
    for cyc in cycles:
        for x in cyc:
            if not 1 <= x <= n:
                raise PermutationError(f"symbol {x} out of range 1..{n}")
            if x in seen:
                raise PermutationError(f"duplicate symbol {x}")
            seen.add(x)
        for i, x in enumerate(cyc):
            images[x - 1] = cyc[(i + 1) % len(cyc)]
    return Permutation(tuple(images))


_CYCLE = re.compile(r"\(([^()]*)\)")


def parse(text: str, n: int | None = None) -> Permutation:
    """Parse one-line ("1 12 3 ...") or cycle ("(2 12)(5 11)") notation.

    Cycle notation needs ``n`` since fixed points are left out.  A leading
    ``n=<int>`` header in ``text`` is accepted as well.
    """
    body = text.strip()
    m = re.match(r"^\s*n\s*=\s*(\d+)\s*[,;\n]?", body)
    if m:
        hdr = int(m.group(1))
        if n is not None and n != hdr:
            raise PermutationError(f"conflicting sizes {n} and {hdr}")
        n = hdr
        body = body[m.end():].strip()
    if "(" in body or ")" in body:
        if n is None:
            raise PermutationError("cycle notation needs an explicit n")
        if body.replace(" ", "") == "()":
            return Permutation.identity(n)
        rest = _CYCLE.sub(" ", body)
        if rest.strip() or body.count("(") != body.count(")"):
            raise PermutationError(f"malformed parentheses in {text!r}")
        cycles = []
        for grp in _CYCLE.findall(body):
            toks = grp.replace(",", " ").split()
            if not toks:
                raise PermutationError("empty cycle")
            cycles.append(tuple(_to_int(t) for t in toks))
        return from_cycles(cycles, n)
    toks = body.replace(",", " ").split()
    if not toks:
        if n:
            return Permutation.identity(n)
        raise PermutationError("empty input")
    perm = Permutation(tuple(_to_int(t) for t in toks))
    if n is not None and perm.n != n:
        raise PermutationError(f"expected {n} symbols, got {perm.n}")
    return perm


def _to_int(tok: str) -> int:
    try:
        return int(tok)
    except ValueError:
        raise PermutationError(f"not a symbol: {tok!r}") from None


def format_one_line(p: Permutation) -> str:
    return " ".join(map(str, p.images))


def format_cycles(p: Permutation) -> str:
    cyc = p.cycles()
    if not cyc:
        return "()"
    return "".join("(" + " ".join(map(str, c)) + ")" for c in cyc)
