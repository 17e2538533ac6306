"""Combinatorics of Sturm 3-ball attractors: meanders, templates, path pairs."""

from .meander import Meander, build
from .perm import Permutation, compose, inverse, kappa, parse, trivial_equivalence_orbit

__all__ = [
    "Meander", "Permutation", "build", "compose", "inverse", "kappa", "parse",
    "trivial_equivalence_orbit",
]
__version__ = "0.1.0"
