"""Count Hamiltonian pole-to-pole paths on the solid octahedron's barycenter graph."""

import argparse
import time
from dataclasses import dataclass

from sturmkit.builders import solid_octahedron
from sturmkit.enumeration import BarycenterGraph, count_hamiltonian_paths, pole_pair


@dataclass
class Config:
    poles: tuple = ("adjacent", "antipodal")
    workers: int | None = None  # default: STURMKIT_THREADS or 1


def run(cfg: Config) -> dict:
    g = BarycenterGraph.of(solid_octahedron())
    out = {}
    for choice in cfg.poles:
        s, e = pole_pair(choice)
        t = time.perf_counter()
        n = count_hamiltonian_paths(g, s, e, cfg.workers)
        out[choice] = n
        print(f"{choice:9s} poles ({s}, {e}): {n} paths in {time.perf_counter() - t:.1f}s")
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--workers", type=int)
    run(Config(workers=ap.parse_args().workers))
