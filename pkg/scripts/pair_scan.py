"""Scan all Hamiltonian path pairs (h0, h1) of the solid octahedron.

Levels: "sturm" keeps every pair whose sigma is Sturm, "dimension" also
asks Morse number = cell dimension, "complex" also asks that the
connection graph reproduces the octahedron's cell incidence.  On one core
the "complex" level takes about six minutes per pole type; "sturm" takes
many hours.
"""

import argparse
import time
from dataclasses import dataclass

from sturmkit.builders import octahedron, solid_octahedron
from sturmkit.enumeration import ScanConfig, pole_pair, scan_sturm_pairs
from sturmkit.pairs import PathPair, sigma_from_pair, szs_pair
from sturmkit.perm import format_cycles


@dataclass
class Config:
    poles: tuple = ("antipodal", "adjacent")
    scan: ScanConfig = ScanConfig()
    show: int = 0


def run(cfg: Config) -> dict:
    known = szs_pair(*octahedron())
    out = {}
    for choice in cfg.poles:
        t = time.perf_counter()
        st = scan_sturm_pairs(solid_octahedron(), pole_pair(choice), cfg.scan)
        sigmas = {sigma_from_pair(PathPair(a, b, "")) for a, b in st.hits}
        out[choice] = st
        print(f"{choice}: {st.paths} paths, {st.h0_scanned} h0 scanned, "
              f"{st.sturm_pairs} passed the search, {st.hits_total} hits ({st.level}), "
              f"{len(sigmas)} distinct sigma, known pair found: {(known.h0, known.h1) in st.hits}, "
              f"{time.perf_counter() - t:.0f}s")
        for s in sorted(sigmas, key=lambda p: p.images)[: cfg.show]:
            print("   ", format_cycles(s))
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--level", choices=["sturm", "dimension", "complex"], default="complex")
    ap.add_argument("--limit-h0", type=int)
    ap.add_argument("--poles", choices=["adjacent", "antipodal", "both"], default="both")
    ap.add_argument("--show", type=int, default=0)
    a = ap.parse_args()
    poles = ("antipodal", "adjacent") if a.poles == "both" else (a.poles,)
    run(Config(poles, ScanConfig(level=a.level, limit_h0=a.limit_h0, cap_hits=10 ** 6), a.show))
