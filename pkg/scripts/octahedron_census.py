"""List every decorated solid octahedron that is a 3-cell template, by pole type."""

import argparse
from dataclasses import dataclass

from sturmkit.enumeration import enumerate_octahedron_templates
from sturmkit.perm import format_cycles


@dataclass
class Config:
    poles: tuple = ("adjacent", "antipodal")
    verbose: bool = False


def run(cfg: Config) -> dict:
    out = {}
    for choice in cfg.poles:
        census = enumerate_octahedron_templates(choice)
        out[choice] = census
        print(f"{choice}: {census.bipolar_orientations} bipolar orientations, "
              f"{census.candidates} decorations, {len(census.survivors)} templates")
        for orbit, members in census.orbits().items():
            s = members[0]
            print(f"  faces {s.face_split[0]}+{s.face_split[1]}, meridian edges {s.meridian_lengths}, "
                  f"orbit size {len(orbit)}, {len(members)} templates")
            if cfg.verbose:
                for m in members:
                    print(f"    {format_cycles(m.sigma)}")
    return out


if __name__ == "__main__":
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("-v", "--verbose", action="store_true")
    run(Config(verbose=ap.parse_args().verbose))
