"""Acceptance run: one PASS/FAIL line per criterion.

    pytest tests/test_acceptance.py          # lines appear in the summary
    python3 tests/test_acceptance.py         # same checks, plain output

The exhaustive pair scan (criterion 10) takes tens of minutes on one core
and only runs with STURMKIT_EXHAUSTIVE=1; otherwise it reports SKIP.
Criterion 6 as literally stated does not hold (the two Morse sums differ
on permutations with crossing arcs), so it reports FAIL and is marked as
an expected failure; the meander form it is meant to capture is checked
in test_morse_consistency.py.
"""

import os
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from conftest import OCT_CYCLES, OCT_H0, OCT_H1, SIGMA_MINUS_LINE, SIGMA_PLUS_LINE, disk_family, template_family  # noqa: E402
from sturmkit.builders import chafee_infante, octahedron, solid_octahedron  # noqa: E402
from sturmkit.cells import closed_hemisphere, same_complex  # noqa: E402
from sturmkit.enumeration import (  # noqa: E402
    BarycenterGraph,
    ScanConfig,
    enumerate_octahedron_templates,
    hamiltonian_paths,
    scan_sturm_pairs,
)
from sturmkit.meander import Meander  # noqa: E402
from sturmkit.pairs import pair_meander, scoop, sigma_from_pair, sz_pair, szs_pair, szs_report, zs_pair  # noqa: E402
from sturmkit.perm import parse, trivial_equivalence_orbit  # noqa: E402
from sturmkit.reconstruct import complex_from_meander, complex_from_signed_template  # noqa: E402
from sturmkit.zero_numbers import (  # noqa: E402
    connection_graph,
    graph_edges,
    hemisphere_report,
    hemisphere_template,
    matrix_report,
    zero_matrix,
)

RESULTS: dict = {}
EXHAUSTIVE = os.environ.get("STURMKIT_EXHAUSTIVE") == "1"


def record(num, ok, detail=""):
    status = "PASS" if ok else "FAIL"
    RESULTS[num] = (status, detail)
    print(f"criterion {num}: {status} {detail}".rstrip())
    return ok


def timed(fn):
    t = time.perf_counter()
    out = fn()
    return out, time.perf_counter() - t


# -- the checks; each returns (ok, detail) ----------------------------------------


def check_1():
    p, dt = timed(lambda: szs_pair(*octahedron()))
    s = sigma_from_pair(p)
    ok = (" ".join(map(str, p.h0)) == OCT_H0 and " ".join(map(str, p.h1)) == OCT_H1
          and s == parse(OCT_CYCLES, n=27) and dt < 1.0)
    return ok, f"octahedron orders and sigma in {dt:.2f}s"


def check_2():
    g = BarycenterGraph.of(solid_octahedron())
    adj, t1 = timed(lambda: hamiltonian_paths(g, 1, 2))
    anti, t2 = timed(lambda: hamiltonian_paths(g, 1, 6))
    ok = adj == 62552 and anti == 70944 and t1 < 60 and t2 < 60
    return ok, f"adjacent {adj} ({t1:.1f}s), antipodal {anti} ({t2:.1f}s)"


def check_3():
    t = time.perf_counter()
    anti = enumerate_octahedron_templates("antipodal")
    adj = enumerate_octahedron_templates("adjacent")
    dt = time.perf_counter() - t
    shape = all(max(s.meridian_lengths) <= 2 and min(s.face_split) <= 2 for s in adj.survivors)
    two_six = adj.orbits_with_split(2)
    target = parse(OCT_CYCLES, n=27)
    ok = (not anti.survivors and adj.survivors and shape and len(two_six) == 1
          and target in next(iter(two_six)) and dt < 60)
    return ok, (f"antipodal {len(anti.survivors)} templates, adjacent {len(adj.survivors)} "
                f"in {len(adj.orbits())} orbits, 2+6 orbits {len(two_six)} ({dt:.1f}s)")


def check_4():
    t = time.perf_counter()
    plus, minus = parse(SIGMA_PLUS_LINE), parse(SIGMA_MINUS_LINE)
    ok = all(Meander.build(s).is_sturm() and Meander.build(s).is_three_meander_template()
             for s in (plus, minus))
    ok = ok and minus not in trivial_equivalence_orbit(plus)
    dt = time.perf_counter() - t
    return ok and dt < 1.0, f"sigma+ and sigma- templates, inequivalent ({dt:.2f}s)"


def check_5():
    fam = template_family()
    bad = [name for name, c, d in fam if not szs_report(szs_pair(c, d)).ok]
    return not bad, f"{len(fam)} templates, failures {bad}"


def check_6():
    from test_morse_consistency import closing_agreement, sturm_endpoints

    tally = closing_agreement()
    differ = sum(v for (agree, *_), v in tally.items() if not agree)
    meander_differ = tally[(False, True, True)]
    checked, bad = sturm_endpoints()
    ok = differ == 0 and bad == 0
    return ok, (f"{sum(tally.values())} closing perms, {differ} disagree "
                f"({meander_differ} of them dissipative meanders); "
                f"Sturm endpoint checks {checked - bad}/{checked}")


def _labelled():
    out = [(name, c, pair_meander(szs_pair(c, d))) for name, c, d in template_family()]
    for name, c in disk_family():
        out.append((name, c, pair_meander(zs_pair(c))))
        out.append((name, c, pair_meander(sz_pair(c))))
    for m in (1, 2):
        c, _ = chafee_infante(m)
        labels = (1, 3, 2) if m == 1 else (1, 3, 5, 4, 2)
        out.append((f"ci{m}", c, Meander.build(parse("1 2 3" if m == 1 else "1 4 3 2 5"), labels)))
    return out


def check_7():
    bad = []
    cases = _labelled()
    for name, c, m in cases:
        z = zero_matrix(m)
        inc = {(x, b) for x in c.dims for b in c.boundary(x)}
        if graph_edges(connection_graph(z)) != inc or not matrix_report(z).ok:
            bad.append(name)
        elif not hemisphere_report(z, hemisphere_template(z)).ok:
            bad.append(name)
    return not bad, f"{len(cases)} complexes, mismatches {bad}"


def check_8():
    cases = [octahedron(), *[_t[1:] for _t in template_family()[2:4]]]
    bad = 0
    for c, d in cases:
        z = zero_matrix(pair_meander(szs_pair(c, d)))
        rc, rd = complex_from_signed_template(hemisphere_template(z))
        bad += not (same_complex(rc, c) and rd == d)
    return bad == 0, f"{len(cases)} templates rebuilt, {bad} mismatches"


def check_9():
    c, d = octahedron()
    s = scoop(pair_meander(szs_pair(c, d)), "E")
    rc, _ = complex_from_meander(s, "SZ")
    ok = (s.n == 23 and s.is_sturm() and s.is_full(s.polar_serpent(0, "S"))
          and same_complex(rc, closed_hemisphere(c, d, "W")))
    return ok, f"{s.n} crossings, Sturm {s.is_sturm()}"


def check_10():
    c, d = octahedron()
    p = szs_pair(c, d)
    cfg = ScanConfig(level="complex", cap_hits=10 ** 6)
    anti = scan_sturm_pairs(solid_octahedron(), (1, 6), cfg)
    adj = scan_sturm_pairs(solid_octahedron(), (1, 2), cfg)
    ok = anti.hits_total == 0 and adj.hits_total > 0 and (p.h0, p.h1) in adj.hits
    return ok, f"realizations: antipodal {anti.hits_total}, adjacent {adj.hits_total}"


# -- pytest wiring ----------------------------------------------------------------


def _run(num):
    ok, detail = globals()[f"check_{num}"]()
    assert record(num, ok, detail), detail


@pytest.mark.parametrize("num", [1, 2, 3, 4, 5, 7, 8, 9])
def test_criterion(num):
    _run(num)


@pytest.mark.xfail(strict=True, reason="literal Morse claim fails off meanders")
def test_criterion_6():
    _run(6)


@pytest.mark.skipif(not EXHAUSTIVE, reason="set STURMKIT_EXHAUSTIVE=1")
def test_criterion_10():
    _run(10)


def main():
    for num in range(1, 11):
        if num == 10 and not EXHAUSTIVE:
            RESULTS[10] = ("SKIP", "set STURMKIT_EXHAUSTIVE=1")
            print("criterion 10: SKIP (set STURMKIT_EXHAUSTIVE=1)")
            continue
        ok, detail = globals()[f"check_{num}"]()
        record(num, ok, detail)
    return 0 if all(s != "FAIL" for n, (s, _) in RESULTS.items() if n != 6) else 1


if __name__ == "__main__":
    sys.exit(main())
