"""``sturmkit`` command line.

Permutation files are plain text in one-line or cycle notation (cycles need
an ``n=`` header); ``#`` starts a comment.  Complex files are JSON as
written by :func:`sturmkit.cells.dump_json`.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .cells import (
    ComplexError,
    dump_json,
    load_json,
    same_complex,
    validate_bipolar,
    validate_eastern_disk,
    validate_regular,
    validate_three_cell_template,
)
from .meander import Meander
from .pairs import PairError, check_pair, pair_meander, scoop, sigma_from_pair, sz_pair, szs_pair, szs_report, zs_pair
from .perm import PermutationError, format_cycles, format_one_line, parse
from .reconstruct import complex_from_meander
from .render import RenderSpec, complex_svg, meander_svg
from .report import Report


class UsageError(Exception):
    pass


def _yes(ok: bool) -> str:
    return "yes" if ok else "no"


def read_permutation(path: str):
    text = Path(path).read_text(encoding="utf-8")
    lines = [ln.split("#", 1)[0] for ln in text.splitlines()]
    return parse("\n".join(lines))


def read_complex(path: str):
    return load_json(Path(path).read_text(encoding="utf-8"))


def _is_json(path: str) -> bool:
    return Path(path).read_text(encoding="utf-8").lstrip().startswith("{")


def _meander_from(path: str) -> Meander:
    """A permutation file, or a complex whose pair gives the meander (labels kept)."""
    if _is_json(path):
        return pair_meander(_pair_of(*read_complex(path)))
    return Meander.build(read_permutation(path))


def _pair_of(c, d, style: str = "auto"):
    if c.ball is not None:
        if d is None:
            raise UsageError("a complex with a 3-cell needs a decoration")
        return szs_pair(c, d)
    return sz_pair(c) if style == "SZ" else zs_pair(c)


def _emit_report(r: Report, out) -> None:
    for c in r.checks:
        line = f"  {c.name}: {_yes(c.ok)}"
        if c.detail:
            line += f" ({c.detail})"
        print(line, file=out)


# -- subcommands ----------------------------------------------------------


def cmd_validate_meander(args, out) -> int:
    m = _meander_from(args.file)
    sr = m.sturm_report()
    print(f"n = {m.n}", file=out)
    print(f"sigma = {format_one_line(m.sigma)}", file=out)
    print(f"Sturm: {_yes(sr.ok)}", file=out)
    _emit_report(sr, out)
    if m.morse_seq is not None:
        print("Morse: " + " ".join(str(m.morse[v]) for v in m.labels), file=out)
    if sr.ok and any(i == 3 for i in m.morse_seq):
        tr = m.template_report()
        print(f"3-meander template: {_yes(tr.ok)}", file=out)
        _emit_report(tr, out)
    return 0 if sr.ok else 1


def cmd_validate_complex(args, out) -> int:
    c, d = read_complex(args.file)
    reports = [validate_regular(c), validate_bipolar(c)]
    if d is not None:
        reports.append(validate_three_cell_template(c, d))
    elif c.ball is None and validate_regular(c).ok and validate_bipolar(c).ok:
        from .cells import poles, validate_western_disk

        n, s = poles(c)
        r = Report("disk type")
        r.add("western disk", validate_western_disk(c, n, s))
        r.add("eastern disk", validate_eastern_disk(c, n, s))
        # informational only: a disk may be neither
        print("disk type:", file=out)
        _emit_report(r, out)
    ok = True
    for r in reports:
        print(f"{r.title}: {_yes(r.ok)}", file=out)
        _emit_report(r, out)
        ok &= r.ok
    return 0 if ok else 1


def cmd_pair(args, out) -> int:
    c, d = read_complex(args.file)
    p = _pair_of(c, d, args.style)
    sigma = sigma_from_pair(p)
    print(f"style: {p.style}", file=out)
    print("h0: " + " ".join(map(str, p.h0)), file=out)
    print("h1: " + " ".join(map(str, p.h1)), file=out)
    print("sigma: " + format_one_line(sigma), file=out)
    print("sigma cycles: " + format_cycles(sigma), file=out)
    r = check_pair(p, c)
    if p.style == "SZS":
        r.extend(szs_report(p))
    else:
        r.add("Sturm", pair_meander(p).is_sturm())
    _emit_report(r, out)
    return 0 if r.ok else 1


def cmd_sigma(args, out) -> int:
    c, d = read_complex(args.file)
    print(format_one_line(sigma_from_pair(_pair_of(c, d, args.style))), file=out)
    return 0


def cmd_roundtrip(args, out) -> int:
    c, d = read_complex(args.file)
    p = _pair_of(c, d, args.style)
    m = pair_meander(p)
    r = Report("roundtrip")
    if not r.add("Sturm", m.is_sturm()):
        _emit_report(r, out)
        return 1
    style = "sphere" if c.ball is not None else p.style
    rc, rd = complex_from_meander(m, style)
    r.add("same cells, edges and face circuits", same_complex(rc, c))
    if d is not None:
        r.add("same decoration", rd == d)
    if args.out:
        Path(args.out).write_text(dump_json(rc, rd) + "\n", encoding="utf-8")
    print(f"roundtrip: {_yes(r.ok)}", file=out)
    _emit_report(r, out)
    return 0 if r.ok else 1


def cmd_scoop(args, out) -> int:
    m = _meander_from(args.file)
    s = scoop(m, args.side)
    print(f"removed: {' '.join(map(str, sorted(set(m.labels) - set(s.labels))))}", file=out)
    print("h0: " + " ".join(map(str, s.h(0))), file=out)
    print("sigma: " + format_one_line(s.sigma), file=out)
    r = s.sturm_report()
    if r.ok:
        pole = "S" if args.side == "E" else "N"
        r.add(f"{pole}-polar h0-serpent full", s.is_full(s.polar_serpent(0, pole)))
    print(f"Sturm: {_yes(s.is_sturm())}", file=out)
    _emit_report(r, out)
    return 0 if r.ok else 1


def cmd_enumerate_octahedron(args, out) -> int:
    from .builders import solid_octahedron
    from .enumeration import ScanConfig, enumerate_octahedron_templates, pole_pair, scan_sturm_pairs

    choices = ["adjacent", "antipodal"] if args.poles == "both" else [args.poles]
    for choice in choices:
        census = enumerate_octahedron_templates(choice)
        print(f"{choice} poles {census.poles}: {census.bipolar_orientations} bipolar orientations, "
              f"{census.candidates} decorations, {len(census.survivors)} templates", file=out)
        for orbit, members in sorted(census.orbits().items(), key=lambda kv: min(p.images for p in kv[0])):
            rep = min(orbit, key=lambda p: p.images)
            s = members[0]
            print(f"  orbit of {len(orbit)} sigma(s), {len(members)} template(s), "
                  f"faces {'+'.join(map(str, sorted(s.face_split)))}, "
                  f"meridian edges {s.meridian_lengths}: {format_cycles(rep)}", file=out)
        if args.exhaustive:
            cfg = ScanConfig(level=args.level, limit_h0=args.limit_h0)
            st = scan_sturm_pairs(solid_octahedron(), pole_pair(choice), cfg)
            print(f"  pair scan ({st.level}): {st.paths} paths, {st.h0_scanned} h0 scanned, "
                  f"{st.sturm_pairs} passed the search, {st.hits_total} hits", file=out)
            for h0, h1 in st.hits[: args.show]:
                print("    h0: " + " ".join(map(str, h0)), file=out)
                print("    h1: " + " ".join(map(str, h1)), file=out)
    return 0


def cmd_render(args, out) -> int:
    spec = RenderSpec(args.width, args.height, not args.no_labels)
    if _is_json(args.file) and args.target != "meander":
        c, d = read_complex(args.file)
        svg = complex_svg(c, d, spec)
    else:
        svg = meander_svg(_meander_from(args.file), spec)
    if args.out:
        Path(args.out).write_text(svg, encoding="utf-8")
    else:
        out.write(svg)
    return 0


# -- wiring ---------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="sturmkit", description="Sturm meanders and 3-cell templates")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("validate-meander", help="classify a permutation")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate_meander)

    p = sub.add_parser("validate-complex", help="check a complex (and its decoration)")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate_complex)

    for name, fn, hlp in (("pair", cmd_pair, "boundary orders h0, h1 and sigma"),
                          ("sigma", cmd_sigma, "just sigma, one-line"),
                          ("roundtrip", cmd_roundtrip, "complex -> sigma -> complex")):
        p = sub.add_parser(name, help=hlp)
        p.add_argument("file")
        p.add_argument("--style", choices=["ZS", "SZ"], default="ZS",
                       help="pair style for planar disks (templates always use SZS)")
        if name == "roundtrip":
            p.add_argument("--out", help="write the rebuilt complex as JSON")
        p.set_defaults(func=fn)

    p = sub.add_parser("scoop", help="remove O and one open hemisphere from a 3-meander template")
    p.add_argument("file")
    p.add_argument("--side", choices=["E", "W"], default="E")
    p.set_defaults(func=cmd_scoop)

    p = sub.add_parser("enumerate-octahedron", help="3-cell templates on the solid octahedron")
    p.add_argument("--poles", choices=["adjacent", "antipodal", "both"], default="both")
    p.add_argument("--exhaustive", action="store_true", help="also run the Hamiltonian pair scan")
    p.add_argument("--level", choices=["sturm", "dimension", "complex"], default="complex")
    p.add_argument("--limit-h0", type=int, default=None, help="scan only the first h0 paths")
    p.add_argument("--show", type=int, default=3, help="hits to print")
    p.set_defaults(func=cmd_enumerate_octahedron)

    p = sub.add_parser("render", help="SVG of a meander or a complex")
    p.add_argument("file")
    p.add_argument("--out")
    p.add_argument("--target", choices=["auto", "meander"], default="auto",
                   help="'meander' draws the meander of a complex file")
    p.add_argument("--width", type=int, default=900)
    p.add_argument("--height", type=int, default=420)
    p.add_argument("--no-labels", action="store_true")
    p.set_defaults(func=cmd_render)
    return ap


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    args = build_parser().parse_args(argv)
    try:
        return args.func(args, out)
    except (PermutationError, ComplexError, PairError, UsageError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
