import io
import subprocess
import sys
import xml.etree.ElementTree as ET
from pathlib import Path

import pytest

from conftest import OCT_H0, OCT_H1
from sturmkit.builders import octahedron
from sturmkit.cells import dump_json, load_json, same_complex
from sturmkit.cli import main

DATA = Path(__file__).resolve().parent.parent / "data"
SVG = "{http://www.w3.org/2000/svg}"


def run(*argv):
    buf = io.StringIO()
    code = main([str(a) for a in argv], out=buf)
    return code, buf.getvalue()


def test_validate_meander_octahedron():
    code, text = run("validate-meander", DATA / "sigma_oct.txt")
    assert code == 0
    assert "Sturm: yes" in text and "3-meander template: yes" in text
    assert "n = 27" in text


def test_validate_meander_rejects():
    code, text = run("validate-meander", DATA / "not_dissipative.txt")
    assert code == 1
    assert "Sturm: no" in text


def test_validate_meander_sigma_plus_minus():
    for f in ("sigma_plus.txt", "sigma_minus.txt"):
        code, text = run("validate-meander", DATA / f)
        assert code == 0 and "3-meander template: yes" in text


@pytest.mark.parametrize("f", ["octahedron.json", "chafee_infante_3.json", "disk_2_3.json",
                               "sigma_plus_template.json", "sigma_minus_template.json"])
def test_validate_complex(f):
    code, text = run("validate-complex", DATA / f)
    assert code == 0, text
    assert "regular complex: yes" in text


def test_pair_octahedron():
    code, text = run("pair", DATA / "octahedron.json")
    assert code == 0
    assert f"h0: {OCT_H0}" in text and f"h1: {OCT_H1}" in text
    assert "sigma cycles: (2 24)(3 19)(6 18)(7 17)(10 16)(11 25)(12 26)(13 15)(21 23)" in text


def test_sigma_templates():
    code, text = run("sigma", DATA / "sigma_plus_template.json")
    assert text.strip() == "1 12 3 4 11 6 7 10 9 8 5 2 13"
    code, text = run("sigma", DATA / "sigma_minus_template.json")
    assert text.strip() == "1 12 9 4 5 8 7 6 3 10 11 2 13"


def test_disk_styles():
    _, zs = run("sigma", DATA / "disk_2_3.json")
    _, sz = run("sigma", DATA / "disk_2_3.json", "--style", "SZ")
    assert zs != sz


def test_roundtrip_writes_complex(tmp_path):
    target = tmp_path / "back.json"
    code, text = run("roundtrip", DATA / "octahedron.json", "--out", target)
    assert code == 0 and "roundtrip: yes" in text
    c, d = load_json(target.read_text())
    c0, d0 = octahedron()
    assert same_complex(c, c0) and d == d0


def test_roundtrip_disk():
    for style in ("ZS", "SZ"):
        code, text = run("roundtrip", DATA / "disk_2_3.json", "--style", style)
        assert code == 0 and "roundtrip: yes" in text


def test_scoop():
    code, text = run("scoop", DATA / "octahedron.json", "--side", "E")
    assert code == 0
    assert "removed: 7 21 26 27" in text
    assert "S-polar h0-serpent full: yes" in text


def test_scoop_from_permutation():
    code, text = run("scoop", DATA / "sigma_oct.txt", "--side", "W")
    assert code == 0 and "Sturm: yes" in text


def test_enumerate():
    code, text = run("enumerate-octahedron", "--poles", "both")
    assert code == 0
    assert "antipodal poles (1, 6)" in text and "0 templates" in text
    assert "faces 2+6" in text


def test_enumerate_limited_scan():
    code, text = run("enumerate-octahedron", "--poles", "antipodal", "--exhaustive", "--limit-h0", "5")
    assert code == 0
    assert "5 h0 scanned" in text and "0 hits" in text


def test_render_meander_svg():
    code, text = run("render", DATA / "sigma_oct.txt")
    assert code == 0
    root = ET.fromstring(text)
    circles = [e for e in root.iter(SVG + "circle") if "crossing" in e.get("class", "")]
    assert len(circles) == 27


def test_render_complex_svg(tmp_path):
    target = tmp_path / "oct.svg"
    code, _ = run("render", DATA / "octahedron.json", "--out", target)
    assert code == 0
    ET.fromstring(target.read_text())


def test_render_deterministic():
    assert run("render", DATA / "octahedron.json")[1] == run("render", DATA / "octahedron.json")[1]
    assert run("pair", DATA / "octahedron.json") == run("pair", DATA / "octahedron.json")


def test_errors_exit_two(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("1 1 2\n")
    assert run("validate-meander", bad)[0] == 2
    assert run("validate-meander", tmp_path / "missing.txt")[0] == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{oops")
    assert run("validate-complex", broken)[0] == 2
    assert "error:" in capsys.readouterr().err


def test_ball_without_decoration(tmp_path):
    c, _ = octahedron()
    f = tmp_path / "plain.json"
    f.write_text(dump_json(c, None))
    assert run("pair", f)[0] == 2


def test_console_script():
    out = subprocess.run([sys.executable, "-m", "sturmkit.cli", "sigma", str(DATA / "chafee_infante_3.json")],
                         capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "1 6 3 4 5 2 7"
