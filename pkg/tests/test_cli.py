import json
import xml.etree.ElementTree as ET

import pytest

from tsf import KeyMatrix, generate_sequence
from tsf.cli import main
from tsf.formats import dumps_key, dumps_sequence, loads_key, loads_sequence

from conftest import CASE1, CASE1_R, CASE4


@pytest.fixture
def case1_file(tmp_path):
    path = tmp_path / "case1.json"
    path.write_text(dumps_key(KeyMatrix.from_rows(CASE1)))
    return path


def run(*argv):
    return main([str(a) for a in argv])


def test_key_format_round_trip():
    key = KeyMatrix.from_rows(CASE4)
    text = dumps_key(key)
    assert json.loads(text) == {"digits": 4, "matrix": [list(r) for r in CASE4]}
    assert loads_key(text) == key


def test_sequence_csv_round_trip():
    text = dumps_sequence(CASE1_R)
    assert text.splitlines()[0] == "r"
    assert loads_sequence(text) == list(CASE1_R)


def test_keygen(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    assert run("keygen", "--seed", 1, "--digits", 3, "--lo", -9, "--hi", 9, "--out", a) == 0
    assert run("keygen", "--seed", 1, "--digits", 3, "--lo", -9, "--hi", 9, "--out", b) == 0
    assert a.read_bytes() == b.read_bytes()
    assert loads_key(a.read_text()).digits == 3
    assert run("keygen", "--seed", 1, "--lo", 3, "--hi", 3, "--out", a) == 3


def test_gen_matches_golden(tmp_path, case1_file):
    out = tmp_path / "r.csv"
    assert run("gen", "--key", case1_file, "--out", out) == 0
    assert out.read_text() == "r\n" + "".join(f"{v}\n" for v in CASE1_R)


def test_perm(tmp_path, case1_file):
    out = tmp_path / "p.json"
    assert run("perm", "--key", case1_file, "--out", out) == 0
    d = json.loads(out.read_text())
    assert set(d) == {"digits", "order", "basins"}
    assert d["basins"][0] == [0, 2, 1, 4, 10]
    assert sorted(d["order"]) == list(range(27))


def test_analyze(tmp_path, case1_file):
    seq, out = tmp_path / "r.csv", tmp_path / "report.json"
    run("gen", "--key", case1_file, "--out", seq)
    assert run("analyze", "--in", seq, "--alphabet-size", 27, "--out", out) == 0
    report = json.loads(out.read_text())
    assert report["chi_square"] == 52.0
    assert report["repetition_count"] == 4
    assert len(report) == 8


def test_plot(tmp_path):
    seq, out = tmp_path / "r.csv", tmp_path / "fig.svg"
    key = tmp_path / "k4.json"
    key.write_text(dumps_key(KeyMatrix.from_rows(CASE4)))
    run("gen", "--key", key, "--out", seq)
    assert run("plot", "--in", seq, "--alphabet-size", 81, "--out", out) == 0
    root = ET.parse(out).getroot()
    circles = root.findall("{http://www.w3.org/2000/svg}circle")
    assert len(circles) == 81 // 2
    csv_lines = out.with_suffix(".csv").read_text().splitlines()
    r = generate_sequence(KeyMatrix.from_rows(CASE4))
    assert csv_lines[0] == "x,y" and csv_lines[1] == f"{r[0]},{r[1]}" and len(csv_lines) == 41


def test_encrypt_decrypt_text(tmp_path, case1_file):
    plain, cipher, back = tmp_path / "p.txt", tmp_path / "c.txt", tmp_path / "b.txt"
    plain.write_bytes(b"HELLO WORLD THE QUICK BROWN FOX")
    assert run("encrypt", "--key", case1_file, "--in", plain, "--out", cipher) == 0
    assert cipher.read_text() != plain.read_text()
    assert run("decrypt", "--key", case1_file, "--in", cipher, "--out", back) == 0
    assert back.read_bytes() == plain.read_bytes()


def test_encrypt_decrypt_symbols_k4(tmp_path):
    key = tmp_path / "k4.json"
    key.write_text(dumps_key(KeyMatrix.from_rows(CASE4)))
    plain, cipher, back = tmp_path / "p.txt", tmp_path / "c.txt", tmp_path / "b.txt"
    plain.write_text("0,80,17,17,17,42")
    assert run("encrypt", "--key", key, "--in", plain, "--out", cipher, "--format", "symbols") == 0
    assert "\n" not in cipher.read_text()
    assert run("decrypt", "--key", key, "--in", cipher, "--out", back, "--format", "symbols") == 0
    assert back.read_text() == plain.read_text()
    assert run("encrypt", "--key", key, "--in", plain, "--out", cipher) == 3


def test_lenient_flag(tmp_path, case1_file):
    plain, cipher = tmp_path / "p.txt", tmp_path / "c.txt"
    plain.write_text("HI, THERE\n")
    assert run("encrypt", "--key", case1_file, "--in", plain, "--out", cipher) == 3
    assert run("encrypt", "--key", case1_file, "--in", plain, "--out", cipher, "--lenient") == 0
    assert len(cipher.read_text()) == 8


def test_demo(capsys):
    assert run("demo") == 0
    out = capsys.readouterr().out
    lines = out.splitlines()
    start = lines.index("Step 7: sign of every entry")
    assert lines[start + 1] == "-1 -1 1"
    assert "2 0 0 18 0 3 18 18 6 20 2 6 20 13 6 20 24 6 20 8 8 23 26 8 26 26 24" in out
    assert "(0, 2, 1, 4, 10)" in out


def test_exit_codes(tmp_path, case1_file, capsys):
    out = tmp_path / "x.csv"
    assert run("gen", "--key", tmp_path / "missing.json", "--out", out) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run("gen", "--key", bad, "--out", out) == 2
    wrong = tmp_path / "wrong.json"
    wrong.write_text('{"digits": 3, "matrix": [[1, 2], [3, 4]]}')
    assert run("gen", "--key", wrong, "--out", out) == 3
    huge = tmp_path / "huge.json"
    huge.write_text('{"digits": 2, "matrix": [[4294967296, 0], [0, 1]]}')
    assert run("gen", "--key", huge, "--out", out) == 4
    assert run("gen", "--key", case1_file, "--out", tmp_path / "no" / "dir.csv") == 2
    err = capsys.readouterr().err
    assert all(line.startswith("error:") for line in err.splitlines())
    assert not out.exists()


def test_no_color_env(tmp_path, monkeypatch, capsys):
    monkeypatch.setenv("TSF_NO_COLOR", "1")
    run("gen", "--key", tmp_path / "missing.json", "--out", tmp_path / "x")
    assert "\x1b[" not in capsys.readouterr().err


def test_atomic_write_leaves_no_temp(tmp_path, case1_file):
    run("gen", "--key", case1_file, "--out", tmp_path / "r.csv")
    assert sorted(p.name for p in tmp_path.iterdir()) == ["case1.json", "r.csv"]


def test_module_entry_point():
    import subprocess
    import sys

    proc = subprocess.run([sys.executable, "-m", "tsf", "demo"], capture_output=True, text=True)
    assert proc.returncode == 0 and "Step 9" in proc.stdout
