import csv
import json

import numpy as np
import pytest

from bitplane_wm import corpus
from bitplane_wm.attacks import ATTACK_ORDER
from bitplane_wm.bitplane import extract_plane
from bitplane_wm.cli import EXIT_INVALID, EXIT_IO, EXIT_OK, EXIT_USAGE, run
from bitplane_wm.raster import read_pgm, write_pgm
from bitplane_wm.report import parse_real


@pytest.fixture
def files(tmp_path):
    c = tmp_path / "c.pgm"
    w = tmp_path / "w.pgm"
    write_pgm(c, corpus.load_cover()[:48, :40])
    write_pgm(w, corpus.load_signature()[100:148, 60:100])
    return tmp_path, c, w


def test_embed_then_extract(files, capsys):
    d, c, w = files
    y = d / "y.pgm"
    assert run(["embed", "--cover", str(c), "--watermark", str(w), "--image-plane", "7",
                "--wm-plane", "1", "--out", str(y)]) == EXIT_OK
    assert "fidelity PSNR" in capsys.readouterr().out
    assert run(["extract", "--in", str(y), "--plane", "7"]) == EXIT_OK
    plane = read_pgm(f"{y}.plane7.pgm")
    np.testing.assert_array_equal(plane, extract_plane(read_pgm(w), 1) * 255)


def test_attack_identity_is_byte_exact(files):
    d, c, _ = files
    z = d / "z.pgm"
    assert run(["attack", "--in", str(c), "--kind", "salt-pepper", "--density", "0",
                "--seed", "9", "--out", str(z)]) == EXIT_OK
    assert z.read_bytes() == c.read_bytes()


def test_attack_params(files):
    d, c, _ = files
    z = d / "q.pgm"
    assert run(["attack", "--in", str(c), "--kind", "quantization", "--step", "4",
                "--out", str(z)]) == EXIT_OK
    assert (read_pgm(z) % 4 == 0).all()


def test_exit_codes(files, capsys):
    d, c, w = files
    assert run([]) == EXIT_USAGE
    assert run(["embed", "--cover", str(c)]) == EXIT_USAGE
    assert run(["embed", "--cover", str(d / "missing.pgm"), "--watermark", str(w),
                "--image-plane", "7", "--wm-plane", "1", "--out", str(d / "o.pgm")]) == EXIT_IO
    assert run(["embed", "--cover", str(c), "--watermark", str(w),
                "--image-plane", "9", "--wm-plane", "1", "--out", str(d / "o.pgm")]) == EXIT_INVALID
    assert run(["attack", "--in", str(c), "--kind", "crop", "--fraction", "2",
                "--out", str(d / "o.pgm")]) == EXIT_INVALID
    bad = d / "bad.pgm"
    bad.write_bytes(b"P5 2 2 65535\n" + bytes(8))
    assert run(["extract", "--in", str(bad), "--plane", "1"]) == EXIT_INVALID
    assert "unsupported maxval" in capsys.readouterr().err
    assert run(["evaluate", "--cover", str(c), "--watermark", str(w)]) == EXIT_USAGE


def test_evaluate_json(files):
    d, c, w = files
    out = d / "rec.json"
    assert run(["evaluate", "--cover", str(c), "--watermark", str(w), "--image-plane", "7",
                "--wm-plane", "1", "--profiles", "table1-p1,table1-p3",
                "--json", str(out)]) == EXIT_OK
    rec = json.loads(out.read_text())
    assert rec["label"] == "Com.(7,1)"
    assert len(rec["crcs"]) == 10
    assert set(rec["weighted"]) == {"table1-p1", "table1-p3"}
    assert rec["recovery_psnr_no_attack"] == "inf"
    assert rec["provenance"]["seed"] == 42


def test_config_file_and_override(files):
    d, c, w = files
    cfg = {
        "cover": str(c), "watermark": str(w),
        "image_planes": [8], "watermark_planes": [1, 2],
        "attacks": [{"kind": "salt-pepper", "density": 0.0}] * 10,
        "profiles": ["table1-p2", {"name": "mine", "weights": [0.1] * 10}],
        "seed": 5,
    }
    path = d / "cfg.json"
    path.write_text(json.dumps(cfg))
    out = d / "rep.json"
    assert run(["optimize", "--config", str(path), "--wm-planes", "3",
                "--json", str(out)]) == EXIT_OK
    rep = json.loads(out.read_text())
    assert [r["label"] for r in rep["records"]] == ["Com.(8,3)"]
    assert rep["provenance"]["seed"] == 5
    assert all(a["seed"] == 5 for a in rep["attacks"])
    assert rep["selections"]["mine"]["label"] == "Com.(8,3)"


def test_config_errors(files):
    d, c, w = files
    path = d / "cfg.json"
    path.write_text(json.dumps({"attacks": ["crop"] * 3}))
    assert run(["optimize", "--config", str(path), "--json", str(d / "x.json")]) == EXIT_INVALID
    path.write_text("{not json")
    assert run(["optimize", "--config", str(path)]) == EXIT_INVALID
    assert run(["optimize", "--config", str(d / "nope.json")]) == EXIT_IO
    assert run(["optimize", "--profiles", "table1-p7", "--json", str(d / "x.json")]) == EXIT_INVALID


def _read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


def test_optimize_reports(files, capsys):
    d, c, w = files
    j, k = d / "r.json", d / "r.csv"
    assert run(["optimize", "--cover", str(c), "--watermark", str(w),
                "--json", str(j), "--csv", str(k)]) == EXIT_OK
    printed = capsys.readouterr().out
    assert printed.count("table1-p") == 4
    rows = _read_csv(k)
    header, body = rows[0], rows[1:]
    assert header == (["combination"] + [f"crc_{a}" for a in ATTACK_ORDER]
                      + ["fidelity_psnr", "table1-p1", "table1-p2", "table1-p3", "table1-p4"])
    assert [r[0] for r in body] == [f"Com.({l},{k})" for l in (7, 8) for k in range(8, 0, -1)]

    # the JSON and CSV carry the same numbers
    rep = json.loads(j.read_text())
    by_label = {r["label"]: r for r in rep["records"]}
    for row in body:
        rec = by_label[row[0]]
        assert [float(x) for x in row[1:11]] == rec["crcs"]
        assert parse_real(row[11]) == parse_real(str(rec["fidelity_psnr"]))
        assert [float(x) for x in row[12:]] == [rec["weighted"][f"table1-p{i}"] for i in range(1, 5)]


def test_optimize_is_deterministic(files):
    d, c, w = files
    outs = []
    for i, workers in enumerate(("1", "3")):
        j, k = d / f"r{i}.json", d / f"r{i}.csv"
        assert run(["optimize", "--cover", str(c), "--watermark", str(w), "--workers", workers,
                    "--json", str(j), "--csv", str(k)]) == EXIT_OK
        outs.append((j.read_bytes(), k.read_bytes()))
    assert outs[0] == outs[1]


def test_all_planes(files):
    d, c, w = files
    k = d / "all.csv"
    assert run(["optimize", "--cover", str(c), "--watermark", str(w), "--all-planes",
                "--no-baseline", "--json", str(d / "all.json"), "--csv", str(k)]) == EXIT_OK
    assert len(_read_csv(k)) == 65
    assert json.loads((d / "all.json").read_text())["baseline"] is None


def test_reals_have_six_decimals(files):
    d, c, w = files
    k = d / "r.csv"
    run(["optimize", "--cover", str(c), "--watermark", str(w), "--json", str(d / "r.json"),
         "--csv", str(k)])
    for row in _read_csv(k)[1:]:
        for cell in row[1:]:
            assert cell == "inf" or len(cell.split(".")[1]) == 6
