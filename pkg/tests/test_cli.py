import json

import pytest

from ribbonimm import cli
from ribbonimm.shapes import InfiniteRibbon, SkewShape


@pytest.fixture()
def hook_files(tmp_path, hook_dec):
    shape = tmp_path / "shape.json"
    ribbon = tmp_path / "ribbon.json"
    shape.write_text(json.dumps(hook_dec.shape.to_json()))
    ribbon.write_text(json.dumps(hook_dec.ribbon.to_json()))
    return str(shape), str(ribbon)


@pytest.fixture()
def small_files(tmp_path):
    ribbon = InfiniteRibbon(tail_lo="L", tail_hi="L")
    shape = SkewShape((3, 3, 1), (1, 0, 0))
    sp = tmp_path / "shape.json"
    rp = tmp_path / "ribbon.json"
    sp.write_text(json.dumps(shape.to_json()))
    rp.write_text(json.dumps(ribbon.to_json()))
    return str(sp), str(rp)


def test_decompose_pin(hook_files, capsys):
    code = cli.main(["decompose", *hook_files])
    out = capsys.readouterr().out
    assert code == 0
    assert "a = [0, -4, -3, 3]" in out
    assert "b = [3, 5, 9, 6]" in out


def test_decompose_json(hook_files, capsys):
    code = cli.main(["--json", "decompose", *hook_files])
    assert code == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["a"] == [0, -4, -3, 3]


def test_decompose_incompatible_exits_2(tmp_path, capsys):
    sp = tmp_path / "shape.json"
    rp = tmp_path / "ribbon.json"
    sp.write_text(json.dumps(SkewShape((2, 1)).to_json()))
    rp.write_text(json.dumps(InfiniteRibbon(
        0, ("B", "L", "B"), tail_lo="L", tail_hi="L").to_json()))
    assert cli.main(["decompose", str(sp), str(rp)]) == 2


def test_bad_input_exits_2(tmp_path, hook_files):
    missing = str(tmp_path / "nope.json")
    assert cli.main(["decompose", missing, hook_files[1]]) == 2
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert cli.main(["decompose", str(bad), hook_files[1]]) == 2


def test_matrix_identity(small_files, capsys):
    code = cli.main(["--json", "matrix", *small_files, "--nvars", "3"])
    assert code == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["det_equals_skew_schur"]


def test_matrix_minor(hook_files, capsys):
    code = cli.main(["--json", "matrix", *hook_files, "--nvars", "2",
                     "--minor", "1,3,4"])
    assert code == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["a"] == [0, -3, 3]
    assert blob["det_equals_skew_schur"]


def test_imm_methods_agree(small_files, capsys):
    expansions = []
    for method in ("def", "shuffle", "covers", "crystal"):
        code = cli.main(["--json", "imm", *small_files, "--nvars", "3",
                         "--type", "213", "--method", method])
        assert code == 0
        blob = json.loads(capsys.readouterr().out)
        expansions.append(blob["expansion"])
    assert all(e == expansions[0] for e in expansions)


def test_imm_rejects_non_avoiding(small_files):
    assert cli.main(["imm", *small_files, "--type", "321"]) == 2


def test_imm_kl(small_files, capsys):
    code = cli.main(["--json", "imm", *small_files, "--method", "kl",
                     "--perm", "123", "--nvars", "2"])
    assert code == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["expansion"]["schur_positive"]


def test_sweep_serial_equals_parallel(capsys):
    args = ["--json", "sweep", "--max-cells", "4", "--max-window", "2",
            "--max-ell", "2", "--per-bucket", "2", "--theorem", "det",
            "--nvars", "3", "--full-report"]
    assert cli.main(args) == 0
    serial = capsys.readouterr().out
    assert cli.main(args + ["--jobs", "2"]) == 0
    parallel = capsys.readouterr().out
    assert serial == parallel
    blob = json.loads(serial)
    assert blob["failures"] == 0 and blob["count"] > 0


def test_sweep_all_theorems(capsys):
    for theorem in ("1.1", "cor3.5", "conj1.2"):
        code = cli.main(["sweep", "--max-cells", "3", "--max-window", "1",
                         "--per-bucket", "1", "--theorem", theorem,
                         "--nvars", "3"])
        assert code == 0


def test_remarks(capsys):
    assert cli.main(["--json", "remarks", "--nvars", "4"]) == 0
    blob = json.loads(capsys.readouterr().out)
    assert blob["negatives_found"]
    assert not blob["first_immanant"]["schur_positive"]
    assert not blob["bad_minor"]["schur_positive"]
    assert blob["complementary_product"]["schur_positive"]


def test_kl_table(capsys):
    assert cli.main(["kl-table", "2"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines() == ["12 12 : 1", "12 21 : 1", "21 21 : 1"]
    assert cli.main(["kl-table", "9"]) == 2


def test_out_file_byte_determinism(tmp_path, small_files):
    p1, p2 = tmp_path / "a.json", tmp_path / "b.json"
    for p in (p1, p2):
        assert cli.main(["--json", "matrix", *small_files, "--nvars", "2",
                         "--out", str(p)]) == 0
    assert p1.read_bytes() == p2.read_bytes()
