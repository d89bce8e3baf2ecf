import json
import subprocess
import sys

import pytest

from qhowe import cli


def run_cli(args):
    return subprocess.run(
        [sys.executable, "-m", "qhowe.cli", *args],
        capture_output=True,
        text=True,
    )


def test_verify_small_grid_passes(tmp_path):
    out = tmp_path / "report.json"
    code = cli.main(
        ["verify", "all", "--m", "1:2", "--N", "1:2", "--format", "json", "--out", str(out)]
    )
    assert code == 0
    payload = json.loads(out.read_text())
    assert payload["summary"]["fail"] == 0
    assert payload["summary"]["pass"] == len(payload["checks"])
    assert payload["conventions"]["grading_sign"] == -1
    assert payload["conventions"]["weyl_variant"] == "fef-1"
    assert payload["version"]


def test_reports_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.json", tmp_path / "b.json"
    args = ["verify", "braiding", "--m", "2", "--N", "2", "--format", "json"]
    assert cli.main([*args, "--out", str(a)]) == 0
    assert cli.main([*args, "--out", str(b), "--jobs", "2"]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_timings_are_excluded_by_default(tmp_path):
    out = tmp_path / "r.json"
    cli.main(["verify", "geom", "--m", "2", "--format", "json", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert all("ms" not in c for c in payload["checks"])
    cli.main(["verify", "geom", "--m", "2", "--format", "json", "--timings", "--out", str(out)])
    payload = json.loads(out.read_text())
    assert any("ms" in c for c in payload["checks"])


def test_text_format_summary(capsys):
    code = cli.main(["verify", "howe", "--m", "1:2", "--N", "1:2"])
    captured = capsys.readouterr().out
    assert code == 0
    assert "summary:" in captured
    assert "0 failed" in captured


def test_desk_ceiling_is_enforced():
    proc = run_cli(["verify", "braiding", "--m", "9"])
    assert proc.returncode == 2
    assert "beyond-desk" in proc.stderr


GOLDEN_BETA_2_1_1 = """4 4
X1|X1 X1|X1 1*q^(1/2)
X1|X2 X2|X1 1*q^(-1/2)
X2|X1 X1|X2 1*q^(-1/2)
X2|X1 X2|X1 -1*q^(-3/2)+1*q^(1/2)
X2|X2 X2|X2 1*q^(1/2)
"""


def test_dump_braiding_golden(tmp_path):
    out = tmp_path / "beta.txt"
    code = cli.main(["dump", "braiding", "--m", "2", "--k", "1", "--l", "1", "--out", str(out)])
    assert code == 0
    assert out.read_text() == GOLDEN_BETA_2_1_1


def test_dump_weyl_t_smallest(capsys):
    code = cli.main(["dump", "weyl_t", "--m", "1", "--k", "0", "--l", "1"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    assert out[0] == "1 1"
    assert out[1] == "X1|1 1|X1 1"


def test_dump_e_operator(capsys):
    code = cli.main(["dump", "e", "--m", "2", "--k", "1", "--l", "1", "--r", "1"])
    out = capsys.readouterr().out.splitlines()
    assert code == 0
    nrows, ncols = map(int, out[0].split())
    assert (nrows, ncols) == (1, 4)


def test_env_output_dir(tmp_path, monkeypatch):
    monkeypatch.setenv("QHOWE_OUT_DIR", str(tmp_path))
    code = cli.main(["dump", "braiding", "--m", "2", "--k", "0", "--l", "1", "--out", "b.txt"])
    assert code == 0
    assert (tmp_path / "b.txt").exists()


def test_exit_status_reflects_failures(capsys):
    # force failing checks through a broken convention: the flipped
    # coproduct breaks the distinguished-vector recursion
    code = cli.main(["verify", "howe", "--m", "2", "--N", "2", "--coproduct", "flipped"])
    capsys.readouterr()
    assert code == 1
    # overriding the Weyl variant fails cleanly too, without exceptions
    code = cli.main(["verify", "braiding", "--m", "2", "--N", "2", "--weyl-variant", "efe+1"])
    out = capsys.readouterr().out
    assert code == 1
    assert "FAIL" in out and "internal.error" not in out


def test_suite_flag_alias(capsys):
    code = cli.main(["verify", "--suite", "geom", "--m", "2"])
    capsys.readouterr()
    assert code == 0
