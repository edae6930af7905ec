"""Command line behaviour: exit codes, formats, determinism.

Most tests drive cli.main() in-process; byte-identity checks spawn real
subprocesses so argv handling and stdio encoding are covered too.
"""

import json
import os
import subprocess
import sys

import pytest

from subspace_lrc import (
    Check,
    VerificationSuite,
    construction_spread,
    encode,
    field_new,
    read_bundle,
    format_bundle,
)
from subspace_lrc import cli
from subspace_lrc.linalg import format_matrix

F2 = field_new(2)

SPREAD_ARGS = ["spread", "--field", "gf(2)", "-M", "4", "-b", "2"]
SPREAD_SUMMARY = "[2x5, 4] over gf(2) (spread q=2 M=4 b=2 method=gabidulin-echelon)"


def spread_bundle(tmp_path):
    path = tmp_path / "spread.bundle"
    assert cli.main(["construct", *SPREAD_ARGS, "-o", str(path)]) == 0
    return str(path)


def codeword_file(tmp_path, message=(1, 0, 1, 1), clobber=None):
    """Write the encoded message as matrix text, optionally corrupting cells."""
    code = construction_spread(F2, 4, 2, "gabidulin-echelon")
    cw = encode(code, message)
    rows = [list(r) for r in cw.rows]
    if clobber:
        for (i, j, value) in clobber:
            rows[i][j] = value
    text = f"{cw.field.q} {cw.nrows} {cw.cols}\n" + "\n".join(
        " ".join(str(x) for x in row) for row in rows
    ) + "\n"
    path = tmp_path / "array.txt"
    path.write_text(text)
    return str(path)


# --- construct -----------------------------------------------------------------


def test_construct_prints_summary(capsys):
    assert cli.main(["construct", *SPREAD_ARGS]) == 0
    out = capsys.readouterr().out
    assert out == SPREAD_SUMMARY + "\n"


def test_construct_writes_bundle(tmp_path, capsys):
    path = tmp_path / "code.bundle"
    assert cli.main(["construct", *SPREAD_ARGS, "-o", str(path)]) == 0
    out = capsys.readouterr().out
    assert out == f"{SPREAD_SUMMARY}\nwrote {path}\n"
    code = read_bundle(str(path))
    direct = construction_spread(F2, 4, 2, "gabidulin-echelon")
    assert code.generator.rows == direct.generator.rows
    assert code.provenance == direct.provenance


def test_construct_stdout_bundle(capsys):
    assert cli.main(["construct", *SPREAD_ARGS, "-o", "-"]) == 0
    captured = capsys.readouterr()
    direct = construction_spread(F2, 4, 2, "gabidulin-echelon")
    assert captured.out == format_bundle(direct)
    assert captured.err == SPREAD_SUMMARY + "\n"


def test_construct_extension_field(capsys):
    assert cli.main(["construct", "all-subspaces", "--field", "gf(4)", "-M", "3", "-b", "2"]) == 0
    out = capsys.readouterr().out
    assert out == "[2x21, 3] over gf(2^2) (all-subspaces q=4 M=3 b=2)\n"


def test_construct_missing_params_exits_2(capsys):
    assert cli.main(["construct", "all-subspaces"]) == 2
    err = capsys.readouterr().err
    assert err.startswith("error:")
    assert "-M" in err and "-b" in err


def test_construct_indivisible_spread_exits_2(capsys):
    assert cli.main(["construct", "spread", "-M", "5", "-b", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_construct_bad_field_exits_2(capsys):
    assert cli.main(["construct", "spread", "--field", "gf(six)", "-M", "4", "-b", "2"]) == 2
    assert "cannot parse field" in capsys.readouterr().err


def test_limit_env_var_caps_enumeration(monkeypatch, capsys):
    monkeypatch.setenv("SUBSPACE_LRC_LIMIT", "10")
    assert cli.main(["construct", "all-subspaces", "-M", "4", "-b", "2"]) == 2
    assert capsys.readouterr().err.startswith("error:")
    monkeypatch.delenv("SUBSPACE_LRC_LIMIT")
    assert cli.main(["construct", "all-subspaces", "-M", "4", "-b", "2"]) == 0


# --- analyze -------------------------------------------------------------------


def test_analyze_json(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["locality"] is None
    rep = doc["report"]
    assert rep["parameters"]["q"] == 2
    assert rep["parameters"]["n"] == 5
    assert rep["distance"] == 4
    assert rep["mds"] is True
    assert rep["perfect"] is False  # the dual is perfect, the code is not
    assert rep["weight_distribution"] == {"0": 1, "4": 15}


def test_analyze_json_with_availability(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "--availability"]) == 0
    loc = json.loads(capsys.readouterr().out)["locality"]
    assert loc["node_locality"] == 2
    assert loc["symbol_locality"] == 2
    avail = loc["node_availability"]
    assert avail["quality"] == "exact"
    assert avail["value"] == len(avail["sets"]) == 2
    used = [c for s in avail["sets"] for c in s]
    assert len(used) == len(set(used))
    assert all(1 <= c <= 5 for c in used)  # user-facing columns are 1-based
    # witnesses are 1-based too
    for w in loc["node_witnesses"]:
        assert all(1 <= c <= 5 for c in w["columns"])


def test_analyze_locality_without_availability(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "--locality"]) == 0
    loc = json.loads(capsys.readouterr().out)["locality"]
    assert loc["node_locality"] == 2
    assert loc["node_availability"]["status"] == "skipped"


def test_analyze_csv(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "--format", "csv", "--availability"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "key,value"
    assert "distance,4" in lines
    assert "mds,True" in lines
    assert "weight.0,1" in lines
    assert "weight.4,15" in lines
    assert "node_locality,2" in lines
    assert "node_availability,2" in lines
    assert "node_availability.quality,exact" in lines


def test_analyze_text(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "--format", "text"]) == 0
    out = capsys.readouterr().out
    assert out.splitlines()[0] == "[2x5, 4] over gf(2)"
    assert "distance: 4" in out
    assert "mds: True" in out
    assert "weights: 0:1, 4:15" in out


def test_analyze_skip_distance(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "--skip-distance", "--skip-weights"]) == 0
    rep = json.loads(capsys.readouterr().out)["report"]
    assert rep["distance"] is None


def test_analyze_output_file(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    report = tmp_path / "report.json"
    capsys.readouterr()
    assert cli.main(["analyze", bundle, "-o", str(report)]) == 0
    assert capsys.readouterr().out == f"wrote {report}\n"
    assert json.loads(report.read_text())["report"]["distance"] == 4


def test_analyze_missing_bundle_exits_2(tmp_path, capsys):
    assert cli.main(["analyze", str(tmp_path / "nope.bundle")]) == 2
    assert capsys.readouterr().err.startswith("error:")


def test_analyze_corrupt_bundle_exits_3(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    lines = open(bundle).read().splitlines()
    idx = lines.index("generator") + 2
    lines[idx] = lines[idx].replace("1", "0", 1)
    bad = tmp_path / "bad.bundle"
    bad.write_text("\n".join(lines) + "\n")
    capsys.readouterr()
    assert cli.main(["analyze", str(bad)]) == 3
    assert capsys.readouterr().err.startswith("error:")


# --- verify --------------------------------------------------------------------


def test_verify_text_ok(capsys):
    assert cli.main(["verify", *SPREAD_ARGS]) == 0
    out = capsys.readouterr().out
    first = out.splitlines()[0]
    assert first.startswith("verification of spread (")
    assert "q=2" in first and "M=4" in first
    assert "0 failed" in out.splitlines()[-1]


def test_verify_json_ok(capsys):
    assert cli.main(["verify", *SPREAD_ARGS, "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["ok"] is True
    assert any(c["id"] == "dual-perfect" for c in doc["checks"])


def test_verify_failing_suite_exits_1(monkeypatch, capsys):
    bad = VerificationSuite(
        "demo", {"q": 2}, (Check("distance", "d", "4", "3", "fail"),)
    )
    monkeypatch.setattr(cli, "run_verification", lambda *a, **k: bad)
    assert cli.main(["verify", *SPREAD_ARGS]) == 1
    out = capsys.readouterr().out
    assert "distance: FAIL" in out


def test_verify_no_availability_skips(capsys):
    rc = cli.main(
        ["verify", "all-subspaces", "-M", "3", "-b", "2", "--no-availability"]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert "node-availability: SKIPPED" in out


def test_verify_missing_params_exits_2(capsys):
    assert cli.main(["verify", "spread", "-M", "4"]) == 2
    assert "-b" in capsys.readouterr().err


# --- repair --------------------------------------------------------------------


def test_repair_text(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    array = codeword_file(tmp_path, clobber=[(0, 2, 1), (1, 2, 1)])  # garbage in erased column
    capsys.readouterr()
    assert cli.main(["repair", bundle, "--array", array, "--column", "3"]) == 0
    out = capsys.readouterr().out
    assert out == (
        "restored column 3: (0, 0)\n"
        "recovery set: columns [1, 2]\n"
        "contacted nodes: 2\n"
    )


def test_repair_json(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    array = codeword_file(tmp_path)
    capsys.readouterr()
    assert cli.main(["repair", bundle, "--array", array, "--column", "5", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["column"] == 5
    assert doc["restored"] == [1, 1]
    assert doc["message"] == [1, 0, 1, 1]
    assert doc["contacted_nodes"] == len(doc["recovery_set"]) == 2
    assert all(1 <= c <= 5 and c != 5 for c in doc["recovery_set"])


def test_repair_inconsistent_survivors_exit_3(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    array = codeword_file(tmp_path, clobber=[(0, 3, 0)])  # break a surviving column
    capsys.readouterr()
    assert cli.main(["repair", bundle, "--array", array, "--column", "3"]) == 3
    assert capsys.readouterr().err.startswith("error:")


def test_repair_column_out_of_range_exits_2(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    array = codeword_file(tmp_path)
    capsys.readouterr()
    assert cli.main(["repair", bundle, "--array", array, "--column", "6"]) == 2
    assert cli.main(["repair", bundle, "--array", array, "--column", "0"]) == 2


def test_repair_wrong_shape_exits_2(tmp_path, capsys):
    bundle = spread_bundle(tmp_path)
    bad = tmp_path / "short.txt"
    bad.write_text("2 2 3\n1 0 0\n0 1 0\n")
    capsys.readouterr()
    assert cli.main(["repair", bundle, "--array", str(bad), "--column", "1"]) == 2


# --- parser level --------------------------------------------------------------


def test_usage_error_exits_2(capsys):
    assert cli.main([]) == 2
    assert cli.main(["construct", "not-a-construction", "-M", "4", "-b", "2"]) == 2


def test_help_exits_0_and_states_tiebreak(capsys):
    assert cli.main(["--help"]) == 0
    out = capsys.readouterr().out
    assert "lexicographically" in out
    assert cli.main(["construct", "--help"]) == 0
    out = capsys.readouterr().out
    assert "lexicographically" in out
    assert "SUBSPACE_LRC_LIMIT" in out


# --- byte-identical determinism across processes --------------------------------


def run_cli(args, cwd):
    env = {k: v for k, v in os.environ.items() if k != "SUBSPACE_LRC_LIMIT"}
    return subprocess.run(
        [sys.executable, "-m", "subspace_lrc.cli", *args],
        cwd=cwd,
        env=env,
        capture_output=True,
        timeout=120,
    )


def test_construct_bytes_identical(tmp_path):
    first = run_cli(["construct", *SPREAD_ARGS, "-o", "-"], tmp_path)
    second = run_cli(["construct", *SPREAD_ARGS, "-o", "-"], tmp_path)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    assert len(first.stdout) > 0


def test_analyze_bytes_identical(tmp_path):
    bundle = spread_bundle(tmp_path)
    args = ["analyze", bundle, "--availability", "--format", "json"]
    first = run_cli(args, tmp_path)
    second = run_cli(args, tmp_path)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout
    json.loads(first.stdout)


def test_verify_bytes_identical(tmp_path):
    args = ["verify", "std-par", "--field", "gf(2)", "-M", "6", "-b", "3"]
    first = run_cli(args, tmp_path)
    second = run_cli(args, tmp_path)
    assert first.returncode == second.returncode == 0
    assert first.stdout == second.stdout


# --- from-blocks round trip ------------------------------------------------------


def test_from_blocks_file(tmp_path, capsys):
    blocks = tmp_path / "blocks.txt"
    blocks.write_text(
        "2 2 4\n1 0 0 0\n0 1 0 0\n"
        "\n"
        "2 2 4\n0 0 1 0\n0 0 0 1\n"
        "\n"
        "2 2 4\n1 0 1 0\n0 1 0 1\n"
    )
    rc = cli.main(
        ["construct", "from-blocks", "--field", "gf(2)", "--blocks", str(blocks)]
    )
    assert rc == 0
    out = capsys.readouterr().out
    assert out.startswith("[2x3, 4] over gf(2)")

    rc = cli.main(
        ["verify", "from-blocks", "--field", "gf(2)", "--blocks", str(blocks)]
    )
    assert rc == 0

    assert cli.main(["construct", "from-blocks", "--field", "gf(2)"]) == 2
    err = capsys.readouterr().err
    assert "requires --blocks" in err
