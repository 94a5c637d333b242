import json
import subprocess
import sys
from pathlib import Path

import pytest

from kkvd.cli import main

DATA = Path(__file__).parent / "data"
GOLDEN = Path(__file__).parent / "golden"


def run_cli(*argv, stdin: str | None = None):
    """Run the CLI in a child process; returns (exit code, stdout, stderr)."""
    proc = subprocess.run(
        [sys.executable, "-m", "kkvd", *argv],
        input=stdin,
        capture_output=True,
        text=True,
    )
    return proc.returncode, proc.stdout, proc.stderr


# ---------------------------------------------------------------- analyze


def test_analyze_extremal_fixture(capsys):
    assert main(["analyze", str(DATA / "path.txt")]) == 0
    out = capsys.readouterr().out
    assert "slack: 0" in out
    assert "extremal: yes" in out


def test_analyze_disjoint_edges_has_slack_one(capsys):
    assert main(["analyze", str(DATA / "disjoint_edges.txt")]) == 0
    out = capsys.readouterr().out
    assert "kk-bound: 3" in out
    assert "slack: 1" in out
    assert "extremal: no" in out


def test_analyze_single_simplex(tmp_path, capsys):
    f = tmp_path / "simplex.txt"
    f.write_text("1 2 3\n")
    assert main(["analyze", str(f)]) == 0
    assert "extremal: yes" in capsys.readouterr().out


def test_analyze_nonpure_warns_and_nulls_extremality(capsys):
    assert main(["analyze", str(DATA / "nonpure.txt"), "--json"]) == 0
    captured = capsys.readouterr()
    doc = json.loads(captured.out)
    assert doc["is_pure"] is False
    assert doc["kk_bound"] is None
    assert doc["slack"] is None
    assert doc["is_extremal"] is None
    assert "not pure" in captured.err


def test_analyze_parse_error_exits_2(tmp_path, capsys):
    f = tmp_path / "bad.txt"
    f.write_text("1 2\n2 x\n")
    assert main(["analyze", str(f)]) == 2
    assert "line 2" in capsys.readouterr().err


def test_analyze_missing_file_exits_2(capsys):
    assert main(["analyze", "/nonexistent/nowhere.txt"]) == 2


# ---------------------------------------------------------------- vd


def test_vd_writes_validating_certificate(tmp_path, capsys):
    cert_path = tmp_path / "cert.json"
    code = main(["vd", str(DATA / "path.txt"), "--cert", str(cert_path)])
    assert code == 0
    from kkvd import make_complex, validate_certificate
    from kkvd.io import parse_certificate

    facets, strategy, tree = parse_certificate(json.loads(cert_path.read_text()))
    assert validate_certificate(make_complex(facets), tree)


def test_vd_exit_one_on_obstruction(capsys):
    assert main(["vd", str(DATA / "disjoint_edges.txt")]) == 1
    assert "not vertex decomposable" in capsys.readouterr().out


def test_vd_extremal_strategy_on_nonextremal_exits_2(capsys):
    code = main(["vd", str(DATA / "disjoint_edges.txt"), "--strategy", "extremal"])
    assert code == 2
    assert "shadow bound" in capsys.readouterr().err


# ---------------------------------------------------------------- gen / delta / shadow


def test_gen_outputs_squashed_segment(capsys):
    assert main(["gen", "3", "5"]) == 0
    assert capsys.readouterr().out == "1 2 3\n1 2 4\n1 3 4\n2 3 4\n1 2 5\n"


def test_gen_zero_is_empty(capsys):
    assert main(["gen", "2", "0"]) == 0
    assert capsys.readouterr().out == ""


def test_gen_avoid(capsys):
    assert main(["gen", "2", "3", "--avoid", "2"]) == 0
    assert capsys.readouterr().out == "1 3\n1 4\n3 4\n"


@pytest.mark.parametrize("d", range(1, 21))
def test_delta_of_two_member_families(d, capsys):
    assert main(["delta", str(d + 1), "2"]) == 0
    assert capsys.readouterr().out.strip() == str(2 * d + 1)


def test_shadow_of_generated_segment(tmp_path, capsys):
    f = tmp_path / "seg.txt"
    main(["gen", "3", "5"])
    f.write_text(capsys.readouterr().out)
    assert main(["shadow", str(f)]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert len(lines) == 8


def test_shadow_of_singletons_exits_2(tmp_path, capsys):
    f = tmp_path / "points.txt"
    f.write_text("1\n2\n")
    assert main(["shadow", str(f)]) == 2


def test_shadow_mixed_sizes_exits_2(tmp_path, capsys):
    f = tmp_path / "mixed.txt"
    f.write_text("1 2\n1 2 3\n")
    assert main(["shadow", str(f)]) == 2


# ---------------------------------------------------------------- betti / reisner / shell


def test_betti_text_output(capsys):
    assert main(["betti", str(DATA / "hollow_triangle.txt")]) == 0
    out = capsys.readouterr().out
    assert "b[0] = 0" in out and "b[1] = 1" in out


def test_reisner_verdict_exit_codes():
    code, _, _ = run_cli("reisner", str(DATA / "rp2.txt"), "--field", "q")
    assert code == 0
    code, out, _ = run_cli("reisner", str(DATA / "rp2.txt"), "--field", "gf2")
    assert code == 1
    assert "not Cohen-Macaulay" in out


def test_reisner_disjoint_edges_both_fields(capsys):
    for field in ("gf2", "q"):
        assert main(["reisner", str(DATA / "disjoint_edges.txt"), "--field", field]) == 1
        assert "link of {}" in capsys.readouterr().out


def test_shell_exit_codes(capsys):
    assert main(["shell", str(DATA / "path.txt")]) == 0
    capsys.readouterr()
    assert main(["shell", str(DATA / "disjoint_edges.txt")]) == 1


def test_shell_facet_limit_exits_2(tmp_path, capsys):
    f = tmp_path / "many.txt"
    f.write_text("".join(f"{i} {i+1}\n" for i in range(1, 11)))
    assert main(["shell", str(f), "--facet-limit", "8"]) == 2


# ---------------------------------------------------------------- pipes


def test_pipe_gen_into_every_consumer():
    code, gen_out, _ = run_cli("gen", "3", "6")
    assert code == 0
    for argv in (
        ["analyze", "-"],
        ["vd", "-"],
        ["shadow", "-"],
        ["betti", "-"],
        ["reisner", "-"],
        ["shell", "-"],
    ):
        code, _, err = run_cli(*argv, stdin=gen_out)
        assert code in (0, 1), (argv, err)


def test_pipe_shadow_output_reparses():
    _, gen_out, _ = run_cli("gen", "3", "5")
    code, shadow_out, _ = run_cli("shadow", "-", stdin=gen_out)
    assert code == 0
    code, analyze_out, _ = run_cli("analyze", "-", "--json", stdin=shadow_out)
    assert code == 0
    doc = json.loads(analyze_out)
    assert doc["facet_count"] == 8
    assert doc["is_extremal"] is True


def test_exit_code_totality_over_error_paths():
    cases = [
        (["gen", "3", "5"], 0),
        (["vd", str(DATA / "path.txt")], 0),
        (["vd", str(DATA / "disjoint_edges.txt")], 1),
        (["vd", str(DATA / "nonpure.txt")], 2),
        (["reisner", str(DATA / "rp2.txt"), "--field", "gf2"], 1),
        (["analyze", "/no/such/file"], 2),
        (["delta", "0", "5"], 2),
        (["nonsense-command"], 2),
        ([], 2),
    ]
    for argv, expected in cases:
        code, _, _ = run_cli(*argv)
        assert code == expected, argv


# ---------------------------------------------------------------- golden files


GOLDEN_CASES = [
    ("analyze_path.json", ["analyze", str(DATA / "path.txt"), "--json"]),
    (
        "analyze_disjoint_edges.json",
        ["analyze", str(DATA / "disjoint_edges.txt"), "--json"],
    ),
    ("vd_path.json", ["vd", str(DATA / "path.txt"), "--json"]),
    ("vd_disjoint_edges.json", ["vd", str(DATA / "disjoint_edges.txt"), "--json"]),
    (
        "betti_hollow_triangle.json",
        ["betti", str(DATA / "hollow_triangle.txt"), "--json"],
    ),
    ("reisner_rp2_gf2.json", ["reisner", str(DATA / "rp2.txt"), "--field", "gf2", "--json"]),
    ("reisner_rp2_q.json", ["reisner", str(DATA / "rp2.txt"), "--field", "q", "--json"]),
    ("shell_path.json", ["shell", str(DATA / "path.txt"), "--json"]),
    ("delta_3_5.json", ["delta", "3", "5", "--json"]),
    ("gen_3_5.txt", ["gen", "3", "5"]),
]


@pytest.mark.parametrize("name,argv", GOLDEN_CASES, ids=[c[0] for c in GOLDEN_CASES])
def test_golden_outputs_are_byte_stable(name, argv):
    first_code, first_out, _ = run_cli(*argv)
    second_code, second_out, _ = run_cli(*argv)
    assert first_code == second_code
    assert first_out == second_out  # byte-identical across runs
    assert first_out == (GOLDEN / name).read_text()
