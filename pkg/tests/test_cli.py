import json
import subprocess
import sys

import pytest

from seveninv.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_invariants_json(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--a=-3,-3,1", "--b=1,5,5", "--format=json")
    assert code == 0
    data = json.loads(out)
    assert data["n"] == -1
    assert data["s"] == {"num": "-27", "den": "14"}
    assert data["lk"] == "trivial"


def test_invariants_table(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--a=1,1,1", "--b=1,5,1")
    assert code == 0
    assert "lk           1/3" in out
    assert "n            3" in out


def test_invariants_csv(capsys):
    code, out, _ = run_cli(capsys, "invariants", "--a=1,1,1", "--b=1,5,1", "--format=csv")
    assert code == 0
    header, row = out.strip().splitlines()
    assert header.startswith("a1,a2,a3,b1,b2,b3,n,m,s,mu,lk")
    assert row == "1,1,1,1,5,1,3,3,1/112,1/112,1/3,0,0,0,0"


def test_invalid_pair_exit_code(capsys):
    code, _, err = run_cli(capsys, "invariants", "--a=3,3,3", "--b=1,1,1")
    assert code == 2
    assert "invalid" in err


def test_bad_flag_exits_two():
    with pytest.raises(SystemExit) as exc:
        main(["invariants", "--a=1,2", "--b=1,1,1"])
    assert exc.value.code == 2


def test_verify_oracle_single(capsys):
    code, out, _ = run_cli(capsys, "verify-oracle", "--a=-3,-3,1", "--b=1,1,1")
    assert code == 0
    assert out.startswith("EQUAL")
    assert "1/28" in out


def test_verify_oracle_random(capsys):
    code, out, _ = run_cli(
        capsys, "verify-oracle", "--random", "3", "--max-q", "9", "--seed", "7"
    )
    assert code == 0
    assert out.count("EQUAL") == 3


def test_family_json(capsys):
    code, out, _ = run_cli(
        capsys, "family", "--a=-3,-3,1", "--b=1,1,1", "--count=3", "--format=json"
    )
    assert code == 0
    data = json.loads(out)
    assert data["stride"] == 2016
    assert len(data["s_values"]) == 3
    assert all(v["kind"] == "diffeomorphic" for v in data["verdicts"])


def test_search_deterministic(capsys):
    code1, out1, _ = run_cli(capsys, "search", "--max", "5")
    code2, out2, _ = run_cli(capsys, "search", "--max", "5")
    assert code1 == code2 == 0
    assert out1 == out2
    lines = out1.strip().splitlines()
    assert lines[0].startswith("a1,a2,a3")
    assert len(lines) > 10


def test_search_filters(capsys):
    _, all_rows, _ = run_cli(capsys, "search", "--max", "5")
    _, spheres, _ = run_cli(capsys, "search", "--max", "5", "--homotopy-sphere")
    sphere_lines = spheres.strip().splitlines()[1:]
    assert sphere_lines
    assert len(sphere_lines) < len(all_rows.strip().splitlines()) - 1
    for line in sphere_lines:
        n = int(line.split(",")[6])
        assert abs(n) == 1
    _, non_milnor, _ = run_cli(capsys, "search", "--max", "5", "--non-milnor")
    for line in non_milnor.strip().splitlines()[1:]:
        mu = line.split(",")[9]
        assert mu != "0"


def test_search_resume_cursor(capsys):
    _, full, _ = run_cli(capsys, "search", "--max", "5")
    rows = full.strip().splitlines()[1:]
    pivot = rows[len(rows) // 2]
    cursor = ",".join(pivot.split(",")[:6])
    _, rest, _ = run_cli(capsys, "search", "--max", "5", "--start-after", cursor)
    rest_rows = rest.strip().splitlines()[1:]
    assert rest_rows == rows[len(rows) // 2 + 1 :]


def test_search_output_file(tmp_path, capsys):
    target = tmp_path / "rows.csv"
    code, _, _ = run_cli(capsys, "search", "--max", "3", "--output", str(target))
    assert code == 0
    content = target.read_text().strip().splitlines()
    assert content[0].startswith("a1,a2,a3")


def test_console_script_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "seveninv.cli", "invariants", "--a=1,1,1", "--b=1,5,1", "--format=json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["n"] == 3


def test_selftest_reports_all_criteria(capsys):
    code, out, _ = run_cli(capsys, "selftest")
    lines = [l for l in out.splitlines() if "criterion" in l]
    assert len(lines) == 8
    passed = sum(1 for l in lines if l.startswith("PASS"))
    failed = sum(1 for l in lines if l.startswith("FAIL"))
    assert passed + failed == 8
    assert code == (0 if failed == 0 else 1)
