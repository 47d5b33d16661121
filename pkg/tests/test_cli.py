"""CLI surface: output formats, exit codes, determinism."""
import math
import subprocess
import sys

from crosscap.cli import main


def run_cli(args, capsys):
    code = main(args)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_eval_normal_blowup(capsys):
    code, out, _ = run_cli(["eval", "normal", "--coeffs", "1,0,1", "--r", "0",
                            str(math.pi / 2)], capsys)
    assert code == 0
    assert out.strip() == "0 -1 0"


def test_eval_kappa_g_smoke_and_guard(capsys):
    code, out, _ = run_cli(["eval", "kappa_g", "--coeffs", "1,0,1", "--r", "0.1",
                            "1.2"], capsys)
    assert code == 0
    float(out.strip())
    code, _, err = run_cli(["eval", "kappa_g", "--coeffs", "1,0,1", "--r", "0.1",
                            "0.0"], capsys)
    assert code == 3


def test_unknown_quantity_and_suite(capsys):
    code, _, _ = run_cli(["eval", "nonsense", "--coeffs", "1,0,1", "1.0"], capsys)
    assert code == 2
    code, _, _ = run_cli(["verify", "nope", "--coeffs", "1,0,1"], capsys)
    assert code == 2


def test_missing_coeffs(capsys):
    code, _, _ = run_cli(["eval", "kappa_g", "1.0"], capsys)
    assert code == 2


def test_io_error_exit_code(capsys, tmp_path):
    code, _, _ = run_cli(["mesh", "f0", "--coeffs", "1,0,1", "--resolution", "4",
                          "--out", str(tmp_path / "no" / "dir" / "x.obj")], capsys)
    assert code == 4


def test_mesh_obj_valid(capsys, tmp_path):
    out_path = tmp_path / "f0.obj"
    code, _, _ = run_cli(["mesh", "f0", "--coeffs", "1,0,1", "--resolution", "16",
                          "--out", str(out_path)], capsys)
    assert code == 0
    lines = out_path.read_text().splitlines()
    vs = [l for l in lines if l.startswith("v ")]
    fs = [l for l in lines if l.startswith("f ")]
    assert len(vs) == 16 * 16
    assert len(fs) == 2 * 15 * 15
    # all indices in range
    for l in fs:
        idx = [int(t) for t in l.split()[1:]]
        assert all(1 <= i <= len(vs) for i in idx)


def test_sweep_deterministic(capsys, tmp_path):
    a = tmp_path / "a.csv"
    b = tmp_path / "b.csv"
    for path in (a, b):
        code, _, _ = run_cli(["sweep", "roots", "--coeffs", "1,0,1",
                              "--samples", "40", "--seed", "777",
                              "--out", str(path)], capsys)
        assert code == 0
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header == "a20,a11,a02,g_count,fdelta_count,fk_count,delta_flip_count,k_flip_count"
    for line in a.read_text().splitlines()[1:]:
        assert int(line.split(",")[3]) in (0, 1, 2)


def test_sweep_first_terms_csv(capsys, tmp_path):
    path = tmp_path / "ft.csv"
    code, _, _ = run_cli(["sweep", "first-terms", "--coeffs", "1,0,1",
                          "--theta-points", "96", "--out", str(path)], capsys)
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == "id,theta,pipeline_value,closed_form_value,rel_err,verdict"
    assert all(line.split(",")[5] == "PASS" for line in lines[1:])


def test_verify_suite_exit_codes(capsys):
    code, out, _ = run_cli(["verify", "lem3.5", "--coeffs", "1,0,1"], capsys)
    assert code == 0
    assert "PASS" in out


def test_first_term_displayed_variant(capsys):
    code, out, _ = run_cli(["first-term", "delta_tilde", "--coeffs", "1,0,1",
                            "--theta-points", "64"], capsys)
    assert code == 0 and "PASS" in out
    code, out, _ = run_cli(["first-term", "delta_tilde", "--displayed",
                            "--coeffs", "1,0,1", "--theta-points", "64"], capsys)
    assert code == 1 and "FAIL" in out


def test_dupin(capsys):
    code, out, _ = run_cli(["dupin", "--coeffs", "1,0,1"], capsys)
    assert code == 0 and out.strip() == "circle"
    code, out, _ = run_cli(["dupin", "--coeffs=-2,0,1"], capsys)
    assert code == 0 and out.strip() == "hyperbola"


def test_console_entry_point():
    out = subprocess.run([sys.executable, "-m", "crosscap.cli", "dupin",
                          "--coeffs", "0,0,1"], capture_output=True, text=True)
    assert out.returncode == 0
    assert out.stdout.strip() == "parallel_lines"


def test_sweep_roots_grid_mode(capsys, tmp_path):
    path = tmp_path / "grid.csv"
    code, _, _ = run_cli(["sweep", "roots", "--coeffs", "1,0,1", "--grid", "7",
                          "--out", str(path)], capsys)
    assert code == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 1 + 49
    for line in lines[1:]:
        assert int(line.split(",")[3]) in (0, 1, 2)


def test_sweep_flipped_counts_csv(capsys, tmp_path):
    path = tmp_path / "fc.csv"
    code, _, _ = run_cli(["sweep", "flipped-counts", "--coeffs", "1,0,1",
                          "--samples", "25", "--seed", "3", "--out", str(path)],
                         capsys)
    assert code == 0
    lines = path.read_text().splitlines()
    assert lines[0] == ("a20,a11,a02,delta_count,k_count,"
                       "delta_count_verified,k_count_verified")
    for line in lines[1:]:
        parts = line.split(",")
        assert int(parts[3]) % 2 == 1 and int(parts[3]) <= 7
        assert int(parts[4]) % 2 == 0 and int(parts[4]) <= 14
