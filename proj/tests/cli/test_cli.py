"""End-to-end checks of the command-line interface.

The binary under test is named by the VULNKIT_BIN environment variable.
"""

import json
import os
import subprocess

BIN = os.environ["VULNKIT_BIN"]

STAR5 = "Ds_"  # hub 0 joined to four leaves
C5 = "Dhc"  # five-cycle 0-1-2-3-4-0


def run(args, stdin=""):
    return subprocess.run(
        [BIN] + args, input=stdin, capture_output=True, text=True, timeout=600
    )


def data_lines(stdout):
    return [line for line in stdout.splitlines() if not line.startswith("#")]


def test_params_csv():
    proc = run(["params"], stdin=STAR5 + "\n")
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "#schema=vulnkit.params.v1"
    assert lines[1].startswith("graph6,n,omega")
    row = lines[2].split(",")
    assert row[0] == STAR5
    assert row[1] == "5"
    assert "ok 1 failed 0" in proc.stderr


def test_params_json():
    proc = run(["params", "--format", "json"], stdin=STAR5 + "\n")
    assert proc.returncode == 0
    report = json.loads(proc.stdout.splitlines()[0])
    assert report["n"] == 5
    assert report["kappa"] == 1
    assert report["toughness"] == "1/4"
    assert report["scattering"] == 3
    assert report["integrity"] == 2


def test_params_tsv():
    proc = run(["params", "--format", "tsv"], stdin=STAR5 + "\n")
    assert proc.returncode == 0
    assert "\t" in proc.stdout.splitlines()[1]


def test_bad_lines_are_reported_and_skipped():
    proc = run(["params"], stdin="garbage\n" + STAR5 + "\n")
    assert proc.returncode == 0
    assert len(data_lines(proc.stdout)) == 2  # header + one surviving row
    assert "line 1:" in proc.stderr
    assert "ok 1 failed 1" in proc.stderr


def test_psi_json_per_line():
    proc = run(["psi", "--variant", "omega"], stdin=STAR5 + "\n" + C5 + "\n")
    assert proc.returncode == 0
    star, cycle = (json.loads(line) for line in proc.stdout.splitlines())
    assert star["values"] == [[0, 5], [1, 0], [2, 3], [3, 2], [4, 1]]
    assert cycle["values"] == [[0, 5], [1, 0], [2, 2]]


def test_check_line_condition():
    proc = run(["check", "--t", "1", "--k", "0", "--l", "2"], stdin=C5 + "\n")
    assert proc.returncode == 0
    assert data_lines(proc.stdout) == ["graph6,satisfies", C5 + ",true"]

    proc = run(["check", "--t", "3/2", "--k", "0", "--l", "2"], stdin=C5 + "\n")
    assert data_lines(proc.stdout) == ["graph6,satisfies", C5 + ",false"]


def test_phi_grid():
    proc = run(["phi", "--mu", "e", "--variant", "omega", "--n", "5"])
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "#schema=vulnkit.phi_grid.v1"
    assert lines[1] == "y\\x,1,2,3,4,5"
    grid = {}
    for line in lines[2:]:
        cells = line.split(",")
        for x, value in enumerate(cells[1:], start=1):
            grid[(x, int(cells[0]))] = value
    assert grid[(2, 1)] == "7"
    assert grid[(1, 0)] == "10"  # one component, nothing removed: K_5
    assert grid[(5, 0)] == "0"  # five singleton components: no edges left
    proc_closed = run(
        ["phi", "--mu", "e", "--variant", "omega", "--n", "5", "--closed"]
    )
    assert proc_closed.returncode == 0


def test_threshold_brute_with_witness():
    proc = run(
        ["threshold", "--mu", "e", "--property", "conn:k=1", "--n", "5",
         "--method", "brute"]
    )
    assert proc.returncode == 0
    result = json.loads(proc.stdout)
    assert result["value"] == "6"
    assert result["method"] == "brute"
    assert result["witness"]


def test_threshold_region_and_theorem_agree_here():
    region = json.loads(
        run(["threshold", "--mu", "delta", "--property", "conn:k=2",
             "--n", "6"]).stdout
    )
    theorem = json.loads(
        run(["threshold", "--mu", "delta", "--property", "conn:k=2",
             "--n", "6", "--method", "theorem"]).stdout
    )
    assert region["value"] == "2"
    assert theorem["value"] == "2"


def test_threshold_brute_order_cap():
    proc = run(
        ["threshold", "--mu", "e", "--property", "conn:k=1", "--n", "9",
         "--method", "brute"]
    )
    assert proc.returncode == 2


def test_flag_errors_exit_two():
    assert run(["threshold", "--mu", "e"]).returncode == 2
    assert run(["nonsense"]).returncode == 2
    assert run(["params", "--format", "xml"]).returncode == 2
    assert run(
        ["threshold", "--mu", "e", "--property", "nope:z=1", "--n", "5"]
    ).returncode == 2


def test_implies():
    proc = run(["implies", "--p", "conn:k=2", "--q", "conn:k=1", "--n", "6"])
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["implies"] is True
    proc = run(["implies", "--p", "conn:k=1", "--q", "conn:k=2", "--n", "6"])
    assert json.loads(proc.stdout)["implies"] is False


def test_tables():
    proc = run(["tables", "--which", "delta", "--n-range", "4..4"])
    assert proc.returncode == 0
    lines = proc.stdout.splitlines()
    assert lines[0] == "#schema=vulnkit.threshold_cells.v1"
    assert lines[1].startswith("table,mu,property,parameters,n,")
    header_fields = lines[1].count(",")
    assert all(line.count(",") == header_fields for line in lines[2:])
    assert len(lines) == 2 + 55


def test_certify_reports_are_deterministic(tmp_path):
    outs = []
    for tag, workers in (("a", "1"), ("b", "1"), ("c", "4")):
        out_dir = tmp_path / tag
        proc = run(
            ["certify", "--n-max", "5", "--workers", workers, "--out",
             str(out_dir)]
        )
        # Criterion 6 stays red: three printed closed forms disagree with the
        # exhaustive sweep on every instance, which the gate reports honestly.
        assert proc.returncode == 1
        assert proc.stdout.count("criterion") == 9
        assert "[FAIL] criterion 6" in proc.stdout
        assert proc.stdout.count("[PASS]") == 8
        outs.append(
            {
                name: (out_dir / name).read_bytes()
                for name in (
                    "mu_table.csv",
                    "phi_table.csv",
                    "threshold_cells.csv",
                    "theorem_cells.csv",
                )
            }
        )
    assert outs[0] == outs[1] == outs[2]
